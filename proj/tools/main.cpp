// Command-line harness for the surface-aided beamforming experiments.
//
// Subcommands: sweep, diff, converge, timing, oracle, sanity. Each accepts
// --config <json> plus flag overrides (flags win). Exit codes: 0 success,
// 2 configuration or usage error, 3 oracle or sanity check failed.

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irshho/irshho.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::string out;
  std::vector<std::uint64_t> seeds;
  int pop = 0;
  int iters = 0;
  std::vector<double> d_list;
  std::vector<std::string> schemes;

  CLI::Option* out_opt = nullptr;
  CLI::Option* seeds_opt = nullptr;
  CLI::Option* pop_opt = nullptr;
  CLI::Option* iters_opt = nullptr;
  CLI::Option* d_list_opt = nullptr;
  CLI::Option* schemes_opt = nullptr;
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config_path, "JSON config file");
  f.out_opt = cmd->add_option("--out", f.out, "output directory");
  f.seeds_opt = cmd->add_option("--seeds", f.seeds, "seed list");
  f.pop_opt = cmd->add_option("--pop", f.pop, "population size Q");
  f.iters_opt = cmd->add_option("--iters", f.iters, "iteration budget T");
  f.d_list_opt = cmd->add_option("--d-list", f.d_list, "AP-user distances in meters");
  f.schemes_opt = cmd->add_option("--schemes", f.schemes, "schemes: no-irs, ao, hho");
}

irshho::ExperimentConfig resolve_config(const CommonFlags& f) {
  irshho::ExperimentConfig c;
  if (!f.config_path.empty()) c = irshho::load_config(f.config_path);
  if (f.out_opt->count() > 0) c.out = f.out;
  if (f.seeds_opt->count() > 0) c.seeds = f.seeds;
  if (f.pop_opt->count() > 0) c.q = f.pop;
  if (f.iters_opt->count() > 0) c.t = f.iters;
  if (f.d_list_opt->count() > 0) c.d_list = f.d_list;
  if (f.schemes_opt->count() > 0) c.schemes = f.schemes;
  irshho::validate(c);
  return c;
}

std::string ensure_out_dir(const irshho::ExperimentConfig& c) {
  std::filesystem::create_directories(c.out);
  return c.out;
}

int run_sweep(const CommonFlags& f) {
  const irshho::ExperimentConfig c = resolve_config(f);
  const auto records = irshho::sweep_distance(c);
  const std::string path = ensure_out_dir(c) + "/sweep.csv";
  irshho::write_text(irshho::sweep_csv(records), path);
  std::printf("wrote %zu records to %s\n", records.size(), path.c_str());
  return 0;
}

int run_diff(const CommonFlags& f, const std::string& csv, const std::string& a,
             const std::string& b) {
  const irshho::ExperimentConfig c = resolve_config(f);
  const auto records = irshho::read_sweep_csv(csv);
  const auto rows = irshho::difference_report(records, a, b);
  const std::string path = ensure_out_dir(c) + "/diff_" + a + "_minus_" + b + ".csv";
  irshho::write_text(irshho::diff_csv(rows), path);
  for (const auto& r : rows)
    std::printf("d=%g  mean %s-%s SNR diff %+.3f dB (std %.3f, n=%d)\n", r.d, a.c_str(),
                b.c_str(), r.mean_diff_db, r.std_diff_db, r.n_seeds);
  std::printf("wrote %s\n", path.c_str());
  return 0;
}

int run_converge(const CommonFlags& f, double d) {
  irshho::ExperimentConfig c = resolve_config(f);
  const auto traces = irshho::convergence_run(c, d);
  const std::string path = ensure_out_dir(c) + "/converge_d" + irshho::format_g(d) + ".csv";
  irshho::write_text(irshho::convergence_csv(traces), path);
  std::printf("wrote %zu traces of length %d to %s\n", traces.size(), c.t, path.c_str());
  return 0;
}

int run_timing(const CommonFlags& f, const std::vector<int>& pops,
               const std::vector<int>& iters) {
  const irshho::ExperimentConfig c = resolve_config(f);
  std::vector<std::pair<int, int>> grid;
  for (int q : pops)
    for (int t : iters) grid.emplace_back(q, t);
  const auto points = irshho::timing_run(c, grid);
  const std::string path = ensure_out_dir(c) + "/timing.csv";
  irshho::write_text(irshho::timing_csv(points), path);
  for (const auto& p : points)
    std::printf("Q=%d T=%d  %.4f s\n", p.q, p.t, p.wall_time_s);
  std::printf("R^2 of wall time vs Q*T: %.4f\nwrote %s\n",
              irshho::timing_r_squared(points), path.c_str());
  return 0;
}

int run_oracle(const CommonFlags& f, std::vector<int> n_list, int instances) {
  irshho::ExperimentConfig base = resolve_config(f);
  base.m = 1;
  const int q = f.pop_opt->count() > 0 ? base.q : 50;
  const int t = f.iters_opt->count() > 0 ? base.t : 500;
  const auto report = irshho::oracle_check(base, n_list, instances, q, t);
  const std::string path = ensure_out_dir(base) + "/oracle.csv";
  irshho::write_text(irshho::oracle_csv(report), path);
  for (const auto& [n, med] : report.hho_median_by_n)
    std::printf("N=%d  median HHO/closed-form ratio %.6f\n", n, med);
  std::printf("alternating optimization within %g of closed form: %s\n",
              irshho::kOracleAoTol, report.ao_ok ? "yes" : "NO");
  std::printf("brute force (%d levels) >= %.3f of closed form: %s\n",
              irshho::kOracleBfLevels, irshho::kOracleBfMinRatio,
              report.bf_ok ? "yes" : "NO");
  std::printf("HHO median ratio >= %.2f: %s\n", irshho::kOracleHhoMinRatio,
              report.hho_ok ? "yes" : "NO");
  std::printf("wrote %s\n", path.c_str());
  if (!report.pass()) {
    std::fprintf(stderr, "oracle check FAILED\n");
    return 3;
  }
  std::printf("oracle check passed\n");
  return 0;
}

int run_sanity(const CommonFlags& f, int runs, int dim) {
  const int q = f.pop_opt->count() > 0 ? f.pop : 30;
  const int t = f.iters_opt->count() > 0 ? f.iters : 500;
  const auto rep = irshho::hho_sanity(runs, q, t, dim);
  std::printf("sphere D=%d: |best| < %g in %d/%d runs (worst best %.3g)\n", dim,
              irshho::kSanitySphereTol, rep.sphere_hits, rep.sphere_runs, rep.sphere_worst);
  std::printf("rastrigin D=%d: median gap to optimum %.3g\n", dim,
              rep.rastrigin_median_gap);
  std::printf("besiege branch counts over a 1000-iteration run: soft=%llu hard=%llu "
              "soft-dive=%llu hard-dive=%llu (exploration=%llu)\n",
              static_cast<unsigned long long>(
                  rep.coverage_counts[static_cast<int>(irshho::Branch::soft_besiege)]),
              static_cast<unsigned long long>(
                  rep.coverage_counts[static_cast<int>(irshho::Branch::hard_besiege)]),
              static_cast<unsigned long long>(
                  rep.coverage_counts[static_cast<int>(irshho::Branch::soft_dive)]),
              static_cast<unsigned long long>(
                  rep.coverage_counts[static_cast<int>(irshho::Branch::hard_dive)]),
              static_cast<unsigned long long>(
                  rep.coverage_counts[static_cast<int>(irshho::Branch::exploration)]));
  std::printf("traces monotone: %s\n", rep.traces_monotone ? "yes" : "NO");
  if (!rep.pass()) {
    std::fprintf(stderr, "sanity check FAILED\n");
    return 3;
  }
  std::printf("sanity check passed\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surface-aided MISO beamforming experiments (Harris hawks optimizer)"};
  app.require_subcommand(1);

  CommonFlags sweep_f, diff_f, conv_f, timing_f, oracle_f, sanity_f;

  CLI::App* sweep = app.add_subcommand("sweep", "SNR vs AP-user distance sweep");
  add_common_flags(sweep, sweep_f);

  CLI::App* diff = app.add_subcommand("diff", "per-distance SNR difference of two schemes");
  add_common_flags(diff, diff_f);
  std::string diff_csv_path, diff_a = "hho", diff_b = "ao";
  diff->add_option("--csv", diff_csv_path, "sweep csv to read")->required();
  diff->add_option("--a", diff_a, "first scheme (sign: a - b)");
  diff->add_option("--b", diff_b, "second scheme");

  CLI::App* conv = app.add_subcommand("converge", "best-so-far trace at one distance");
  add_common_flags(conv, conv_f);
  double conv_d = 25.0;
  conv->add_option("--d", conv_d, "AP-user distance in meters");

  CLI::App* timing = app.add_subcommand("timing", "wall time over a (Q, T) grid");
  add_common_flags(timing, timing_f);
  std::vector<int> grid_pops = {40, 80, 160}, grid_iters = {250, 500, 1000};
  timing->add_option("--grid-pop", grid_pops, "population sizes");
  timing->add_option("--grid-iters", grid_iters, "iteration budgets");

  CLI::App* oracle = app.add_subcommand("oracle", "closed-form and grid oracles at M=1");
  add_common_flags(oracle, oracle_f);
  std::vector<int> n_list = {2, 4, 6};
  int instances = 10;
  oracle->add_option("--n-list", n_list, "surface sizes to check");
  oracle->add_option("--instances", instances, "random instances per size");

  CLI::App* sanity = app.add_subcommand("sanity", "optimizer checks on benchmark functions");
  add_common_flags(sanity, sanity_f);
  int sanity_runs = 20, sanity_dim = 30;
  sanity->add_option("--runs", sanity_runs, "number of seeded runs");
  sanity->add_option("--dim", sanity_dim, "search dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sweep->parsed()) return run_sweep(sweep_f);
    if (diff->parsed()) return run_diff(diff_f, diff_csv_path, diff_a, diff_b);
    if (conv->parsed()) return run_converge(conv_f, conv_d);
    if (timing->parsed()) return run_timing(timing_f, grid_pops, grid_iters);
    if (oracle->parsed()) return run_oracle(oracle_f, n_list, instances);
    if (sanity->parsed()) return run_sanity(sanity_f, sanity_runs, sanity_dim);
  } catch (const irshho::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
