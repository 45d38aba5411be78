#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "irshho/baselines.hpp"
#include "irshho/beamforming.hpp"
#include "irshho/benchmarks.hpp"
#include "irshho/channel.hpp"
#include "irshho/optimizer.hpp"
#include "irshho/rng.hpp"
#include "irshho/units.hpp"

// Experiment harness: configuration, per-scheme runs over a distance/seed
// grid, and the CSV emitters behind the command-line tool.

namespace irshho {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PathlossExponents {
  double ap_user = 3.5;
  double ap_irs = 2.2;
  double irs_user = 2.8;
};

struct ExperimentConfig {
  int m = 8;
  int nx = 5;
  int ny = 10;
  double p_ap_dbm = 5.0;
  double sigma2_dbm = -80.0;
  double mu = 1.0;
  std::vector<double> d_list = {10, 15, 20, 25, 30, 35, 40, 45, 48, 50, 51, 55, 60};
  int q = 80;
  int t = 500;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<std::string> schemes = {"no-irs", "ao", "hho"};
  PathlossExponents pathloss_exponents;
  std::string out = "results";

  int n() const { return nx * ny; }
  double p_ap_watts() const { return dbm_to_watts(p_ap_dbm); }
  double sigma2_watts() const { return dbm_to_watts(sigma2_dbm); }
};

inline bool known_scheme(const std::string& s) {
  return s == "no-irs" || s == "ao" || s == "hho";
}

inline void validate(const ExperimentConfig& c) {
  if (c.m < 1) throw ConfigError("config: M must be >= 1");
  if (c.nx < 1 || c.ny < 1) throw ConfigError("config: N_x and N_y must be >= 1");
  if (!(c.mu > 0.0)) throw ConfigError("config: mu must be positive");
  if (c.q < 2) throw ConfigError("config: Q must be >= 2");
  if (c.t < 1) throw ConfigError("config: T must be >= 1");
  if (c.d_list.empty()) throw ConfigError("config: d_list must be non-empty");
  for (double d : c.d_list)
    if (!(d > 0.0)) throw ConfigError("config: distances must be positive");
  if (c.seeds.empty()) throw ConfigError("config: seeds must be non-empty");
  if (c.schemes.empty()) throw ConfigError("config: schemes must be non-empty");
  for (const std::string& s : c.schemes)
    if (!known_scheme(s)) throw ConfigError("config: unknown scheme '" + s + "'");
}

// JSON keys mirror the config field names; unknown keys are rejected so a
// typo cannot silently fall back to a default.
inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  static const std::vector<std::string> keys = {
      "M", "N_x", "N_y", "p_ap_dbm", "sigma2_dbm", "mu", "d_list",
      "Q", "T", "seeds", "schemes", "pathloss_exponents", "out"};
  for (const auto& item : j.items()) {
    if (std::find(keys.begin(), keys.end(), item.key()) == keys.end())
      throw ConfigError("config: unknown key '" + item.key() + "'");
  }
  ExperimentConfig c;
  try {
    if (j.contains("M")) c.m = j["M"].get<int>();
    if (j.contains("N_x")) c.nx = j["N_x"].get<int>();
    if (j.contains("N_y")) c.ny = j["N_y"].get<int>();
    if (j.contains("p_ap_dbm")) c.p_ap_dbm = j["p_ap_dbm"].get<double>();
    if (j.contains("sigma2_dbm")) c.sigma2_dbm = j["sigma2_dbm"].get<double>();
    if (j.contains("mu")) c.mu = j["mu"].get<double>();
    if (j.contains("d_list")) c.d_list = j["d_list"].get<std::vector<double>>();
    if (j.contains("Q")) c.q = j["Q"].get<int>();
    if (j.contains("T")) c.t = j["T"].get<int>();
    if (j.contains("seeds")) c.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    if (j.contains("schemes")) c.schemes = j["schemes"].get<std::vector<std::string>>();
    if (j.contains("pathloss_exponents")) {
      const auto& p = j["pathloss_exponents"];
      for (const auto& item : p.items()) {
        if (item.key() != "ap_user" && item.key() != "ap_irs" && item.key() != "irs_user")
          throw ConfigError("config: unknown pathloss key '" + item.key() + "'");
      }
      if (p.contains("ap_user")) c.pathloss_exponents.ap_user = p["ap_user"].get<double>();
      if (p.contains("ap_irs")) c.pathloss_exponents.ap_irs = p["ap_irs"].get<double>();
      if (p.contains("irs_user")) c.pathloss_exponents.irs_user = p["irs_user"].get<double>();
    }
    if (j.contains("out")) c.out = j["out"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return c;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return config_from_json(j);
}

inline ChannelParams channel_params(const ExperimentConfig& c) {
  ChannelParams p;
  p.m = c.m;
  p.nx = c.nx;
  p.ny = c.ny;
  p.ap_user.pathloss_exponent = c.pathloss_exponents.ap_user;
  p.ap_irs.pathloss_exponent = c.pathloss_exponents.ap_irs;
  p.irs_user.pathloss_exponent = c.pathloss_exponents.irs_user;
  return p;
}

// One channel realization per (seed, d) cell, shared by every scheme run in
// that cell so the comparison is over identical channels.
inline std::uint64_t channel_seed(std::uint64_t seed, double d) {
  std::uint64_t x = splitmix64(seed ^ 0x1bd11bdaa9fc1a22ULL);
  x = splitmix64(x ^ std::bit_cast<std::uint64_t>(d));
  return x;
}

inline ProblemInstance make_instance(const ExperimentConfig& c, double d, std::uint64_t seed) {
  std::mt19937_64 g(channel_seed(seed, d));
  ProblemInstance inst;
  inst.channels = realize_channels(channel_params(c), geometry_for_user_distance(d), g);
  inst.p_ap = c.p_ap_watts();
  inst.sigma2 = c.sigma2_watts();
  inst.mu = c.mu;
  inst.m = c.m;
  inst.n = c.n();
  return inst;
}

struct ExperimentRecord {
  std::string scheme;
  double d = 0.0;
  std::uint64_t seed = 0;
  double snr_db = 0.0;
  double power_watts = 0.0;
  double wall_time_s = 0.0;
  int q = 0;
  int t = 0;
  int iterations = 0;
};

// Reported solutions are always feasible: if the optimizer's best exceeds the
// power budget by a hair, scale the beamformer back onto it.
inline BeamformingSolution project_to_budget(BeamformingSolution s, double p_ap) {
  const double used = s.w.squaredNorm();
  if (used > p_ap) s.w *= std::sqrt(p_ap / used);
  return s;
}

struct HhoRunOutput {
  BeamformingSolution solution;
  double power_watts = 0.0;
  OptimizeResult raw;
};

inline HhoRunOutput run_hho(const ProblemInstance& inst, int q, int t, std::uint64_t seed) {
  HhoConfig hc;
  hc.population_size = q;
  hc.max_iterations = t;
  std::tie(hc.lower_bounds, hc.upper_bounds) = search_bounds(inst);
  hc.rng_seed = seed;
  HhoRunOutput out;
  out.raw = optimize(hc, make_objective(inst), {mrt_seed(inst)});
  out.solution =
      project_to_budget(decode(out.raw.best_position, inst.m, inst.n), inst.p_ap);
  out.power_watts = received_power(inst.channels, out.solution);
  return out;
}

inline ExperimentRecord run_scheme(const ExperimentConfig& c, const ProblemInstance& inst,
                                   const std::string& scheme, double d, std::uint64_t seed) {
  ExperimentRecord rec;
  rec.scheme = scheme;
  rec.d = d;
  rec.seed = seed;
  rec.q = c.q;
  rec.t = c.t;

  const auto start = std::chrono::steady_clock::now();
  if (scheme == "no-irs") {
    const BaselineResult r = no_irs_mrt(inst.channels, inst.p_ap);
    rec.power_watts = r.power_watts;
    rec.iterations = r.iterations;
  } else if (scheme == "ao") {
    const BaselineResult r = alternating_optimize(inst.channels, inst.p_ap);
    rec.power_watts = r.power_watts;
    rec.iterations = r.iterations;
  } else if (scheme == "hho") {
    const HhoRunOutput r = run_hho(inst, c.q, c.t, seed);
    rec.power_watts = r.power_watts;
    rec.iterations = c.t;
    rec.wall_time_s = r.raw.wall_time_s;
  } else {
    throw ConfigError("run_scheme: unknown scheme '" + scheme + "'");
  }
  if (scheme != "hho")
    rec.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rec.snr_db = snr_db(rec.power_watts, inst.sigma2);
  return rec;
}

inline std::vector<ExperimentRecord> sweep_distance(const ExperimentConfig& c) {
  validate(c);
  std::vector<ExperimentRecord> records;
  records.reserve(c.d_list.size() * c.seeds.size() * c.schemes.size());
  for (double d : c.d_list) {
    for (std::uint64_t seed : c.seeds) {
      const ProblemInstance inst = make_instance(c, d, seed);
      for (const std::string& scheme : c.schemes)
        records.push_back(run_scheme(c, inst, scheme, d, seed));
    }
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const ExperimentRecord& a, const ExperimentRecord& b) {
                     return std::tie(a.scheme, a.d, a.seed) < std::tie(b.scheme, b.d, b.seed);
                   });
  return records;
}

inline std::string format_g(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

inline constexpr const char* kSweepCsvHeader =
    "scheme,d_m,seed,snr_db,power_w,wall_time_s,Q,T,iterations";

inline std::string sweep_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const ExperimentRecord& r : records) {
    out << r.scheme << ',' << format_g(r.d) << ',' << r.seed << ',' << format_g(r.snr_db)
        << ',' << format_g(r.power_watts) << ',' << format_g(r.wall_time_s) << ',' << r.q
        << ',' << r.t << ',' << r.iterations << '\n';
  }
  return out.str();
}

inline void write_text(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file " + path);
  out << text;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

inline std::vector<ExperimentRecord> parse_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("sweep csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kSweepCsvHeader) throw ConfigError("sweep csv: unexpected header");
  std::vector<ExperimentRecord> records;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 9) throw ConfigError("sweep csv: malformed row");
    ExperimentRecord r;
    r.scheme = f[0];
    r.d = std::strtod(f[1].c_str(), nullptr);
    r.seed = std::strtoull(f[2].c_str(), nullptr, 10);
    r.snr_db = std::strtod(f[3].c_str(), nullptr);
    r.power_watts = std::strtod(f[4].c_str(), nullptr);
    r.wall_time_s = std::strtod(f[5].c_str(), nullptr);
    r.q = std::atoi(f[6].c_str());
    r.t = std::atoi(f[7].c_str());
    r.iterations = std::atoi(f[8].c_str());
    records.push_back(std::move(r));
  }
  return records;
}

inline std::vector<ExperimentRecord> read_sweep_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open sweep csv " + path);
  return parse_sweep_csv(in);
}

inline double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

inline double stddev_of(const std::vector<double>& v) {
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size()));
}

inline double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct DiffRow {
  double d = 0.0;
  double mean_diff_db = 0.0;
  double std_diff_db = 0.0;
  int n_seeds = 0;
};

// Per-distance mean and std over seeds of (scheme_a - scheme_b) SNR, paired
// on identical (d, seed) cells.
inline std::vector<DiffRow> difference_report(const std::vector<ExperimentRecord>& records,
                                              const std::string& scheme_a,
                                              const std::string& scheme_b) {
  auto key = [](const ExperimentRecord& r) { return std::make_pair(r.d, r.seed); };
  std::vector<std::pair<std::pair<double, std::uint64_t>, double>> a_vals, b_vals;
  for (const ExperimentRecord& r : records) {
    if (r.scheme == scheme_a) a_vals.emplace_back(key(r), r.snr_db);
    if (r.scheme == scheme_b) b_vals.emplace_back(key(r), r.snr_db);
  }
  std::sort(a_vals.begin(), a_vals.end());
  std::sort(b_vals.begin(), b_vals.end());
  if (a_vals.empty() || a_vals.size() != b_vals.size())
    throw ConfigError("difference_report: schemes missing or unpaired");
  std::vector<double> ds;
  std::vector<std::pair<double, double>> diffs;  // (d, a-b)
  for (std::size_t i = 0; i < a_vals.size(); ++i) {
    if (a_vals[i].first != b_vals[i].first)
      throw ConfigError("difference_report: unpaired (d, seed) cell");
    diffs.emplace_back(a_vals[i].first.first, a_vals[i].second - b_vals[i].second);
  }
  std::vector<DiffRow> rows;
  for (std::size_t i = 0; i < diffs.size();) {
    const double d = diffs[i].first;
    std::vector<double> vals;
    while (i < diffs.size() && diffs[i].first == d) vals.push_back(diffs[i++].second);
    rows.push_back({d, mean_of(vals), stddev_of(vals), static_cast<int>(vals.size())});
  }
  return rows;
}

inline std::string diff_csv(const std::vector<DiffRow>& rows) {
  std::ostringstream out;
  out << "d_m,mean_diff_db,std_diff_db,n_seeds\n";
  for (const DiffRow& r : rows)
    out << format_g(r.d) << ',' << format_g(r.mean_diff_db) << ','
        << format_g(r.std_diff_db) << ',' << r.n_seeds << '\n';
  return out.str();
}

struct ConvergenceTrace {
  std::uint64_t seed = 0;
  std::vector<double> best_so_far;  // one entry per iteration
};

inline std::vector<ConvergenceTrace> convergence_run(const ExperimentConfig& c, double d) {
  validate(c);
  std::vector<ConvergenceTrace> traces;
  for (std::uint64_t seed : c.seeds) {
    const ProblemInstance inst = make_instance(c, d, seed);
    const HhoRunOutput out = run_hho(inst, c.q, c.t, seed);
    traces.push_back({seed, out.raw.trace});
  }
  return traces;
}

inline std::string convergence_csv(const std::vector<ConvergenceTrace>& traces) {
  std::ostringstream out;
  out << "seed,iteration,best_so_far_fitness\n";
  for (const ConvergenceTrace& tr : traces)
    for (std::size_t i = 0; i < tr.best_so_far.size(); ++i)
      out << tr.seed << ',' << i + 1 << ',' << format_g(tr.best_so_far[i]) << '\n';
  return out.str();
}

struct TimingPoint {
  int q = 0;
  int t = 0;
  double wall_time_s = 0.0;
};

// One timed run per (Q, T) grid point, all on the channel realization of the
// first (d, seed) cell so only the budget varies.
inline std::vector<TimingPoint> timing_run(const ExperimentConfig& c,
                                           const std::vector<std::pair<int, int>>& grid) {
  validate(c);
  if (grid.empty()) throw ConfigError("timing_run: empty grid");
  for (auto [q, t] : grid) {
    if (q < 2) throw ConfigError("timing_run: Q must be >= 2");
    if (t < 1) throw ConfigError("timing_run: T must be >= 1");
  }
  const double d = c.d_list.front();
  const std::uint64_t seed = c.seeds.front();
  const ProblemInstance inst = make_instance(c, d, seed);
  std::vector<TimingPoint> points;
  for (auto [q, t] : grid) {
    const HhoRunOutput out = run_hho(inst, q, t, seed);
    points.push_back({q, t, out.raw.wall_time_s});
  }
  return points;
}

inline std::string timing_csv(const std::vector<TimingPoint>& points) {
  std::ostringstream out;
  out << "Q,T,wall_time_s\n";
  for (const TimingPoint& p : points)
    out << p.q << ',' << p.t << ',' << format_g(p.wall_time_s) << '\n';
  return out.str();
}

// Coefficient of determination for the fit wall_time ~ a + b * (Q*T).
inline double timing_r_squared(const std::vector<TimingPoint>& points) {
  const std::size_t n = points.size();
  if (n < 2) throw ConfigError("timing_r_squared: need at least 2 points");
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = static_cast<double>(points[i].q) * points[i].t;
    y[i] = points[i].wall_time_s;
  }
  const double mx = mean_of(x), my = mean_of(y);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) throw ConfigError("timing_r_squared: degenerate grid");
  const double b = sxy / sxx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - (my + b * (x[i] - mx));
    ss_res += e * e;
  }
  return 1.0 - ss_res / syy;
}

// Oracle tolerances, fixed once: alternating optimization must hit the M=1
// closed form almost exactly, the 64-level grid is within cos^2(pi/64) of it,
// and the swarm is given a 2% (<0.1 dB) allowance at the median.
inline constexpr double kOracleAoTol = 1e-6;
inline constexpr double kOracleBfMinRatio = 0.995;
inline constexpr double kOracleHhoMinRatio = 0.98;
inline constexpr int kOracleBfLevels = 64;
inline constexpr double kOracleD = 25.0;

struct OracleRow {
  int n = 0;
  std::uint64_t seed = 0;
  double closed_form_w = 0.0;
  double ao_rel_err = 0.0;
  double bf_ratio = 0.0;
  double hho_ratio = 0.0;
};

struct OracleReport {
  std::vector<OracleRow> rows;
  std::vector<std::pair<int, double>> hho_median_by_n;
  bool ao_ok = true;
  bool bf_ok = true;
  bool hho_ok = true;
  bool pass() const { return ao_ok && bf_ok && hho_ok; }
};

// Desk-scale ground truth: single transmit antenna, a handful of surface
// elements, where the optimum is known in closed form.
inline OracleReport oracle_check(const ExperimentConfig& base,
                                 const std::vector<int>& n_list = {2, 4, 6},
                                 int instances = 10, int q = 50, int t = 500) {
  if (base.m != 1) throw ConfigError("oracle_check: requires M = 1");
  for (int n : n_list)
    if (n < 1 || n > 6) throw ConfigError("oracle_check: N must be in [1, 6]");
  OracleReport report;
  for (int n : n_list) {
    ExperimentConfig c = base;
    c.nx = 1;
    c.ny = n;
    c.q = q;
    c.t = t;
    std::vector<double> hho_ratios;
    for (int k = 1; k <= instances; ++k) {
      const auto seed = static_cast<std::uint64_t>(k);
      const ProblemInstance inst = make_instance(c, kOracleD, seed);
      const double closed = closed_form_optimum_m1(inst.channels, inst.p_ap);
      const double ao = alternating_optimize(inst.channels, inst.p_ap).power_watts;
      const double bf = brute_force(inst.channels, inst.p_ap, kOracleBfLevels);
      const double hho = run_hho(inst, q, t, seed).power_watts;
      OracleRow row;
      row.n = n;
      row.seed = seed;
      row.closed_form_w = closed;
      row.ao_rel_err = std::abs(ao / closed - 1.0);
      row.bf_ratio = bf / closed;
      row.hho_ratio = hho / closed;
      if (row.ao_rel_err > kOracleAoTol) report.ao_ok = false;
      if (row.bf_ratio < kOracleBfMinRatio || row.bf_ratio > 1.0 + 1e-12)
        report.bf_ok = false;
      hho_ratios.push_back(row.hho_ratio);
      report.rows.push_back(row);
    }
    const double med = median_of(hho_ratios);
    report.hho_median_by_n.emplace_back(n, med);
    if (med < kOracleHhoMinRatio) report.hho_ok = false;
  }
  return report;
}

inline std::string oracle_csv(const OracleReport& r) {
  std::ostringstream out;
  out << "N,seed,closed_form_w,ao_rel_err,bf_ratio,hho_ratio\n";
  for (const OracleRow& row : r.rows)
    out << row.n << ',' << row.seed << ',' << format_g(row.closed_form_w) << ','
        << format_g(row.ao_rel_err) << ',' << format_g(row.bf_ratio) << ','
        << format_g(row.hho_ratio) << '\n';
  return out.str();
}

inline constexpr double kSanitySphereTol = 1e-6;

struct SanityReport {
  int sphere_runs = 0;
  int sphere_hits = 0;  // runs with |best| below kSanitySphereTol
  double sphere_worst = 0.0;
  double rastrigin_median_gap = 0.0;
  bool traces_monotone = true;
  std::array<std::uint64_t, kBranchCount> coverage_counts{};
  bool besiege_branches_covered = false;
  bool pass() const {
    return sphere_hits * 20 >= sphere_runs * 19 && traces_monotone &&
           besiege_branches_covered;
  }
};

// Optimizer-core checks against analytic optima: sphere and Rastrigin in
// maximization form (optimum 0 at the origin), plus branch coverage.
inline SanityReport hho_sanity(int runs = 20, int q = 30, int t = 500, int dim = 30) {
  SanityReport rep;
  rep.sphere_runs = runs;

  HhoConfig hc;
  hc.population_size = q;
  hc.max_iterations = t;
  hc.lower_bounds = Vector::Constant(dim, -100.0);
  hc.upper_bounds = Vector::Constant(dim, 100.0);

  auto monotone = [](const std::vector<double>& tr) {
    for (std::size_t i = 1; i < tr.size(); ++i)
      if (tr[i] < tr[i - 1]) return false;
    return true;
  };

  rep.sphere_worst = 0.0;
  for (int s = 1; s <= runs; ++s) {
    hc.rng_seed = static_cast<std::uint64_t>(s);
    const OptimizeResult r = optimize(hc, sphere);
    if (std::abs(r.best_fitness) < kSanitySphereTol) ++rep.sphere_hits;
    rep.sphere_worst = std::min(rep.sphere_worst, r.best_fitness);
    if (!monotone(r.trace)) rep.traces_monotone = false;
  }

  std::vector<double> rastrigin_gaps;
  HhoConfig rc = hc;
  rc.lower_bounds = Vector::Constant(dim, -5.12);
  rc.upper_bounds = Vector::Constant(dim, 5.12);
  for (int s = 1; s <= 5; ++s) {
    rc.rng_seed = static_cast<std::uint64_t>(s);
    const OptimizeResult r = optimize(rc, rastrigin);
    rastrigin_gaps.push_back(-r.best_fitness);
    if (!monotone(r.trace)) rep.traces_monotone = false;
  }
  rep.rastrigin_median_gap = median_of(rastrigin_gaps);

  HhoConfig cc = hc;
  cc.max_iterations = 1000;
  cc.rng_seed = 1;
  const OptimizeResult cover = optimize(cc, sphere);
  rep.coverage_counts = cover.branch_counts;
  rep.besiege_branches_covered =
      cover.branch_counts[static_cast<int>(Branch::soft_besiege)] > 0 &&
      cover.branch_counts[static_cast<int>(Branch::hard_besiege)] > 0 &&
      cover.branch_counts[static_cast<int>(Branch::soft_dive)] > 0 &&
      cover.branch_counts[static_cast<int>(Branch::hard_dive)] > 0;
  if (!monotone(cover.trace)) rep.traces_monotone = false;
  return rep;
}

}  // namespace irshho
