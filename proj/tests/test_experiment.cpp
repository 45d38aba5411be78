#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "irshho/experiment.hpp"
#include "irshho/serialization.hpp"

using Catch::Approx;

namespace {

irshho::ExperimentConfig tiny_config() {
  irshho::ExperimentConfig c;
  c.m = 2;
  c.nx = 1;
  c.ny = 2;
  c.q = 6;
  c.t = 15;
  c.d_list = {10.0, 20.0, 30.0};
  c.seeds = {1, 2, 3, 4, 5};
  return c;
}

// drop the wall_time_s column (index 5) from every csv line
std::string strip_wall_time(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    const auto f = irshho::split_csv_line(line);
    std::string rebuilt;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i == 5) continue;
      if (!rebuilt.empty()) rebuilt += ',';
      rebuilt += f[i];
    }
    out << rebuilt << '\n';
  }
  return out.str();
}

}  // namespace

TEST_CASE("default configuration matches the published operating point") {
  const irshho::ExperimentConfig c;
  REQUIRE(c.m == 8);
  REQUIRE(c.n() == 50);
  REQUIRE(c.q == 80);
  REQUIRE(c.t == 500);
  REQUIRE(c.d_list.size() == 13);
  REQUIRE(c.d_list.front() == 10.0);
  REQUIRE(c.d_list.back() == 60.0);
  REQUIRE(c.seeds.size() == 10);
  REQUIRE(c.schemes == std::vector<std::string>{"no-irs", "ao", "hho"});
  REQUIRE(c.p_ap_watts() == Approx(3.16227766e-3).epsilon(1e-8));
  REQUIRE(c.sigma2_watts() == Approx(1e-11).epsilon(1e-12));
  REQUIRE(c.pathloss_exponents.ap_user == 3.5);
  REQUIRE(c.pathloss_exponents.ap_irs == 2.2);
  REQUIRE(c.pathloss_exponents.irs_user == 2.8);
  REQUIRE_NOTHROW(irshho::validate(c));
}

TEST_CASE("json config honors every key and rejects unknown ones") {
  SECTION("full override") {
    const auto j = nlohmann::json::parse(R"({
      "M": 4, "N_x": 2, "N_y": 3, "p_ap_dbm": 10.0, "sigma2_dbm": -70.0,
      "mu": 2.0, "d_list": [5.0, 7.5], "Q": 12, "T": 34,
      "seeds": [3, 9], "schemes": ["ao", "hho"],
      "pathloss_exponents": {"ap_user": 3.0, "ap_irs": 2.0, "irs_user": 2.5},
      "out": "elsewhere"
    })");
    const auto c = irshho::config_from_json(j);
    REQUIRE(c.m == 4);
    REQUIRE(c.nx == 2);
    REQUIRE(c.ny == 3);
    REQUIRE(c.p_ap_dbm == 10.0);
    REQUIRE(c.sigma2_dbm == -70.0);
    REQUIRE(c.mu == 2.0);
    REQUIRE(c.d_list == std::vector<double>{5.0, 7.5});
    REQUIRE(c.q == 12);
    REQUIRE(c.t == 34);
    REQUIRE(c.seeds == std::vector<std::uint64_t>{3, 9});
    REQUIRE(c.schemes == std::vector<std::string>{"ao", "hho"});
    REQUIRE(c.pathloss_exponents.ap_user == 3.0);
    REQUIRE(c.pathloss_exponents.ap_irs == 2.0);
    REQUIRE(c.pathloss_exponents.irs_user == 2.5);
    REQUIRE(c.out == "elsewhere");
  }

  SECTION("partial override keeps defaults") {
    const auto c = irshho::config_from_json(nlohmann::json::parse(R"({"Q": 11})"));
    REQUIRE(c.q == 11);
    REQUIRE(c.t == 500);
    REQUIRE(c.m == 8);
  }

  SECTION("unknown keys are fatal") {
    REQUIRE_THROWS_AS(irshho::config_from_json(nlohmann::json::parse(R"({"Qq": 1})")),
                      irshho::ConfigError);
    REQUIRE_THROWS_AS(irshho::config_from_json(nlohmann::json::parse(
                          R"({"pathloss_exponents": {"apuser": 3.0}})")),
                      irshho::ConfigError);
  }

  SECTION("type errors are fatal") {
    REQUIRE_THROWS_AS(irshho::config_from_json(nlohmann::json::parse(R"({"Q": "many"})")),
                      irshho::ConfigError);
  }
}

TEST_CASE("config validation rejects broken setups") {
  auto c = tiny_config();
  SECTION("population") {
    c.q = 1;
    REQUIRE_THROWS_AS(irshho::validate(c), irshho::ConfigError);
  }
  SECTION("iterations") {
    c.t = 0;
    REQUIRE_THROWS_AS(irshho::validate(c), irshho::ConfigError);
  }
  SECTION("distances") {
    c.d_list.clear();
    REQUIRE_THROWS_AS(irshho::validate(c), irshho::ConfigError);
    c.d_list = {-5.0};
    REQUIRE_THROWS_AS(irshho::validate(c), irshho::ConfigError);
  }
  SECTION("seeds") {
    c.seeds.clear();
    REQUIRE_THROWS_AS(irshho::validate(c), irshho::ConfigError);
  }
  SECTION("schemes") {
    c.schemes = {"simulated-annealing"};
    REQUIRE_THROWS_AS(irshho::validate(c), irshho::ConfigError);
    c.schemes = {};
    REQUIRE_THROWS_AS(irshho::validate(c), irshho::ConfigError);
  }
  SECTION("geometry and penalty") {
    c.m = 0;
    REQUIRE_THROWS_AS(irshho::validate(c), irshho::ConfigError);
    c = tiny_config();
    c.nx = 0;
    REQUIRE_THROWS_AS(irshho::validate(c), irshho::ConfigError);
    c = tiny_config();
    c.mu = 0.0;
    REQUIRE_THROWS_AS(irshho::validate(c), irshho::ConfigError);
  }
}

TEST_CASE("channel seeding separates cells and stays deterministic") {
  REQUIRE(irshho::channel_seed(1, 10.0) == irshho::channel_seed(1, 10.0));
  REQUIRE(irshho::channel_seed(1, 10.0) != irshho::channel_seed(1, 15.0));
  REQUIRE(irshho::channel_seed(1, 10.0) != irshho::channel_seed(2, 10.0));

  const auto c = tiny_config();
  const auto a = irshho::make_instance(c, 20.0, 3);
  const auto b = irshho::make_instance(c, 20.0, 3);
  REQUIRE(a.m == 2);
  REQUIRE(a.n == 2);
  REQUIRE(a.channels.h_d.size() == 2);
  REQUIRE(a.channels.g.rows() == 2);
  REQUIRE(a.channels.g.cols() == 2);
  for (int i = 0; i < 2; ++i) {
    REQUIRE(a.channels.h_d[i] == b.channels.h_d[i]);
    REQUIRE(a.channels.h_r[i] == b.channels.h_r[i]);
  }
  const auto other = irshho::make_instance(c, 20.0, 4);
  REQUIRE(a.channels.h_d[0] != other.channels.h_d[0]);
  REQUIRE(a.p_ap == Approx(c.p_ap_watts()));
  REQUIRE(a.sigma2 == Approx(c.sigma2_watts()));
}

TEST_CASE("distance sweep runs every cell once, sorted and consistent") {
  const auto c = tiny_config();
  const auto records = irshho::sweep_distance(c);
  REQUIRE(records.size() == 45);  // 3 schemes x 3 distances x 5 seeds

  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& p = records[i - 1];
    const auto& r = records[i];
    REQUIRE(std::tie(p.scheme, p.d, p.seed) <= std::tie(r.scheme, r.d, r.seed));
  }

  const double sigma2 = c.sigma2_watts();
  for (const auto& r : records) {
    REQUIRE(r.q == c.q);
    REQUIRE(r.t == c.t);
    REQUIRE(r.power_watts > 0.0);
    REQUIRE(r.snr_db == irshho::snr_db(r.power_watts, sigma2));
    REQUIRE(r.wall_time_s >= 0.0);
    if (r.scheme == "no-irs") REQUIRE(r.iterations == 0);
    if (r.scheme == "ao") REQUIRE(r.iterations >= 1);
    if (r.scheme == "hho") REQUIRE(r.iterations == c.t);
  }

  SECTION("schemes share the channel realization per cell") {
    for (double d : c.d_list)
      for (std::uint64_t seed : c.seeds) {
        const auto inst = irshho::make_instance(c, d, seed);
        const double expected = inst.p_ap * inst.channels.h_d.squaredNorm();
        double no_irs = -1.0, ao = -1.0;
        for (const auto& r : records) {
          if (r.d == d && r.seed == seed && r.scheme == "no-irs") no_irs = r.power_watts;
          if (r.d == d && r.seed == seed && r.scheme == "ao") ao = r.power_watts;
        }
        REQUIRE(no_irs == Approx(expected).epsilon(1e-12));
        REQUIRE(ao >= no_irs * (1.0 - 1e-9));
      }
  }
}

TEST_CASE("sweep csv is deterministic apart from wall time") {
  auto c = tiny_config();
  c.d_list = {20.0};
  c.seeds = {1, 2};
  const std::string csv_a = irshho::sweep_csv(irshho::sweep_distance(c));
  const std::string csv_b = irshho::sweep_csv(irshho::sweep_distance(c));

  REQUIRE(csv_a.substr(0, csv_a.find('\n')) == irshho::kSweepCsvHeader);
  REQUIRE(strip_wall_time(csv_a) == strip_wall_time(csv_b));

  SECTION("parse inverts serialization") {
    std::istringstream in(csv_a);
    const auto parsed = irshho::parse_sweep_csv(in);
    REQUIRE(parsed.size() == 6);
    REQUIRE(irshho::sweep_csv(parsed) == csv_a);
  }

  SECTION("header mismatch is fatal") {
    std::istringstream in("a,b,c\n1,2,3\n");
    REQUIRE_THROWS_AS(irshho::parse_sweep_csv(in), irshho::ConfigError);
  }

  SECTION("malformed rows are fatal") {
    std::istringstream in(std::string(irshho::kSweepCsvHeader) + "\n1,2,3\n");
    REQUIRE_THROWS_AS(irshho::parse_sweep_csv(in), irshho::ConfigError);
  }
}

TEST_CASE("difference report pairs cells and aggregates per distance") {
  std::vector<irshho::ExperimentRecord> records;
  auto add = [&records](const std::string& scheme, double d, std::uint64_t seed,
                        double snr) {
    irshho::ExperimentRecord r;
    r.scheme = scheme;
    r.d = d;
    r.seed = seed;
    r.snr_db = snr;
    records.push_back(r);
  };
  add("hho", 10.0, 1, 20.0);
  add("hho", 10.0, 2, 22.0);
  add("ao", 10.0, 1, 19.0);
  add("ao", 10.0, 2, 23.0);
  add("hho", 20.0, 1, 15.0);
  add("hho", 20.0, 2, 15.0);
  add("ao", 20.0, 1, 15.5);
  add("ao", 20.0, 2, 14.5);

  const auto rows = irshho::difference_report(records, "hho", "ao");
  REQUIRE(rows.size() == 2);
  REQUIRE(rows[0].d == 10.0);
  REQUIRE(rows[0].mean_diff_db == Approx(0.0).margin(1e-12));  // (+1 - 1)/2
  REQUIRE(rows[0].std_diff_db == Approx(1.0));
  REQUIRE(rows[0].n_seeds == 2);
  REQUIRE(rows[1].d == 20.0);
  REQUIRE(rows[1].mean_diff_db == Approx(0.0).margin(1e-12));
  REQUIRE(rows[1].std_diff_db == Approx(0.5));

  SECTION("self difference is identically zero") {
    const auto self = irshho::difference_report(records, "hho", "hho");
    for (const auto& row : self) {
      REQUIRE(row.mean_diff_db == 0.0);
      REQUIRE(row.std_diff_db == 0.0);
    }
  }

  SECTION("antisymmetry") {
    const auto ba = irshho::difference_report(records, "ao", "hho");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      REQUIRE(ba[i].mean_diff_db == Approx(-rows[i].mean_diff_db).margin(1e-12));
      REQUIRE(ba[i].std_diff_db == Approx(rows[i].std_diff_db).margin(1e-12));
    }
  }

  SECTION("unpaired cells are fatal") {
    records.pop_back();
    REQUIRE_THROWS_AS(irshho::difference_report(records, "hho", "ao"),
                      irshho::ConfigError);
    REQUIRE_THROWS_AS(irshho::difference_report(records, "hho", "brute"),
                      irshho::ConfigError);
  }

  SECTION("csv format") {
    const std::string csv = irshho::diff_csv(rows);
    REQUIRE(csv.substr(0, csv.find('\n')) == "d_m,mean_diff_db,std_diff_db,n_seeds");
    REQUIRE(std::count(csv.begin(), csv.end(), '\n') == 3);
  }
}

TEST_CASE("convergence traces cover every iteration and never regress") {
  auto c = tiny_config();
  c.seeds = {1, 2};
  const auto traces = irshho::convergence_run(c, 20.0);
  REQUIRE(traces.size() == 2);
  for (const auto& tr : traces) {
    REQUIRE(tr.best_so_far.size() == static_cast<std::size_t>(c.t));
    for (std::size_t i = 1; i < tr.best_so_far.size(); ++i)
      REQUIRE(tr.best_so_far[i] >= tr.best_so_far[i - 1]);
  }

  const std::string csv = irshho::convergence_csv(traces);
  REQUIRE(csv.substr(0, csv.find('\n')) == "seed,iteration,best_so_far_fitness");
  REQUIRE(std::count(csv.begin(), csv.end(), '\n') ==
          1 + 2 * static_cast<long>(c.t));
  REQUIRE(csv.find("\n1,1,") != std::string::npos);
}

TEST_CASE("timing grid is validated and fits a line in Q*T") {
  auto c = tiny_config();

  SECTION("grid validation") {
    REQUIRE_THROWS_AS(irshho::timing_run(c, {}), irshho::ConfigError);
    REQUIRE_THROWS_AS(irshho::timing_run(c, {{1, 10}}), irshho::ConfigError);
    REQUIRE_THROWS_AS(irshho::timing_run(c, {{4, 0}}), irshho::ConfigError);
  }

  SECTION("measured points carry their grid labels") {
    const auto pts = irshho::timing_run(c, {{4, 5}, {6, 10}});
    REQUIRE(pts.size() == 2);
    REQUIRE(pts[0].q == 4);
    REQUIRE(pts[0].t == 5);
    REQUIRE(pts[1].q == 6);
    REQUIRE(pts[1].t == 10);
    for (const auto& p : pts) REQUIRE(p.wall_time_s > 0.0);
    const std::string csv = irshho::timing_csv(pts);
    REQUIRE(csv.substr(0, csv.find('\n')) == "Q,T,wall_time_s");
  }

  SECTION("perfect line gives unit r-squared") {
    std::vector<irshho::TimingPoint> pts;
    for (int q : {10, 20, 40})
      for (int t : {100, 200}) pts.push_back({q, t, 1e-3 + 2e-6 * q * t});
    REQUIRE(irshho::timing_r_squared(pts) == Approx(1.0).margin(1e-9));
  }

  SECTION("degenerate fits are fatal") {
    REQUIRE_THROWS_AS(irshho::timing_r_squared({{10, 10, 1.0}}), irshho::ConfigError);
    REQUIRE_THROWS_AS(irshho::timing_r_squared({{10, 10, 1.0}, {5, 20, 2.0}}),
                      irshho::ConfigError);
  }
}

TEST_CASE("oracle preconditions") {
  auto c = tiny_config();  // m = 2
  REQUIRE_THROWS_AS(irshho::oracle_check(c), irshho::ConfigError);
  c.m = 1;
  REQUIRE_THROWS_AS(irshho::oracle_check(c, {9}), irshho::ConfigError);
}

TEST_CASE("optimizer sanity harness on a small instance") {
  const auto rep = irshho::hho_sanity(4, 12, 200, 5);
  REQUIRE(rep.sphere_runs == 4);
  REQUIRE(rep.sphere_hits == 4);
  REQUIRE(rep.sphere_worst > -irshho::kSanitySphereTol);
  REQUIRE(rep.traces_monotone);
  REQUIRE(rep.besiege_branches_covered);
  REQUIRE(rep.rastrigin_median_gap >= 0.0);
  REQUIRE(rep.pass());
}

TEST_CASE("channel and solution fixtures round-trip through json") {
  auto g = irshho::substream(81, 0, 0);
  irshho::ChannelSet ch;
  ch.h_d = irshho::rayleigh_matrix(3, 1, 1e-6, g).col(0);
  ch.g = irshho::rayleigh_matrix(4, 3, 1e-6, g);
  ch.h_r = irshho::rayleigh_matrix(4, 1, 1e-6, g).col(0);

  const auto back = irshho::channel_set_from_json(irshho::to_json(ch));
  for (int i = 0; i < 3; ++i) REQUIRE(back.h_d[i] == ch.h_d[i]);
  for (int i = 0; i < 4; ++i) REQUIRE(back.h_r[i] == ch.h_r[i]);
  REQUIRE((back.g - ch.g).cwiseAbs().maxCoeff() == 0.0);

  irshho::BeamformingSolution s;
  s.w = ch.h_d;
  s.theta = irshho::Vector::LinSpaced(4, 0.0, 3.0);
  const auto s2 = irshho::solution_from_json(irshho::to_json(s));
  for (int i = 0; i < 3; ++i) REQUIRE(s2.w[i] == s.w[i]);
  for (int i = 0; i < 4; ++i) REQUIRE(s2.theta[i] == s.theta[i]);

  SECTION("malformed fixtures throw") {
    REQUIRE_THROWS_AS(irshho::complex_from_json(nlohmann::json::parse("[1.0]")),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(
        irshho::complex_matrix_from_json(nlohmann::json::parse("[[[1,2]],[]]")),
        std::invalid_argument);
  }
}
