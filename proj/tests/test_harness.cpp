#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wocsim/config_file.hpp"
#include "wocsim/errors.hpp"
#include "wocsim/harness.hpp"

using namespace wocsim;

namespace {

RunConfig small_config() {
  RunConfig cfg;
  cfg.agents = 6;
  cfg.rounds = 8;
  cfg.kappa = 2;
  cfg.seed = 7;
  cfg.shock = ShockSchedule::deterministic({4});
  return cfg;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config validation rejects bad parameter combinations") {
  RunConfig cfg;
  cfg.agents = 2;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = RunConfig{};
  cfg.kappa = 12;  // >= agents
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = RunConfig{};
  cfg.eta = -0.5;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = RunConfig{};
  cfg.truth_lo = 0.8;
  cfg.truth_hi = 0.2;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  CHECK_NOTHROW(RunConfig{}.validate());
}

TEST_CASE("condition and channel parsing") {
  CHECK(parse_condition("solo") == Condition::Solo);
  CHECK(parse_condition("static") == Condition::Static);
  CHECK(parse_condition("dynamic") == Condition::Dynamic);
  CHECK_THROWS_AS(parse_condition("duo"), ConfigError);
  CHECK(parse_signal_channel("gaussian") == SignalChannel::Gaussian);
  CHECK(parse_signal_channel("scatter") == SignalChannel::Scatter);
  CHECK_THROWS_AS(parse_signal_channel("lines"), ConfigError);
}

TEST_CASE("identical seeds give identical traces, different seeds differ") {
  auto cfg = small_config();
  auto a = run(cfg);
  auto b = run(cfg);
  REQUIRE(a.rounds.size() == b.rounds.size());
  for (std::size_t r = 0; r < a.rounds.size(); ++r) {
    CHECK(a.rounds[r].signals == b.rounds[r].signals);
    CHECK(a.rounds[r].beliefs == b.rounds[r].beliefs);
    CHECK(a.rounds[r].shares == b.rounds[r].shares);
  }
  cfg.seed = 8;
  auto c = run(cfg);
  CHECK(a.rounds[0].signals != c.rounds[0].signals);
}

TEST_CASE("solo condition beliefs equal signals and record no graph") {
  auto cfg = small_config();
  cfg.condition = Condition::Solo;
  auto t = run(cfg);
  for (const auto& r : t.rounds) {
    CHECK(r.beliefs == r.signals);
    CHECK(r.shares.empty());
  }
}

TEST_CASE("static condition never rewires") {
  auto cfg = small_config();
  cfg.condition = Condition::Static;
  auto t = run(cfg);
  for (const auto& r : t.rounds) CHECK(r.shares == t.rounds[0].shares);
}

TEST_CASE("disabling rewiring makes dynamic identical to static") {
  auto cfg = small_config();
  cfg.condition = Condition::Dynamic;
  cfg.rewiring_enabled = false;
  auto dyn = run(cfg);
  cfg.condition = Condition::Static;
  auto sta = run(cfg);
  for (std::size_t r = 0; r < dyn.rounds.size(); ++r) {
    CHECK(dyn.rounds[r].beliefs == sta.rounds[r].beliefs);
    CHECK(dyn.rounds[r].shares == sta.rounds[r].shares);
  }
}

TEST_CASE("shock rounds flag the metrics row and permute qualities only there") {
  auto cfg = small_config();
  auto t = run(cfg);
  for (const auto& r : t.rounds)
    CHECK(r.metrics.shock == (r.metrics.round == 4));
  // Labels are constant between shocks.
  auto labels = [](const RoundRecord& r) {
    std::vector<QualityLabel> v;
    for (const auto& q : r.world.quality_of) v.push_back(q.label);
    return v;
  };
  // Shock fires at the end of round 4: rounds 1-4 share the initial labels,
  // rounds 5-8 share the permuted ones.
  for (int r = 1; r < 4; ++r)
    CHECK(labels(t.rounds[static_cast<std::size_t>(r)]) == labels(t.rounds[0]));
  for (int r = 5; r < 8; ++r)
    CHECK(labels(t.rounds[static_cast<std::size_t>(r)]) == labels(t.rounds[4]));
}

TEST_CASE("shock stream isolation: the environment draws are unaffected") {
  auto cfg = small_config();
  auto with = run(cfg);
  cfg.shock = ShockSchedule::deterministic({});
  auto without = run(cfg);
  for (std::size_t r = 0; r < with.rounds.size(); ++r) {
    CHECK(with.rounds[r].world.truth == without.rounds[r].world.truth);
  }
}

TEST_CASE("scatter channel produces valid runs too") {
  auto cfg = small_config();
  cfg.signal_channel = SignalChannel::Scatter;
  auto t = run(cfg);
  for (const auto& r : t.rounds)
    for (double s : r.signals) {
      CHECK(s >= 0.0);
      CHECK(s <= 1.0);
    }
}

TEST_CASE("trace and metrics emitters write the pinned schemas") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "wocsim_test_emit";
  fs::create_directories(dir);
  auto cfg = small_config();
  auto t = run(cfg);
  emit_trace(t, (dir / "trace.csv").string());
  emit_metrics(t, (dir / "metrics.csv").string());
  auto trace = slurp(dir / "trace.csv");
  CHECK(trace.rfind("run_id,round,agent_id,quality_label,signal,belief,"
                    "indiv_error,in_degree,out_edges\n", 0) == 0);
  auto metrics = slurp(dir / "metrics.csv");
  CHECK(metrics.rfind("run_id,round,truth,wc_error,wdn_error,centralization,"
                      "shock_flag\n", 0) == 0);
  // One row per agent-round plus header; one row per round plus header.
  auto lines = [](const std::string& s) {
    return std::count(s.begin(), s.end(), '\n');
  };
  CHECK(lines(trace) == 1 + 6 * 8);
  CHECK(lines(metrics) == 1 + 8);
  fs::remove_all(dir);
}

TEST_CASE("emitted files are byte-identical across invocations") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "wocsim_test_bytes";
  fs::create_directories(dir);
  auto cfg = small_config();
  std::string first;
  for (int i = 0; i < 3; ++i) {
    auto t = run(cfg);
    emit_trace(t, (dir / "trace.csv").string());
    auto bytes = slurp(dir / "trace.csv");
    if (i == 0)
      first = bytes;
    else
      CHECK(bytes == first);
  }
  fs::remove_all(dir);
}

TEST_CASE("sweep covers the grid and derives distinct seeds") {
  auto cfg = small_config();
  cfg.rounds = 6;
  auto rows = sweep(cfg, {1, 5}, {4.0, 6.0}, {0.0, 0.5}, 2);
  CHECK(rows.size() == 8);
  for (const auto& r : rows) CHECK(r.replication_count == 2);
  // normalized_wdn is min-max scaled within each rho column: extremes 0/1.
  for (double rho : {4.0, 6.0}) {
    double lo = 2.0, hi = -1.0;
    for (const auto& r : rows)
      if (r.rho == rho) {
        lo = std::min(lo, r.normalized_wdn);
        hi = std::max(hi, r.normalized_wdn);
      }
    CHECK(lo == doctest::Approx(0.0));
    CHECK(hi == doctest::Approx(1.0));
  }
}

TEST_CASE("summary emitter writes the pinned schema") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "wocsim_test_summary";
  fs::create_directories(dir);
  auto cfg = small_config();
  cfg.rounds = 6;
  auto rows = sweep(cfg, {1}, {4.0}, {0.0}, 1);
  emit_summary(rows, (dir / "summary.csv").string());
  auto s = slurp(dir / "summary.csv");
  CHECK(s.rfind("lambda,rho,eta,replication_count,mean_wdn,mean_wc,p05_wdn,"
                "p95_wdn,normalized_wdn\n", 0) == 0);
  fs::remove_all(dir);
}

TEST_CASE("config files round-trip through the loader") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "wocsim_test_cfg";
  fs::create_directories(dir);
  auto path = dir / "run.cfg";
  {
    std::ofstream out(path);
    out << "# comment line\n"
        << "agents = 8\n"
        << "rounds = 12\n"
        << "lambda = 2\n"
        << "eta = 0.25\n"
        << "condition = static\n"
        << "shock_rounds = 3,6\n"
        << "quality.low.bias = 0.4\n"
        << "lambda_grid = 2,4\n";
  }
  auto loaded = load_config_file(path.string());
  CHECK(loaded.run.agents == 8);
  CHECK(loaded.run.rounds == 12);
  CHECK(loaded.run.lambda == 2);
  CHECK(loaded.run.eta == 0.25);
  CHECK(loaded.run.condition == Condition::Static);
  CHECK(loaded.run.quality.low.bias == 0.4);
  CHECK(loaded.lambda_grid == std::vector<int>{2, 4});
  {
    std::ofstream out(path);
    out << "agentz = 8\n";
  }
  CHECK_THROWS_AS(load_config_file(path.string()), ConfigError);
  fs::remove_all(dir);
}
