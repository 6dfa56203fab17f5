#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wocsim/environment.hpp"
#include "wocsim/metrics.hpp"
#include "wocsim/network.hpp"

namespace wocsim {

enum class Condition { Solo, Static, Dynamic };
enum class SignalChannel { Gaussian, Scatter };

Condition parse_condition(const std::string& s);
SignalChannel parse_signal_channel(const std::string& s);
std::string to_string(Condition c);

struct QualityConfig {
  QualityLevel high{QualityLabel::High, 0.05, 0.00, 100, 0, false};
  QualityLevel medium{QualityLabel::Medium, 0.25, 0.15, 40, 2, false};
  QualityLevel low{QualityLabel::Low, 0.40, 0.30, 12, 3, true};
};

struct RunConfig {
  Condition condition = Condition::Dynamic;
  int agents = 12;
  int rounds = 20;
  int kappa = 3;
  int self_weight = 2;
  int lambda = 0;
  double eta = 0.0;
  ShockSchedule shock = ShockSchedule::deterministic({10});
  SignalChannel signal_channel = SignalChannel::Gaussian;
  QualityConfig quality;
  double truth_lo = 0.1;
  double truth_hi = 0.9;
  CentralizationMode centralization_mode = CentralizationMode::Binary;
  int degroot_stages = 2;
  bool rewiring_enabled = true;  // off: dynamic behaves exactly like static
  bool self_attachment = true;   // agents may move attention shares onto
                                 // their own private signal
  std::uint64_t seed = 0;
  int replications = 1;

  void validate() const;  // throws ConfigError
};

struct RoundRecord {
  WorldRound world;
  std::vector<double> signals;
  std::vector<double> beliefs;
  std::vector<std::vector<int>> shares;  // snapshot at learning time; empty
                                         // for the solo condition
  RoundMetrics metrics;
};

struct RunTrace {
  std::uint64_t run_id = 0;
  RunConfig config;
  std::vector<RoundRecord> rounds;
};

// Executes one seeded run. Round order: draw truth -> draw signals ->
// beliefs -> record metrics -> update ledger -> (dynamic) feedback views and
// rewire -> (shock rounds) reshuffle qualities. Three independent RNG
// streams (environment, graph, shock) are derived from the seed so shock
// draws never shift the signal stream.
RunTrace run(const RunConfig& config);

struct SweepRow {
  int lambda = 0;
  double rho = 0.0;
  double eta = 0.0;
  int replication_count = 0;
  double mean_wdn = 0.0;
  double mean_wc = 0.0;
  double p05_wdn = 0.0;
  double p95_wdn = 0.0;
  double normalized_wdn = 0.0;  // min-max scaled within the rho column
};

// Full Cartesian product of the grids; per-cell seeds derived from
// (base.seed, cell index, replication index) and checked for collisions.
// Each replication's wdn/wc errors are time-averaged over all rounds.
std::vector<SweepRow> sweep(const RunConfig& base,
                            const std::vector<int>& lambda_grid,
                            const std::vector<double>& rho_grid,
                            const std::vector<double>& eta_grid,
                            int replications);

// CSV emitters; doubles printed with 17 significant digits.
void emit_trace(const RunTrace& trace, const std::string& path);
void emit_metrics(const RunTrace& trace, const std::string& path);
void emit_summary(const std::vector<SweepRow>& rows, const std::string& path);

std::string format_double(double v);

}  // namespace wocsim
