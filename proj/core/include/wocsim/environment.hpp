#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wocsim/rng.hpp"

namespace wocsim {

enum class QualityLabel { High, Medium, Low };

std::string to_string(QualityLabel label);

// One of the three signal-quality levels. noise_sd/bias drive the gaussian
// signal channel; n_points/outlier_count/nonlinear drive the scatter channel.
struct QualityLevel {
  QualityLabel label = QualityLabel::High;
  double noise_sd = 0.0;
  double bias = 0.0;
  int n_points = 100;
  int outlier_count = 0;
  bool nonlinear = false;
};

// True state of the world plus the per-agent quality assignment for a round.
struct WorldRound {
  int round = 0;
  double truth = 0.0;
  std::vector<QualityLevel> quality_of;  // one entry per agent
};

struct ShockSchedule {
  enum class Mode { Deterministic, Bernoulli };
  Mode mode = Mode::Deterministic;
  std::vector<int> rounds;  // Deterministic: shock fires at end of each listed
                            // round (1-indexed), so it first affects round r+1
  double rho = 0.0;         // Bernoulli: mean rounds between shocks; per-round
                            // shock probability is 1/rho

  // Consumes one draw in Bernoulli mode, none in Deterministic mode.
  bool fires_after(int round, Rng& rng) const;

  static ShockSchedule deterministic(std::vector<int> rounds);
  static ShockSchedule bernoulli(double rho);
};

struct ScatterTask {
  std::vector<std::pair<double, double>> points;
  double target_correlation = 0.0;
  QualityLevel quality;
};

// Uniform draw in [lo, hi). Consumes exactly one draw.
double next_truth(Rng& rng, double lo, double hi);

// clamp(truth + bias + Normal(0, noise_sd), 0, 1). Two draws (zero when
// noise_sd == 0).
double draw_signal(double truth, const QualityLevel& quality, Rng& rng);

// Uniformly permutes the quality assignment; the multiset of labels is
// preserved. Identity permutation is permitted.
WorldRound apply_shock(const WorldRound& state, Rng& rng);

// Standardized bivariate normal cloud with correlation r (y = r*x +
// sqrt(1-r^2)*z), plus outlier_count points pushed far off the regression
// line. When quality.nonlinear is set, y is warped by the monotone map
// y -> y + 0.3*y^3 after generation.
ScatterTask generate_scatter(double target_correlation,
                             const QualityLevel& quality, Rng& rng);

// Pearson correlation of the task's points. Throws ConfigError on fewer than
// two points or zero variance in either coordinate.
double sample_correlation(const ScatterTask& task);

}  // namespace wocsim
