#include "wocsim/environment.hpp"

#include <algorithm>
#include <cmath>

#include "wocsim/errors.hpp"

namespace wocsim {

std::string to_string(QualityLabel label) {
  switch (label) {
    case QualityLabel::High:
      return "High";
    case QualityLabel::Medium:
      return "Medium";
    case QualityLabel::Low:
      return "Low";
  }
  return "?";
}

bool ShockSchedule::fires_after(int round, Rng& rng) const {
  if (mode == Mode::Deterministic)
    return std::find(rounds.begin(), rounds.end(), round) != rounds.end();
  return rng.bernoulli(1.0 / rho);
}

ShockSchedule ShockSchedule::deterministic(std::vector<int> rounds) {
  for (std::size_t i = 1; i < rounds.size(); ++i)
    if (rounds[i] <= rounds[i - 1])
      throw ConfigError("shock rounds must be strictly increasing");
  ShockSchedule s;
  s.mode = Mode::Deterministic;
  s.rounds = std::move(rounds);
  return s;
}

ShockSchedule ShockSchedule::bernoulli(double rho) {
  if (rho < 1.0) throw ConfigError("shock rho must be >= 1");
  ShockSchedule s;
  s.mode = Mode::Bernoulli;
  s.rho = rho;
  return s;
}

double next_truth(Rng& rng, double lo, double hi) {
  if (!(0.0 <= lo && lo < hi && hi <= 1.0))
    throw ConfigError("truth bounds must satisfy 0 <= lo < hi <= 1");
  return rng.uniform(lo, hi);
}

double draw_signal(double truth, const QualityLevel& quality, Rng& rng) {
  double s = truth + quality.bias;
  if (quality.noise_sd > 0.0) s += rng.normal(0.0, quality.noise_sd);
  return std::clamp(s, 0.0, 1.0);
}

WorldRound apply_shock(const WorldRound& state, Rng& rng) {
  WorldRound out = state;
  auto perm = rng.permutation(state.quality_of.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    out.quality_of[i] = state.quality_of[perm[i]];
  return out;
}

ScatterTask generate_scatter(double target_correlation,
                             const QualityLevel& quality, Rng& rng) {
  const double r = target_correlation;
  const double resid = std::sqrt(std::max(0.0, 1.0 - r * r));
  ScatterTask task;
  task.target_correlation = r;
  task.quality = quality;
  task.points.reserve(quality.n_points + quality.outlier_count);
  for (int i = 0; i < quality.n_points; ++i) {
    double x = rng.normal(0.0, 1.0);
    double y = r * x + resid * rng.normal(0.0, 1.0);
    task.points.emplace_back(x, y);
  }
  for (int i = 0; i < quality.outlier_count; ++i) {
    // residual of at least 3 sd, alternating side
    double x = rng.normal(0.0, 1.0);
    double off = 3.0 + std::abs(rng.normal(0.0, 1.0));
    double sign = rng.bernoulli(0.5) ? 1.0 : -1.0;
    task.points.emplace_back(x, r * x + sign * off);
  }
  if (quality.nonlinear) {
    for (auto& [x, y] : task.points) y = y + 0.3 * y * y * y;
  }
  return task;
}

double sample_correlation(const ScatterTask& task) {
  const auto& pts = task.points;
  const std::size_t m = pts.size();
  if (m < 2) throw ConfigError("sample_correlation needs at least 2 points");
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (const auto& [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0.0 || syy == 0.0)
    throw ConfigError("sample_correlation: degenerate task (zero variance)");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace wocsim
