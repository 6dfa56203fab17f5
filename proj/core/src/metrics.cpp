#include "wocsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wocsim/errors.hpp"

namespace wocsim {

namespace {

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) /
         static_cast<double>(v.size());
}

}  // namespace

double wc_error(const std::vector<double>& signals, double truth) {
  if (signals.empty()) throw InvariantError("wc_error: empty group");
  return std::abs(truth - mean(signals));
}

double wdn_error(const std::vector<double>& beliefs, double truth) {
  if (beliefs.empty()) throw InvariantError("wdn_error: empty group");
  return std::abs(truth - mean(beliefs));
}

std::vector<double> normalized_error(const std::vector<double>& errors,
                                     const std::vector<double>& baseline) {
  if (baseline.empty()) throw ConfigError("normalized_error: empty baseline");
  double base = mean(baseline);
  if (base <= 0.0)
    throw ConfigError("normalized_error: baseline mean must be positive");
  std::vector<double> out(errors.size());
  for (std::size_t i = 0; i < errors.size(); ++i) out[i] = errors[i] / base;
  return out;
}

std::vector<int> rank_members(
    const std::vector<std::vector<double>>& indiv_errors,
    const std::vector<int>& evaluation_rounds) {
  if (evaluation_rounds.empty())
    throw ConfigError("rank_members: no evaluation rounds");
  const std::size_t n = indiv_errors.front().size();
  std::vector<double> mean_err(n, 0.0);
  for (int t : evaluation_rounds)
    if (t < 0 || static_cast<std::size_t>(t) >= indiv_errors.size())
      throw ConfigError("rank_members: evaluation round out of range");
  for (int t : evaluation_rounds)
    for (std::size_t i = 0; i < n; ++i)
      mean_err[i] += indiv_errors[static_cast<std::size_t>(t)][i];
  for (double& e : mean_err) e /= static_cast<double>(evaluation_rounds.size());
  std::vector<int> ranking(n);
  std::iota(ranking.begin(), ranking.end(), 0);
  std::stable_sort(ranking.begin(), ranking.end(), [&](int a, int b) {
    return mean_err[static_cast<std::size_t>(a)] <
           mean_err[static_cast<std::size_t>(b)];
  });
  return ranking;
}

double top_k_estimate(const std::vector<double>& beliefs,
                      const std::vector<int>& ranking, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > beliefs.size())
    throw ConfigError("top_k_estimate: k out of range");
  // Sum the selected agents in ascending index order so the estimate is
  // independent of rank permutations; at k == n this makes the top-k
  // estimate bit-identical to the plain group mean.
  std::vector<bool> picked(beliefs.size(), false);
  for (int r = 0; r < k; ++r)
    picked[static_cast<std::size_t>(ranking[static_cast<std::size_t>(r)])] = true;
  double acc = 0.0;
  for (std::size_t i = 0; i < beliefs.size(); ++i)
    if (picked[i]) acc += beliefs[i];
  return acc / static_cast<double>(k);
}

std::vector<TopKCurve> mean_variance_curve(
    const std::vector<std::vector<double>>& beliefs_by_round,
    const std::vector<double>& truths,
    const std::vector<std::vector<double>>& indiv_errors,
    const std::vector<int>& evaluation_rounds) {
  auto ranking = rank_members(indiv_errors, evaluation_rounds);
  const int n = static_cast<int>(ranking.size());
  std::vector<TopKCurve> curve;
  curve.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    std::vector<double> errs;
    errs.reserve(evaluation_rounds.size());
    for (int t : evaluation_rounds) {
      double est = top_k_estimate(
          beliefs_by_round[static_cast<std::size_t>(t)], ranking, k);
      errs.push_back(std::abs(est - truths[static_cast<std::size_t>(t)]));
    }
    double mu = mean(errs);
    double var = 0.0;
    for (double e : errs) var += (e - mu) * (e - mu);
    var /= static_cast<double>(errs.size());
    curve.push_back({k, mu, std::sqrt(var)});
  }
  return curve;
}

std::vector<int> adapted_period_rounds(int total_rounds) {
  std::vector<int> rounds;
  for (int t = total_rounds / 4; t < total_rounds / 2; ++t)
    rounds.push_back(t);
  for (int t = 3 * total_rounds / 4; t < total_rounds; ++t)
    rounds.push_back(t);
  return rounds;
}

std::optional<double> resistance_to_influence(double u1, double u2, double m) {
  if (m == u1) return std::nullopt;
  double woa = std::abs(u2 - u1) / std::abs(m - u1);
  return std::clamp(1.0 - woa, 0.0, 1.0);
}

}  // namespace wocsim
