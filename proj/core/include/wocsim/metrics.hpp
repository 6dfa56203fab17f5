#pragma once

#include <optional>
#include <vector>

namespace wocsim {

struct RoundMetrics {
  int round = 0;
  double truth = 0.0;
  double wc_error = 0.0;
  double wdn_error = 0.0;
  std::vector<double> individual_errors;
  double centralization = 0.0;
  bool shock = false;  // a shock fired at the end of this round
};

struct TopKCurve {
  int k = 0;
  double mean_abs_error = 0.0;
  double sd_abs_error = 0.0;  // population sd
};

// |truth - mean(signals)|
double wc_error(const std::vector<double>& signals, double truth);

// |truth - mean(beliefs)|
double wdn_error(const std::vector<double>& beliefs, double truth);

// Per-entry errors divided by the mean of the baseline series (solo
// condition by convention). Throws on a zero baseline mean.
std::vector<double> normalized_error(const std::vector<double>& errors,
                                     const std::vector<double>& baseline);

// Agents sorted ascending by mean |p_i - truth| over the evaluation rounds;
// ties break toward the lower agent index. indiv_errors is [round][agent];
// evaluation_rounds are 0-based indices into it.
std::vector<int> rank_members(
    const std::vector<std::vector<double>>& indiv_errors,
    const std::vector<int>& evaluation_rounds);

// Mean belief of the first k agents in the ranking.
double top_k_estimate(const std::vector<double>& beliefs,
                      const std::vector<int>& ranking, int k);

// For each k in 1..n, mean and population sd of |top_k_estimate - truth|
// over the evaluation rounds, with one ex-post ranking over those rounds.
std::vector<TopKCurve> mean_variance_curve(
    const std::vector<std::vector<double>>& beliefs_by_round,
    const std::vector<double>& truths,
    const std::vector<std::vector<double>>& indiv_errors,
    const std::vector<int>& evaluation_rounds);

// Default evaluation windows (rounds 6-10 and 16-20 for a 20-round run,
// scaled proportionally otherwise), returned as 0-based indices.
std::vector<int> adapted_period_rounds(int total_rounds);

// 1 - |u2 - u1| / |m - u1|, clamped to [0,1]. nullopt when m == u1 (the
// ratio is undefined; callers exclude these from aggregates).
std::optional<double> resistance_to_influence(double u1, double u2, double m);

}  // namespace wocsim
