// Test-only oracles and statistics helpers. Everything here is independent
// of the library's implementation paths it is used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "wocsim/network.hpp"

namespace testsupport {

// Brute-force nested averaging: for each agent, explicitly compute the
// weighted average of the first-pass weighted averages, entry by entry.
inline std::vector<double> nested_average_oracle(
    const wocsim::InfluenceMatrix& m, const std::vector<double>& signals) {
  const int n = m.n;
  std::vector<double> first(signals.size(), 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += m(i, j) * signals[j];
    first[static_cast<std::size_t>(i)] = acc;
  }
  std::vector<double> second(signals.size(), 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += m(i, j) * first[j];
    second[static_cast<std::size_t>(i)] = acc;
  }
  return second;
}

// One-sided sign test: P(X >= k) for X ~ Binomial(n, 1/2).
inline double sign_test_p(int k, int n) {
  double p = 0.0;
  for (int i = k; i <= n; ++i)
    p += std::exp(std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
                  std::lgamma(n - i + 1.0) - n * std::log(2.0));
  return std::min(p, 1.0);
}

// Paired one-sided t test p-value (alternative: mean > 0), normal
// approximation for the large sample sizes used here.
inline double paired_t_p(const std::vector<double>& diffs) {
  const double n = static_cast<double>(diffs.size());
  double m = std::accumulate(diffs.begin(), diffs.end(), 0.0) / n;
  double var = 0.0;
  for (double d : diffs) var += (d - m) * (d - m);
  var /= (n - 1.0);
  if (var == 0.0) return m > 0.0 ? 0.0 : 1.0;
  double t = m / std::sqrt(var / n);
  return 0.5 * std::erfc(t / std::sqrt(2.0));
}

inline std::vector<double> midranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

// Spearman rank correlation with midranks for ties.
inline double spearman(const std::vector<double>& x,
                       const std::vector<double>& y) {
  auto rx = midranks(x);
  auto ry = midranks(y);
  const double n = static_cast<double>(x.size());
  double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// One-sided p-value for positive Spearman correlation (t approximation).
inline double spearman_p(double rho, std::size_t n) {
  double t = rho * std::sqrt((static_cast<double>(n) - 2.0) /
                             (1.0 - rho * rho));
  return 0.5 * std::erfc(t / std::sqrt(2.0));
}

}  // namespace testsupport
