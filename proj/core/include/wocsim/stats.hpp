#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace wocsim {

inline double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) /
         static_cast<double>(v.size());
}

inline double population_sd(const std::vector<double>& v) {
  double mu = mean_of(v);
  double var = 0.0;
  for (double x : v) var += (x - mu) * (x - mu);
  return std::sqrt(var / static_cast<double>(v.size()));
}

// Linear-interpolation percentile (q in [0,1]).
inline double percentile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  double pos = q * static_cast<double>(v.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  std::size_t hi = std::min(lo + 1, v.size() - 1);
  double frac = pos - static_cast<double>(lo);
  return v[lo] + frac * (v[hi] - v[lo]);
}

}  // namespace wocsim
