#include "wocsim/learning.hpp"

#include "wocsim/errors.hpp"

namespace wocsim {

namespace {

std::vector<double> apply(const InfluenceMatrix& m,
                          const std::vector<double>& v) {
  std::vector<double> out(v.size(), 0.0);
  for (int i = 0; i < m.n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < m.n; ++j) acc += m(i, j) * v[j];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

}  // namespace

std::vector<double> degroot_stages(const InfluenceMatrix& m,
                                   const std::vector<double>& signals,
                                   int stages) {
  if (stages < 0) throw ConfigError("stage count must be >= 0");
  if (static_cast<int>(signals.size()) != m.n)
    throw InvariantError("signal vector does not match matrix dimension");
  std::vector<double> v = signals;
  for (int s = 0; s < stages; ++s) v = apply(m, v);
  return v;
}

std::vector<double> degroot_two_stage(const InfluenceMatrix& m,
                                      const std::vector<double>& signals) {
  return degroot_stages(m, signals, 2);
}

std::vector<double> solo_beliefs(const std::vector<double>& signals) {
  return signals;
}

}  // namespace wocsim
