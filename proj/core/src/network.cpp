#include "wocsim/network.hpp"

#include <algorithm>
#include <string>

#include "wocsim/errors.hpp"

namespace wocsim {

AttentionGraph::AttentionGraph(int n, int kappa, int self_weight)
    : n_(n),
      kappa_(kappa),
      self_weight_(self_weight),
      shares_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  if (n < 2) throw ConfigError("graph needs at least 2 agents");
  if (kappa < 1 || kappa > n - 1)
    throw ConfigError("kappa must be in [1, n-1], got " +
                      std::to_string(kappa));
  if (self_weight < 1) throw ConfigError("self_weight must be >= 1");
}

AttentionGraph AttentionGraph::init_random(int n, int kappa, Rng& rng,
                                           int self_weight) {
  AttentionGraph g(n, kappa, self_weight);
  std::vector<int> candidates;
  for (int i = 0; i < n; ++i) {
    candidates.clear();
    for (int j = 0; j < n; ++j)
      if (j != i) candidates.push_back(j);
    // partial Fisher-Yates: kappa distinct peers, one share each
    for (int k = 0; k < kappa; ++k) {
      std::size_t pick =
          static_cast<std::size_t>(k) + rng.below(candidates.size() - k);
      std::swap(candidates[k], candidates[pick]);
      g.set_shares(i, candidates[k], 1);
    }
  }
  g.validate();
  return g;
}

void AttentionGraph::set_shares(int i, int j, int value) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw InvariantError("set_shares: agent index out of range");
  if (value < 0 || value > kappa_)
    throw InvariantError("set_shares: share count outside {0..kappa}");
  shares_[idx(i, j)] = value;
}

void AttentionGraph::validate() const {
  for (int i = 0; i < n_; ++i) {
    int total = 0;
    for (int j = 0; j < n_; ++j) {
      int e = shares_[idx(i, j)];
      if (e < 0 || e > kappa_)
        throw InvariantError("share out of range at (" + std::to_string(i) +
                             "," + std::to_string(j) + ")");
      total += e;
    }
    if (total != kappa_)
      throw InvariantError("row " + std::to_string(i) + " holds " +
                           std::to_string(total) + " shares, expected " +
                           std::to_string(kappa_));
  }
}

InfluenceMatrix build_matrix(const AttentionGraph& graph) {
  const int n = graph.n();
  InfluenceMatrix m;
  m.n = n;
  m.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                   0.0);
  for (int i = 0; i < n; ++i) {
    const double total =
        static_cast<double>(graph.kappa() + graph.self_weight());
    for (int j = 0; j < n; ++j) {
      double w = (i == j) ? graph.self_weight() + graph.shares(i, i)
                          : graph.shares(i, j);
      m.entries[static_cast<std::size_t>(i) * n + j] = w / total;
    }
  }
  return m;
}

std::vector<int> in_degree(const AttentionGraph& graph) {
  std::vector<int> deg(graph.n(), 0);
  for (int i = 0; i < graph.n(); ++i)
    for (int j = 0; j < graph.n(); ++j)
      if (i != j) deg[j] += graph.shares(i, j);
  return deg;
}

std::vector<int> binary_in_degree(const AttentionGraph& graph) {
  std::vector<int> deg(graph.n(), 0);
  for (int i = 0; i < graph.n(); ++i)
    for (int j = 0; j < graph.n(); ++j)
      if (i != j && graph.shares(i, j) > 0) ++deg[j];
  return deg;
}

double freeman_centralization(const std::vector<int>& in_degrees) {
  const std::size_t n = in_degrees.size();
  if (n < 3) throw ConfigError("freeman centralization undefined for n < 3");
  int max_deg = *std::max_element(in_degrees.begin(), in_degrees.end());
  long sum = 0;
  for (int d : in_degrees) sum += max_deg - d;
  return static_cast<double>(sum) /
         (static_cast<double>(n - 1) * static_cast<double>(n - 2));
}

double freeman_centralization(const AttentionGraph& graph,
                              CentralizationMode mode) {
  return freeman_centralization(mode == CentralizationMode::Binary
                                    ? binary_in_degree(graph)
                                    : in_degree(graph));
}

}  // namespace wocsim
