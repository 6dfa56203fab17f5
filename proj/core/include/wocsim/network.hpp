#pragma once

#include <vector>

#include "wocsim/rng.hpp"

namespace wocsim {

// Directed attention-share graph. Each agent allocates exactly kappa integer
// shares; rewiring may move them between peers and (when self-attachment is
// enabled) onto the agent itself. On top of any self-shares the diagonal
// carries a fixed self weight that is never rewired.
class AttentionGraph {
 public:
  AttentionGraph(int n, int kappa, int self_weight = 1);

  // Each agent places its kappa shares on kappa distinct uniformly chosen
  // peers, one share each. Draw order: agents ascending, shares via
  // partial Fisher-Yates over candidate peers.
  static AttentionGraph init_random(int n, int kappa, Rng& rng,
                                    int self_weight = 1);

  int n() const { return n_; }
  int kappa() const { return kappa_; }
  int self_weight() const { return self_weight_; }

  int shares(int i, int j) const { return shares_[idx(i, j)]; }
  void set_shares(int i, int j, int value);

  // Throws InvariantError if any row total differs from kappa or an entry
  // is out of {0..kappa}.
  void validate() const;

  bool operator==(const AttentionGraph&) const = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_;
  int kappa_;
  int self_weight_;
  std::vector<int> shares_;  // row-major, zero diagonal
};

struct InfluenceMatrix {
  int n = 0;
  std::vector<double> entries;  // row-major

  double operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(j)];
  }
};

// Row-normalized influence matrix: M_ij = w_ij / sum_h w_ih with
// w_ij = shares(i,j) for i != j and w_ii = self_weight + shares(i,i).
InfluenceMatrix build_matrix(const AttentionGraph& graph);

// Share-weighted in-degree: column sums of the share table.
std::vector<int> in_degree(const AttentionGraph& graph);

// Follower counts: number of agents j with shares(j, i) > 0.
std::vector<int> binary_in_degree(const AttentionGraph& graph);

enum class CentralizationMode { Binary, Shares };

// Freeman centralization over in-degrees:
// sum_i (C_max - C_i) / ((n-1)(n-2)). Throws for n < 3. The Shares mode uses
// raw share-weighted in-degrees and is not bounded by 1; Binary (follower
// counts) is the default elsewhere.
double freeman_centralization(const AttentionGraph& graph,
                              CentralizationMode mode);
double freeman_centralization(const std::vector<int>& in_degrees);

}  // namespace wocsim
