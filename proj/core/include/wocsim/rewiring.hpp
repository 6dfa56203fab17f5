#pragma once

#include <vector>

#include "wocsim/network.hpp"
#include "wocsim/rng.hpp"

namespace wocsim {

// Rolling per-agent error histories driving the rewiring process.
struct PerformanceLedger {
  int lambda = 0;  // retrospective window length (rounds beyond the current)
  std::vector<std::vector<double>> belief_errors;  // [agent][round]
  std::vector<std::vector<double>> signal_errors;  // [agent][round]

  explicit PerformanceLedger(int n_agents = 0, int lambda_ = 0)
      : lambda(lambda_), belief_errors(n_agents), signal_errors(n_agents) {}

  void append(const std::vector<double>& beliefs,
              const std::vector<double>& signals, double truth);
};

// Average of the last min(lambda+1, available) entries. Early rounds use a
// truncated window instead of the full lambda+1 denominator.
double cumulative_error(const std::vector<double>& history, int lambda);

// pi_i = eps_i - min_j eps_j; at least one entry is exactly zero.
std::vector<double> relative_errors(const std::vector<double>& epsilons);

// Performance information as seen by one agent: peer relative errors with
// the owner's entry replaced by the relative error of their private signal,
// all perturbed by Normal(0, eta) noise and clamped to [0,1]. pi_own carries
// the (equally noisy) belief-based own relative error that drives
// detachment.
struct FeedbackView {
  int owner = 0;
  std::vector<double> pi;
  double pi_own = 0.0;
  double noise_sd = 0.0;
};

// Draw order: entries j = 0..n-1 ascending (the owner entry perturbs
// pi_signal_own), then one extra normal draw for pi_own. eta == 0 consumes
// no draws and reproduces the exact noiseless vector.
FeedbackView feedback_view(const std::vector<double>& pi,
                           double pi_signal_own, int owner, double eta,
                           Rng& rng);

// beta_ij = sqrt(pi_own * pi_peer): geometric mean of own and viewed-peer
// relative error.
double detach_probability(double pi_own, double pi_peer_viewed);

// Attachment probabilities proportional to (1 - pi_j)^2 (the printed shared
// denominator cancels under normalization). Falls back to uniform over
// candidates when every weight is zero. With include_owner the owner is a
// candidate too, weighted by the diagonal entry (the relative error of their
// private signal); otherwise the owner entry is always 0.
std::vector<double> attach_probabilities(const FeedbackView& view,
                                         bool include_owner = false);

// One evolution step: for each agent (ascending index), detach each held
// share via Bernoulli(beta), then redistribute exactly the detached count
// via categorical draws over the attachment probabilities. Detachment draws
// precede attachment draws within an agent. Share conservation is an exact
// integer identity, validated after the step. allow_self enables
// self-attachment: shares may land on the agent's own diagonal (raising the
// weight of their private signal) and are detached again via the diagonal
// relative error.
void rewire_step(AttentionGraph& graph, const std::vector<FeedbackView>& views,
                 Rng& rng, bool allow_self = false);

}  // namespace wocsim
