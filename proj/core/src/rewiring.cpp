#include "wocsim/rewiring.hpp"

#include <algorithm>
#include <cmath>

#include "wocsim/errors.hpp"

namespace wocsim {

void PerformanceLedger::append(const std::vector<double>& beliefs,
                               const std::vector<double>& signals,
                               double truth) {
  for (std::size_t i = 0; i < belief_errors.size(); ++i) {
    belief_errors[i].push_back(std::abs(beliefs[i] - truth));
    signal_errors[i].push_back(std::abs(signals[i] - truth));
  }
}

double cumulative_error(const std::vector<double>& history, int lambda) {
  if (history.empty())
    throw InvariantError("cumulative_error: empty history");
  if (lambda < 0) throw ConfigError("cumulative_error: lambda must be >= 0");
  const std::size_t window =
      std::min(history.size(), static_cast<std::size_t>(lambda) + 1);
  double acc = 0.0;
  for (std::size_t r = history.size() - window; r < history.size(); ++r)
    acc += history[r];
  return acc / static_cast<double>(window);
}

std::vector<double> relative_errors(const std::vector<double>& epsilons) {
  if (epsilons.empty())
    throw InvariantError("relative_errors: empty group");
  double lo = *std::min_element(epsilons.begin(), epsilons.end());
  std::vector<double> pi(epsilons.size());
  for (std::size_t i = 0; i < pi.size(); ++i) pi[i] = epsilons[i] - lo;
  return pi;
}

FeedbackView feedback_view(const std::vector<double>& pi,
                           double pi_signal_own, int owner, double eta,
                           Rng& rng) {
  FeedbackView view;
  view.owner = owner;
  view.noise_sd = eta;
  view.pi.resize(pi.size());
  auto noisy = [&](double v) {
    if (eta > 0.0) v += rng.normal(0.0, eta);
    return std::clamp(v, 0.0, 1.0);
  };
  for (std::size_t j = 0; j < pi.size(); ++j)
    view.pi[j] = noisy(j == static_cast<std::size_t>(owner) ? pi_signal_own
                                                            : pi[j]);
  view.pi_own = noisy(pi[static_cast<std::size_t>(owner)]);
  return view;
}

double detach_probability(double pi_own, double pi_peer_viewed) {
  if (pi_own < 0.0 || pi_own > 1.0 || pi_peer_viewed < 0.0 ||
      pi_peer_viewed > 1.0)
    throw InvariantError("detach_probability: relative errors must be in [0,1]");
  return std::sqrt(pi_own * pi_peer_viewed);
}

std::vector<double> attach_probabilities(const FeedbackView& view,
                                         bool include_owner) {
  const std::size_t n = view.pi.size();
  std::vector<double> alpha(n, 0.0);
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!include_owner && j == static_cast<std::size_t>(view.owner)) continue;
    double w = (1.0 - view.pi[j]) * (1.0 - view.pi[j]);
    alpha[j] = w;
    total += w;
  }
  if (total > 0.0) {
    for (double& a : alpha) a /= total;
  } else {
    // every candidate at maximal relative error: uniform fallback
    std::size_t count = include_owner ? n : n - 1;
    double u = 1.0 / static_cast<double>(count);
    for (std::size_t j = 0; j < n; ++j)
      alpha[j] =
          (!include_owner && j == static_cast<std::size_t>(view.owner)) ? 0.0
                                                                        : u;
  }
  return alpha;
}

void rewire_step(AttentionGraph& graph, const std::vector<FeedbackView>& views,
                 Rng& rng, bool allow_self) {
  const int n = graph.n();
  if (static_cast<int>(views.size()) != n)
    throw InvariantError("rewire_step: one view per agent required");
  for (int i = 0; i < n; ++i) {
    const FeedbackView& view = views[static_cast<std::size_t>(i)];
    int detached = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i && !allow_self) continue;
      int held = graph.shares(i, j);
      if (held == 0) continue;
      double beta = detach_probability(
          view.pi_own, view.pi[static_cast<std::size_t>(j)]);
      int b = 0;
      for (int k = 0; k < held; ++k)
        if (rng.bernoulli(beta)) ++b;
      if (b > 0) graph.set_shares(i, j, held - b);
      detached += b;
    }
    if (detached == 0) continue;
    auto alpha = attach_probabilities(view, allow_self);
    for (int k = 0; k < detached; ++k) {
      int j = static_cast<int>(rng.categorical(alpha));
      graph.set_shares(i, j, graph.shares(i, j) + 1);
    }
  }
  graph.validate();
}

}  // namespace wocsim
