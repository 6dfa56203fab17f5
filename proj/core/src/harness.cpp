#include "wocsim/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <unordered_set>

#include "wocsim/errors.hpp"
#include "wocsim/learning.hpp"
#include "wocsim/rewiring.hpp"
#include "wocsim/rng.hpp"
#include "wocsim/stats.hpp"

namespace wocsim {

Condition parse_condition(const std::string& s) {
  if (s == "solo") return Condition::Solo;
  if (s == "static") return Condition::Static;
  if (s == "dynamic") return Condition::Dynamic;
  throw ConfigError("condition must be solo, static or dynamic, got '" + s +
                    "'");
}

SignalChannel parse_signal_channel(const std::string& s) {
  if (s == "gaussian") return SignalChannel::Gaussian;
  if (s == "scatter") return SignalChannel::Scatter;
  throw ConfigError("signal_channel must be gaussian or scatter, got '" + s +
                    "'");
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::Solo:
      return "solo";
    case Condition::Static:
      return "static";
    case Condition::Dynamic:
      return "dynamic";
  }
  return "?";
}

void RunConfig::validate() const {
  if (rounds < 1) throw ConfigError("rounds must be >= 1");
  if (lambda < 0) throw ConfigError("lambda must be >= 0");
  if (eta < 0.0) throw ConfigError("eta must be >= 0");
  if (degroot_stages < 0) throw ConfigError("degroot_stages must be >= 0");
  if (replications < 1) throw ConfigError("replications must be >= 1");
  if (!(0.0 <= truth_lo && truth_lo < truth_hi && truth_hi <= 1.0))
    throw ConfigError("truth bounds must satisfy 0 <= lo < hi <= 1");
  if (condition == Condition::Solo) {
    if (agents < 1) throw ConfigError("agents must be >= 1");
  } else {
    if (agents < 3)
      throw ConfigError("networked conditions need at least 3 agents");
    if (kappa < 1 || kappa > agents - 1)
      throw ConfigError("kappa must be in [1, agents-1]");
    if (self_weight < 1) throw ConfigError("self_weight must be >= 1");
  }
  if (shock.mode == ShockSchedule::Mode::Bernoulli && shock.rho < 1.0)
    throw ConfigError("shock rho must be >= 1");
  for (const QualityLevel* q : {&quality.high, &quality.medium, &quality.low}) {
    if (q->noise_sd < 0.0) throw ConfigError("noise_sd must be >= 0");
    if (q->n_points < 3) throw ConfigError("n_points must be >= 3");
    if (q->outlier_count < 0 || q->outlier_count >= q->n_points)
      throw ConfigError("outlier_count must be in [0, n_points)");
  }
  if (!(quality.high.noise_sd < quality.medium.noise_sd &&
        quality.medium.noise_sd < quality.low.noise_sd))
    throw ConfigError("quality noise must be ordered High < Medium < Low");
}

namespace {

// n agents split as evenly as possible across the three levels, shuffled.
std::vector<QualityLevel> initial_assignment(const RunConfig& config,
                                             Rng& rng) {
  std::vector<QualityLevel> pool;
  const QualityLevel levels[3] = {config.quality.high, config.quality.medium,
                                  config.quality.low};
  for (int i = 0; i < config.agents; ++i) pool.push_back(levels[i % 3]);
  auto perm = rng.permutation(pool.size());
  std::vector<QualityLevel> assigned(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) assigned[i] = pool[perm[i]];
  return assigned;
}

double draw_channel_signal(const RunConfig& config, double truth,
                           const QualityLevel& quality, Rng& rng) {
  if (config.signal_channel == SignalChannel::Gaussian)
    return draw_signal(truth, quality, rng);
  auto task = generate_scatter(truth, quality, rng);
  return std::clamp(sample_correlation(task), 0.0, 1.0);
}

std::vector<std::vector<int>> snapshot_shares(const AttentionGraph& g) {
  std::vector<std::vector<int>> s(static_cast<std::size_t>(g.n()),
                                  std::vector<int>(g.n(), 0));
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j)
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          g.shares(i, j);
  return s;
}

}  // namespace

RunTrace run(const RunConfig& config) {
  config.validate();
  const int n = config.agents;
  const bool networked = config.condition != Condition::Solo;
  const bool rewires =
      config.condition == Condition::Dynamic && config.rewiring_enabled;

  Rng env_rng(derive_seed(config.seed, 1));
  Rng graph_rng(derive_seed(config.seed, 2));
  Rng shock_rng(derive_seed(config.seed, 3));

  RunTrace trace;
  trace.run_id = config.seed;
  trace.config = config;
  trace.rounds.reserve(static_cast<std::size_t>(config.rounds));

  WorldRound world;
  world.quality_of = initial_assignment(config, shock_rng);

  AttentionGraph graph = networked
                             ? AttentionGraph::init_random(
                                   n, config.kappa, graph_rng,
                                   config.self_weight)
                             : AttentionGraph(std::max(n, 2), 1, 1);

  PerformanceLedger ledger(n, config.lambda);

  for (int t = 1; t <= config.rounds; ++t) {
    RoundRecord rec;
    world.round = t;
    world.truth = next_truth(env_rng, config.truth_lo, config.truth_hi);
    rec.world = world;

    rec.signals.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      rec.signals[static_cast<std::size_t>(i)] = draw_channel_signal(
          config, world.truth, world.quality_of[static_cast<std::size_t>(i)],
          env_rng);

    if (networked) {
      rec.shares = snapshot_shares(graph);
      rec.beliefs = degroot_stages(build_matrix(graph), rec.signals,
                                   config.degroot_stages);
    } else {
      rec.beliefs = solo_beliefs(rec.signals);
    }

    rec.metrics.round = t;
    rec.metrics.truth = world.truth;
    rec.metrics.wc_error = wc_error(rec.signals, world.truth);
    rec.metrics.wdn_error = wdn_error(rec.beliefs, world.truth);
    rec.metrics.individual_errors.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      rec.metrics.individual_errors[static_cast<std::size_t>(i)] =
          std::abs(rec.beliefs[static_cast<std::size_t>(i)] - world.truth);
    rec.metrics.centralization =
        networked ? freeman_centralization(graph, config.centralization_mode)
                  : 0.0;

    ledger.append(rec.beliefs, rec.signals, world.truth);
    // Feedback noise perturbs each round's observed errors before they enter
    // the lambda-window, so longer memories can average it away. eta == 0
    // consumes no randomness. Draw order: belief errors agents ascending,
    // then signal errors agents ascending.
    if (rewires && config.eta > 0.0) {
      for (int i = 0; i < n; ++i) {
        double& e = ledger.belief_errors[static_cast<std::size_t>(i)].back();
        e = std::clamp(e + graph_rng.normal(0.0, config.eta), 0.0, 1.0);
      }
      for (int i = 0; i < n; ++i) {
        double& e = ledger.signal_errors[static_cast<std::size_t>(i)].back();
        e = std::clamp(e + graph_rng.normal(0.0, config.eta), 0.0, 1.0);
      }
    }

    if (rewires) {
      std::vector<double> eps(static_cast<std::size_t>(n));
      std::vector<double> eps_sig(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        eps[static_cast<std::size_t>(i)] = cumulative_error(
            ledger.belief_errors[static_cast<std::size_t>(i)], config.lambda);
        eps_sig[static_cast<std::size_t>(i)] = cumulative_error(
            ledger.signal_errors[static_cast<std::size_t>(i)], config.lambda);
      }
      auto pi = relative_errors(eps);
      double eps_min = *std::min_element(eps.begin(), eps.end());
      std::vector<FeedbackView> views;
      views.reserve(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        views.push_back(feedback_view(
            pi,
            std::clamp(eps_sig[static_cast<std::size_t>(i)] - eps_min, 0.0,
                       1.0),
            i, 0.0, graph_rng));
      rewire_step(graph, views, graph_rng, config.self_attachment);
    }

    if (config.shock.fires_after(t, shock_rng)) {
      world = apply_shock(world, shock_rng);
      rec.metrics.shock = true;
    }

    trace.rounds.push_back(std::move(rec));
  }
  return trace;
}

std::vector<SweepRow> sweep(const RunConfig& base,
                            const std::vector<int>& lambda_grid,
                            const std::vector<double>& rho_grid,
                            const std::vector<double>& eta_grid,
                            int replications) {
  if (lambda_grid.empty() || rho_grid.empty() || eta_grid.empty())
    throw ConfigError("sweep grids must be non-empty");
  if (replications < 1) throw ConfigError("replications must be >= 1");

  std::unordered_set<std::uint64_t> used_seeds;
  std::vector<SweepRow> rows;
  std::uint64_t cell = 0;
  for (int lambda : lambda_grid) {
    for (double rho : rho_grid) {
      for (double eta : eta_grid) {
        ++cell;
        RunConfig config = base;
        config.lambda = lambda;
        config.eta = eta;
        if (base.shock.mode == ShockSchedule::Mode::Deterministic) {
          std::vector<int> shock_rounds;
          for (int r = static_cast<int>(rho); r < config.rounds;
               r += static_cast<int>(rho))
            shock_rounds.push_back(r);
          config.shock = ShockSchedule::deterministic(shock_rounds);
        } else {
          config.shock = ShockSchedule::bernoulli(rho);
        }

        std::vector<double> wdn_avgs, wc_avgs;
        for (int rep = 0; rep < replications; ++rep) {
          config.seed = derive_seed(base.seed, cell,
                                    static_cast<std::uint64_t>(rep) + 1);
          if (!used_seeds.insert(config.seed).second)
            throw InvariantError("derived seed collision in sweep");
          auto trace = run(config);
          std::vector<double> wdn, wc;
          for (const auto& r : trace.rounds) {
            wdn.push_back(r.metrics.wdn_error);
            wc.push_back(r.metrics.wc_error);
          }
          wdn_avgs.push_back(mean_of(wdn));
          wc_avgs.push_back(mean_of(wc));
        }

        SweepRow row;
        row.lambda = lambda;
        row.rho = rho;
        row.eta = eta;
        row.replication_count = replications;
        row.mean_wdn = mean_of(wdn_avgs);
        row.mean_wc = mean_of(wc_avgs);
        row.p05_wdn = percentile(wdn_avgs, 0.05);
        row.p95_wdn = percentile(wdn_avgs, 0.95);
        rows.push_back(row);
      }
    }
  }

  // min-max normalization within each rho column
  for (double rho : rho_grid) {
    double lo = 1e300, hi = -1e300;
    for (const auto& r : rows)
      if (r.rho == rho) {
        lo = std::min(lo, r.mean_wdn);
        hi = std::max(hi, r.mean_wdn);
      }
    for (auto& r : rows)
      if (r.rho == rho)
        r.normalized_wdn = (hi > lo) ? (r.mean_wdn - lo) / (hi - lo) : 0.0;
  }
  return rows;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file: " + path);
  return out;
}

}  // namespace

void emit_trace(const RunTrace& trace, const std::string& path) {
  auto out = open_out(path);
  out << "run_id,round,agent_id,quality_label,signal,belief,indiv_error,"
         "in_degree,out_edges\n";
  for (const auto& rec : trace.rounds) {
    const int n = static_cast<int>(rec.signals.size());
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    if (!rec.shares.empty())
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j)
            indeg[static_cast<std::size_t>(j)] +=
                rec.shares[static_cast<std::size_t>(i)]
                          [static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i) {
      out << trace.run_id << ',' << rec.world.round << ',' << i << ','
          << to_string(rec.world.quality_of[static_cast<std::size_t>(i)].label)
          << ',' << format_double(rec.signals[static_cast<std::size_t>(i)])
          << ',' << format_double(rec.beliefs[static_cast<std::size_t>(i)])
          << ','
          << format_double(
                 rec.metrics.individual_errors[static_cast<std::size_t>(i)])
          << ',' << indeg[static_cast<std::size_t>(i)] << ',';
      if (!rec.shares.empty()) {
        bool first = true;
        for (int j = 0; j < n; ++j) {
          int e = rec.shares[static_cast<std::size_t>(i)]
                            [static_cast<std::size_t>(j)];
          if (e > 0) {
            if (!first) out << ';';
            out << j << ':' << e;
            first = false;
          }
        }
      }
      out << '\n';
    }
  }
  if (!out) throw ConfigError("write failed: " + path);
}

void emit_metrics(const RunTrace& trace, const std::string& path) {
  auto out = open_out(path);
  out << "run_id,round,truth,wc_error,wdn_error,centralization,shock_flag\n";
  for (const auto& rec : trace.rounds) {
    const auto& m = rec.metrics;
    out << trace.run_id << ',' << m.round << ',' << format_double(m.truth)
        << ',' << format_double(m.wc_error) << ','
        << format_double(m.wdn_error) << ','
        << format_double(m.centralization) << ',' << (m.shock ? 1 : 0)
        << '\n';
  }
  if (!out) throw ConfigError("write failed: " + path);
}

void emit_summary(const std::vector<SweepRow>& rows, const std::string& path) {
  auto out = open_out(path);
  out << "lambda,rho,eta,replication_count,mean_wdn,mean_wc,p05_wdn,p95_wdn,"
         "normalized_wdn\n";
  for (const auto& r : rows) {
    out << r.lambda << ',' << format_double(r.rho) << ','
        << format_double(r.eta) << ',' << r.replication_count << ','
        << format_double(r.mean_wdn) << ',' << format_double(r.mean_wc) << ','
        << format_double(r.p05_wdn) << ',' << format_double(r.p95_wdn) << ','
        << format_double(r.normalized_wdn) << '\n';
  }
  if (!out) throw ConfigError("write failed: " + path);
}

}  // namespace wocsim
