#include <benchmark/benchmark.h>

#include "wocsim/harness.hpp"
#include "wocsim/learning.hpp"
#include "wocsim/network.hpp"
#include "wocsim/rewiring.hpp"

namespace {

using namespace wocsim;

void BM_DegrootTwoStage(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  auto g = AttentionGraph::init_random(n, std::min(3, n - 1), rng);
  auto m = build_matrix(g);
  std::vector<double> signals(static_cast<std::size_t>(n));
  for (auto& s : signals) s = rng.uniform01();
  for (auto _ : state) {
    auto beliefs = degroot_two_stage(m, signals);
    benchmark::DoNotOptimize(beliefs);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_DegrootTwoStage)->Arg(12)->Arg(48)->Arg(192);

void BM_RewireStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  auto g = AttentionGraph::init_random(n, std::min(3, n - 1), rng);
  std::vector<FeedbackView> views;
  for (int i = 0; i < n; ++i) {
    FeedbackView v;
    v.owner = i;
    v.pi.resize(static_cast<std::size_t>(n));
    for (auto& x : v.pi) x = rng.uniform01();
    v.pi_own = rng.uniform01();
    views.push_back(v);
  }
  for (auto _ : state) {
    rewire_step(g, views, rng, true);
    benchmark::DoNotOptimize(g);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_RewireStep)->Arg(12)->Arg(48)->Arg(192);

void BM_FullRun(benchmark::State& state) {
  RunConfig cfg;
  cfg.rounds = static_cast<int>(state.range(0));
  cfg.seed = 3;
  for (auto _ : state) {
    auto trace = run(cfg);
    benchmark::DoNotOptimize(trace);
  }
  state.SetItemsProcessed(state.iterations() * cfg.rounds);
}
BENCHMARK(BM_FullRun)->Arg(20)->Arg(100)->Arg(300);

}  // namespace

BENCHMARK_MAIN();
