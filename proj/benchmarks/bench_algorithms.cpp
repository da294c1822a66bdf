#include <benchmark/benchmark.h>

#include "oasbench/algorithms.hpp"
#include "oasbench/experiment.hpp"
#include "oasbench/onemax.hpp"
#include "oasbench/random.hpp"

using namespace oasbench;

// Steps from a point near the optimum, where runs spend most of their time.
static void BM_EaStep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto lambda = static_cast<std::size_t>(state.range(1));
  RandomStream rng(1, 0);
  PlusLambdaEa ea(n, lambda);
  const BitString start = init_at_distance(n, n / 64, rng);
  SearchState s(start);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ea.step(s, rng));
    if (s.distance() < n / 128) {
      state.PauseTiming();
      s = SearchState(start);
      state.ResumeTiming();
    }
  }
  state.counters["evals/s"] = benchmark::Counter(static_cast<double>(state.iterations() * lambda),
                                                 benchmark::Counter::kIsRate);
}
BENCHMARK(BM_EaStep)->Args({1 << 12, 1})->Args({1 << 16, 1})->Args({1 << 16, 8});

static void BM_GaStep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto lambda = static_cast<std::size_t>(state.range(1));
  RandomStream rng(2, 0);
  LambdaLambdaGa ga(n, lambda);
  const BitString start = init_at_distance(n, n / 64, rng);
  SearchState s(start);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ga.step(s, rng));
    if (s.distance() < n / 128) {
      state.PauseTiming();
      s = SearchState(start);
      state.ResumeTiming();
    }
  }
  state.counters["evals/s"] = benchmark::Counter(static_cast<double>(state.iterations() * 2 * lambda),
                                                 benchmark::Counter::kIsRate);
}
BENCHMARK(BM_GaStep)->Args({1 << 12, 8})->Args({1 << 16, 11});

static void BM_FullRun(benchmark::State& state) {
  ExperimentConfig c;
  c.policy = static_cast<PolicyKind>(state.range(0));
  c.n_values = {static_cast<std::size_t>(state.range(1))};
  std::uint64_t run = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_one(c, c.n_values[0], run++));
}
BENCHMARK(BM_FullRun)
    ->Args({static_cast<int>(PolicyKind::opo_ea), 1 << 12})
    ->Args({static_cast<int>(PolicyKind::oas_stagnation), 1 << 12})
    ->Args({static_cast<int>(PolicyKind::hh), 1 << 12})
    ->Unit(benchmark::kMillisecond);
