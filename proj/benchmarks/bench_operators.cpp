#include <benchmark/benchmark.h>

#include "oasbench/bitstring.hpp"
#include "oasbench/onemax.hpp"
#include "oasbench/operators.hpp"
#include "oasbench/random.hpp"

using namespace oasbench;

static void BM_OneMax(benchmark::State& state) {
  RandomStream rng(1, 0);
  const BitString x = init_random(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(onemax(x));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_OneMax)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

static void BM_StandardBitMutation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RandomStream rng(2, 0);
  IndexSampler sampler(n);
  const BitString x = init_random(n, rng);
  const MutationRate rate(1.0 / static_cast<double>(n));
  for (auto _ : state) benchmark::DoNotOptimize(standard_bit_mutation(x, rate, sampler, rng));
}
BENCHMARK(BM_StandardBitMutation)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

static void BM_SampleBinomial(benchmark::State& state) {
  RandomStream rng(3, 0);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const double p = 8.0 / static_cast<double>(n);
  for (auto _ : state) benchmark::DoNotOptimize(sample_binomial(n, p, rng));
}
BENCHMARK(BM_SampleBinomial)->Arg(1 << 10)->Arg(1 << 16);

static void BM_BiasedCrossover(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RandomStream rng(4, 0);
  const BitString x = init_random(n, rng);
  const BitString donor = flip_exact_l(x, 16, rng);
  const CrossoverBias c(1.0 / 8.0);
  for (auto _ : state) benchmark::DoNotOptimize(biased_crossover(x, donor, c, rng));
}
BENCHMARK(BM_BiasedCrossover)->Arg(1 << 10)->Arg(1 << 16);
