#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oasbench/algorithms.hpp"
#include "oasbench/bitstring.hpp"
#include "oasbench/onemax.hpp"
#include "oasbench/random.hpp"
#include "oasbench/stats.hpp"

using namespace oasbench;

namespace {

// Fraction of single steps from `start` that strictly improve.
template <class Alg>
double improvement_rate(Alg& alg, const BitString& start, RandomStream& rng, int trials) {
  int improved = 0;
  for (int t = 0; t < trials; ++t) {
    SearchState s(start);
    improved += alg.step(s, rng).improved;
  }
  return static_cast<double>(improved) / trials;
}

}  // namespace

TEST(PlusLambdaEa, CostIsLambda) {
  RandomStream rng(1, 0);
  for (std::size_t lambda : {1, 3, 10}) {
    PlusLambdaEa ea(16, lambda);
    SearchState s(BitString(16));
    const StepOutcome o = ea.step(s, rng);
    EXPECT_EQ(o.cost, lambda);
    EXPECT_EQ(s.evaluations, lambda);
    EXPECT_EQ(ea.step_cost(), lambda);
    EXPECT_EQ(ea.tag(), AlgorithmTag::ea);
  }
}

TEST(PlusLambdaEa, StaysAtOptimum) {
  RandomStream rng(2, 0);
  PlusLambdaEa ea(12, 4);
  SearchState s(BitString(12, true));
  for (int i = 0; i < 100; ++i) {
    const StepOutcome o = ea.step(s, rng);
    ASSERT_FALSE(o.improved);
    ASSERT_EQ(s.fitness, 12u);
  }
  EXPECT_EQ(s.evaluations, 400u);
}

TEST(PlusLambdaEa, TwoBitsFromZeroImprovesWithThreeQuarters) {
  // Any nonempty flip set of 00 improves: 1 - (1/2)^2.
  RandomStream rng(3, 0);
  PlusLambdaEa ea(2, 1);
  const double p = improvement_rate(ea, BitString(2), rng, 100000);
  EXPECT_NEAR(p, 0.75, 3 * std::sqrt(0.75 * 0.25 / 100000));
}

TEST(PlusLambdaEa, ElitistAndConsistent) {
  RandomStream rng(4, 0);
  PlusLambdaEa ea(30, 3);
  SearchState s(init_random(30, rng));
  for (int i = 0; i < 2000; ++i) {
    const Fitness before = s.fitness;
    const StepOutcome o = ea.step(s, rng);
    ASSERT_GE(s.fitness, before);
    ASSERT_EQ(o.improved, s.fitness > before);
    ASSERT_EQ(o.new_fitness, s.fitness);
    ASSERT_EQ(s.fitness, onemax(s.current));
  }
}

TEST(PlusLambdaEa, RejectsBadArguments) {
  EXPECT_THROW(PlusLambdaEa(10, 0), std::invalid_argument);
  RandomStream rng(5, 0);
  PlusLambdaEa ea(10, 1);
  SearchState s(BitString(11));
  EXPECT_THROW(ea.step(s, rng), std::invalid_argument);
}

TEST(PlusLambdaEa, OnePlusOneMeanRuntimeAtN64) {
  // Upper bound e n ln n + O(n); 4 e n ln n is generous.
  constexpr std::size_t n = 64;
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomStream rng(2026, seed);
    PlusLambdaEa ea(n, 1);
    SearchState s(init_random(n, rng));
    const RunFragment f = run_to_target(s, ea, n, 1000000, rng);
    ASSERT_EQ(f.outcome, FragmentOutcome::target_reached);
    total += static_cast<double>(f.cost);
  }
  EXPECT_LE(total / 100.0, 4 * std::numbers::e * n * std::log(double(n)));
}

TEST(LambdaLambdaGa, CostIsTwoLambda) {
  RandomStream rng(6, 0);
  LambdaLambdaGa ga(20, 5);
  SearchState s(BitString(20));
  EXPECT_EQ(ga.step(s, rng).cost, 10u);
  EXPECT_EQ(ga.step_cost(), 10u);
  EXPECT_EQ(ga.tag(), AlgorithmTag::ga);
}

TEST(LambdaLambdaGa, RejectsLambdaOutOfRange) {
  EXPECT_THROW(LambdaLambdaGa(10, 11), std::invalid_argument);
  EXPECT_THROW(LambdaLambdaGa(10, 0), std::invalid_argument);
  EXPECT_NO_THROW(LambdaLambdaGa(10, 10));
}

TEST(LambdaLambdaGa, StaysAtOptimum) {
  RandomStream rng(7, 0);
  LambdaLambdaGa ga(16, 4);
  SearchState s(BitString(16, true));
  for (int i = 0; i < 200; ++i) {
    ASSERT_FALSE(ga.step(s, rng).improved);
    ASSERT_EQ(s.fitness, 16u);
  }
}

TEST(LambdaLambdaGa, MutationWinnerAtDistanceEll) {
  RandomStream rng(8, 0);
  LambdaLambdaGa ga(64, 8);
  SearchState s(init_random(64, rng));
  for (int i = 0; i < 500; ++i) {
    const Fitness before = s.fitness;
    const BitString parent = s.current;
    ga.step(s, rng);
    const GaStepDetail& d = ga.last_step();
    ASSERT_EQ(d.mutation_winner_flips.size(), d.mutation_strength);
    BitString xprime = parent;
    for (auto pos : d.mutation_winner_flips) xprime.flip(pos);
    ASSERT_EQ(hamming_distance(parent, xprime), d.mutation_strength);
    ASSERT_EQ(onemax(xprime), d.mutation_winner_fitness);
    // crossover winner only takes bits from x'
    for (auto pos : d.crossover_winner_flips) {
      ASSERT_TRUE(std::find(d.mutation_winner_flips.begin(), d.mutation_winner_flips.end(), pos) !=
                  d.mutation_winner_flips.end());
    }
    ASSERT_GE(s.fitness, before);
    ASSERT_EQ(s.fitness, onemax(s.current));
  }
}

TEST(LambdaLambdaGa, LambdaOneFromZeroMatchesEa) {
  // With lambda = 1 the crossover copies x', so 00 improves with 3/4.
  RandomStream rng(9, 0);
  LambdaLambdaGa ga(2, 1);
  const double p = improvement_rate(ga, BitString(2), rng, 100000);
  EXPECT_NEAR(p, 0.75, 3 * std::sqrt(0.75 * 0.25 / 100000));
}

TEST(LambdaLambdaGa, LambdaTwoAtNTwoExactProbability) {
  // Rate 1 flips both bits of 01; each crossover child keeps only the
  // improving flip with 1/4, so P = 1 - (3/4)^2 = 7/16.
  RandomStream rng(10, 0);
  LambdaLambdaGa ga(2, 2);
  const double p = improvement_rate(ga, BitString::from_string("01"), rng, 100000);
  EXPECT_NEAR(p, 7.0 / 16.0, 3 * std::sqrt(7.0 / 16 * 9.0 / 16 / 100000));
}

TEST(StepFunctions, MatchClassCosts) {
  RandomStream rng(11, 0);
  SearchState s(BitString(20));
  EXPECT_EQ(ea_step(s, 3, rng).cost, 3u);
  EXPECT_EQ(ollga_step(s, 3, rng).cost, 6u);
  EXPECT_EQ(s.evaluations, 9u);
}

TEST(RunToTarget, TargetAlreadyMet) {
  RandomStream rng(12, 0);
  PlusLambdaEa ea(10, 1);
  SearchState s(BitString::from_string("1111100000"));
  const RunFragment f = run_to_target(s, ea, 5, 100, rng);
  EXPECT_EQ(f.outcome, FragmentOutcome::target_reached);
  EXPECT_EQ(f.steps, 0u);
  EXPECT_EQ(f.cost, 0u);
  EXPECT_TRUE(f.events.empty());
}

TEST(RunToTarget, BudgetBelowStepCost) {
  RandomStream rng(13, 0);
  LambdaLambdaGa ga(10, 3);
  SearchState s(BitString(10));
  const RunFragment f = run_to_target(s, ga, 10, 5, rng);
  EXPECT_EQ(f.outcome, FragmentOutcome::budget_exhausted);
  EXPECT_EQ(f.steps, 0u);
  EXPECT_EQ(s.evaluations, 0u);
}

TEST(RunToTarget, NeverOverspends) {
  RandomStream rng(14, 0);
  for (Evaluations budget : {1u, 7u, 50u, 333u}) {
    LambdaLambdaGa ga(200, 4);
    SearchState s(BitString(200));
    const RunFragment f = run_to_target(s, ga, 200, budget, rng);
    EXPECT_EQ(f.outcome, FragmentOutcome::budget_exhausted);
    EXPECT_LE(f.cost, budget);
    EXPECT_GT(f.cost + 8, budget);
    EXPECT_EQ(f.cost, 8 * f.steps);
  }
}

TEST(RunToTarget, EventsAreStrictImprovements) {
  RandomStream rng(15, 0);
  PlusLambdaEa ea(50, 2);
  SearchState s(BitString(50));
  const RunFragment f = run_to_target(s, ea, 50, 1000000, rng);
  ASSERT_EQ(f.outcome, FragmentOutcome::target_reached);
  ASSERT_FALSE(f.events.empty());
  for (std::size_t i = 1; i < f.events.size(); ++i) {
    EXPECT_GT(f.events[i].fitness, f.events[i - 1].fitness);
    EXPECT_GT(f.events[i].evaluations, f.events[i - 1].evaluations);
  }
  EXPECT_EQ(f.events.back().fitness, 50u);
  EXPECT_EQ(f.events.back().distance, 0u);
}
