#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "oasbench/bitstring.hpp"
#include "oasbench/onemax.hpp"
#include "oasbench/random.hpp"
#include "oasbench/sampling.hpp"
#include "oasbench/trace.hpp"

namespace oasbench {

enum class AlgorithmTag { ea, ga };

/// Current point of a run together with its fitness and the evaluations
/// charged so far. Shared between algorithms across a switch.
struct SearchState {
  BitString current;
  Fitness fitness;
  Evaluations evaluations = 0;

  explicit SearchState(BitString start) : current(std::move(start)), fitness(onemax(current)) {}

  std::size_t size() const { return current.size(); }
  std::size_t distance() const { return current.size() - fitness; }
};

struct StepOutcome {
  Evaluations cost = 0;
  bool improved = false;  // strict fitness increase
  Fitness new_fitness = 0;
};

/// One-iteration interface so that policies can interleave algorithms.
class Algorithm {
 public:
  virtual ~Algorithm() = default;

  /// Runs one iteration on `state`, charging exactly step_cost() evaluations.
  virtual StepOutcome step(SearchState& state, RandomStream& rng) = 0;
  virtual Evaluations step_cost() const = 0;
  virtual AlgorithmTag tag() const = 0;
  virtual std::size_t lambda() const = 0;
};

/// (1+lambda) EA: lambda standard-bit mutants at rate 1/n, the best (ties
/// uniform) replaces the parent if not worse. lambda = 1 is the (1+1) EA.
///
/// Offspring are represented by their flip positions, so an evaluation costs
/// O(number of flipped bits) while the charged count is one per offspring.
class PlusLambdaEa final : public Algorithm {
 public:
  PlusLambdaEa(std::size_t n, std::size_t lambda);

  StepOutcome step(SearchState& state, RandomStream& rng) override;
  Evaluations step_cost() const override { return lambda_; }
  AlgorithmTag tag() const override { return AlgorithmTag::ea; }
  std::size_t lambda() const override { return lambda_; }

 private:
  std::size_t n_;
  std::size_t lambda_;
  IndexSampler sampler_;
  std::vector<std::uint32_t> best_flips_;
};

/// Internals of the most recent (1+(lambda,lambda)) GA iteration, kept for
/// inspection by tests and audits.
struct GaStepDetail {
  std::size_t mutation_strength = 0;                 // ell
  std::vector<std::uint32_t> mutation_winner_flips;  // x' = x with these flipped
  std::vector<std::uint32_t> crossover_winner_flips; // y = x with these flipped
  Fitness mutation_winner_fitness = 0;
  Fitness crossover_winner_fitness = 0;
};

/// (1+(lambda,lambda)) GA with mutation rate lambda/n and crossover bias 1/lambda.
///
/// Mutation phase: ell ~ Bin(n, lambda/n), lambda offspring each flipping
/// exactly ell distinct bits, winner x' with uniform tie-breaking. Crossover
/// phase: lambda offspring taking each bit of x' with probability 1/lambda;
/// the best of them (ties uniform) replaces x if not worse. The crossover
/// winner is compared against x only.
class LambdaLambdaGa final : public Algorithm {
 public:
  /// Throws std::invalid_argument unless 1 <= lambda <= n.
  LambdaLambdaGa(std::size_t n, std::size_t lambda);

  StepOutcome step(SearchState& state, RandomStream& rng) override;
  Evaluations step_cost() const override { return 2 * lambda_; }
  AlgorithmTag tag() const override { return AlgorithmTag::ga; }
  std::size_t lambda() const override { return lambda_; }

  const GaStepDetail& last_step() const { return detail_; }

 private:
  std::size_t n_;
  std::size_t lambda_;
  double crossover_bias_;
  IndexSampler sampler_;
  std::vector<std::uint32_t> candidate_;
  GaStepDetail detail_;
};

/// Plain-function forms of a single iteration.
StepOutcome ea_step(SearchState& state, std::size_t lambda, RandomStream& rng);
StepOutcome ollga_step(SearchState& state, std::size_t lambda, RandomStream& rng);

enum class FragmentOutcome { target_reached, budget_exhausted };

struct RunFragment {
  std::vector<TraceEvent> events;  // one improvement event per strict improvement
  Evaluations cost = 0;
  std::uint64_t steps = 0;
  FragmentOutcome outcome = FragmentOutcome::target_reached;
};

/// Steps `algorithm` until state.fitness >= target or the next step would
/// exceed `budget` (counted from the call). Exhaustion is an outcome, not an
/// error.
RunFragment run_to_target(SearchState& state, Algorithm& algorithm, Fitness target, Evaluations budget,
                          RandomStream& rng);

}  // namespace oasbench
