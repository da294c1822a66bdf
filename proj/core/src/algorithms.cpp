#include "oasbench/algorithms.hpp"

#include <stdexcept>

#include "oasbench/operators.hpp"

namespace oasbench {

namespace {

// Fitness change from flipping `positions` in x: each one-bit lost costs 1,
// each zero-bit gained adds 1.
std::int64_t flip_delta(const BitString& x, std::span<const std::uint32_t> positions) {
  std::int64_t delta = 0;
  for (std::uint32_t pos : positions) delta += x.test(pos) ? -1 : 1;
  return delta;
}

// Running argmax with uniform tie-breaking (reservoir over the tied set).
class BestTracker {
 public:
  // Returns true if the candidate becomes the current winner.
  bool offer(std::int64_t value, RandomStream& rng) {
    if (ties_ == 0 || value > best_) {
      best_ = value;
      ties_ = 1;
      return true;
    }
    if (value == best_) {
      ++ties_;
      return rng.below(ties_) == 0;
    }
    return false;
  }
  std::int64_t best() const { return best_; }

 private:
  std::int64_t best_ = 0;
  std::uint64_t ties_ = 0;
};

StepOutcome accept(SearchState& state, std::span<const std::uint32_t> flips, std::int64_t delta,
                   Evaluations cost) {
  state.evaluations += cost;
  StepOutcome out;
  out.cost = cost;
  if (delta >= 0) {
    for (std::uint32_t pos : flips) state.current.flip(pos);
    state.fitness = static_cast<Fitness>(static_cast<std::int64_t>(state.fitness) + delta);
    out.improved = delta > 0;
  }
  out.new_fitness = state.fitness;
  return out;
}

}  // namespace

PlusLambdaEa::PlusLambdaEa(std::size_t n, std::size_t lambda) : n_(n), lambda_(lambda), sampler_(n) {
  if (n == 0) throw std::invalid_argument("PlusLambdaEa: problem size must be at least 1");
  if (lambda == 0) throw std::invalid_argument("PlusLambdaEa: lambda must be at least 1");
}

StepOutcome PlusLambdaEa::step(SearchState& state, RandomStream& rng) {
  if (state.size() != n_) throw std::invalid_argument("PlusLambdaEa: state has wrong problem size");
  const double rate = 1.0 / static_cast<double>(n_);
  BestTracker best;
  for (std::size_t i = 0; i < lambda_; ++i) {
    const auto flips = static_cast<std::size_t>(sample_binomial(n_, rate, rng));
    const auto positions = sampler_.sample(flips, rng);
    if (best.offer(flip_delta(state.current, positions), rng)) {
      best_flips_.assign(positions.begin(), positions.end());
    }
  }
  return accept(state, best_flips_, best.best(), lambda_);
}

LambdaLambdaGa::LambdaLambdaGa(std::size_t n, std::size_t lambda)
    : n_(n), lambda_(lambda), crossover_bias_(lambda == 0 ? 0.0 : 1.0 / static_cast<double>(lambda)), sampler_(n) {
  if (n == 0) throw std::invalid_argument("LambdaLambdaGa: problem size must be at least 1");
  if (lambda < 1 || lambda > n) throw std::invalid_argument("LambdaLambdaGa: lambda must lie in [1, n]");
}

StepOutcome LambdaLambdaGa::step(SearchState& state, RandomStream& rng) {
  if (state.size() != n_) throw std::invalid_argument("LambdaLambdaGa: state has wrong problem size");
  const BitString& x = state.current;
  const double rate = static_cast<double>(lambda_) / static_cast<double>(n_);

  // mutation phase
  const auto ell = static_cast<std::size_t>(sample_binomial(n_, rate, rng));
  detail_.mutation_strength = ell;
  BestTracker mutation_best;
  for (std::size_t i = 0; i < lambda_; ++i) {
    const auto positions = sampler_.sample(ell, rng);
    if (mutation_best.offer(flip_delta(x, positions), rng)) {
      detail_.mutation_winner_flips.assign(positions.begin(), positions.end());
    }
  }
  detail_.mutation_winner_fitness =
      static_cast<Fitness>(static_cast<std::int64_t>(state.fitness) + mutation_best.best());

  // crossover phase: offspring differ from x only where x' does
  const auto& donor_flips = detail_.mutation_winner_flips;
  BestTracker crossover_best;
  for (std::size_t i = 0; i < lambda_; ++i) {
    candidate_.clear();
    for (std::uint32_t pos : donor_flips) {
      if (rng.bernoulli(crossover_bias_)) candidate_.push_back(pos);
    }
    if (crossover_best.offer(flip_delta(x, candidate_), rng)) {
      detail_.crossover_winner_flips = candidate_;
    }
  }
  detail_.crossover_winner_fitness =
      static_cast<Fitness>(static_cast<std::int64_t>(state.fitness) + crossover_best.best());

  return accept(state, detail_.crossover_winner_flips, crossover_best.best(), 2 * lambda_);
}

StepOutcome ea_step(SearchState& state, std::size_t lambda, RandomStream& rng) {
  PlusLambdaEa ea(state.size(), lambda);
  return ea.step(state, rng);
}

StepOutcome ollga_step(SearchState& state, std::size_t lambda, RandomStream& rng) {
  LambdaLambdaGa ga(state.size(), lambda);
  return ga.step(state, rng);
}

RunFragment run_to_target(SearchState& state, Algorithm& algorithm, Fitness target, Evaluations budget,
                          RandomStream& rng) {
  RunFragment fragment;
  while (state.fitness < target) {
    if (fragment.cost + algorithm.step_cost() > budget) {
      fragment.outcome = FragmentOutcome::budget_exhausted;
      return fragment;
    }
    const StepOutcome out = algorithm.step(state, rng);
    fragment.cost += out.cost;
    ++fragment.steps;
    if (out.improved) {
      fragment.events.push_back(
          {EventType::improvement, state.evaluations, state.fitness, state.size() - state.fitness});
    }
  }
  fragment.outcome = FragmentOutcome::target_reached;
  return fragment;
}

}  // namespace oasbench
