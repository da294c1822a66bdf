#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "oasbench/algorithms.hpp"
#include "oasbench/random.hpp"
#include "oasbench/trace.hpp"

namespace oasbench {

struct PolicyParams {
  std::size_t lambda1 = 1;      // EA population size
  std::size_t lambda2 = 2;      // GA population size (also the hyper-heuristic's lambda)
  std::uint64_t k = 1;          // stagnation threshold, in EA iterations
  std::size_t switch_distance = 0;  // oracle policy: switch once distance <= this
  double guard_distance = 0.0;  // 2e n ln n / k
  double band_distance = 0.0;   // n / ln^2 n
};

/// Unit-constant defaults for problem size n >= 8:
///   lambda1 = 1, lambda2 = max(2, round(ln n)), k = ceil(2 lambda2 ln n),
///   switch_distance = ceil(n (ln ln n)^2 / ln n),
///   guard_distance = 2e n ln n / k, band_distance = n / ln^2 n.
/// Throws std::invalid_argument for n < 8.
PolicyParams default_params(std::size_t n);

/// Distance above which a k-failure streak of the (1+1) EA has probability
/// at most 1/n^2 per level.
double guard_distance(std::size_t n, std::uint64_t k);
double band_distance(std::size_t n);

/// Throws std::invalid_argument if the parameters cannot drive a run on
/// problem size n (lambda1 = 0, lambda2 outside [1, n], k = 0,
/// switch_distance > n).
void validate_params(const PolicyParams& params, std::size_t n);

/// Whether (D, lambda2) lies in the unit-constant window
///   n / ln^3 n <= D <= n (ln ln n)^2 / ln n  and
///   ln n / ln ln n <= lambda2 <= (n / D) ln ln n,
/// boundaries inclusive. Always false for n < 3 (ln ln n <= 0).
bool corollary_window_check(std::size_t n, double distance, double lambda2);

struct SwitchRecord {
  Evaluations evaluations = 0;
  std::size_t distance = 0;
};

struct PolicyState {
  AlgorithmTag active = AlgorithmTag::ea;
  std::uint64_t fail_streak = 0;
  bool switched = false;
  std::optional<SwitchRecord> switch_event;
};

/// Idealized distance-triggered switch: true iff not yet switched and the
/// distance to the optimum is at most params.switch_distance.
bool oracle_policy_decide(const SearchState& state, const PolicyState& policy, const PolicyParams& params);

/// Updates the failure streak with one EA outcome; true iff the streak has
/// reached params.k.
bool stagnation_policy_decide(PolicyState& policy, const StepOutcome& outcome, const PolicyParams& params);

/// Hyper-heuristic rule: after lambda consecutive iterations without strict
/// progress run the GA, otherwise the EA. Updates the streak with `outcome`,
/// stores and returns the tag for the next iteration.
AlgorithmTag hh_schedule(PolicyState& policy, const StepOutcome& outcome, std::size_t lambda);

struct StepRecord {
  AlgorithmTag algorithm;
  Fitness fitness_before;
  StepOutcome outcome;
};

using StepObserver = std::function<void(const StepRecord&)>;

struct SelectorOptions {
  Evaluations budget = 0;
  std::optional<std::size_t> start_distance;  // fixed-start runs
  StepObserver observer;                      // called after every iteration
  bool stop_at_switch = false;                // end the trace at the switch event (no terminal event)
};

/// Runs `kind` from a random (or fixed-distance) start to the optimum or until
/// the next iteration would exceed the budget, handing the current point
/// across algorithm switches unchanged. The initial point is not charged.
RunTrace selector_loop(PolicyKind kind, const PolicyParams& params, std::size_t n, RandomStream& rng,
                       const SelectorOptions& options);

/// Parameters that `kind` actually uses, as reported in traces and CSV rows.
TraceParams reported_params(PolicyKind kind, const PolicyParams& params);

}  // namespace oasbench
