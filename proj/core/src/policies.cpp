#include "oasbench/policies.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oasbench/onemax.hpp"

namespace oasbench {

double guard_distance(std::size_t n, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("guard_distance: k must be positive");
  const double nd = static_cast<double>(n);
  return 2.0 * std::numbers::e * nd * std::log(nd) / static_cast<double>(k);
}

double band_distance(std::size_t n) {
  const double ln_n = std::log(static_cast<double>(n));
  return static_cast<double>(n) / (ln_n * ln_n);
}

PolicyParams default_params(std::size_t n) {
  if (n < 8) throw std::invalid_argument("default_params: problem size must be at least 8");
  const double nd = static_cast<double>(n);
  const double ln_n = std::log(nd);
  const double lnln_n = std::log(ln_n);

  PolicyParams p;
  p.lambda1 = 1;
  p.lambda2 = std::max<std::size_t>(2, static_cast<std::size_t>(std::llround(ln_n)));
  p.k = static_cast<std::uint64_t>(std::ceil(2.0 * static_cast<double>(p.lambda2) * ln_n));
  p.switch_distance = std::min(n, static_cast<std::size_t>(std::ceil(nd * lnln_n * lnln_n / ln_n)));
  p.guard_distance = guard_distance(n, p.k);
  p.band_distance = band_distance(n);
  return p;
}

void validate_params(const PolicyParams& params, std::size_t n) {
  if (n == 0) throw std::invalid_argument("problem size must be at least 1");
  if (params.lambda1 < 1) throw std::invalid_argument("lambda1 must be at least 1");
  if (params.lambda2 < 1 || params.lambda2 > n) throw std::invalid_argument("lambda2 must lie in [1, n]");
  if (params.k < 1) throw std::invalid_argument("k must be at least 1");
  if (params.switch_distance > n) throw std::invalid_argument("switch distance must not exceed n");
}

bool corollary_window_check(std::size_t n, double distance, double lambda2) {
  if (n < 3) return false;
  const double nd = static_cast<double>(n);
  const double ln_n = std::log(nd);
  const double lnln_n = std::log(ln_n);
  const double d_low = nd / (ln_n * ln_n * ln_n);
  const double d_high = nd * lnln_n * lnln_n / ln_n;
  if (distance < d_low || distance > d_high) return false;
  const double lambda_low = ln_n / lnln_n;
  const double lambda_high = nd / distance * lnln_n;
  return lambda2 >= lambda_low && lambda2 <= lambda_high;
}

bool oracle_policy_decide(const SearchState& state, const PolicyState& policy, const PolicyParams& params) {
  return !policy.switched && state.distance() <= params.switch_distance;
}

bool stagnation_policy_decide(PolicyState& policy, const StepOutcome& outcome, const PolicyParams& params) {
  policy.fail_streak = outcome.improved ? 0 : policy.fail_streak + 1;
  return policy.fail_streak >= params.k;
}

AlgorithmTag hh_schedule(PolicyState& policy, const StepOutcome& outcome, std::size_t lambda) {
  policy.fail_streak = outcome.improved ? 0 : policy.fail_streak + 1;
  policy.active = policy.fail_streak >= lambda ? AlgorithmTag::ga : AlgorithmTag::ea;
  return policy.active;
}

TraceParams reported_params(PolicyKind kind, const PolicyParams& params) {
  TraceParams t;
  switch (kind) {
    case PolicyKind::opo_ea:
      t.lambda1 = 1;
      break;
    case PolicyKind::opl_ea:
      t.lambda1 = params.lambda1;
      break;
    case PolicyKind::ollga:
      t.lambda2 = params.lambda2;
      break;
    case PolicyKind::oas_oracle:
      t.lambda1 = params.lambda1;
      t.lambda2 = params.lambda2;
      t.d_switch = params.switch_distance;
      break;
    case PolicyKind::oas_stagnation:
      t.lambda1 = params.lambda1;
      t.lambda2 = params.lambda2;
      t.k = params.k;
      break;
    case PolicyKind::hh:
      t.lambda1 = 1;
      t.lambda2 = params.lambda2;
      break;
  }
  return t;
}

namespace {

AlgorithmTag initial_tag(PolicyKind kind) {
  return kind == PolicyKind::ollga ? AlgorithmTag::ga : AlgorithmTag::ea;
}

}  // namespace

RunTrace selector_loop(PolicyKind kind, const PolicyParams& params, std::size_t n, RandomStream& rng,
                       const SelectorOptions& options) {
  validate_params(params, n);
  if (options.start_distance && *options.start_distance > n) {
    throw std::invalid_argument("start distance must not exceed n");
  }

  RunTrace trace;
  trace.policy = kind;
  trace.n = n;
  trace.params = reported_params(kind, params);
  trace.seed = rng.master_seed();
  trace.run_id = rng.stream_index();

  SearchState state(options.start_distance ? init_at_distance(n, *options.start_distance, rng)
                                           : init_random(n, rng));
  trace.initial_fitness = state.fitness;

  const std::size_t ea_lambda = kind == PolicyKind::opo_ea || kind == PolicyKind::hh ? 1 : params.lambda1;
  PlusLambdaEa ea(n, ea_lambda);
  LambdaLambdaGa ga(n, params.lambda2);

  PolicyState policy;
  policy.active = initial_tag(kind);

  auto record = [&](EventType type) {
    trace.events.push_back({type, state.evaluations, state.fitness, state.distance()});
  };
  auto do_switch = [&] {
    policy.switched = true;
    policy.active = AlgorithmTag::ga;
    policy.switch_event = SwitchRecord{state.evaluations, state.distance()};
    record(EventType::switch_algorithm);
    return options.stop_at_switch;
  };

  if (state.fitness == n) {
    record(EventType::optimum);
    return trace;
  }

  for (;;) {
    if (kind == PolicyKind::oas_oracle && oracle_policy_decide(state, policy, params) && do_switch()) {
      return trace;
    }

    Algorithm& algorithm = policy.active == AlgorithmTag::ea ? static_cast<Algorithm&>(ea) : ga;
    if (state.evaluations + algorithm.step_cost() > options.budget) {
      record(EventType::budget_exhausted);
      return trace;
    }

    const Fitness before = state.fitness;
    const StepOutcome outcome = algorithm.step(state, rng);
    if (algorithm.tag() == AlgorithmTag::ea) {
      ++trace.ea_steps;
    } else {
      ++trace.ga_steps;
    }
    if (options.observer) options.observer({algorithm.tag(), before, outcome});

    if (outcome.improved) {
      if (state.fitness == n) {
        record(EventType::optimum);
        return trace;
      }
      record(EventType::improvement);
    }

    switch (kind) {
      case PolicyKind::oas_stagnation:
        if (!policy.switched && stagnation_policy_decide(policy, outcome, params) && do_switch()) {
          return trace;
        }
        break;
      case PolicyKind::hh:
        hh_schedule(policy, outcome, params.lambda2);
        break;
      default:
        break;
    }
  }
}

}  // namespace oasbench
