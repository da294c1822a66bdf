#include "oasbench/experiment.hpp"

#include <cmath>
#include <string>

namespace oasbench {

void validate_config(const ExperimentConfig& config) {
  if (config.n_values.empty()) throw ConfigError("n: at least one problem size is required");
  if (config.reps < 1) throw ConfigError("reps: must be at least 1");
  if (config.budget && *config.budget < 1) throw ConfigError("budget: must be at least 1");
  for (std::size_t n : config.n_values) {
    if (n < kMinProblemSize) throw ConfigError("n: every problem size must be at least 8 (got " + std::to_string(n) + ")");
    (void)resolve_params(config, n);
    if (config.start_distance && *config.start_distance > n) {
      throw ConfigError("start_distance: exceeds problem size " + std::to_string(n));
    }
    for (Fitness t : config.targets) {
      if (t > n) throw ConfigError("targets: target " + std::to_string(t) + " exceeds problem size " + std::to_string(n));
    }
  }
}

PolicyParams resolve_params(const ExperimentConfig& config, std::size_t n) {
  if (n < kMinProblemSize) throw ConfigError("n: problem size must be at least 8");
  PolicyParams p = default_params(n);
  const ParamOverrides& o = config.overrides;
  if (o.lambda1) p.lambda1 = *o.lambda1;
  if (o.lambda2) p.lambda2 = *o.lambda2;
  if (o.k) p.k = *o.k;
  if (o.switch_distance) p.switch_distance = *o.switch_distance;
  if (p.lambda1 < 1) throw ConfigError("lambda1: must be at least 1");
  if (p.lambda2 < 1 || p.lambda2 > n) {
    throw ConfigError("lambda2: must lie in [1, n] (n = " + std::to_string(n) + ")");
  }
  if (p.k < 1) throw ConfigError("k: must be at least 1");
  if (p.switch_distance > n) throw ConfigError("switch_distance: exceeds problem size " + std::to_string(n));
  p.guard_distance = guard_distance(n, p.k);
  return p;
}

Evaluations default_budget(std::size_t n) {
  const double nd = static_cast<double>(n);
  return static_cast<Evaluations>(std::ceil(200.0 * nd * std::log(nd)));
}

Evaluations resolve_budget(const ExperimentConfig& config, std::size_t n) {
  return config.budget ? *config.budget : default_budget(n);
}

RunTrace run_one(const ExperimentConfig& config, std::size_t n, std::uint64_t run_index) {
  const PolicyParams params = resolve_params(config, n);
  RandomStream rng(config.master_seed, run_index);
  SelectorOptions options;
  options.budget = resolve_budget(config, n);
  options.start_distance = config.start_distance;
  return selector_loop(config.policy, params, n, rng, options);
}

}  // namespace oasbench
