#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oasbench/policies.hpp"
#include "oasbench/trace.hpp"

namespace oasbench {

/// Rejected experiment configuration (maps to CLI exit status 1).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ParamOverrides {
  std::optional<std::size_t> lambda1;
  std::optional<std::size_t> lambda2;
  std::optional<std::uint64_t> k;
  std::optional<std::size_t> switch_distance;
};

struct ExperimentConfig {
  PolicyKind policy = PolicyKind::opo_ea;
  std::vector<std::size_t> n_values;
  ParamOverrides overrides;
  std::uint64_t reps = 1;
  std::uint64_t master_seed = 0;
  std::optional<Evaluations> budget;        // default: 200 n ln n
  std::optional<std::size_t> start_distance;
  std::vector<Fitness> targets;             // fixed-target fitness values
  std::string out;
};

inline constexpr std::size_t kMinProblemSize = 8;

/// Throws ConfigError naming the offending field.
void validate_config(const ExperimentConfig& config);

/// default_params(n) with the overrides applied; the guard distance follows
/// an overridden k. Throws ConfigError on an invalid combination.
PolicyParams resolve_params(const ExperimentConfig& config, std::size_t n);

/// ceil(200 n ln n).
Evaluations default_budget(std::size_t n);
Evaluations resolve_budget(const ExperimentConfig& config, std::size_t n);

/// Deterministic in (config, n, run_index): the run uses stream
/// (master_seed, run_index), so equal run indices pair across configs.
RunTrace run_one(const ExperimentConfig& config, std::size_t n, std::uint64_t run_index);

}  // namespace oasbench
