#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace oasbench {

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // measured statistics
};

struct ValidationOptions {
  std::size_t grid_max_n = 20;
  std::uint64_t trials = 100000;
  std::uint64_t master_seed = 20260101;
  std::uint64_t audit_traces = 1000;
  std::size_t rarity_n = 4096;
  std::uint64_t rarity_runs = 2000;
  double rarity_ceiling = 0.05;
  double equivalence_alpha = 1e-3;
};

/// Oracle-agreement grid, cost-accounting audit, elitism and trace audit,
/// lambda = 1 GA/EA equivalence, and early-switch rarity.
std::vector<ValidationCheck> run_validation(const ValidationOptions& options);

// Individual checks, exposed for the acceptance suite.

/// Empirical strict-improvement frequency of one (1+lambda) EA step from
/// distance d versus the exact oracle, for every n in {2, 5, 10, 20} up to
/// grid_max_n, d in {1, ceil(n/2), n} and lambda in {1, 2, 8}; each cell
/// passes within 3 binomial sigma.
std::vector<ValidationCheck> check_oracle_agreement(const ValidationOptions& options);

/// Random mixed-policy traces: exact cost identity, elitism on every step,
/// and trace well-formedness.
std::vector<ValidationCheck> check_trace_audits(const ValidationOptions& options);

/// Fitness-gain distribution of one GA step with lambda = 1 versus one
/// (1+1) EA step from a fixed point (n = 20, d = 10), chi-square homogeneity.
ValidationCheck check_lambda_one_equivalence(const ValidationOptions& options);

/// Fraction of stagnation-policy runs switching at distance > guard distance.
ValidationCheck check_early_switch_rarity(const ValidationOptions& options);

}  // namespace oasbench
