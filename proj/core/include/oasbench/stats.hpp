#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "oasbench/random.hpp"

namespace oasbench {

struct SummaryStats {
  std::size_t count = 0;
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation
  double ci_low = 0.0;
  double ci_high = 0.0;
};

inline constexpr std::size_t kBootstrapResamples = 10000;

/// Mean, sample sd and a percentile bootstrap confidence interval for the
/// mean. An empty input yields count 0 and zeros; a single value yields a
/// degenerate interval at that value.
SummaryStats summarize(std::span<const double> values, RandomStream rng,
                       std::size_t resamples = kBootstrapResamples, double level = 0.95);

/// Whether two confidence intervals are disjoint.
bool disjoint(const SummaryStats& a, const SummaryStats& b);

/// (successes/trials - p) / sqrt(p(1-p)/trials); zero when p is 0 or 1 and
/// the observation matches exactly, +/-infinity when it does not.
double binomial_z(std::uint64_t successes, std::uint64_t trials, double p);

/// Chi-square goodness-of-fit p-value of `observed` counts against category
/// probabilities. Adjacent categories are pooled until every expected count
/// is at least `min_expected`.
double chi_square_gof_pvalue(std::span<const std::uint64_t> observed, std::span<const double> probabilities,
                             double min_expected = 5.0);

/// Chi-square test of homogeneity for two samples over the same categories,
/// pooling adjacent sparse categories. Returns the p-value.
double chi_square_homogeneity_pvalue(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                                     double min_expected = 5.0);

}  // namespace oasbench
