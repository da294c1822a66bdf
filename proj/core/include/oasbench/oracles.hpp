#pragma once

#include <cstddef>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace oasbench {

using Rational = boost::multiprecision::cpp_rational;

// Exact per-iteration improvement probabilities of the (1+lambda) EA on
// OneMax. Valid for 1 <= n <= 30 and 0 <= d <= n; outside that range
// std::invalid_argument is thrown.

/// Probability that one standard-bit mutant (rate 1/n) of a point at
/// distance d is strictly better: flipping a zero-bits and b one-bits with
/// a > b, summed over all (a, b).
Rational p_improve_opo_exact(std::size_t n, std::size_t d);
double p_improve_opo(std::size_t n, std::size_t d);
/// Same sum evaluated in long double; independent of the rational path.
double p_improve_opo_float(std::size_t n, std::size_t d);

/// 1 - (1 - q)^lambda with q = p_improve_opo(n, d): at least one of lambda
/// offspring strictly improves.
Rational p_level_leave_exact(std::size_t n, std::size_t d, std::size_t lambda);
double p_level_leave(std::size_t n, std::size_t d, std::size_t lambda);

inline constexpr std::size_t kExactOracleMaxN = 30;

// Reference scales for the runtime bounds, with every O(.) constant set to
// one. They are upper-bound shapes for plots and sanity ratios, not
// predictions.

enum class BoundRegime {
  fixed_start,   // (1+(lambda,lambda)) GA from distance D
  large_target,  // (1+lambda) EA, target distance D >= n/lambda
  small_target,  // (1+lambda) EA, target distance D < n/lambda
};

std::string_view to_string(BoundRegime regime);

struct BoundEstimate {
  double value = 0.0;
  BoundRegime regime = BoundRegime::fixed_start;
};

/// max{ln x, 1}
double log_plus(double x);

/// (n/lambda) ln D + D lambda. Throws for D = 0 or lambda outside [1, n].
BoundEstimate bound_ollga_fixed_start(std::size_t n, std::size_t distance, std::size_t lambda);
/// sqrt(n ln D / D), the lambda minimising the fixed-start bound. Throws for D = 0.
double optimal_fixed_start_lambda(std::size_t n, std::size_t distance);

/// (1+lambda) EA to reach distance <= D:
///   n lambda ln+ln+lambda / ln+lambda                       if D >= n/lambda
///   the same + n ln+(n / (lambda (D + 1)))                  otherwise
BoundEstimate bound_olea_fixed_target(std::size_t n, std::size_t distance, std::size_t lambda);

/// EA(lambda1) to distance D, then GA(lambda2) to the optimum:
///   bound_olea_fixed_target(n, D, lambda1) + (n/lambda2) ln max{D,1} + D lambda2.
/// The regime tag is that of the EA part.
BoundEstimate bound_known_switch(std::size_t n, std::size_t distance, std::size_t lambda1, std::size_t lambda2);

}  // namespace oasbench
