#include "oasbench/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace oasbench {

namespace {

using boost::multiprecision::cpp_int;

void require_oracle_range(std::size_t n, std::size_t d) {
  if (n < 1 || n > kExactOracleMaxN) throw std::invalid_argument("exact oracle requires 1 <= n <= 30");
  if (d > n) throw std::invalid_argument("distance exceeds problem size");
}

cpp_int binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  cpp_int c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

Rational rational_pow(const Rational& base, std::size_t e) {
  Rational out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

Rational p_improve_opo_exact(std::size_t n, std::size_t d) {
  require_oracle_range(n, d);
  // Pr[flip a specific set of m bits and nothing else] = (n-1)^(n-m) / n^n
  const cpp_int denominator = pow(cpp_int(n), static_cast<unsigned>(n));
  cpp_int numerator = 0;
  for (std::size_t a = 1; a <= d; ++a) {
    for (std::size_t b = 0; b <= std::min(a - 1, n - d); ++b) {
      numerator += binomial(d, a) * binomial(n - d, b) *
                   pow(cpp_int(n - 1), static_cast<unsigned>(n - a - b));
    }
  }
  return Rational(numerator, denominator);
}

double p_improve_opo(std::size_t n, std::size_t d) {
  return static_cast<double>(p_improve_opo_exact(n, d));
}

double p_improve_opo_float(std::size_t n, std::size_t d) {
  require_oracle_range(n, d);
  const long double p = 1.0L / static_cast<long double>(n);
  const long double q = 1.0L - p;
  // Pascal triangle in long double
  std::vector<std::vector<long double>> choose(n + 1, std::vector<long double>(n + 1, 0.0L));
  for (std::size_t i = 0; i <= n; ++i) {
    choose[i][0] = 1.0L;
    for (std::size_t j = 1; j <= i; ++j) choose[i][j] = choose[i - 1][j - 1] + choose[i - 1][j];
  }
  long double total = 0.0L;
  for (std::size_t a = 1; a <= d; ++a) {
    for (std::size_t b = 0; b <= std::min(a - 1, n - d); ++b) {
      total += choose[d][a] * choose[n - d][b] * std::pow(p, static_cast<long double>(a + b)) *
               std::pow(q, static_cast<long double>(n - a - b));
    }
  }
  return static_cast<double>(total);
}

Rational p_level_leave_exact(std::size_t n, std::size_t d, std::size_t lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be at least 1");
  const Rational q = p_improve_opo_exact(n, d);
  return Rational(1) - rational_pow(Rational(1) - q, lambda);
}

double p_level_leave(std::size_t n, std::size_t d, std::size_t lambda) {
  return static_cast<double>(p_level_leave_exact(n, d, lambda));
}

std::string_view to_string(BoundRegime regime) {
  switch (regime) {
    case BoundRegime::fixed_start:
      return "fixed_start";
    case BoundRegime::large_target:
      return "large_target";
    case BoundRegime::small_target:
      return "small_target";
  }
  return "unknown";
}

double log_plus(double x) { return x <= 0.0 ? 1.0 : std::max(std::log(x), 1.0); }

BoundEstimate bound_ollga_fixed_start(std::size_t n, std::size_t distance, std::size_t lambda) {
  if (distance == 0) throw std::invalid_argument("fixed-start bound needs distance >= 1");
  if (lambda < 1 || lambda > n) throw std::invalid_argument("lambda must lie in [1, n]");
  const double nd = static_cast<double>(n);
  const double dd = static_cast<double>(distance);
  const double ld = static_cast<double>(lambda);
  return {nd / ld * std::log(dd) + dd * ld, BoundRegime::fixed_start};
}

double optimal_fixed_start_lambda(std::size_t n, std::size_t distance) {
  if (distance == 0) throw std::invalid_argument("fixed-start bound needs distance >= 1");
  const double dd = static_cast<double>(distance);
  return std::sqrt(static_cast<double>(n) * std::log(dd) / dd);
}

BoundEstimate bound_olea_fixed_target(std::size_t n, std::size_t distance, std::size_t lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be at least 1");
  if (distance > n) throw std::invalid_argument("distance exceeds problem size");
  const double nd = static_cast<double>(n);
  const double ld = static_cast<double>(lambda);
  const double dd = static_cast<double>(distance);
  const double base = nd * ld * log_plus(log_plus(ld)) / log_plus(ld);
  if (dd >= nd / ld) return {base, BoundRegime::large_target};
  return {base + nd * log_plus(nd / (ld * (dd + 1.0))), BoundRegime::small_target};
}

BoundEstimate bound_known_switch(std::size_t n, std::size_t distance, std::size_t lambda1, std::size_t lambda2) {
  if (lambda2 < 1 || lambda2 > n) throw std::invalid_argument("lambda2 must lie in [1, n]");
  BoundEstimate ea = bound_olea_fixed_target(n, distance, lambda1);
  const double nd = static_cast<double>(n);
  const double dd = static_cast<double>(distance);
  const double l2 = static_cast<double>(lambda2);
  ea.value += nd / l2 * std::log(std::max(dd, 1.0)) + dd * l2;
  return ea;
}

}  // namespace oasbench
