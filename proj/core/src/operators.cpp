#include "oasbench/operators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace oasbench {

MutationRate::MutationRate(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("MutationRate must lie in [0, 1]");
}

CrossoverBias::CrossoverBias(double c) : c_(c) {
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("CrossoverBias must lie in [0, 1]");
}

namespace {

constexpr double kInversionMeanLimit = 30.0;

// Sequential search through the CDF starting at 0, with the pmf updated by
// the ratio P(x)/P(x-1) = (a/x - s). Requires p <= 1/2 and small n*p.
std::uint64_t binomial_inversion(std::uint64_t trials, double p, RandomStream& rng) {
  const double q = 1.0 - p;
  const double s = p / q;
  const double a = (static_cast<double>(trials) + 1.0) * s;
  const double r0 = std::exp(static_cast<double>(trials) * std::log1p(-p));
  for (;;) {
    double r = r0;
    double u = rng.uniform01();
    std::uint64_t x = 0;
    while (u > r) {
      u -= r;
      ++x;
      if (x > trials) break;
      r *= a / static_cast<double>(x) - s;
    }
    // rounding can leave a sliver of mass past n; redraw rather than clamp
    if (x <= trials) return x;
  }
}

}  // namespace

std::uint64_t sample_binomial(std::uint64_t trials, double p, RandomStream& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_binomial: p must lie in [0, 1]");
  if (trials == 0 || p == 0.0) return 0;
  if (p == 1.0) return trials;
  if (p > 0.5) return trials - sample_binomial(trials, 1.0 - p, rng);
  if (static_cast<double>(trials) * p < kInversionMeanLimit) return binomial_inversion(trials, p, rng);
  std::binomial_distribution<std::uint64_t> dist(trials, p);
  return dist(rng);
}

BitString standard_bit_mutation(const BitString& x, MutationRate p, IndexSampler& sampler,
                                RandomStream& rng) {
  if (sampler.universe() != x.size()) throw std::invalid_argument("standard_bit_mutation: sampler size mismatch");
  BitString y = x;
  const auto flips = static_cast<std::size_t>(sample_binomial(x.size(), p.value(), rng));
  for (std::uint32_t pos : sampler.sample(flips, rng)) y.flip(pos);
  return y;
}

BitString standard_bit_mutation(const BitString& x, MutationRate p, RandomStream& rng) {
  IndexSampler sampler(x.size());
  return standard_bit_mutation(x, p, sampler, rng);
}

BitString flip_exact_l(const BitString& x, std::size_t flips, RandomStream& rng) {
  if (flips > x.size()) throw std::invalid_argument("flip_exact_l: more flips than bits");
  IndexSampler sampler(x.size());
  BitString y = x;
  for (std::uint32_t pos : sampler.sample(flips, rng)) y.flip(pos);
  return y;
}

BitString biased_crossover(const BitString& x, const BitString& donor, CrossoverBias c,
                           RandomStream& rng) {
  // throws on length mismatch
  const auto diff = differing_positions(x, donor);
  BitString y = x;
  for (std::uint32_t pos : diff) {
    if (rng.bernoulli(c.value())) y.flip(pos);
  }
  return y;
}

}  // namespace oasbench
