#pragma once

#include <cstddef>
#include <cstdint>

#include "oasbench/bitstring.hpp"
#include "oasbench/random.hpp"
#include "oasbench/sampling.hpp"

namespace oasbench {

/// Per-bit flip probability in [0, 1].
class MutationRate {
 public:
  explicit MutationRate(double p);
  double value() const { return p_; }

 private:
  double p_;
};

/// Per-bit probability of taking the donor's bit in biased crossover, in [0, 1].
class CrossoverBias {
 public:
  explicit CrossoverBias(double c);
  double value() const { return c_; }

 private:
  double c_;
};

/// Exact draw from Bin(trials, p).
///
/// Sequential inversion when min(trials*p, trials*(1-p)) < 30, which covers
/// every mutation-strength draw the algorithms make; beyond that the draw is
/// delegated to std::binomial_distribution, which is also exact. Throws
/// std::invalid_argument unless 0 <= p <= 1.
std::uint64_t sample_binomial(std::uint64_t trials, double p, RandomStream& rng);

/// Copy of x with every bit flipped independently with probability p.
///
/// Implemented as a Bin(n, p) flip count followed by a uniform choice of that
/// many distinct positions, which has the same law as n independent coins.
BitString standard_bit_mutation(const BitString& x, MutationRate p, RandomStream& rng);
/// Same, with a caller-owned sampler over [0, n) to avoid the O(n) setup.
BitString standard_bit_mutation(const BitString& x, MutationRate p, IndexSampler& sampler,
                                RandomStream& rng);

/// Copy of x with exactly `flips` distinct uniformly chosen positions flipped.
/// Throws std::invalid_argument if flips > n.
BitString flip_exact_l(const BitString& x, std::size_t flips, RandomStream& rng);

/// Each output bit is donor's bit with probability c, otherwise x's bit.
/// Throws std::invalid_argument on length mismatch.
BitString biased_crossover(const BitString& x, const BitString& donor, CrossoverBias c,
                           RandomStream& rng);

}  // namespace oasbench
