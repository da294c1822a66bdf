#pragma once

#include <cstddef>
#include <cstdint>

#include "oasbench/bitstring.hpp"
#include "oasbench/random.hpp"

namespace oasbench {

/// Number of correct (one) bits; lies in [0, n].
using Fitness = std::size_t;
/// Fitness evaluations, the universal cost unit.
using Evaluations = std::uint64_t;

/// OneMax with the all-ones optimum.
Fitness onemax(const BitString& x);

inline std::size_t distance_to_optimum(std::size_t n, Fitness f) { return n - f; }

/// OneMax that charges one evaluation per call.
class CountingOneMax {
 public:
  Fitness operator()(const BitString& x) {
    ++evaluations_;
    return onemax(x);
  }
  Evaluations evaluations() const { return evaluations_; }

 private:
  Evaluations evaluations_ = 0;
};

/// Uniform random point of {0,1}^n. Throws std::invalid_argument for n = 0.
BitString init_random(std::size_t n, RandomStream& rng);

/// Point with exactly `distance` zero-bits at uniformly chosen positions.
/// Throws std::invalid_argument if distance > n or n = 0.
BitString init_at_distance(std::size_t n, std::size_t distance, RandomStream& rng);

}  // namespace oasbench
