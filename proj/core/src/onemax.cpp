#include "oasbench/onemax.hpp"

#include <stdexcept>

#include "oasbench/sampling.hpp"

namespace oasbench {

IndexSampler::IndexSampler(std::size_t n) : indices_(n) {
  for (std::size_t i = 0; i < n; ++i) indices_[i] = static_cast<std::uint32_t>(i);
}

std::span<const std::uint32_t> IndexSampler::sample(std::size_t k, RandomStream& rng) {
  const std::size_t n = indices_.size();
  if (k > n) throw std::invalid_argument("IndexSampler: cannot draw more positions than exist");
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(indices_[i], indices_[j]);
  }
  return {indices_.data(), k};
}

Fitness onemax(const BitString& x) { return x.count(); }

BitString init_random(std::size_t n, RandomStream& rng) {
  if (n == 0) throw std::invalid_argument("init_random: problem size must be at least 1");
  BitString x(n);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 64 == 0) word = rng();
    x.set(i, (word >> (i % 64)) & 1U);
  }
  return x;
}

BitString init_at_distance(std::size_t n, std::size_t distance, RandomStream& rng) {
  if (n == 0) throw std::invalid_argument("init_at_distance: problem size must be at least 1");
  if (distance > n) throw std::invalid_argument("init_at_distance: distance exceeds problem size");
  BitString x(n, true);
  IndexSampler sampler(n);
  for (std::uint32_t pos : sampler.sample(distance, rng)) x.set(pos, false);
  return x;
}

}  // namespace oasbench
