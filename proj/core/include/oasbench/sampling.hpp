#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "oasbench/random.hpp"

namespace oasbench {

/// Draws k distinct positions from [0, n) uniformly at random by a partial
/// Fisher-Yates shuffle over a persistent index array.
///
/// The array is never reset between draws: a partial shuffle of any
/// permutation yields a uniform k-subset, so each draw costs O(k) after the
/// O(n) construction. The returned span is invalidated by the next call.
class IndexSampler {
 public:
  explicit IndexSampler(std::size_t n);

  std::size_t universe() const { return indices_.size(); }

  std::span<const std::uint32_t> sample(std::size_t k, RandomStream& rng);

 private:
  std::vector<std::uint32_t> indices_;
};

}  // namespace oasbench
