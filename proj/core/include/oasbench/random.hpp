#pragma once

#include <array>
#include <cstdint>

namespace oasbench {

/// Per-run pseudo-random stream.
///
/// xoshiro256** whose state is derived from (master_seed, stream_index)
/// through SplitMix64, so every run gets its own stream without any shared
/// state. The same pair always replays the same sequence. All derived draws
/// (uniform01, below, bernoulli) are implemented here rather than through
/// <random> distributions, whose algorithms differ between standard libraries.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t master_seed, std::uint64_t stream_index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  bool bernoulli(double p);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  /// A new stream keyed on this stream's identity and a salt; used for
  /// auxiliary randomness (e.g. bootstrap resampling) that must not perturb
  /// the run trajectory.
  RandomStream derive(std::uint64_t salt) const;

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::array<std::uint64_t, 4> state_{};
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace oasbench
