#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oasbench {

/// Fixed-length bit string packed into 64-bit words.
///
/// The length is set at construction and must be at least one. Bits past the
/// logical length in the last word are kept at zero so that word-level
/// popcount and XOR give exact answers.
class BitString {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  explicit BitString(std::size_t length, bool value = false);

  /// Parses a string of '0'/'1' characters.
  static BitString from_string(std::string_view bits);
  static BitString from_bits(std::initializer_list<int> bits);

  std::size_t size() const { return length_; }

  bool test(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & Word{1};
  }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  /// Number of one-bits.
  std::size_t count() const;

  std::span<const Word> words() const { return words_; }

  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  void clear_tail();

  std::size_t length_;
  std::vector<Word> words_;
};

/// Throws std::invalid_argument on length mismatch.
std::size_t hamming_distance(const BitString& a, const BitString& b);

/// Positions where a and b differ, ascending. Throws on length mismatch.
std::vector<std::uint32_t> differing_positions(const BitString& a, const BitString& b);

}  // namespace oasbench
