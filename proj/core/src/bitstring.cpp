#include "oasbench/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace oasbench {

BitString::BitString(std::size_t length, bool value)
    : length_(length), words_((length + kWordBits - 1) / kWordBits, value ? ~Word{0} : Word{0}) {
  if (length == 0) throw std::invalid_argument("BitString: length must be at least 1");
  clear_tail();
}

BitString BitString::from_string(std::string_view bits) {
  BitString out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitString::from_string: expected only '0' and '1'");
    }
  }
  return out;
}

BitString BitString::from_bits(std::initializer_list<int> bits) {
  BitString out(bits.size());
  std::size_t i = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("BitString::from_bits: bits must be 0 or 1");
    out.set(i++, b == 1);
  }
  return out;
}

void BitString::set(std::size_t i, bool value) {
  const Word mask = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

std::size_t BitString::count() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::string BitString::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

void BitString::clear_tail() {
  const std::size_t used = length_ % kWordBits;
  if (used != 0) words_.back() &= (Word{1} << used) - 1;
}

namespace {

void require_same_length(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("bit strings differ in length");
}

}  // namespace

std::size_t hamming_distance(const BitString& a, const BitString& b) {
  require_same_length(a, b);
  std::size_t total = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
  }
  return total;
}

std::vector<std::uint32_t> differing_positions(const BitString& a, const BitString& b) {
  require_same_length(a, b);
  std::vector<std::uint32_t> out;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    BitString::Word diff = wa[i] ^ wb[i];
    while (diff != 0) {
      const int bit = std::countr_zero(diff);
      out.push_back(static_cast<std::uint32_t>(i * BitString::kWordBits + static_cast<std::size_t>(bit)));
      diff &= diff - 1;
    }
  }
  return out;
}

}  // namespace oasbench
