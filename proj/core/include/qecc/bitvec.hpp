// Copyright 2026 The qecc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qecc {

/// Fixed-length GF(2) vector packed into 64-bit words. Bit i lives in word
/// i / 64 at position i % 64; padding bits past size() are always zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  /// Bits from a string of '0'/'1' characters, index 0 first.
  static BitVec from_string(std::string_view bits);

  /// The low `n` bits of `value`, bit i of the vector = bit i of the value.
  static BitVec from_u64(std::uint64_t value, std::size_t n);

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

  std::size_t popcount() const;
  bool any() const;
  bool none() const { return !any(); }
  /// Inner product over GF(2).
  bool dot(const BitVec& other) const;
  /// XOR of all bits.
  bool parity() const;

  /// Lowest set bit index at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const;

  /// Concatenation: this vector's bits followed by `tail`.
  BitVec concat(const BitVec& tail) const;
  BitVec slice(std::size_t begin, std::size_t len) const;

  /// Valid only when size() <= 64.
  std::uint64_t to_u64() const { return words_.empty() ? 0 : words_[0]; }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  std::string to_string() const;

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    // Order by string form, i.e. bit 0 is most significant.
    for (std::size_t i = 0; i < a.n_; ++i) {
      if (a.get(i) != b.get(i)) return a.get(i) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const noexcept;
};

}  // namespace qecc
