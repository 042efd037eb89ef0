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

#include "qecc/bitvec.hpp"

#include <stdexcept>

namespace qecc {

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string contains a character other than 0/1");
    }
  }
  return v;
}

BitVec BitVec::from_u64(std::uint64_t value, std::size_t n) {
  if (n > 64) throw std::invalid_argument("from_u64 supports at most 64 bits");
  BitVec v(n);
  if (n > 0) v.words_[0] = n == 64 ? value : value & ((std::uint64_t{1} << n) - 1);
  return v;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.n_ != n_) throw std::invalid_argument("BitVec length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  if (other.n_ != n_) throw std::invalid_argument("BitVec length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::size_t BitVec::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitVec::any() const {
  for (auto w : words_) {
    if (w) return true;
  }
  return false;
}

bool BitVec::dot(const BitVec& other) const {
  if (other.n_ != n_) throw std::invalid_argument("BitVec length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

bool BitVec::parity() const {
  std::uint64_t acc = 0;
  for (auto w : words_) acc ^= w;
  return std::popcount(acc) & 1;
}

std::size_t BitVec::find_next(std::size_t from) const {
  if (from >= n_) return n_;
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi >= words_.size()) return n_;
    w = words_[wi];
  }
}

BitVec BitVec::concat(const BitVec& tail) const {
  BitVec out(n_ + tail.n_);
  for (std::size_t i = find_next(0); i < n_; i = find_next(i + 1)) out.set(i);
  for (std::size_t i = tail.find_next(0); i < tail.n_; i = tail.find_next(i + 1)) out.set(n_ + i);
  return out;
}

BitVec BitVec::slice(std::size_t begin, std::size_t len) const {
  if (begin + len > n_) throw std::out_of_range("BitVec slice out of range");
  BitVec out(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (get(begin + i)) out.set(i);
  }
  return out;
}

std::string BitVec::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::size_t BitVecHash::operator()(const BitVec& v) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ v.size();
  for (auto w : v.words()) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace qecc
