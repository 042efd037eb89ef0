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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qecc/bitvec.hpp"

namespace qecc {

/// Single-qubit Pauli letter. The numeric values are the enumeration order
/// used by the distance searches (X < Z < Y).
enum class Pauli : unsigned char { X = 0, Z = 1, Y = 2 };

inline constexpr Pauli kPaulis[3] = {Pauli::X, Pauli::Z, Pauli::Y};

char pauli_char(Pauli p);

/// Phase-free n-qubit Pauli operator in binary symplectic form (x | z).
/// Per qubit: (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y.
struct PauliWord {
  BitVec x;
  BitVec z;

  PauliWord() = default;
  explicit PauliWord(std::size_t n) : x(n), z(n) {}
  PauliWord(BitVec x_bits, BitVec z_bits);

  static PauliWord identity(std::size_t n) { return PauliWord(n); }
  static PauliWord single(std::size_t n, std::size_t qubit, Pauli p);
  /// All-X or all-Z word, written X(n) and Z(n) in the pasting construction.
  static PauliWord uniform(std::size_t n, Pauli p);

  std::size_t n() const { return x.size(); }
  char letter(std::size_t q) const;
  void set_letter(std::size_t q, char letter);
  std::size_t weight() const;
  bool is_identity() const { return x.none() && z.none(); }

  /// The 2n-bit vector x followed by z.
  BitVec stacked() const { return x.concat(z); }
  static PauliWord from_stacked(const BitVec& v);

  /// Tensor product: this word on the leading qubits, `tail` after it.
  PauliWord tensor(const PauliWord& tail) const;

  PauliWord& operator+=(const PauliWord& other);
  friend PauliWord operator+(PauliWord a, const PauliWord& b) { return a += b; }

  friend bool operator==(const PauliWord&, const PauliWord&) = default;
  friend auto operator<=>(const PauliWord& a, const PauliWord& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.z <=> b.z;
  }
};

enum class WordStyle { kLetters, kBinary };

/// Parses a letter row over {I,X,Y,Z} or a binary row "a1..an|b1..bn".
/// Whitespace is ignored in both forms. Throws std::invalid_argument.
PauliWord parse_pauli_word(std::string_view text, std::optional<std::size_t> n_hint = std::nullopt);
std::string format_pauli_word(const PauliWord& word, WordStyle style = WordStyle::kLetters);

/// 0 when the operators commute, 1 when they anticommute.
bool symplectic_product(const PauliWord& p, const PauliWord& q);

/// Ordered block sizes k_1..k_m used by the redefined block weight.
class QubitPartition {
 public:
  explicit QubitPartition(std::vector<std::size_t> sizes);
  static QubitPartition singletons(std::size_t n) { return QubitPartition(std::vector<std::size_t>(n, 1)); }

  const std::vector<std::size_t>& sizes() const { return sizes_; }
  std::size_t total() const { return total_; }

 private:
  std::vector<std::size_t> sizes_;
  std::size_t total_ = 0;
};

/// Number of partition blocks on which the word acts non-trivially.
std::size_t block_weight(const PauliWord& word, const QubitPartition& partition);

/// Incrementally maintained GF(2) row echelon basis.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces `v` against the basis in place; returns true when it became zero.
  bool reduce(BitVec& v) const;
  bool contains(BitVec v) const { return reduce(v); }
  /// Adds `v`; returns false (leaving the basis unchanged) when dependent.
  bool insert(BitVec v);

 private:
  std::size_t width_;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
};

RowSpace row_space_of(std::span<const PauliWord> rows);

std::size_t gf2_rank(std::span<const PauliWord> rows);
bool in_row_space(const PauliWord& word, std::span<const PauliWord> rows);

/// Basis of {v : <row, v> = 0 for every row}, vectors of length `width`.
std::vector<BitVec> gf2_nullspace(std::span<const BitVec> rows, std::size_t width);

}  // namespace qecc
