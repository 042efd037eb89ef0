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
#include <utility>
#include <vector>

#include "qecc/bitvec.hpp"
#include "qecc/stabilizer.hpp"

namespace qecc {

/// Per-qubit σx and σz error syndromes: the column view of a generator
/// matrix. sx_q is column q of the Z half, sz_q column q of the X half, and
/// the σy syndrome is always derived as their sum.
struct SyndromeAssignment {
  std::size_t n = 0;
  std::size_t s = 0;
  std::vector<BitVec> sx;
  std::vector<BitVec> sz;

  SyndromeAssignment() = default;
  SyndromeAssignment(std::size_t bits, std::vector<BitVec> x_syndromes, std::vector<BitVec> z_syndromes);

  /// `qubits` qubits whose three syndromes are all zero on `bits` bits.
  static SyndromeAssignment zero(std::size_t qubits, std::size_t bits);

  BitVec sy(std::size_t q) const { return sx[q] ^ sz[q]; }

  friend bool operator==(const SyndromeAssignment&, const SyndromeAssignment&) = default;
};

SyndromeAssignment syndromes_of(const CodeFragment& fragment);
CodeFragment materialize(const SyndromeAssignment& assignment);

/// Block-major product: qubit (i, j) sits at i * sub.n + j and carries
/// block syndrome i followed by sub syndrome j.
SyndromeAssignment nest(const SyndromeAssignment& block, const SyndromeAssignment& sub);

/// Qubit-wise concatenation; both sides must use the same syndrome width.
SyndromeAssignment extend(const SyndromeAssignment& a, const SyndromeAssignment& b);

/// (Σ x_block)(Σ z_sub) + (Σ z_block)(Σ x_sub) over GF(2): the symplectic
/// product of the nested images of one block row and one sub row.
bool cross_commutation_term(const PauliWord& block_row, const PauliWord& sub_row);
bool cross_commutation_ok(const CodeFragment& block, const CodeFragment& sub);

struct ConstraintReport {
  std::vector<bool> left_row_parities;   // parity of each row's X half
  std::vector<bool> right_row_parities;  // parity of each row's Z half
  bool has_all_z = false;                // (0…0|1…1) in the row space
  bool has_all_x = false;                // (1…1|0…0)
  bool has_all_y = false;                // (1…1|1…1)

  bool left_even() const;
  bool right_even() const;
  bool forbidden_elements_present() const { return has_all_z || has_all_x || has_all_y; }
};

ConstraintReport strong_constraints(const CodeFragment& fragment);

/// First pair of qubits (0-based) whose σx, σz or σy syndromes coincide.
struct XyzCollision {
  Pauli pauli;
  std::size_t first;
  std::size_t second;
};
std::optional<XyzCollision> first_xyz_collision(const SyndromeAssignment& a);

/// σx syndromes pairwise distinct, likewise σz and σy: the predicate for
/// over-optimal (optimal-constructing) subcode fragments.
inline bool distinct_xyz(const SyndromeAssignment& a) { return !first_xyz_collision(a).has_value(); }

/// Column permutation: output qubit q is input qubit perm[q].
CodeFragment permute_qubits(const CodeFragment& fragment, const std::vector<std::size_t>& perm);

/// Same GF(2) row space (and the same n).
bool same_row_space(const CodeFragment& a, const CodeFragment& b);

}  // namespace qecc
