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

#include "qecc/nesting.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace qecc {

SyndromeAssignment::SyndromeAssignment(std::size_t bits, std::vector<BitVec> x_syndromes,
                                       std::vector<BitVec> z_syndromes)
    : n(x_syndromes.size()), s(bits), sx(std::move(x_syndromes)), sz(std::move(z_syndromes)) {
  if (sz.size() != n) throw std::invalid_argument("σx and σz syndrome lists differ in length");
  for (std::size_t q = 0; q < n; ++q) {
    if (sx[q].size() != s || sz[q].size() != s) throw std::invalid_argument("syndrome width mismatch");
  }
}

SyndromeAssignment SyndromeAssignment::zero(std::size_t qubits, std::size_t bits) {
  return SyndromeAssignment(bits, std::vector<BitVec>(qubits, BitVec(bits)), std::vector<BitVec>(qubits, BitVec(bits)));
}

SyndromeAssignment syndromes_of(const CodeFragment& fragment) {
  const std::size_t s = fragment.s();
  std::vector<BitVec> sx(fragment.n, BitVec(s));
  std::vector<BitVec> sz(fragment.n, BitVec(s));
  for (std::size_t r = 0; r < s; ++r) {
    const auto& row = fragment.rows[r];
    for (std::size_t q = 0; q < fragment.n; ++q) {
      if (row.z.get(q)) sx[q].set(r);
      if (row.x.get(q)) sz[q].set(r);
    }
  }
  return SyndromeAssignment(s, std::move(sx), std::move(sz));
}

CodeFragment materialize(const SyndromeAssignment& a) {
  std::vector<PauliWord> rows(a.s, PauliWord(a.n));
  for (std::size_t q = 0; q < a.n; ++q) {
    for (std::size_t r = 0; r < a.s; ++r) {
      if (a.sz[q].get(r)) rows[r].x.set(q);
      if (a.sx[q].get(r)) rows[r].z.set(q);
    }
  }
  return CodeFragment(a.n, std::move(rows));
}

SyndromeAssignment nest(const SyndromeAssignment& block, const SyndromeAssignment& sub) {
  std::vector<BitVec> sx;
  std::vector<BitVec> sz;
  sx.reserve(block.n * sub.n);
  sz.reserve(block.n * sub.n);
  for (std::size_t i = 0; i < block.n; ++i) {
    for (std::size_t j = 0; j < sub.n; ++j) {
      sx.push_back(block.sx[i].concat(sub.sx[j]));
      sz.push_back(block.sz[i].concat(sub.sz[j]));
    }
  }
  return SyndromeAssignment(block.s + sub.s, std::move(sx), std::move(sz));
}

SyndromeAssignment extend(const SyndromeAssignment& a, const SyndromeAssignment& b) {
  if (a.s != b.s) throw std::invalid_argument("extend: syndrome widths differ");
  std::vector<BitVec> sx = a.sx;
  std::vector<BitVec> sz = a.sz;
  sx.insert(sx.end(), b.sx.begin(), b.sx.end());
  sz.insert(sz.end(), b.sz.begin(), b.sz.end());
  return SyndromeAssignment(a.s, std::move(sx), std::move(sz));
}

bool cross_commutation_term(const PauliWord& block_row, const PauliWord& sub_row) {
  return (block_row.x.parity() && sub_row.z.parity()) != (block_row.z.parity() && sub_row.x.parity());
}

bool cross_commutation_ok(const CodeFragment& block, const CodeFragment& sub) {
  for (const auto& b : block.rows) {
    for (const auto& s : sub.rows) {
      if (cross_commutation_term(b, s)) return false;
    }
  }
  return true;
}

bool ConstraintReport::left_even() const {
  return std::none_of(left_row_parities.begin(), left_row_parities.end(), [](bool b) { return b; });
}

bool ConstraintReport::right_even() const {
  return std::none_of(right_row_parities.begin(), right_row_parities.end(), [](bool b) { return b; });
}

ConstraintReport strong_constraints(const CodeFragment& fragment) {
  ConstraintReport report;
  for (const auto& row : fragment.rows) {
    report.left_row_parities.push_back(row.x.parity());
    report.right_row_parities.push_back(row.z.parity());
  }
  if (fragment.n > 0 && !fragment.rows.empty()) {
    const RowSpace space = row_space_of(fragment.rows);
    report.has_all_z = space.contains(PauliWord::uniform(fragment.n, Pauli::Z).stacked());
    report.has_all_x = space.contains(PauliWord::uniform(fragment.n, Pauli::X).stacked());
    report.has_all_y = space.contains(PauliWord::uniform(fragment.n, Pauli::Y).stacked());
  }
  return report;
}

std::optional<XyzCollision> first_xyz_collision(const SyndromeAssignment& a) {
  for (Pauli p : kPaulis) {
    std::unordered_map<BitVec, std::size_t, BitVecHash> seen;
    for (std::size_t q = 0; q < a.n; ++q) {
      const BitVec v = p == Pauli::X ? a.sx[q] : p == Pauli::Z ? a.sz[q] : a.sy(q);
      auto [it, inserted] = seen.emplace(v, q);
      if (!inserted) return XyzCollision{p, it->second, q};
    }
  }
  return std::nullopt;
}

CodeFragment permute_qubits(const CodeFragment& fragment, const std::vector<std::size_t>& perm) {
  if (perm.size() != fragment.n) throw std::invalid_argument("permutation length differs from n");
  std::vector<PauliWord> rows;
  for (const auto& row : fragment.rows) {
    PauliWord out(fragment.n);
    for (std::size_t q = 0; q < fragment.n; ++q) {
      if (row.x.get(perm[q])) out.x.set(q);
      if (row.z.get(perm[q])) out.z.set(q);
    }
    rows.push_back(std::move(out));
  }
  return CodeFragment(fragment.n, std::move(rows));
}

bool same_row_space(const CodeFragment& a, const CodeFragment& b) {
  if (a.n != b.n) return false;
  const RowSpace sa = row_space_of(a.rows);
  const RowSpace sb = row_space_of(b.rows);
  if (sa.rank() != sb.rank()) return false;
  for (const auto& r : b.rows) {
    if (!sa.contains(r.stacked())) return false;
  }
  return true;
}

}  // namespace qecc
