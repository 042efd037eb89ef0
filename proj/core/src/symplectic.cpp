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

#include "qecc/symplectic.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace qecc {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::X:
      return 'X';
    case Pauli::Z:
      return 'Z';
    case Pauli::Y:
      return 'Y';
  }
  return '?';
}

PauliWord::PauliWord(BitVec x_bits, BitVec z_bits) : x(std::move(x_bits)), z(std::move(z_bits)) {
  if (x.size() != z.size()) throw std::invalid_argument("x and z parts differ in length");
}

PauliWord PauliWord::single(std::size_t n, std::size_t qubit, Pauli p) {
  if (qubit >= n) throw std::out_of_range("qubit index out of range");
  PauliWord w(n);
  if (p != Pauli::Z) w.x.set(qubit);
  if (p != Pauli::X) w.z.set(qubit);
  return w;
}

PauliWord PauliWord::uniform(std::size_t n, Pauli p) {
  PauliWord w(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (p != Pauli::Z) w.x.set(q);
    if (p != Pauli::X) w.z.set(q);
  }
  return w;
}

char PauliWord::letter(std::size_t q) const {
  static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
  return kLetters[(x.get(q) ? 1 : 0) | (z.get(q) ? 2 : 0)];
}

void PauliWord::set_letter(std::size_t q, char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'I':
      x.set(q, false);
      z.set(q, false);
      break;
    case 'X':
      x.set(q, true);
      z.set(q, false);
      break;
    case 'Z':
      x.set(q, false);
      z.set(q, true);
      break;
    case 'Y':
      x.set(q, true);
      z.set(q, true);
      break;
    default:
      throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
  }
}

std::size_t PauliWord::weight() const {
  std::size_t w = 0;
  auto xs = x.words();
  auto zs = z.words();
  for (std::size_t i = 0; i < xs.size(); ++i) w += static_cast<std::size_t>(std::popcount(xs[i] | zs[i]));
  return w;
}

PauliWord PauliWord::from_stacked(const BitVec& v) {
  if (v.size() % 2 != 0) throw std::invalid_argument("stacked vector has odd length");
  const std::size_t n = v.size() / 2;
  return PauliWord(v.slice(0, n), v.slice(n, n));
}

PauliWord PauliWord::tensor(const PauliWord& tail) const { return PauliWord(x.concat(tail.x), z.concat(tail.z)); }

PauliWord& PauliWord::operator+=(const PauliWord& other) {
  if (other.n() != n()) throw std::invalid_argument("Pauli word length mismatch");
  x ^= other.x;
  z ^= other.z;
  return *this;
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

PauliWord parse_pauli_word(std::string_view text, std::optional<std::size_t> n_hint) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty Pauli word");

  PauliWord word;
  if (const auto bar = s.find('|'); bar != std::string::npos) {
    const std::string_view left = std::string_view(s).substr(0, bar);
    const std::string_view right = std::string_view(s).substr(bar + 1);
    if (s.find('|', bar + 1) != std::string::npos) throw std::invalid_argument("more than one '|' in binary word");
    if (left.size() != right.size()) throw std::invalid_argument("binary word halves differ in length");
    if (left.empty()) throw std::invalid_argument("empty binary word");
    for (char c : s) {
      if (c != '0' && c != '1' && c != '|') {
        throw std::invalid_argument(std::string("unexpected character '") + c + "' in binary word");
      }
    }
    word = PauliWord(BitVec::from_string(left), BitVec::from_string(right));
  } else {
    word = PauliWord(s.size());
    for (std::size_t q = 0; q < s.size(); ++q) {
      const char c = s[q];
      if (c == '0' || c == '1') throw std::invalid_argument("binary digits in a letter word (missing '|')");
      word.set_letter(q, c);
    }
  }
  if (n_hint && word.n() != *n_hint) {
    throw std::invalid_argument("word has " + std::to_string(word.n()) + " qubits, expected " + std::to_string(*n_hint));
  }
  return word;
}

std::string format_pauli_word(const PauliWord& word, WordStyle style) {
  if (style == WordStyle::kBinary) return word.x.to_string() + "|" + word.z.to_string();
  std::string out(word.n(), 'I');
  for (std::size_t q = 0; q < word.n(); ++q) out[q] = word.letter(q);
  return out;
}

bool symplectic_product(const PauliWord& p, const PauliWord& q) {
  if (p.n() != q.n()) throw std::invalid_argument("symplectic product of words with different lengths");
  return p.x.dot(q.z) != p.z.dot(q.x);
}

QubitPartition::QubitPartition(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  for (auto s : sizes_) {
    if (s == 0) throw std::invalid_argument("partition blocks must be non-empty");
  }
  total_ = std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0});
}

std::size_t block_weight(const PauliWord& word, const QubitPartition& partition) {
  if (partition.total() != word.n()) throw std::invalid_argument("partition does not cover the word");
  std::size_t touched = 0;
  std::size_t q = 0;
  for (auto size : partition.sizes()) {
    bool hit = false;
    for (std::size_t end = q + size; q < end; ++q) hit = hit || word.x.get(q) || word.z.get(q);
    if (hit) ++touched;
  }
  return touched;
}

bool RowSpace::reduce(BitVec& v) const {
  if (v.size() != width_) throw std::invalid_argument("row width mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v.get(pivots_[i])) v ^= rows_[i];
  }
  return v.none();
}

bool RowSpace::insert(BitVec v) {
  if (reduce(v)) return false;
  const std::size_t pivot = v.find_next(0);
  // Keep the basis fully reduced on pivot columns so reduce() is a single pass.
  for (auto& row : rows_) {
    if (row.get(pivot)) row ^= v;
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

RowSpace row_space_of(std::span<const PauliWord> rows) {
  RowSpace space(rows.empty() ? 0 : 2 * rows.front().n());
  for (const auto& r : rows) space.insert(r.stacked());
  return space;
}

std::size_t gf2_rank(std::span<const PauliWord> rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().n();
  for (const auto& r : rows) {
    if (r.n() != n) throw std::invalid_argument("rows differ in length");
  }
  return row_space_of(rows).rank();
}

bool in_row_space(const PauliWord& word, std::span<const PauliWord> rows) {
  if (rows.empty()) return word.is_identity();
  if (rows.front().n() != word.n()) throw std::invalid_argument("word and rows differ in length");
  return row_space_of(rows).contains(word.stacked());
}

std::vector<BitVec> gf2_nullspace(std::span<const BitVec> rows, std::size_t width) {
  // Reduced row echelon form, then one basis vector per free column.
  std::vector<BitVec> m(rows.begin(), rows.end());
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && !m[p].get(c)) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != r && m[i].get(c)) m[i] ^= m[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(width, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<BitVec> basis;
  for (std::size_t f = 0; f < width; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(width);
    v.set(f);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      if (m[i].get(f)) v.set(pivot_cols[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qecc
