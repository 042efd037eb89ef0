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

// Brute-force reference implementations for tests. They work on letter
// strings ("IXZY...") with a phase-free multiplication table and share no
// code with the library.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Word = std::string;
using Rows = std::vector<Word>;

inline char mul(char a, char b) {
  if (a == 'I') return b;
  if (b == 'I') return a;
  if (a == b) return 'I';
  for (char c : {'X', 'Y', 'Z'}) {
    if (c != a && c != b) return c;
  }
  return 'I';
}

inline Word mul(const Word& a, const Word& b) {
  Word out(a.size(), 'I');
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul(a[i], b[i]);
  return out;
}

inline bool anticommute(const Word& a, const Word& b) {
  std::size_t clashes = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 'I' && b[i] != 'I' && a[i] != b[i]) ++clashes;
  }
  return clashes % 2 == 1;
}

inline std::size_t weight(const Word& w) {
  std::size_t c = 0;
  for (char ch : w) c += ch != 'I';
  return c;
}

/// All products of subsets of `rows`, identity included.
inline std::set<Word> group(const Rows& rows, std::size_t n) {
  std::set<Word> g{Word(n, 'I')};
  for (const auto& r : rows) {
    std::set<Word> next = g;
    for (const auto& w : g) next.insert(mul(w, r));
    g = std::move(next);
  }
  return g;
}

inline std::size_t rank(const Rows& rows, std::size_t n) {
  std::size_t size = group(rows, n).size();
  std::size_t r = 0;
  while (size > 1) {
    size /= 2;
    ++r;
  }
  return r;
}

/// Every word on n qubits, in base-4 counting order over "IXZY".
inline std::vector<Word> all_words(std::size_t n) {
  std::vector<Word> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 4;
  for (std::size_t v = 0; v < total; ++v) {
    Word w(n, 'I');
    std::size_t x = v;
    for (std::size_t q = 0; q < n; ++q, x /= 4) w[q] = "IXZY"[x % 4];
    out.push_back(w);
  }
  return out;
}

/// Lightest word commuting with every row and outside the group; 0 when the
/// code encodes nothing.
inline std::size_t distance(const Rows& rows, std::size_t n) {
  const auto g = group(rows, n);
  std::size_t best = 0;
  for (const auto& w : all_words(n)) {
    bool ok = true;
    for (const auto& r : rows) ok = ok && !anticommute(w, r);
    if (!ok || g.count(w)) continue;
    const std::size_t wt = weight(w);
    if (best == 0 || wt < best) best = wt;
  }
  return best;
}

inline std::size_t min_stabilizer_weight(const Rows& rows, std::size_t n) {
  std::size_t best = 0;
  for (const auto& w : group(rows, n)) {
    const std::size_t wt = weight(w);
    if (wt > 0 && (best == 0 || wt < best)) best = wt;
  }
  return best;
}

/// Syndrome string, generator 1 first.
inline std::string syndrome(const Rows& rows, const Word& e) {
  std::string s;
  for (const auto& r : rows) s += anticommute(r, e) ? '1' : '0';
  return s;
}

inline Word random_word(std::size_t n, std::mt19937_64& rng) {
  Word w(n, 'I');
  for (auto& c : w) c = "IXZY"[rng() % 4];
  return w;
}

/// Commuting, independent rows built greedily; may return fewer than s rows
/// when the retry budget runs out.
inline Rows random_code(std::size_t n, std::size_t s, std::mt19937_64& rng) {
  Rows rows;
  for (int tries = 0; rows.size() < s && tries < 10000; ++tries) {
    const Word w = random_word(n, rng);
    if (weight(w) == 0) continue;
    bool ok = true;
    for (const auto& r : rows) ok = ok && !anticommute(w, r);
    if (!ok) continue;
    Rows extended = rows;
    extended.push_back(w);
    if (rank(extended, n) != extended.size()) continue;
    rows = std::move(extended);
  }
  return rows;
}

}  // namespace oracle
