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

#include "qecc/distance.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qecc/parallel.hpp"

namespace qecc {
namespace {

using SynKey = std::array<std::uint64_t, kMaxEnumerationGenerators / 64>;

/// Syndrome of every single-qubit error, indexed by 3 * qubit + letter.
class LetterSyndromes {
 public:
  explicit LetterSyndromes(const CodeFragment& rows) : n_(rows.n), keys_(3 * rows.n, SynKey{}) {
    if (rows.s() > kMaxEnumerationGenerators) {
      throw std::invalid_argument("distance enumeration supports at most 256 generators");
    }
    for (std::size_t r = 0; r < rows.s(); ++r) {
      const auto& g = rows.rows[r];
      const std::uint64_t bit = std::uint64_t{1} << (r & 63);
      for (std::size_t q = 0; q < n_; ++q) {
        const bool gx = g.x.get(q);
        const bool gz = g.z.get(q);
        if (gz) keys_[3 * q + 0][r >> 6] |= bit;       // X error
        if (gx) keys_[3 * q + 1][r >> 6] |= bit;       // Z error
        if (gx != gz) keys_[3 * q + 2][r >> 6] |= bit;  // Y error
      }
    }
  }

  const SynKey& key(std::size_t qubit, unsigned letter) const { return keys_[3 * qubit + letter]; }

 private:
  std::size_t n_;
  std::vector<SynKey> keys_;
};

inline SynKey xor_key(const SynKey& a, const SynKey& b) {
  SynKey out;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

inline bool is_zero(const SynKey& k) {
  for (auto w : k) {
    if (w) return false;
  }
  return true;
}

PauliWord build_word(std::size_t n, const std::size_t* qubits, const unsigned* letters, std::size_t len) {
  PauliWord w(n);
  for (std::size_t i = 0; i < len; ++i) {
    const Pauli p = kPaulis[letters[i]];
    if (p != Pauli::Z) w.x.set(qubits[i]);
    if (p != Pauli::X) w.z.set(qubits[i]);
  }
  return w;
}

/// First word of weight `w` whose subset starts at `lead` and lies in N(S) - S.
std::optional<PauliWord> search_stratum(const LetterSyndromes& table, const RowSpace& stabilizer, std::size_t n,
                                        std::size_t w, std::size_t lead, const std::atomic<std::size_t>& best) {
  std::vector<std::size_t> subset(w);
  std::vector<unsigned> letters(w);
  std::vector<SynKey> prefix(w + 1, SynKey{});
  std::optional<PauliWord> found;

  // Letter assignments for a fixed subset, lexicographic with X < Z < Y.
  auto letters_dfs = [&](auto&& self, std::size_t j) -> bool {
    for (unsigned l = 0; l < 3; ++l) {
      letters[j] = l;
      prefix[j + 1] = xor_key(prefix[j], table.key(subset[j], l));
      if (j + 1 == w) {
        if (is_zero(prefix[w])) {
          PauliWord word = build_word(n, subset.data(), letters.data(), w);
          if (!stabilizer.contains(word.stacked())) {
            found = std::move(word);
            return true;
          }
        }
      } else if (self(self, j + 1)) {
        return true;
      }
    }
    return false;
  };

  auto subset_dfs = [&](auto&& self, std::size_t j) -> bool {
    if (j == w) return letters_dfs(letters_dfs, 0);
    const std::size_t start = j == 0 ? lead : subset[j - 1] + 1;
    const std::size_t stop = j == 0 ? lead + 1 : n - (w - j) + 1;
    for (std::size_t q = start; q < stop; ++q) {
      if (best.load(std::memory_order_relaxed) < lead) return true;
      subset[j] = q;
      if (self(self, j + 1)) return true;
    }
    return false;
  };

  subset_dfs(subset_dfs, 0);
  return found;
}

struct CollisionEntry {
  SynKey key;
  std::uint8_t len;
  std::array<std::uint16_t, kMaxCollisionWeight> ops;  // (qubit << 2) | letter, ascending qubit

  friend bool operator<(const CollisionEntry& a, const CollisionEntry& b) {
    if (a.key != b.key) return a.key < b.key;
    if (a.len != b.len) return a.len < b.len;
    return std::lexicographical_compare(a.ops.begin(), a.ops.begin() + a.len, b.ops.begin(), b.ops.begin() + b.len);
  }

  PauliWord word(std::size_t n) const {
    PauliWord w(n);
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t q = ops[i] >> 2;
      const Pauli p = kPaulis[ops[i] & 3u];
      if (p != Pauli::Z) w.x.set(q);
      if (p != Pauli::X) w.z.set(q);
    }
    return w;
  }
};

void enumerate_stratum(const LetterSyndromes& table, std::size_t n, std::size_t w, std::size_t lead,
                       std::vector<CollisionEntry>& out) {
  std::vector<std::size_t> subset(w);
  std::vector<unsigned> letters(w);
  std::vector<SynKey> prefix(w + 1, SynKey{});

  auto letters_dfs = [&](auto&& self, std::size_t j) -> void {
    for (unsigned l = 0; l < 3; ++l) {
      letters[j] = l;
      prefix[j + 1] = xor_key(prefix[j], table.key(subset[j], l));
      if (j + 1 == w) {
        CollisionEntry e{prefix[w], static_cast<std::uint8_t>(w), {}};
        for (std::size_t i = 0; i < w; ++i) e.ops[i] = static_cast<std::uint16_t>((subset[i] << 2) | letters[i]);
        out.push_back(e);
      } else {
        self(self, j + 1);
      }
    }
  };
  auto subset_dfs = [&](auto&& self, std::size_t j) -> void {
    if (j == w) {
      letters_dfs(letters_dfs, 0);
      return;
    }
    const std::size_t start = j == 0 ? lead : subset[j - 1] + 1;
    const std::size_t stop = j == 0 ? lead + 1 : n - (w - j) + 1;
    for (std::size_t q = start; q < stop; ++q) {
      subset[j] = q;
      self(self, j + 1);
    }
  };
  subset_dfs(subset_dfs, 0);
}

}  // namespace

DistanceReport min_distance(const StabilizerCode& code, std::size_t max_weight, std::size_t threads) {
  if (code.k() == 0) return DistanceReport::not_applicable();
  const std::size_t n = code.n();
  max_weight = std::min(max_weight, n);
  if (threads == 0) threads = worker_count();

  const LetterSyndromes table(code.fragment());
  const RowSpace stabilizer = row_space_of(code.generators());

  for (std::size_t w = 1; w <= max_weight; ++w) {
    const std::size_t strata = n - w + 1;
    std::vector<std::optional<PauliWord>> results(strata);
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    parallel_for(strata, threads, [&](std::size_t lead) {
      if (best.load() < lead) return;
      results[lead] = search_stratum(table, stabilizer, n, w, lead, best);
      if (results[lead]) {
        std::size_t cur = best.load();
        while (lead < cur && !best.compare_exchange_weak(cur, lead)) {
        }
      }
    });
    for (auto& r : results) {
      if (r) return DistanceReport::exact(w, std::move(*r), w);
    }
  }
  return DistanceReport::at_least(max_weight + 1, max_weight);
}

CollisionReport distance_at_least_by_collision(const StabilizerCode& code, std::size_t t, std::size_t threads) {
  CollisionReport report;
  report.t = t;
  if (code.k() == 0) return report;
  if (t < 1) throw std::invalid_argument("collision certificate needs t >= 1");
  if (t > kMaxCollisionWeight) throw std::invalid_argument("collision certificate supports t <= 8");
  const std::size_t n = code.n();
  if (n > (std::size_t{1} << 14)) throw std::invalid_argument("collision certificate supports n <= 16384");
  t = std::min(t, n);
  if (threads == 0) threads = worker_count();

  const LetterSyndromes table(code.fragment());
  std::vector<CollisionEntry> entries;
  entries.push_back(CollisionEntry{SynKey{}, 0, {}});
  for (std::size_t w = 1; w <= t; ++w) {
    const std::size_t strata = n - w + 1;
    std::vector<std::vector<CollisionEntry>> parts(strata);
    parallel_for(strata, threads, [&](std::size_t lead) { enumerate_stratum(table, n, w, lead, parts[lead]); });
    for (auto& p : parts) entries.insert(entries.end(), p.begin(), p.end());
  }
  std::sort(entries.begin(), entries.end());
  report.words = entries.size();

  // Within a bucket it suffices to compare every member with the first one:
  // if each differs from it by a stabilizer, so does every pair.
  const RowSpace stabilizer = row_space_of(code.generators());
  report.status = CollisionReport::Status::kCertified;
  for (std::size_t begin = 0; begin < entries.size();) {
    std::size_t end = begin + 1;
    while (end < entries.size() && entries[end].key == entries[begin].key) ++end;
    if (end - begin > 1) {
      const PauliWord rep = entries[begin].word(n);
      for (std::size_t i = begin + 1; i < end; ++i) {
        PauliWord other = entries[i].word(n);
        if (!stabilizer.contains((rep + other).stacked())) {
          report.status = CollisionReport::Status::kRefuted;
          report.counterexample = std::make_pair(rep, std::move(other));
          return report;
        }
        // Prefer a pair of two nontrivial errors over identity vs stabilizer.
        if (!report.degenerate_pair || (report.degenerate_pair->first.is_identity() && !rep.is_identity())) {
          report.degenerate_pair = std::make_pair(rep, std::move(other));
        }
      }
    }
    begin = end;
  }
  return report;
}

std::size_t min_stabilizer_weight(const StabilizerCode& code) {
  const std::size_t s = code.s();
  if (s > 30) throw std::invalid_argument("stabilizer enumeration supports at most 30 generators");
  const auto& gens = code.generators();
  PauliWord acc(code.n());
  std::size_t best = std::numeric_limits<std::size_t>::max();
  // Gray code: step i flips generator ctz(i).
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << s); ++i) {
    acc += gens[static_cast<std::size_t>(std::countr_zero(i))];
    best = std::min(best, acc.weight());
  }
  return best;
}

std::size_t exact_distance(const StabilizerCode& code) {
  if (code.k() == 0) return min_stabilizer_weight(code);
  const auto report = min_distance(code, code.n());
  if (report.status != DistanceReport::Status::kExact) throw std::logic_error("exhaustive distance search found no logical");
  return report.distance;
}

bool is_nondegenerate(const StabilizerCode& code) {
  if (code.k() == 0) return true;
  return min_stabilizer_weight(code) >= exact_distance(code);
}

}  // namespace qecc
