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

#include "qecc/search.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>

#include "qecc/nesting.hpp"
#include "qecc/parallel.hpp"

namespace qecc {
namespace {

constexpr std::size_t kMaxSearchBits = 16;
constexpr std::size_t kRestartNodes = 1024;

class Searcher {
 public:
  Searcher(std::size_t n, std::size_t s, const SearchConstraints& c) : n_(n), s_(s), c_(c), sx_(n), sz_(n) {
    mask_ = (1u << s) - 1;
    const std::size_t values = std::size_t{1} << s;
    used_x_.assign(values, false);
    used_z_.assign(values, false);
    used_y_.assign(values, false);
    used_all_.assign(values, false);
  }

  std::size_t n() const { return n_; }
  std::uint32_t values() const { return mask_ + 1; }

  /// Whether qubit `q` may take (sx, sz) given qubits 0..q-1.
  bool admissible(std::size_t q, std::uint32_t sx, std::uint32_t sz) const {
    const std::uint32_t sy = sx ^ sz;
    if (c_.full_distance3) {
      if (sx == 0 || sz == 0 || sy == 0) return false;
      if (used_all_[sx] || used_all_[sz] || used_all_[sy]) return false;
    }
    if (c_.distinct_xyz_syndromes && (used_x_[sx] || used_z_[sz] || used_y_[sy])) return false;
    if (q + 1 == n_) {
      if (c_.left_rows_even_parity && (xor_z_ ^ sz) != 0) return false;
      if (c_.right_rows_even_parity && (xor_x_ ^ sx) != 0) return false;
    }
    return true;
  }

  void push(std::size_t q, std::uint32_t sx, std::uint32_t sz) {
    sx_[q] = sx;
    sz_[q] = sz;
    mark(sx, sz, true);
    xor_x_ ^= sx;
    xor_z_ ^= sz;
  }

  void pop(std::size_t q) {
    mark(sx_[q], sz_[q], false);
    xor_x_ ^= sx_[q];
    xor_z_ ^= sz_[q];
  }

  /// Candidate values for qubit q in ascending pair order, honouring forced
  /// parities at the last qubit.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> choices(std::size_t q) const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    const bool last = q + 1 == n_;
    const bool force_x = last && c_.right_rows_even_parity;
    const bool force_z = last && c_.left_rows_even_parity;
    const std::uint32_t x_lo = force_x ? xor_x_ : 0;
    const std::uint32_t x_hi = force_x ? xor_x_ : mask_;
    const std::uint32_t z_lo = force_z ? xor_z_ : 0;
    const std::uint32_t z_hi = force_z ? xor_z_ : mask_;
    for (std::uint32_t x = x_lo; x <= x_hi; ++x) {
      for (std::uint32_t z = z_lo; z <= z_hi; ++z) {
        if (admissible(q, x, z)) out.emplace_back(x, z);
      }
    }
    return out;
  }

  /// Full assignment in place: checks the leaf constraints and returns the
  /// fragment when all hold.
  std::optional<CodeFragment> leaf() const {
    std::vector<BitVec> sx;
    std::vector<BitVec> sz;
    for (std::size_t q = 0; q < n_; ++q) {
      sx.push_back(syndrome_from_value(sx_[q], s_));
      sz.push_back(syndrome_from_value(sz_[q], s_));
    }
    CodeFragment f = materialize(SyndromeAssignment(s_, std::move(sx), std::move(sz)));
    if (c_.require_commuting) {
      for (std::size_t a = 0; a < s_; ++a) {
        for (std::size_t b = a + 1; b < s_; ++b) {
          if (symplectic_product(f.rows[a], f.rows[b])) return std::nullopt;
        }
      }
    }
    if (c_.require_independent && gf2_rank(f.rows) != s_) return std::nullopt;
    if (c_.forbid_uniform_elements) {
      const auto report = strong_constraints(f);
      if (report.forbidden_elements_present()) return std::nullopt;
    }
    if (c_.cross_partner && !cross_commutation_ok(*c_.cross_partner, f)) return std::nullopt;
    return f;
  }

 private:
  void mark(std::uint32_t sx, std::uint32_t sz, bool v) {
    const std::uint32_t sy = sx ^ sz;
    if (c_.full_distance3) {
      used_all_[sx] = v;
      used_all_[sz] = v;
      used_all_[sy] = v;
    }
    if (c_.distinct_xyz_syndromes) {
      used_x_[sx] = v;
      used_z_[sz] = v;
      used_y_[sy] = v;
    }
  }

  std::size_t n_;
  std::size_t s_;
  const SearchConstraints& c_;
  std::uint32_t mask_ = 0;
  std::vector<std::uint32_t> sx_;
  std::vector<std::uint32_t> sz_;
  std::vector<bool> used_x_, used_z_, used_y_, used_all_;
  std::uint32_t xor_x_ = 0;
  std::uint32_t xor_z_ = 0;
};

/// Depth-first enumeration from qubit `q`. `sink` returns false to stop;
/// `order` may permute each node's choices (randomized mode).
template <typename Sink, typename Order, typename Abort>
bool descend(Searcher& st, std::size_t q, Sink& sink, Order& order, Abort& abort) {
  if (abort()) return false;
  if (q == st.n()) {
    if (auto f = st.leaf()) return sink(std::move(*f));
    return true;
  }
  auto options = st.choices(q);
  order(options);
  for (const auto& [x, z] : options) {
    st.push(q, x, z);
    const bool go_on = descend(st, q + 1, sink, order, abort);
    st.pop(q);
    if (!go_on) return false;
  }
  return true;
}

std::string row_space_key(const CodeFragment& f) {
  std::vector<BitVec> rows;
  for (const auto& r : f.rows) rows.push_back(r.stacked());
  const std::size_t width = 2 * f.n;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  std::string key;
  for (std::size_t r = 0; r < rank; ++r) key += rows[r].to_string() + ";";
  return key;
}

void validate_request(std::size_t n, std::size_t s, const SearchConstraints& c, const SearchStrategy& strategy) {
  if (!c.any()) throw std::invalid_argument("search needs at least one constraint");
  if (n == 0) throw std::invalid_argument("search needs n >= 1");
  if (s == 0) throw std::invalid_argument("search needs s >= 1");
  if (strategy.mode == SearchStrategy::Mode::kExhaustive) {
    if (n > kMaxExhaustiveQubits || s > kMaxExhaustiveBits) {
      throw std::invalid_argument("exhaustive search supports n <= 8 and s <= 8");
    }
  } else if (s > kMaxSearchBits) {
    throw std::invalid_argument("randomized search supports s <= 16");
  }
  if (c.cross_partner && c.cross_partner->n == 0) throw std::invalid_argument("cross partner has no qubits");
}

std::vector<CodeFragment> exhaustive(std::size_t n, std::size_t s, const SearchConstraints& c,
                                     const SearchStrategy& strategy, bool& exhausted) {
  const std::size_t limit = strategy.emit_limit;
  if (limit == 0) {
    exhausted = false;
    return {};
  }
  Searcher root(n, s, c);
  const auto branches = root.choices(0);
  std::vector<std::vector<CodeFragment>> found(branches.size());
  std::vector<bool> done(branches.size(), false);
  std::atomic<std::size_t> cutoff{branches.size()};
  std::mutex mu;

  auto run_branch = [&](std::size_t b) {
    if (b > cutoff.load()) return;
    Searcher st(n, s, c);
    st.push(0, branches[b].first, branches[b].second);
    auto sink = [&](CodeFragment f) {
      found[b].push_back(std::move(f));
      return found[b].size() < limit;
    };
    auto order = [](auto&) {};
    std::size_t ticks = 0;
    auto abort = [&] { return (++ticks & 0xFFF) == 0 && b > cutoff.load(); };
    if (n == 1) {
      if (auto f = st.leaf()) sink(std::move(*f));
    } else {
      descend(st, 1, sink, order, abort);
    }
    std::lock_guard lock(mu);
    done[b] = true;
    std::size_t total = 0;
    for (std::size_t i = 0; i < branches.size() && done[i]; ++i) {
      total += found[i].size();
      if (total >= limit) {
        std::size_t cur = cutoff.load();
        while (i < cur && !cutoff.compare_exchange_weak(cur, i)) {
        }
        break;
      }
    }
  };
  const std::size_t workers = strategy.threads ? strategy.threads : worker_count();
  parallel_for(branches.size(), workers, run_branch);

  std::vector<CodeFragment> out;
  for (auto& part : found) {
    for (auto& f : part) {
      if (out.size() == limit) break;
      out.push_back(std::move(f));
    }
  }
  exhausted = out.size() < limit;
  return out;
}

std::vector<CodeFragment> randomized(std::size_t n, std::size_t s, const SearchConstraints& c,
                                     const SearchStrategy& strategy, bool& exhausted, bool& budget_hit) {
  std::mt19937_64 rng(strategy.seed);
  std::vector<CodeFragment> out;
  exhausted = false;
  budget_hit = false;
  if (strategy.emit_limit == 0) return out;

  // Shuffled depth-first descents, restarted with a doubling node cap so one
  // unlucky prefix cannot eat the whole budget.
  std::set<std::string> seen;
  auto sink = [&](CodeFragment f) {
    std::string key;
    for (const auto& r : f.rows) key += format_pauli_word(r, WordStyle::kBinary);
    if (seen.insert(std::move(key)).second) out.push_back(std::move(f));
    return out.size() < strategy.emit_limit;
  };
  // Fisher-Yates with j = rng() % (i + 1), spelled out so runs replay
  // identically on any standard library.
  auto order = [&](std::vector<std::pair<std::uint32_t, std::uint32_t>>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = rng() % i;
      std::swap(v[i - 1], v[j]);
    }
  };
  std::size_t visited = 0;
  for (std::size_t cap = kRestartNodes;; cap *= 2) {
    std::size_t local = 0;
    bool cut = false;
    auto abort = [&] {
      if (++visited > strategy.max_candidates) budget_hit = true;
      if (++local > cap) cut = true;
      return budget_hit || cut;
    };
    Searcher st(n, s, c);
    const bool finished = descend(st, 0, sink, order, abort);
    if (!finished && !cut) return out;  // budget, or emit_limit reached
    if (finished) {
      exhausted = true;  // this descent covered the whole tree
      return out;
    }
  }
}

}  // namespace

bool SearchConstraints::any() const {
  return left_rows_even_parity || right_rows_even_parity || distinct_xyz_syndromes || full_distance3 ||
         forbid_uniform_elements || require_commuting || require_independent || cross_partner.has_value();
}

std::string SearchConstraints::to_string() const {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(left_rows_even_parity, "left-even");
  add(right_rows_even_parity, "right-even");
  add(distinct_xyz_syndromes, "distinct-xyz");
  add(full_distance3, "distance3");
  add(forbid_uniform_elements, "forbid-uniform");
  add(require_commuting, "commuting");
  add(require_independent, "independent");
  add(cross_partner.has_value(), "cross-partner");
  return out;
}

SearchResult search_codes(std::size_t n, std::size_t s, const SearchConstraints& constraints,
                          const SearchStrategy& strategy) {
  validate_request(n, s, constraints, strategy);
  SearchResult result;
  result.fragments = strategy.mode == SearchStrategy::Mode::kExhaustive
                         ? exhaustive(n, s, constraints, strategy, result.exhausted)
                         : randomized(n, s, constraints, strategy, result.exhausted, result.budget_hit);
  std::set<std::string> seen;
  for (const auto& f : result.fragments) {
    if (!seen.insert(row_space_key(f)).second) ++result.row_space_duplicates;
  }
  return result;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ConstraintCheck& c) { return c.passed; });
}

VerifyReport verify_found(const CodeFragment& fragment, const SearchConstraints& constraints) {
  VerifyReport report;
  const std::size_t n = fragment.n;
  const std::size_t s = fragment.s();
  auto add = [&](const char* name, std::string detail) {
    report.checks.push_back(ConstraintCheck{name, detail.empty(), std::move(detail)});
  };

  // Column syndromes straight from the rows: an X on qubit q flips generator
  // r when row r has Z or Y there.
  auto column = [&](std::size_t q, char letter) {
    std::string bits;
    for (const auto& row : fragment.rows) {
      const bool rx = row.x.get(q);
      const bool rz = row.z.get(q);
      bool flip = false;
      if (letter == 'X') flip = rz;
      if (letter == 'Z') flip = rx;
      if (letter == 'Y') flip = rx != rz;
      bits += flip ? '1' : '0';
    }
    return bits;
  };

  if (constraints.left_rows_even_parity || constraints.right_rows_even_parity) {
    for (int side = 0; side < 2; ++side) {
      const bool wanted = side == 0 ? constraints.left_rows_even_parity : constraints.right_rows_even_parity;
      if (!wanted) continue;
      std::string detail;
      for (std::size_t r = 0; r < s && detail.empty(); ++r) {
        const std::size_t ones = side == 0 ? fragment.rows[r].x.popcount() : fragment.rows[r].z.popcount();
        if (ones % 2) detail = "row " + std::to_string(r + 1) + " has odd parity";
      }
      add(side == 0 ? "left-even" : "right-even", detail);
    }
  }
  if (constraints.distinct_xyz_syndromes) {
    std::string detail;
    for (char letter : {'X', 'Z', 'Y'}) {
      for (std::size_t a = 0; a < n && detail.empty(); ++a) {
        for (std::size_t b = a + 1; b < n && detail.empty(); ++b) {
          if (column(a, letter) == column(b, letter)) {
            detail = std::string("σ") + static_cast<char>(letter - 'A' + 'a') + " syndromes of qubits " +
                     std::to_string(a + 1) + " and " + std::to_string(b + 1) + " coincide";
          }
        }
      }
    }
    add("distinct-xyz", detail);
  }
  if (constraints.full_distance3) {
    std::string detail;
    std::vector<std::pair<std::string, std::string>> all;
    for (std::size_t q = 0; q < n; ++q) {
      for (char letter : {'X', 'Z', 'Y'}) all.emplace_back(column(q, letter), letter + std::to_string(q + 1));
    }
    for (std::size_t i = 0; i < all.size() && detail.empty(); ++i) {
      if (all[i].first.find('1') == std::string::npos) detail = all[i].second + " has zero syndrome";
      for (std::size_t j = i + 1; j < all.size() && detail.empty(); ++j) {
        if (all[i].first == all[j].first) detail = all[i].second + " and " + all[j].second + " share a syndrome";
      }
    }
    add("distance3", detail);
  }
  if (constraints.require_commuting) {
    std::string detail;
    for (std::size_t a = 0; a < s && detail.empty(); ++a) {
      for (std::size_t b = a + 1; b < s && detail.empty(); ++b) {
        if (symplectic_product(fragment.rows[a], fragment.rows[b])) {
          detail = "rows " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " anticommute";
        }
      }
    }
    add("commuting", detail);
  }
  if (constraints.require_independent) {
    const std::size_t rank = gf2_rank(fragment.rows);
    add("independent", rank == s ? std::string() : "rank " + std::to_string(rank) + " < " + std::to_string(s));
  }
  if (constraints.forbid_uniform_elements) {
    std::string detail;
    for (Pauli p : kPaulis) {
      if (n > 0 && s > 0 && in_row_space(PauliWord::uniform(n, p), fragment.rows)) {
        detail = std::string(1, pauli_char(p)) + "^" + std::to_string(n) + " is in the row space";
        break;
      }
    }
    add("forbid-uniform", detail);
  }
  if (constraints.cross_partner) {
    std::string detail;
    const auto& partner = *constraints.cross_partner;
    for (std::size_t a = 0; a < partner.s() && detail.empty(); ++a) {
      for (std::size_t b = 0; b < s && detail.empty(); ++b) {
        const auto& br = partner.rows[a];
        const auto& sr = fragment.rows[b];
        const bool term = ((br.x.popcount() % 2) & (sr.z.popcount() % 2)) ^ ((br.z.popcount() % 2) & (sr.x.popcount() % 2));
        if (term) {
          detail = "partner row " + std::to_string(a + 1) + " and row " + std::to_string(b + 1) +
                   " give an odd cross term";
        }
      }
    }
    add("cross-partner", detail);
  }
  return report;
}

}  // namespace qecc
