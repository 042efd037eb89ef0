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

// Backtracking search over syndrome assignments.
//
// The search state is the list of per-qubit (σx, σz) syndromes, chosen left
// to right. A qubit's choice is the pair index sx * 2^s + sz with syndromes
// read as numbers (generator 1 is the most significant bit), so exhaustive
// mode emits fragments in lexicographic order of that index sequence.
// Distinctness and parity constraints prune while descending; commutation,
// rank, the forbidden uniform words and cross checks are tested at the leaves.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qecc/stabilizer.hpp"

namespace qecc {

inline constexpr std::size_t kMaxExhaustiveQubits = 8;
inline constexpr std::size_t kMaxExhaustiveBits = 8;
/// Identifier written to search output headers for randomized runs.
inline constexpr const char* kSearchRngName = "mt19937_64";

struct SearchConstraints {
  bool left_rows_even_parity = false;   // every row has an even number of X/Y
  bool right_rows_even_parity = false;  // every row has an even number of Z/Y
  bool distinct_xyz_syndromes = false;  // σx, σz, σy lists each duplicate-free
  bool full_distance3 = false;          // all 3n single-qubit syndromes distinct and nonzero
  bool forbid_uniform_elements = false;  // X^n, Z^n, Y^n not in the row space
  bool require_commuting = false;
  bool require_independent = false;
  /// When set, each candidate must satisfy cross_commutation_ok(partner, candidate).
  std::optional<CodeFragment> cross_partner;

  bool any() const;
  /// Comma-separated flag names, e.g. "distinct-xyz,commuting".
  std::string to_string() const;
};

struct SearchStrategy {
  enum class Mode { kExhaustive, kRandomized };
  Mode mode = Mode::kExhaustive;
  std::uint64_t seed = 0;
  /// Randomized mode: search nodes visited, over all restarts, before giving up.
  std::size_t max_candidates = 1'000'000;
  std::size_t emit_limit = 100;
  /// 0 means worker_count(). Exhaustive mode only; output does not depend on it.
  std::size_t threads = 0;
};

struct SearchResult {
  std::vector<CodeFragment> fragments;
  /// Fragments whose row space equals an earlier emission's.
  std::size_t row_space_duplicates = 0;
  /// True when the whole space was explored before emit_limit was reached.
  bool exhausted = false;
  /// Randomized mode: max_candidates ran out first.
  bool budget_hit = false;
};

/// Throws std::invalid_argument for empty constraints, n = 0, s = 0, or, in
/// exhaustive mode, n or s above 8.
SearchResult search_codes(std::size_t n, std::size_t s, const SearchConstraints& constraints,
                          const SearchStrategy& strategy);

struct ConstraintCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // empty when passed
};

struct VerifyReport {
  std::vector<ConstraintCheck> checks;
  bool passed() const;
};

/// Re-checks each requested constraint from scratch on the materialized rows,
/// sharing no code with the search pruning.
VerifyReport verify_found(const CodeFragment& fragment, const SearchConstraints& constraints);

}  // namespace qecc
