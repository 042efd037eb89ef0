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
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qecc/bitvec.hpp"
#include "qecc/rational.hpp"
#include "qecc/symplectic.hpp"

namespace qecc {

/// Raw generator rows on n qubits: no commutation or independence implied.
/// Zero rows are allowed (the identity fragment used as a trivial block).
struct CodeFragment {
  std::size_t n = 0;
  std::vector<PauliWord> rows;

  CodeFragment() = default;
  CodeFragment(std::size_t qubits, std::vector<PauliWord> generator_rows);
  /// Rows in either text style accepted by parse_pauli_word.
  static CodeFragment parse(std::initializer_list<std::string_view> rows);
  static CodeFragment parse(const std::vector<std::string>& rows);

  std::size_t s() const { return rows.size(); }

  friend bool operator==(const CodeFragment&, const CodeFragment&) = default;
};

struct ValidationError {
  enum class Kind { kNonCommuting, kDependentRows, kEmpty };
  Kind kind;
  /// 1-based indices of the first anticommuting pair (kNonCommuting).
  std::size_t first = 0;
  std::size_t second = 0;
  /// Rank found versus row count (kDependentRows).
  std::size_t rank = 0;
  std::size_t rows = 0;

  std::string message() const;
};

/// A commuting, independent generator set with n - s >= 0 encoded qubits.
class StabilizerCode {
 public:
  /// Throws std::invalid_argument carrying ValidationError::message().
  static StabilizerCode from_fragment(CodeFragment fragment);
  static StabilizerCode parse(std::initializer_list<std::string_view> rows);

  std::size_t n() const { return fragment_.n; }
  std::size_t s() const { return fragment_.rows.size(); }
  std::size_t k() const { return n() - s(); }
  const std::vector<PauliWord>& generators() const { return fragment_.rows; }
  const CodeFragment& fragment() const { return fragment_; }

  friend bool operator==(const StabilizerCode&, const StabilizerCode&) = default;

 private:
  friend std::variant<StabilizerCode, ValidationError> validate(const CodeFragment& fragment);
  explicit StabilizerCode(CodeFragment f) : fragment_(std::move(f)) {}
  CodeFragment fragment_;
};

std::variant<StabilizerCode, ValidationError> validate(const CodeFragment& fragment);

/// Bit r is the symplectic product with generator r. Printed with generator 1
/// leftmost, so the string form reads as an MSB-first binary number.
using Syndrome = BitVec;

Syndrome syndrome(const CodeFragment& rows, const PauliWord& error);
Syndrome syndrome(const StabilizerCode& code, const PauliWord& error);

/// Numeric value with generator 1 as the most significant bit (s <= 64).
std::uint64_t syndrome_value(const Syndrome& s);
Syndrome syndrome_from_value(std::uint64_t value, std::size_t bits);

struct ErrorLabel {
  Pauli pauli;
  std::size_t qubit;  // 0-based
  /// "X1", "Z3", ... with 1-based qubit numbers.
  std::string to_string() const;
  friend bool operator==(const ErrorLabel&, const ErrorLabel&) = default;
};

struct SyndromeEntry {
  ErrorLabel label;
  Syndrome syndrome;
};

/// 3n entries: all σx errors, then all σz, then all σy, each by ascending qubit.
std::vector<SyndromeEntry> single_error_syndrome_table(const CodeFragment& rows);
std::vector<SyndromeEntry> single_error_syndrome_table(const StabilizerCode& code);

/// All 3n single-qubit syndromes pairwise distinct and nonzero.
bool check_distance3(const CodeFragment& rows);
bool check_distance3(const StabilizerCode& code);

/// Syndrome values no single-qubit error attains, ascending. Refuses s > 24.
std::vector<Syndrome> unused_syndromes(const CodeFragment& rows);
std::vector<Syndrome> unused_syndromes(const StabilizerCode& code);

/// Fraction of the 2^s syndromes used by all errors of weight 1..t.
Rational using_rate(std::size_t n, std::size_t s, std::size_t t);

struct DistanceReport {
  enum class Status { kExact, kAtLeast, kNotApplicableK0 };
  Status status = Status::kNotApplicableK0;
  /// The exact distance, or the certified lower bound.
  std::size_t distance = 0;
  std::optional<PauliWord> witness;
  std::size_t searched_weight = 0;

  static DistanceReport exact(std::size_t d, PauliWord w, std::size_t searched) {
    return {Status::kExact, d, std::move(w), searched};
  }
  static DistanceReport at_least(std::size_t d, std::size_t searched) {
    return {Status::kAtLeast, d, std::nullopt, searched};
  }
  static DistanceReport not_applicable() { return {}; }

  std::string to_string() const;
};

struct Classification {
  /// floor((d - 1) / 2); zero means no using rate is defined.
  std::size_t t = 0;
  std::optional<Rational> g;
  bool perfect = false;
  /// 1/2 < g <= 1. A heuristic flag, not a proof of optimality.
  bool g_optimal = false;
};

Classification classify(const StabilizerCode& code, const DistanceReport& distance);

/// k pairs (X̄_i, Z̄_i) completing the stabilizer to a symplectic basis.
struct LogicalSet {
  std::vector<std::pair<PauliWord, PauliWord>> pairs;
  std::size_t k() const { return pairs.size(); }
};

/// Deterministic symplectic Gram-Schmidt over the normalizer. Throws for k = 0.
LogicalSet logical_operators(const StabilizerCode& code);

/// True when `logicals` satisfies every LogicalSet invariant for `code`.
bool is_valid_logical_set(const StabilizerCode& code, const LogicalSet& logicals);

/// Pauli words that commute with every generator of `code`.
std::vector<PauliWord> normalizer_basis(const CodeFragment& rows);

}  // namespace qecc
