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

#include "qecc/stabilizer.hpp"

namespace qecc {

/// Widest syndrome the enumeration engines accept.
inline constexpr std::size_t kMaxEnumerationGenerators = 256;
/// Largest t accepted by the collision certificate.
inline constexpr std::size_t kMaxCollisionWeight = 8;

/// Exhaustive search for the lightest element of N(S) - S.
///
/// Words are visited by weight ascending, then by qubit subset
/// lexicographically, then by letter assignment with X < Z < Y, so the witness
/// is the first qualifying word in that order. The search is split over the
/// leading qubit of each subset; results do not depend on `threads`.
DistanceReport min_distance(const StabilizerCode& code, std::size_t max_weight, std::size_t threads = 0);

struct CollisionReport {
  enum class Status { kCertified, kRefuted, kNotApplicableK0 };
  Status status = Status::kNotApplicableK0;
  std::size_t t = 0;
  /// Number of Pauli words of weight <= t examined (identity included).
  std::size_t words = 0;
  /// Two words with equal syndromes whose product lies outside S.
  std::optional<std::pair<PauliWord, PauliWord>> counterexample;
  /// Two distinct words with equal syndromes whose product lies in S.
  std::optional<std::pair<PauliWord, PauliWord>> degenerate_pair;

  bool certified() const { return status == Status::kCertified; }
};

/// Certifies d >= 2t + 1: every pair of words of weight <= t sharing a
/// syndrome must differ by a stabilizer element. Words are bucketed by
/// syndrome through a sort of (syndrome, word) records.
CollisionReport distance_at_least_by_collision(const StabilizerCode& code, std::size_t t, std::size_t threads = 0);

/// Lightest nonidentity stabilizer element, by enumerating all 2^s products.
std::size_t min_stabilizer_weight(const StabilizerCode& code);

/// Distance with the k = 0 convention used by pasting: for k >= 1 the exact
/// min_distance, for k = 0 the lightest nonidentity stabilizer element.
std::size_t exact_distance(const StabilizerCode& code);

/// No nonidentity stabilizer element is lighter than the code distance.
bool is_nondegenerate(const StabilizerCode& code);

}  // namespace qecc
