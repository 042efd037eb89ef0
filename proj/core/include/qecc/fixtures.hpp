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

// Checking catalog fixtures.
//
// A fixture whose printed rows fail a check is tolerated only when its asset
// carries an `# erratum:` header; the report then names the violated check,
// a counterexample and, where a recipe reproduces the fixture, the first cell
// where the printed rows and the recipe disagree.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qecc/catalog.hpp"
#include "qecc/constructions.hpp"
#include "qecc/rational.hpp"

namespace qecc {

struct FixtureReport {
  enum class Status { kValid, kErratum, kFailed };

  std::string id;
  FileKind kind = FileKind::kCode;
  Claim claimed;
  Status status = Status::kValid;

  std::size_t n = 0;
  std::size_t s = 0;  // generator rows, or syndrome bits for kind syndromes
  /// Codes only, when every check passed: t = 1 using rate 3n / 2^s.
  std::optional<Rational> g;

  /// First violated check ("claimed n", "claimed generator count",
  /// "commuting", "independent", "distance-3 syndromes") and what broke it.
  std::string failed_check;
  std::string counterexample;
  std::string erratum;  // the asset's erratum header, if any

  /// Recipe that reproduces the fixture, with the comparison result.
  std::optional<RecipeId> recipe;
  std::optional<FixtureComparison> comparison;

  /// Fragment and syndrome-list properties, e.g. "distinct-xyz".
  std::vector<std::string> notes;

  /// One report line, stable across runs.
  std::string line() const;
};

std::string_view status_name(FixtureReport::Status status);

FixtureReport verify_fixture(const CatalogEntry& entry);

/// Every catalog entry in catalog order; entries are checked on up to
/// `threads` workers (0 = worker_count()).
std::vector<FixtureReport> verify_catalog(std::size_t threads = 0);

}  // namespace qecc
