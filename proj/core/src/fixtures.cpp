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

#include "qecc/fixtures.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "qecc/nesting.hpp"
#include "qecc/parallel.hpp"

namespace qecc {
namespace {

std::string decimal6(const Rational& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", r.to_double());
  return buf;
}

std::optional<std::string> erratum_of(const CatalogEntry& entry) {
  for (const auto& [k, v] : entry.file.extra_headers) {
    if (k == "erratum") return v;
  }
  return std::nullopt;
}

/// First pair of single-qubit errors sharing a syndrome, or one with a zero
/// syndrome.
std::string distance3_counterexample(const CodeFragment& rows) {
  const auto table = single_error_syndrome_table(rows);
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::string key = table[i].syndrome.to_string();
    if (table[i].syndrome.none()) return table[i].label.to_string() + " has syndrome " + key;
    auto [it, inserted] = seen.emplace(key, i);
    if (!inserted) {
      return table[it->second].label.to_string() + " and " + table[i].label.to_string() + " share syndrome " + key;
    }
  }
  return {};
}

std::optional<RecipeId> recipe_for(const std::string& id) {
  for (const auto& r : standard_recipes()) {
    auto link = fixture_link(r);
    if (link && link->fixture == id) return r;
  }
  return std::nullopt;
}

}  // namespace

std::string_view status_name(FixtureReport::Status status) {
  switch (status) {
    case FixtureReport::Status::kValid:
      return "valid";
    case FixtureReport::Status::kErratum:
      return "erratum";
    case FixtureReport::Status::kFailed:
      return "FAILED";
  }
  return "FAILED";
}

FixtureReport verify_fixture(const CatalogEntry& entry) {
  FixtureReport rep;
  rep.id = entry.id;
  rep.kind = entry.file.kind;
  rep.claimed = entry.claimed();
  if (auto e = erratum_of(entry)) rep.erratum = *e;

  auto fail = [&](std::string check, std::string example) {
    if (rep.failed_check.empty()) {
      rep.failed_check = std::move(check);
      rep.counterexample = std::move(example);
    }
  };

  if (entry.file.kind == FileKind::kSyndromes) {
    const auto& syn = entry.file.syndromes;
    rep.n = syn.size();
    rep.s = syn.empty() ? 0 : syn.front().size();
    if (rep.n != rep.claimed.n) fail("claimed n", std::to_string(rep.n) + " columns");
    if (rep.s != rep.claimed.s) fail("claimed generator count", std::to_string(rep.s) + " rows");
    for (const auto& other : catalog()) {
      if (other.file.kind != FileKind::kCode || other.file.fragment.s() != rep.s) continue;
      const auto& rows = other.file.fragment;
      if (!std::holds_alternative<StabilizerCode>(validate(rows))) continue;
      auto unused = unused_syndromes(rows);
      auto listed = syn;
      std::sort(unused.begin(), unused.end());
      std::sort(listed.begin(), listed.end());
      if (unused == listed) rep.notes.push_back("unused syndromes of " + other.id);
    }
  } else {
    const CodeFragment& f = entry.file.fragment;
    rep.n = f.n;
    rep.s = f.s();
    if (rep.n != rep.claimed.n) fail("claimed n", std::to_string(rep.n) + " qubits");
    if (rep.s != rep.claimed.s) fail("claimed generator count", std::to_string(rep.s) + " rows");
    if (entry.file.kind == FileKind::kCode) {
      auto v = validate(f);
      if (auto* err = std::get_if<ValidationError>(&v)) {
        fail(err->kind == ValidationError::Kind::kNonCommuting ? "commuting" : "independent", err->message());
      } else if (rep.claimed.d && *rep.claimed.d >= 3 && !check_distance3(f)) {
        fail("distance-3 syndromes", distance3_counterexample(f));
      }
      if (rep.failed_check.empty()) {
        const auto code = std::get<StabilizerCode>(std::move(v));
        if (check_distance3(code)) rep.g = using_rate(code.n(), code.s(), 1);
      }
    } else {
      const auto a = syndromes_of(f);
      if (distinct_xyz(a)) rep.notes.push_back("distinct-xyz");
      if (!raw_perfect_constructing_defect(f)) rep.notes.push_back("raw-perfect-constructing");
      const auto c = strong_constraints(f);
      if (c.left_even()) rep.notes.push_back("left-even");
      if (c.right_even()) rep.notes.push_back("right-even");
      if (std::holds_alternative<StabilizerCode>(validate(f))) rep.notes.push_back("commuting-independent");
    }
  }

  rep.recipe = recipe_for(rep.id);
  if (rep.recipe) {
    const auto link = *fixture_link(*rep.recipe);
    const StabilizerCode built = construct_named(*rep.recipe);
    rep.comparison = compare_with_fixture(built.fragment(), entry.file.fragment, link.permutation);
  }

  if (rep.failed_check.empty()) {
    rep.status = FixtureReport::Status::kValid;
  } else {
    rep.status = rep.erratum.empty() ? FixtureReport::Status::kFailed : FixtureReport::Status::kErratum;
  }
  return rep;
}

std::vector<FixtureReport> verify_catalog(std::size_t threads) {
  const auto& entries = catalog();
  std::vector<FixtureReport> out(entries.size());
  parallel_for(entries.size(), threads ? threads : worker_count(),
               [&](std::size_t i) { out[i] = verify_fixture(entries[i]); });
  return out;
}

std::string FixtureReport::line() const {
  std::string out = id + " " + std::string(status_name(status)) + " " + std::string(kind_name(kind)) + " " +
                    claimed.to_string();
  if (kind == FileKind::kCode && status == Status::kValid) {
    out += " n=" + std::to_string(n) + " k=" + std::to_string(n - s);
    if (g) out += " g(t=1)=" + g->to_string() + " (" + decimal6(*g) + ")";
  }
  if (!failed_check.empty()) out += " violated=" + failed_check + ": " + counterexample;
  if (!notes.empty()) {
    out += " [";
    for (std::size_t i = 0; i < notes.size(); ++i) out += (i ? "," : "") + notes[i];
    out += "]";
  }
  if (recipe && comparison) {
    out += " recipe=" + recipe->to_string() + ":";
    if (comparison->verbatim) {
      out += "verbatim";
    } else if (comparison->row_space_equal) {
      out += "row-space";
    } else if (comparison->first_difference) {
      const auto& d = *comparison->first_difference;
      out += "differs at row " + std::to_string(d.row + 1) + " qubit " + std::to_string(d.qubit + 1) + " (printed " +
             d.fixture_letter + ", built " + d.built_letter + ")";
    } else {
      out += "shape differs";
    }
  }
  if (status == Status::kErratum) out += " erratum: " + erratum;
  return out;
}

}  // namespace qecc
