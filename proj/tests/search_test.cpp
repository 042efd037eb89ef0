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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qecc/catalog.hpp"
#include "qecc/nesting.hpp"

using namespace qecc;

namespace {

SearchConstraints five_qubit_constraints() {
  SearchConstraints c;
  c.full_distance3 = true;
  c.left_rows_even_parity = true;
  c.forbid_uniform_elements = true;
  c.require_commuting = true;
  c.require_independent = true;
  return c;
}

bool contains_row_space(const std::vector<CodeFragment>& found, const CodeFragment& target) {
  for (const auto& f : found) {
    if (same_row_space(f, target)) return true;
  }
  return false;
}

// Every assignment of n qubits in pair order, filtered by verify_found.
std::vector<CodeFragment> brute_force(std::size_t n, std::size_t s, const SearchConstraints& c) {
  std::vector<CodeFragment> out;
  const std::size_t per_qubit = std::size_t{1} << (2 * s);
  std::size_t total = 1;
  for (std::size_t q = 0; q < n; ++q) total *= per_qubit;
  for (std::size_t v = 0; v < total; ++v) {
    // Qubit 0 is the most significant digit so v ascends in search order.
    std::vector<std::uint64_t> digits(n);
    std::size_t rest = v;
    for (std::size_t q = n; q-- > 0;) {
      digits[q] = rest % per_qubit;
      rest /= per_qubit;
    }
    std::vector<BitVec> sx, sz;
    for (std::size_t q = 0; q < n; ++q) {
      sx.push_back(syndrome_from_value(digits[q] >> s, s));
      sz.push_back(syndrome_from_value(digits[q] & ((1u << s) - 1), s));
    }
    const auto f = materialize(SyndromeAssignment(s, sx, sz));
    if (verify_found(f, c).passed()) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST(Search, RejectsBadRequests) {
  SearchConstraints none;
  SearchStrategy st;
  EXPECT_THROW(search_codes(2, 2, none, st), std::invalid_argument);
  SearchConstraints c;
  c.distinct_xyz_syndromes = true;
  EXPECT_THROW(search_codes(9, 2, c, st), std::invalid_argument);
  EXPECT_THROW(search_codes(2, 9, c, st), std::invalid_argument);
  EXPECT_THROW(search_codes(2, 0, c, st), std::invalid_argument);
}

TEST(Search, SubcodeFragmentFoundWithinFirstHundred) {
  SearchConstraints c;
  c.distinct_xyz_syndromes = true;
  c.require_commuting = true;
  SearchStrategy st;
  st.emit_limit = 100;
  const auto r = search_codes(2, 2, c, st);
  EXPECT_TRUE(contains_row_space(r.fragments, catalog_fragment("sub22")));
}

TEST(Search, FiveQubitCodesUnderStrongConstraints) {
  SearchStrategy st;
  st.emit_limit = 200;
  const auto r = search_codes(5, 4, five_qubit_constraints(), st);
  ASSERT_EQ(r.fragments.size(), 200u);
  EXPECT_TRUE(contains_row_space(r.fragments, catalog_fragment("code513a")));
  EXPECT_TRUE(contains_row_space(r.fragments, catalog_fragment("code513b")));
  for (const auto& f : r.fragments) {
    EXPECT_TRUE(verify_found(f, five_qubit_constraints()).passed());
    EXPECT_TRUE(check_distance3(f));
  }
}

TEST(Search, DistinctXyzFragmentsOnFiveQubits) {
  SearchConstraints c;
  c.distinct_xyz_syndromes = true;
  SearchStrategy st;
  st.emit_limit = 50;
  const auto r = search_codes(5, 3, c, st);
  ASSERT_EQ(r.fragments.size(), 50u);
  for (const auto& f : r.fragments) EXPECT_TRUE(distinct_xyz(syndromes_of(f)));
  EXPECT_TRUE(verify_found(catalog_fragment("sub53"), c).passed());
}

TEST(Search, ExhaustiveMatchesBruteForceAtSmallSizes) {
  std::vector<SearchConstraints> sets(5);
  sets[0].distinct_xyz_syndromes = true;
  sets[1].distinct_xyz_syndromes = sets[1].require_commuting = true;
  sets[2].left_rows_even_parity = sets[2].require_independent = true;
  sets[3].right_rows_even_parity = sets[3].forbid_uniform_elements = sets[3].require_commuting = true;
  sets[4].full_distance3 = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t s = 1; s <= 2; ++s) {
      for (const auto& c : sets) {
        SearchStrategy st;
        st.emit_limit = 1'000'000;
        const auto r = search_codes(n, s, c, st);
        EXPECT_TRUE(r.exhausted);
        EXPECT_EQ(r.fragments, brute_force(n, s, c)) << n << " " << s << " " << c.to_string();
      }
    }
  }
}

TEST(Search, ThreadCountDoesNotChangeStream) {
  SearchStrategy one;
  one.emit_limit = 300;
  one.threads = 1;
  SearchStrategy four = one;
  four.threads = 4;
  EXPECT_EQ(search_codes(5, 4, five_qubit_constraints(), one).fragments,
            search_codes(5, 4, five_qubit_constraints(), four).fragments);
}

TEST(Search, RandomizedIsReproducible) {
  SearchStrategy st;
  st.mode = SearchStrategy::Mode::kRandomized;
  st.seed = 99;
  st.emit_limit = 5;
  const auto a = search_codes(5, 4, five_qubit_constraints(), st);
  const auto b = search_codes(5, 4, five_qubit_constraints(), st);
  ASSERT_EQ(a.fragments.size(), 5u);
  EXPECT_EQ(a.fragments, b.fragments);
  for (const auto& f : a.fragments) EXPECT_TRUE(verify_found(f, five_qubit_constraints()).passed());
  st.seed = 100;
  EXPECT_NE(search_codes(5, 4, five_qubit_constraints(), st).fragments, a.fragments);
}

TEST(Search, RandomizedBudgetStopsSearch) {
  SearchStrategy st;
  st.mode = SearchStrategy::Mode::kRandomized;
  st.seed = 1;
  st.max_candidates = 3;
  st.emit_limit = 10;
  const auto r = search_codes(5, 4, five_qubit_constraints(), st);
  EXPECT_TRUE(r.fragments.empty());
  EXPECT_TRUE(r.budget_hit);
  EXPECT_FALSE(r.exhausted);
}

TEST(Search, RandomizedRestartsFindEightQubitCodes) {
  SearchConstraints c;
  c.full_distance3 = c.require_commuting = c.require_independent = true;
  SearchStrategy st;
  st.mode = SearchStrategy::Mode::kRandomized;
  st.seed = 7;
  st.max_candidates = 2'000'000;
  st.emit_limit = 2;
  const auto r = search_codes(8, 5, c, st);
  ASSERT_EQ(r.fragments.size(), 2u);
  EXPECT_NE(r.fragments[0], r.fragments[1]);
  for (const auto& f : r.fragments) EXPECT_TRUE(verify_found(f, c).passed());
}

TEST(Search, RandomizedCoversSmallSpaces) {
  // Four qubits need 12 distinct nonzero syndromes; 3 bits give 7.
  SearchConstraints c;
  c.full_distance3 = true;
  SearchStrategy st;
  st.mode = SearchStrategy::Mode::kRandomized;
  st.seed = 3;
  const auto r = search_codes(4, 3, c, st);
  EXPECT_TRUE(r.fragments.empty());
  EXPECT_TRUE(r.exhausted);
  EXPECT_FALSE(r.budget_hit);
}

TEST(Search, CrossPartnerConstraint) {
  SearchConstraints c;
  c.distinct_xyz_syndromes = true;
  c.cross_partner = catalog_fragment("code513a");
  SearchStrategy st;
  st.emit_limit = 40;
  const auto r = search_codes(2, 2, c, st);
  ASSERT_FALSE(r.fragments.empty());
  for (const auto& f : r.fragments) EXPECT_TRUE(cross_commutation_ok(catalog_fragment("code513a"), f));
}

TEST(VerifyFound, CatalogSubcodes) {
  SearchConstraints c;
  c.distinct_xyz_syndromes = true;
  EXPECT_TRUE(verify_found(catalog_fragment("sub22"), c).passed());
  EXPECT_TRUE(verify_found(catalog_fragment("sub32"), c).passed());
}

TEST(VerifyFound, NamesCollidingQubits) {
  SearchConstraints c;
  c.distinct_xyz_syndromes = true;
  // Qubits 1 and 3 carry the same letters in every row.
  const auto report = verify_found(CodeFragment::parse({"XZX", "ZIZ"}), c);
  ASSERT_EQ(report.checks.size(), 1u);
  EXPECT_FALSE(report.passed());
  EXPECT_NE(report.checks[0].detail.find("qubits 1 and 3"), std::string::npos) << report.checks[0].detail;
}

TEST(VerifyFound, EachCheckReportsFailure) {
  SearchConstraints c;
  c.left_rows_even_parity = c.right_rows_even_parity = c.full_distance3 = c.require_commuting = true;
  c.require_independent = c.forbid_uniform_elements = true;
  const auto report = verify_found(CodeFragment::parse({"XI", "ZI", "XI"}), c);
  ASSERT_EQ(report.checks.size(), 6u);
  for (const auto& check : report.checks) {
    EXPECT_EQ(check.passed, check.detail.empty()) << check.name;
    // Only the uniform-word check holds: XX, ZZ and YY are outside the span.
    EXPECT_EQ(check.passed, check.name == "forbid-uniform") << check.name << ": " << check.detail;
  }
}
