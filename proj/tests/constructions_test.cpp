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

#include "qecc/constructions.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "pasting_gen.hpp"
#include "qecc/catalog.hpp"
#include "qecc/distance.hpp"
#include "qecc/nesting.hpp"

using namespace qecc;

namespace {

oracle::Rows letters(const CodeFragment& f) {
  oracle::Rows out;
  for (const auto& r : f.rows) out.push_back(format_pauli_word(r));
  return out;
}

oracle::Word single(std::size_t n, std::size_t q, char p) {
  oracle::Word w(n, 'I');
  w[q] = p;
  return w;
}

// Each of the σx, σz and σy syndrome lists runs over all nonzero values.
bool covers_all_nonzero(const CodeFragment& f) {
  const auto rows = letters(f);
  for (char p : {'X', 'Z', 'Y'}) {
    std::set<std::string> seen;
    for (std::size_t q = 0; q < f.n; ++q) {
      const auto s = oracle::syndrome(rows, single(f.n, q, p));
      if (s.find('1') == std::string::npos || !seen.insert(s).second) return false;
    }
  }
  return true;
}

std::size_t exact3(const StabilizerCode& code) {
  const auto d = min_distance(code, 3);
  return d.status == DistanceReport::Status::kExact ? d.distance : 0;
}

}  // namespace

TEST(Seed, IsXAndZ) {
  EXPECT_EQ(letters(seed_fragment()), (oracle::Rows{"X", "Z"}));
  EXPECT_TRUE(is_seed(seed_fragment()));
  EXPECT_FALSE(is_seed(CodeFragment::parse({"Z", "X"})));
}

TEST(TwoCopy, OverOptimalFragmentOfCode513a) {
  const auto f = two_copy_over_optimal(catalog_code("code513a"));
  EXPECT_EQ(f.n, 10u);
  EXPECT_EQ(f.s(), 4u);
  EXPECT_TRUE(distinct_xyz(syndromes_of(f)));
  EXPECT_THROW(two_copy_over_optimal(catalog_code("code10")), std::invalid_argument);
}

TEST(RawPerfectConstructing, FromFiveQubitCodes) {
  for (const char* id : {"code513a", "code513b", "code513c"}) {
    const auto f = raw_perfect_constructing(catalog_code(id));
    EXPECT_EQ(f.n, 15u) << id;
    EXPECT_TRUE(covers_all_nonzero(f)) << id;
    EXPECT_FALSE(raw_perfect_constructing_defect(f).has_value()) << id;
  }
}

TEST(RawPerfectConstructing, LinearFamily) {
  for (std::size_t bits = 2; bits <= 8; ++bits) {
    const auto f = raw_perfect_constructing_linear(bits);
    EXPECT_EQ(f.n, (std::size_t{1} << bits) - 1);
    EXPECT_TRUE(covers_all_nonzero(f)) << bits;
    if (bits >= 3) {
      const auto rows = letters(f);
      for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t b = a + 1; b < rows.size(); ++b) EXPECT_FALSE(oracle::anticommute(rows[a], rows[b]));
      }
    }
  }
  EXPECT_THROW(raw_perfect_constructing_linear(1), std::invalid_argument);
  EXPECT_THROW(raw_perfect_constructing_linear(9), std::invalid_argument);
}

TEST(RawPerfectConstructing, DefectNamesTheProblem) {
  EXPECT_TRUE(raw_perfect_constructing_defect(CodeFragment::parse({"XZ", "ZX"})).has_value());
  auto f = raw_perfect_constructing_linear(3);
  f.rows[0].x.flip(0);
  const auto defect = raw_perfect_constructing_defect(f);
  ASSERT_TRUE(defect.has_value());
}

TEST(Gottesman2k, ParametersAndDistance) {
  for (std::size_t k = 3; k <= 6; ++k) {
    const auto code = gottesman_2k(k);
    const std::size_t n = std::size_t{1} << k;
    EXPECT_EQ(code.n(), n);
    EXPECT_EQ(code.k(), n - k - 2);
    EXPECT_EQ(exact3(code), 3u) << k;
    EXPECT_EQ(using_rate(code.n(), code.s(), 1), Rational(3, 4));
  }
  EXPECT_THROW(gottesman_2k(2), std::invalid_argument);
}

TEST(Gottesman2k, RawPartOfCatalogEightQubitCode) {
  // code833a is the seed rows followed by a {7,3} raw fragment, with the
  // zero-syndrome qubit printed first.
  const auto& fixture = catalog_fragment("code833a");
  std::vector<PauliWord> raw_rows;
  for (std::size_t r = 2; r < 5; ++r) {
    PauliWord w(7);
    for (std::size_t q = 0; q < 7; ++q) {
      if (fixture.rows[r].x.get(q + 1)) w.x.set(q);
      if (fixture.rows[r].z.get(q + 1)) w.z.set(q);
    }
    raw_rows.push_back(w);
  }
  const CodeFragment raw(7, raw_rows);
  EXPECT_FALSE(raw_perfect_constructing_defect(raw).has_value());
  const auto built = gottesman_2k(raw);
  const auto cmp = compare_with_fixture(built.fragment(), fixture, {7, 0, 1, 2, 3, 4, 5, 6});
  EXPECT_TRUE(cmp.verbatim);
}

TEST(PerfectRecursion, RatesAndDistance) {
  for (auto [k, k2] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 4}, {4, 2}, {2, 6}, {4, 4}}) {
    const auto code = construct_named(RecipeId{Recipe::kPerfectRecursion, 0, k, k2});
    const std::size_t bits = k + k2;
    EXPECT_EQ(code.n(), ((std::size_t{1} << bits) - 1) / 3);
    EXPECT_EQ(code.s(), bits);
    const auto g = using_rate(code.n(), code.s(), 1);
    EXPECT_EQ(g, Rational(1) - Rational(1, pow2(static_cast<unsigned>(bits))));
    EXPECT_EQ(exact3(code), 3u);
    const auto cls = classify(code, min_distance(code, 3));
    EXPECT_TRUE(cls.perfect);
  }
}

TEST(PerfectRecursion, RejectsNonPerfectIngredients) {
  EXPECT_THROW(perfect_recursion(catalog_fragment("code10"), raw_perfect_constructing_linear(2), seed_fragment()),
               std::invalid_argument);
  EXPECT_THROW(perfect_recursion(seed_fragment(), raw_perfect_constructing_linear(3), seed_fragment()),
               std::invalid_argument);
  EXPECT_THROW(construct_named(RecipeId::parse("perfect_recursion(3,2)")), std::invalid_argument);
}

TEST(PerfectCode, FiveQubit) {
  const auto f = perfect_code(4);
  const auto code = StabilizerCode::from_fragment(f);
  EXPECT_EQ(code.n(), 5u);
  EXPECT_EQ(exact3(code), 3u);
  EXPECT_TRUE(is_seed(perfect_code(2)));
  EXPECT_THROW(perfect_code(3), std::invalid_argument);
}

TEST(PasteDistance3, EightQubitCodeWithFiveQubitRows) {
  const auto code = paste_distance3(catalog_code("code833a"), catalog_fragment("code513a"));
  EXPECT_EQ(code.n(), 13u);
  EXPECT_EQ(code.s(), 6u);
  EXPECT_EQ(exact3(code), 3u);
  const auto rows = letters(code.fragment());
  EXPECT_EQ(rows[0], "XXXXXXXXIIIII");
  EXPECT_EQ(rows[1], "ZZZZZZZZIIIII");
}

TEST(PasteDistance3, ZeroQubitSideIsIdentity) {
  const auto base = catalog_code("code833a");
  EXPECT_EQ(paste_distance3(base, CodeFragment(0, {})), base);
}

TEST(PasteDistance3, RequiresUniformLeadingRows) {
  EXPECT_THROW(paste_distance3(catalog_code("code513a"), catalog_fragment("sub22")), std::invalid_argument);
}

TEST(Pasting, HypothesesAreChecked) {
  const auto five = catalog_code("code513a");
  const auto eight = catalog_code("code833a");
  try {
    check_pasting_spec(PastingSpec{five, 3, eight, 3});
    FAIL() << "expected a violated relation";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("l1 - k1 = l2 - k2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(check_pasting_spec(PastingSpec{five, 9, eight, 3}), std::invalid_argument);
}

TEST(Pasting, DistanceFormulaOnGeneratedSpecs) {
  const auto specs = testgen::pasting_specs(501, 12, 12);
  ASSERT_GE(specs.size(), 12u);
  for (const auto& spec : specs) {
    const auto result = paste_general(spec);
    const auto& p = result.params;
    EXPECT_EQ(result.code.s(), p.generator_count());
    EXPECT_EQ(result.code.k(), p.encoded_qubits());
    EXPECT_EQ(exact_distance(result.code), p.claimed_distance());
  }
}

TEST(NestAllDistance, ConcatenatedFiveQubitCode) {
  const auto r = nest_all_distance(catalog_fragment("code513a"),
                                   std::vector<StabilizerCode>(5, catalog_code("code513a")));
  EXPECT_EQ(r.code.n(), 25u);
  EXPECT_EQ(r.code.s(), 24u);
  ASSERT_TRUE(r.block_distance.has_value());
  EXPECT_EQ(*r.block_distance, 3u);
  EXPECT_EQ(r.sub_distances, (std::vector<std::size_t>(5, 3)));
  EXPECT_EQ(r.claimed_distance, 9u);
}

TEST(NestAllDistance, MatchesOracleLowerBoundOnSmallCases) {
  // Block [4,2,2] over 2-qubit subcodes; the claim must not exceed the truth.
  const auto block = CodeFragment::parse({"XXXX", "ZZZZ"});
  const auto sub = StabilizerCode::parse({"XX"});
  const auto r = nest_all_distance(block, std::vector<StabilizerCode>(4, sub));
  ASSERT_TRUE(r.claimed_distance.has_value());
  const std::size_t truth = oracle::distance(letters(r.code.fragment()), r.code.n());
  EXPECT_GE(truth, *r.claimed_distance);
  EXPECT_EQ(*r.block_distance, 2u);
}

TEST(NestAllDistance, BlockWeightWithMultiQubitSubcodes) {
  // Two [3,?] subcodes each carrying two logical qubits under a 4-qubit block.
  const auto sub = StabilizerCode::parse({"XXX"});
  const auto block = CodeFragment::parse({"XXXX", "ZZZZ"});
  const auto r = nest_all_distance(block, std::vector<StabilizerCode>(2, sub));
  EXPECT_EQ(r.partition.sizes(), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(r.code.n(), 6u);
  ASSERT_TRUE(r.block_distance.has_value());
  EXPECT_EQ(*r.block_distance, 1u);
}

TEST(NestAllDistance, RejectsLengthMismatch) {
  EXPECT_THROW(nest_all_distance(catalog_fragment("code513a"), std::vector<StabilizerCode>(4, catalog_code("code513a"))),
               std::invalid_argument);
}

TEST(Recipes, ParseAndPrint) {
  for (const auto& id : standard_recipes()) EXPECT_EQ(RecipeId::parse(id.to_string()), id);
  EXPECT_EQ(RecipeId::parse("power5(3)").n, 3u);
  EXPECT_EQ(RecipeId::parse("perfect_recursion(2,4)").k2, 4u);
  EXPECT_THROW(RecipeId::parse("nope"), std::invalid_argument);
  EXPECT_THROW(RecipeId::parse("power5"), std::invalid_argument);
  EXPECT_THROW(RecipeId::parse("code10(2)"), std::invalid_argument);
  EXPECT_THROW(RecipeId::parse("power5(x)"), std::invalid_argument);
}

TEST(Recipes, AllStandardRecipesAreDistanceThree) {
  for (const auto& id : standard_recipes()) {
    const auto code = construct_named(id);
    if (id.recipe == Recipe::kConcat25) continue;
    EXPECT_TRUE(check_distance3(code)) << id.to_string();
  }
  EXPECT_THROW(construct_named(RecipeId{Recipe::kPower5, 4}), std::invalid_argument);
  EXPECT_THROW(construct_named(RecipeId{Recipe::kPower6x5, 3}), std::invalid_argument);
}

TEST(Recipes, PowerFamilyParameters) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto c = construct_named(RecipeId{Recipe::kPower5, n});
    std::size_t len = 1;
    for (std::size_t i = 0; i < n; ++i) len *= 5;
    EXPECT_EQ(c.n(), len);
    EXPECT_EQ(c.s(), 4 * n);
  }
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto c = construct_named(RecipeId{Recipe::kPower6x5, n});
    EXPECT_EQ(c.s(), 4 * (n + 1));
  }
}

struct FixtureExpectation {
  const char* recipe;
  bool verbatim;
  // Erratum cell (1-based row and qubit) when the printed fixture differs.
  std::size_t row = 0;
  std::size_t qubit = 0;
  char printed = 'I';
  char built = 'I';
};

TEST(Recipes, FixtureComparisonsAreFrozen) {
  const FixtureExpectation table[] = {
      {"code10", true},
      {"code102", true},
      {"code15", true},
      {"code20", true},
      {"code16", true},
      {"gottesman2k(4)", true},
      {"concat_25_1_9", true},
      {"code2517", false, 8, 3, 'I', 'Z'},
      {"power5(2)", false, 8, 3, 'I', 'Z'},
      {"code30", false, 8, 3, 'I', 'Z'},
      {"code35", false, 8, 3, 'I', 'Z'},
      {"code2518", false, 5, 4, 'Z', 'Y'},
      {"code37", false, 6, 4, 'Z', 'X'},
  };
  for (const auto& e : table) {
    const auto id = RecipeId::parse(e.recipe);
    const auto link = fixture_link(id);
    ASSERT_TRUE(link.has_value()) << e.recipe;
    const auto cmp = compare_with_fixture(construct_named(id).fragment(), catalog_fragment(link->fixture),
                                          link->permutation);
    EXPECT_TRUE(cmp.same_shape) << e.recipe;
    EXPECT_EQ(cmp.verbatim, e.verbatim) << e.recipe;
    if (e.verbatim) continue;
    ASSERT_TRUE(cmp.first_difference.has_value()) << e.recipe;
    EXPECT_EQ(cmp.first_difference->row + 1, e.row) << e.recipe;
    EXPECT_EQ(cmp.first_difference->qubit + 1, e.qubit) << e.recipe;
    EXPECT_EQ(cmp.first_difference->fixture_letter, e.printed) << e.recipe;
    EXPECT_EQ(cmp.first_difference->built_letter, e.built) << e.recipe;
  }
}

TEST(Recipes, ErratumFixturesDifferInOneRow) {
  // The misprinted sub-code letter repeats once per block copy.
  const std::vector<std::pair<const char*, std::size_t>> expected = {
      {"code2517", 5}, {"code2518", 5}, {"code30", 6}, {"code35", 6}, {"code37", 8}};
  for (const auto& [id, cells] : expected) {
    const auto link = fixture_link(RecipeId::parse(id));
    const auto built = letters(construct_named(RecipeId::parse(id)).fragment());
    const auto printed = letters(catalog_fragment(link->fixture));
    std::size_t differences = 0;
    std::set<std::size_t> rows;
    for (std::size_t r = 0; r < built.size(); ++r) {
      for (std::size_t q = 0; q < built[r].size(); ++q) {
        if (built[r][q] != printed[r][q]) {
          ++differences;
          rows.insert(r);
        }
      }
    }
    EXPECT_EQ(differences, cells) << id;
    EXPECT_EQ(rows.size(), 1u) << id;
  }
}
