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
#include <string>
#include <string_view>
#include <vector>

#include "qecc/nesting.hpp"
#include "qecc/stabilizer.hpp"

namespace qecc {

/// The one-qubit rows X and Z. Not a code (they anticommute), but it serves as
/// a blockcode whose syndromes 01, 10, 11 leave 00 free, and as the smallest
/// "perfect code" of the perfect-code recursion.
CodeFragment seed_fragment();
bool is_seed(const CodeFragment& fragment);

/// Two copies of a [5,1] code's syndromes on 10 qubits. Copy one carries
/// (S'x, S'z), copy two (S'y, S'x), so the σx, σz and σy lists are each
/// unions of two different syndrome classes.
CodeFragment two_copy_over_optimal(const StabilizerCode& code5);

/// Three rotated copies of a distance-3 [5,1] code on 15 qubits: copy one
/// (S'x, S'z), copy two (S'y, S'x), copy three (S'z, S'y).
CodeFragment raw_perfect_constructing(const StabilizerCode& code5);

/// A {2^bits - 1, bits} raw perfect-constructing fragment for any 2 <= bits <= 8:
/// qubit q (1-based) gets sz = q and sx = α·q in GF(2^bits), α the class of x
/// modulo a fixed primitive polynomial. The rows commute for bits >= 3.
CodeFragment raw_perfect_constructing_linear(std::size_t bits);

/// Empty when `fragment` is raw perfect-constructing (its σx, σz and σy
/// syndromes each run over all nonzero values), otherwise the reason.
std::optional<std::string> raw_perfect_constructing_defect(const CodeFragment& fragment);

/// seed ⊗ (raw_pc plus one zero-syndrome qubit): a [2^k, 2^k - k - 2, 3] code.
StabilizerCode gottesman_2k(const CodeFragment& raw_pc);
/// k = 4 uses the {15,4} fragment built from catalog code513c; other k in
/// [3, 8] use raw_perfect_constructing_linear(k).
StabilizerCode gottesman_2k(std::size_t k);

/// extend(nest(block, raw_pc + zero qubit), nest(zero block syndrome, sub)).
/// `perfect_block` and `perfect_sub` may be the seed.
StabilizerCode perfect_recursion(const CodeFragment& perfect_block, const CodeFragment& raw_pc,
                                 const CodeFragment& perfect_sub);
/// Perfect code on (2^bits - 1) / 3 qubits for even bits >= 2 (bits = 2 is the
/// seed), built by repeated recursion with a 2-bit raw fragment and the seed.
CodeFragment perfect_code(std::size_t bits);

/// Distance-3 pasting [n2,s2] ▷ [n1,s1]. `s2_code` must start with X(n2) and
/// Z(n2). Generators: X(n2)⊗I, Z(n2)⊗I, then S_r ⊗ T_(r-2) for r >= 3 with the
/// shorter list padded by identities, s = max(s2, s1 + 2). `s1_rows` need not
/// be a code on its own and may have zero qubits.
StabilizerCode paste_distance3(const StabilizerCode& s2_code, const CodeFragment& s1_rows);

/// Four stabilizers R1 ⊂ S1, R2 ⊂ S2 given as S_i plus the length r_i of the
/// generator prefix that generates R_i.
struct PastingSpec {
  StabilizerCode s1;
  std::size_t r1 = 0;
  StabilizerCode s2;
  std::size_t r2 = 0;
};

struct PastingParams {
  std::size_t n1 = 0, l1 = 0, k1 = 0, c1 = 0, d1 = 0;
  std::size_t n2 = 0, l2 = 0, k2 = 0, c2 = 0, d2 = 0;

  std::size_t claimed_distance() const;
  std::size_t generator_count() const { return (n1 - l1) + (n2 - l2) + (l1 - k1); }
  std::size_t encoded_qubits() const { return l1 + k2; }
};

/// Computes every parameter by exhaustive search and checks the hypotheses
/// k_i < l_i, c_i <= d_i, l1 - k1 = l2 - k2 and nondegeneracy of S1, S2.
/// Throws std::invalid_argument naming the violated relation. S_i with
/// k_i = 0 uses the lightest stabilizer element as d_i.
PastingParams check_pasting_spec(const PastingSpec& spec);

struct PastingResult {
  StabilizerCode code;
  PastingParams params;
};

/// Generators M_1..M_(n1-l1) ⊗ I, I ⊗ N_1..N_(n2-l2), then the remaining
/// M_j ⊗ N_j pairwise.
PastingResult paste_general(const PastingSpec& spec);

struct Subcode {
  StabilizerCode code;
  LogicalSet logicals;
};

struct AllDistanceResult {
  StabilizerCode code;
  /// Logical-qubit counts of the subcodes, the blocks of the redefined weight.
  QubitPartition partition;
  /// Lightest block weight over the block's N(S) - S; absent when the block
  /// encodes nothing.
  std::optional<std::size_t> block_distance;
  std::vector<std::size_t> sub_distances;
  /// Sum of the block_distance smallest subcode distances.
  std::optional<std::size_t> claimed_distance;
};

/// Block rows over the subcodes' logical qubits, each letter replaced by the
/// matching logical operator (Y by X̄ + Z̄); the block rows come first, then the
/// block-diagonal subcode generators. Throws when the substituted rows do not
/// commute or are dependent.
AllDistanceResult nest_all_distance(const CodeFragment& block, const std::vector<Subcode>& subcodes);
AllDistanceResult nest_all_distance(const CodeFragment& block, const std::vector<StabilizerCode>& subcodes);

/// Named recipes. Parameterised families carry their arguments.
enum class Recipe {
  kCode10,
  kCode102,
  kCode15,
  kCode20,
  kCode2517,
  kCode2518,
  kCode30,
  kCode35,
  kCode16,
  kCode37,
  kPower5,
  kPower6x5,
  kGottesman2k,
  kPerfectRecursion,
  kConcat25,
};

struct RecipeId {
  Recipe recipe = Recipe::kCode10;
  std::size_t n = 0;   // power5, power6x5
  std::size_t k = 0;   // gottesman2k, perfect_recursion (block bits)
  std::size_t k2 = 0;  // perfect_recursion (sub bits)

  /// "code10", "power5(2)", "gottesman2k(4)", "perfect_recursion(2,4)", ...
  static RecipeId parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const RecipeId&, const RecipeId&) = default;
};

struct RecipeInfo {
  Recipe recipe;
  std::string name;    // stable identifier used by the CLI
  std::string params;  // "", "n", "k", "k k2"
  std::string summary;
  /// Claimed distance of the construction.
  std::size_t claimed_distance = 3;
};

/// Catalog fixture a recipe reproduces, with the recipe-to-fixture qubit
/// order (output qubit q is fixture qubit permutation[q]; empty means the
/// identity) and whether the rows are expected to match one for one.
struct FixtureLink {
  std::string fixture;
  std::vector<std::size_t> permutation;
  bool verbatim = false;
};

const std::vector<RecipeInfo>& recipe_infos();
const RecipeInfo& recipe_info(Recipe recipe);
/// Every concrete recipe whose fixture link or parameters are fixed:
/// the ten named codes, power5(2), power5(3), power6x5(1), power6x5(2),
/// gottesman2k(3..6), perfect_recursion(2,2), (2,4), (4,2), concat_25_1_9.
std::vector<RecipeId> standard_recipes();

std::optional<FixtureLink> fixture_link(const RecipeId& id);

StabilizerCode construct_named(const RecipeId& id);

struct FixtureDifference {
  std::size_t row = 0;    // 0-based
  std::size_t qubit = 0;  // 0-based, in fixture order
  char fixture_letter = 'I';
  char built_letter = 'I';
};

struct FixtureComparison {
  bool same_shape = false;
  bool verbatim = false;
  bool row_space_equal = false;
  std::optional<FixtureDifference> first_difference;
};

/// Compares `built` (after applying `permutation`) with `fixture`.
FixtureComparison compare_with_fixture(const CodeFragment& built, const CodeFragment& fixture,
                                       const std::vector<std::size_t>& permutation = {});

}  // namespace qecc
