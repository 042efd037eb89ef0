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

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "qecc/catalog.hpp"
#include "qecc/distance.hpp"

namespace qecc {
namespace {

SyndromeAssignment with_zero_qubit(const SyndromeAssignment& a) {
  return extend(a, SyndromeAssignment::zero(1, a.s));
}

enum class Cls { kX, kZ, kY };

BitVec pick(const SyndromeAssignment& a, std::size_t q, Cls c) {
  switch (c) {
    case Cls::kX:
      return a.sx[q];
    case Cls::kZ:
      return a.sz[q];
    case Cls::kY:
      return a.sy(q);
  }
  return a.sx[q];
}

/// Concatenated copies of `a`, copy i using syndrome classes (sx_cls, sz_cls).
SyndromeAssignment rotated_copies(const SyndromeAssignment& a, std::initializer_list<std::pair<Cls, Cls>> copies) {
  std::vector<BitVec> sx;
  std::vector<BitVec> sz;
  for (const auto& [cx, cz] : copies) {
    for (std::size_t q = 0; q < a.n; ++q) {
      sx.push_back(pick(a, q, cx));
      sz.push_back(pick(a, q, cz));
    }
  }
  return SyndromeAssignment(a.s, std::move(sx), std::move(sz));
}

void require_513(const StabilizerCode& code, const char* who, bool need_distance3) {
  if (code.n() != 5 || code.k() != 1) throw std::invalid_argument(std::string(who) + ": input must be a [5,1] code");
  if (need_distance3 && !check_distance3(code)) {
    throw std::invalid_argument(std::string(who) + ": input single-error syndromes are not distinct and nonzero");
  }
}

StabilizerCode checked_code(const CodeFragment& rows, const std::string& who, bool need_distance3) {
  auto v = validate(rows);
  if (auto* err = std::get_if<ValidationError>(&v)) {
    throw std::invalid_argument(who + ": result is not a stabilizer code: " + err->message());
  }
  StabilizerCode code = std::get<StabilizerCode>(std::move(v));
  if (need_distance3 && !check_distance3(code)) {
    throw std::invalid_argument(who + ": result fails the distance-3 syndrome check");
  }
  return code;
}

bool is_perfect_ingredient(const CodeFragment& f) {
  if (is_seed(f)) return true;
  if (f.s() == 0 || f.s() >= 63) return false;
  const std::uint64_t size = ((std::uint64_t{1} << f.s()) - 1);
  if (size % 3 != 0 || f.n != size / 3) return false;
  if (!std::holds_alternative<StabilizerCode>(validate(f))) return false;
  return check_distance3(f);
}

std::size_t parse_size(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

/// Lightest block weight over N(S) - S by enumerating all 4^n words.
std::size_t min_block_weight_logical(const StabilizerCode& code, const QubitPartition& partition) {
  const std::size_t n = code.n();
  if (n > 10) throw std::invalid_argument("block distance enumeration supports at most 10 logical qubits");
  const RowSpace stab = row_space_of(code.generators());
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (std::uint64_t v = 1; v < total; ++v) {
    PauliWord w(BitVec::from_u64(v & ((std::uint64_t{1} << n) - 1), n), BitVec::from_u64(v >> n, n));
    const std::size_t bw = block_weight(w, partition);
    if (bw >= best) continue;
    bool commutes = true;
    for (const auto& g : code.generators()) {
      if (symplectic_product(g, w)) {
        commutes = false;
        break;
      }
    }
    if (commutes && !stab.contains(w.stacked())) best = bw;
  }
  return best;
}

const std::array<std::uint32_t, 9> kPrimitivePolys = {0, 0, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D};

}  // namespace

CodeFragment seed_fragment() { return CodeFragment::parse({"X", "Z"}); }

bool is_seed(const CodeFragment& fragment) { return fragment == seed_fragment(); }

CodeFragment two_copy_over_optimal(const StabilizerCode& code5) {
  require_513(code5, "two_copy_over_optimal", false);
  const auto a = syndromes_of(code5.fragment());
  return materialize(rotated_copies(a, {{Cls::kX, Cls::kZ}, {Cls::kY, Cls::kX}}));
}

CodeFragment raw_perfect_constructing(const StabilizerCode& code5) {
  require_513(code5, "raw_perfect_constructing", true);
  const auto a = syndromes_of(code5.fragment());
  CodeFragment out = materialize(rotated_copies(a, {{Cls::kX, Cls::kZ}, {Cls::kY, Cls::kX}, {Cls::kZ, Cls::kY}}));
  if (auto defect = raw_perfect_constructing_defect(out)) {
    throw std::logic_error("raw_perfect_constructing: " + *defect);
  }
  return out;
}

CodeFragment raw_perfect_constructing_linear(std::size_t bits) {
  if (bits < 2 || bits >= kPrimitivePolys.size()) {
    throw std::invalid_argument("raw_perfect_constructing_linear supports 2 <= bits <= 8");
  }
  const std::uint32_t poly = kPrimitivePolys[bits];
  const std::uint32_t top = 1u << bits;
  std::vector<BitVec> sx;
  std::vector<BitVec> sz;
  for (std::uint32_t q = 1; q < top; ++q) {
    std::uint32_t ax = q << 1;
    if (ax & top) ax ^= poly;
    sz.push_back(syndrome_from_value(q, bits));
    sx.push_back(syndrome_from_value(ax, bits));
  }
  return materialize(SyndromeAssignment(bits, std::move(sx), std::move(sz)));
}

std::optional<std::string> raw_perfect_constructing_defect(const CodeFragment& fragment) {
  const std::size_t s = fragment.s();
  if (s == 0 || s > 20) return "syndrome width must be between 1 and 20 bits";
  const std::size_t want = (std::size_t{1} << s) - 1;
  if (fragment.n != want) {
    return "expected " + std::to_string(want) + " qubits for " + std::to_string(s) + " rows, got " +
           std::to_string(fragment.n);
  }
  const auto a = syndromes_of(fragment);
  for (Pauli p : kPaulis) {
    std::vector<bool> seen(want + 1, false);
    for (std::size_t q = 0; q < a.n; ++q) {
      const BitVec v = p == Pauli::X ? a.sx[q] : p == Pauli::Z ? a.sz[q] : a.sy(q);
      const std::uint64_t value = syndrome_value(v);
      if (value == 0) return std::string("σ") + static_cast<char>(std::tolower(pauli_char(p))) + " syndrome of qubit " +
                             std::to_string(q + 1) + " is zero";
      if (seen[value]) {
        return std::string("σ") + static_cast<char>(std::tolower(pauli_char(p))) + " syndrome " + v.to_string() +
               " repeats";
      }
      seen[value] = true;
    }
  }
  return std::nullopt;
}

StabilizerCode gottesman_2k(const CodeFragment& raw_pc) {
  if (auto defect = raw_perfect_constructing_defect(raw_pc)) {
    throw std::invalid_argument("gottesman_2k: not raw perfect-constructing: " + *defect);
  }
  const auto seed = syndromes_of(seed_fragment());
  return checked_code(materialize(nest(seed, with_zero_qubit(syndromes_of(raw_pc)))), "gottesman_2k", true);
}

StabilizerCode gottesman_2k(std::size_t k) {
  if (k < 3 || k > 8) throw std::invalid_argument("gottesman2k supports 3 <= k <= 8");
  if (k == 4) return gottesman_2k(raw_perfect_constructing(catalog_code("code513c")));
  return gottesman_2k(raw_perfect_constructing_linear(k));
}

StabilizerCode perfect_recursion(const CodeFragment& perfect_block, const CodeFragment& raw_pc,
                                 const CodeFragment& perfect_sub) {
  if (!is_perfect_ingredient(perfect_block)) {
    throw std::invalid_argument("perfect_recursion: block is neither the seed nor a perfect distance-3 code");
  }
  if (!is_perfect_ingredient(perfect_sub)) {
    throw std::invalid_argument("perfect_recursion: sub is neither the seed nor a perfect distance-3 code");
  }
  if (auto defect = raw_perfect_constructing_defect(raw_pc)) {
    throw std::invalid_argument("perfect_recursion: not raw perfect-constructing: " + *defect);
  }
  if (raw_pc.s() != perfect_sub.s()) {
    throw std::invalid_argument("perfect_recursion: raw fragment and sub code differ in generator count");
  }
  const auto block = syndromes_of(perfect_block);
  const auto first = nest(block, with_zero_qubit(syndromes_of(raw_pc)));
  const auto second = nest(SyndromeAssignment::zero(1, block.s), syndromes_of(perfect_sub));
  return checked_code(materialize(extend(first, second)), "perfect_recursion", true);
}

CodeFragment perfect_code(std::size_t bits) {
  if (bits < 2 || bits % 2 != 0 || bits > 12) throw std::invalid_argument("perfect_code supports even 2 <= bits <= 12");
  if (bits == 2) return seed_fragment();
  return perfect_recursion(perfect_code(bits - 2), raw_perfect_constructing_linear(2), seed_fragment()).fragment();
}

StabilizerCode paste_distance3(const StabilizerCode& s2_code, const CodeFragment& s1_rows) {
  const std::size_t n2 = s2_code.n();
  const std::size_t n1 = s1_rows.n;
  const auto& gens = s2_code.generators();
  if (gens.size() < 2 || gens[0] != PauliWord::uniform(n2, Pauli::X) || gens[1] != PauliWord::uniform(n2, Pauli::Z)) {
    throw std::invalid_argument("paste_distance3: the first two generators must be X(n2) and Z(n2)");
  }
  if (!check_distance3(s2_code)) throw std::invalid_argument("paste_distance3: [n2,s2] is not nondegenerate distance 3");
  if (n1 == 0) {
    if (s1_rows.s() != 0) throw std::invalid_argument("paste_distance3: zero-qubit side must have no rows");
    return s2_code;
  }
  const std::size_t s = std::max(gens.size(), s1_rows.s() + 2);
  std::vector<PauliWord> rows;
  for (std::size_t r = 0; r < s; ++r) {
    const PauliWord left = r < gens.size() ? gens[r] : PauliWord(n2);
    const PauliWord right = r >= 2 && r - 2 < s1_rows.s() ? s1_rows.rows[r - 2] : PauliWord(n1);
    rows.push_back(left.tensor(right));
  }
  return checked_code(CodeFragment(n2 + n1, std::move(rows)), "paste_distance3", true);
}

std::size_t PastingParams::claimed_distance() const { return std::min({d1, d2, c1 + c2}); }

PastingParams check_pasting_spec(const PastingSpec& spec) {
  auto side = [](const StabilizerCode& s_code, std::size_t r, const char* label, std::size_t& n, std::size_t& l,
                 std::size_t& k, std::size_t& c, std::size_t& d) {
    n = s_code.n();
    k = s_code.k();
    if (r > s_code.s()) throw std::invalid_argument(std::string(label) + ": prefix longer than the generator list");
    l = n - r;
    if (!(k < l)) throw std::invalid_argument(std::string("k") + label[1] + " < l" + label[1] + " violated");
    if (r == 0) {
      // The trivial stabilizer: every single-qubit Pauli is a logical operator.
      c = 1;
    } else {
      std::vector<PauliWord> prefix(s_code.generators().begin(), s_code.generators().begin() + static_cast<long>(r));
      c = exact_distance(StabilizerCode::from_fragment(CodeFragment(n, std::move(prefix))));
    }
    d = exact_distance(s_code);
    if (!(c <= d)) throw std::invalid_argument(std::string("c") + label[1] + " <= d" + label[1] + " violated");
    if (s_code.k() > 0 && !is_nondegenerate(s_code)) {
      throw std::invalid_argument(std::string(label) + " is degenerate");
    }
  };
  PastingParams p;
  side(spec.s1, spec.r1, "S1", p.n1, p.l1, p.k1, p.c1, p.d1);
  side(spec.s2, spec.r2, "S2", p.n2, p.l2, p.k2, p.c2, p.d2);
  if (p.l1 - p.k1 != p.l2 - p.k2) throw std::invalid_argument("l1 - k1 = l2 - k2 violated");
  return p;
}

PastingResult paste_general(const PastingSpec& spec) {
  const PastingParams p = check_pasting_spec(spec);
  const auto& m = spec.s1.generators();
  const auto& nn = spec.s2.generators();
  const PauliWord i1(p.n1);
  const PauliWord i2(p.n2);
  std::vector<PauliWord> rows;
  for (std::size_t j = 0; j < spec.r1; ++j) rows.push_back(m[j].tensor(i2));
  for (std::size_t j = 0; j < spec.r2; ++j) rows.push_back(i1.tensor(nn[j]));
  for (std::size_t j = 0; j < p.l1 - p.k1; ++j) rows.push_back(m[spec.r1 + j].tensor(nn[spec.r2 + j]));
  return PastingResult{checked_code(CodeFragment(p.n1 + p.n2, std::move(rows)), "paste_general", false), p};
}

AllDistanceResult nest_all_distance(const CodeFragment& block, const std::vector<Subcode>& subcodes) {
  std::vector<std::size_t> sizes;
  std::size_t total_n = 0;
  for (const auto& sub : subcodes) {
    if (!is_valid_logical_set(sub.code, sub.logicals)) {
      throw std::invalid_argument("nest_all_distance: subcode logical operators are invalid");
    }
    sizes.push_back(sub.logicals.k());
    total_n += sub.code.n();
  }
  QubitPartition partition(sizes);
  if (block.n != partition.total()) {
    throw std::invalid_argument("nest_all_distance: block length differs from the subcodes' logical qubit count");
  }

  // Logical position t -> (physical offset, subcode, logical index).
  struct Slot {
    std::size_t offset;
    std::size_t sub;
    std::size_t index;
  };
  std::vector<Slot> slots;
  std::size_t offset = 0;
  for (std::size_t m = 0; m < subcodes.size(); ++m) {
    for (std::size_t u = 0; u < subcodes[m].logicals.k(); ++u) slots.push_back({offset, m, u});
    offset += subcodes[m].code.n();
  }

  auto embed = [&](const PauliWord& local, std::size_t at) {
    PauliWord out(total_n);
    for (std::size_t q = 0; q < local.n(); ++q) {
      if (local.x.get(q)) out.x.set(at + q);
      if (local.z.get(q)) out.z.set(at + q);
    }
    return out;
  };

  std::vector<PauliWord> rows;
  for (const auto& row : block.rows) {
    PauliWord out(total_n);
    for (std::size_t t = 0; t < block.n; ++t) {
      const auto& slot = slots[t];
      const auto& [xbar, zbar] = subcodes[slot.sub].logicals.pairs[slot.index];
      if (row.x.get(t)) out += embed(xbar, slot.offset);
      if (row.z.get(t)) out += embed(zbar, slot.offset);
    }
    rows.push_back(std::move(out));
  }
  offset = 0;
  for (const auto& sub : subcodes) {
    for (const auto& g : sub.code.generators()) rows.push_back(embed(g, offset));
    offset += sub.code.n();
  }

  AllDistanceResult result{checked_code(CodeFragment(total_n, std::move(rows)), "nest_all_distance", false),
                           partition, std::nullopt, {}, std::nullopt};

  // Subcode distances, computed once per distinct subcode.
  std::map<std::vector<std::string>, std::size_t> cache;
  for (const auto& sub : subcodes) {
    std::vector<std::string> key;
    for (const auto& g : sub.code.generators()) key.push_back(format_pauli_word(g, WordStyle::kBinary));
    key.push_back(std::to_string(sub.code.n()));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, exact_distance(sub.code)).first;
    result.sub_distances.push_back(it->second);
  }

  const StabilizerCode block_code = checked_code(block, "nest_all_distance block", false);
  if (block_code.k() > 0) {
    const bool singletons = std::all_of(sizes.begin(), sizes.end(), [](std::size_t k) { return k == 1; });
    const std::size_t d_block = singletons ? exact_distance(block_code) : min_block_weight_logical(block_code, partition);
    result.block_distance = d_block;
    std::vector<std::size_t> sorted = result.sub_distances;
    std::sort(sorted.begin(), sorted.end());
    if (d_block <= sorted.size()) {
      std::size_t sum = 0;
      for (std::size_t i = 0; i < d_block; ++i) sum += sorted[i];
      result.claimed_distance = sum;
    }
  }
  return result;
}

AllDistanceResult nest_all_distance(const CodeFragment& block, const std::vector<StabilizerCode>& subcodes) {
  std::vector<Subcode> subs;
  subs.reserve(subcodes.size());
  for (const auto& c : subcodes) subs.push_back(Subcode{c, logical_operators(c)});
  return nest_all_distance(block, subs);
}

// ---------------------------------------------------------------------------
// Named recipes

const std::vector<RecipeInfo>& recipe_infos() {
  static const std::vector<RecipeInfo> infos = {
      {Recipe::kCode10, "code10", "", "[10,4,3]: code513a block nested with the {2,2} subcode sub22", 3},
      {Recipe::kCode102, "code102", "", "[10,4,3]: seed block nested with two rotated copies of code513a", 3},
      {Recipe::kCode15, "code15", "", "[15,9,3]: code513a block nested with the {3,2} subcode sub32", 3},
      {Recipe::kCode20, "code20", "", "[20,13,3]: code513b block nested with the {4,3} subcode sub43", 3},
      {Recipe::kCode2517, "code2517", "", "[25,17,3]: code513b nested with itself (power5 with n = 2)", 3},
      {Recipe::kCode2518, "code2518", "", "[25,18,3]: code513a block nested with the {5,3} subcode sub53", 3},
      {Recipe::kCode30, "code30", "", "[30,22,3]: code513b plus a zero-syndrome block qubit, nested with code513b", 3},
      {Recipe::kCode35, "code35", "",
       "[35,27,3]: code513b nested with code513b plus a zero qubit, extended by 0000 nested with code513b", 3},
      {Recipe::kCode16, "code16", "", "[16,10,3]: seed block nested with the {15,4} fragment of code513c", 3},
      {Recipe::kCode37, "code37", "", "[37,30,3]: code833b nested with frag42, extended by the frag57 columns", 3},
      {Recipe::kPower5, "power5", "n", "[5^n, 5^n - 4n, 3]: code513b nested with power5(n - 1); 1 <= n <= 3", 3},
      {Recipe::kPower6x5, "power6x5", "n",
       "[6*5^n, 6*5^n - 4(n+1), 3]: code513b plus a zero qubit, nested with power5(n); 1 <= n <= 2", 3},
      {Recipe::kGottesman2k, "gottesman2k", "k", "[2^k, 2^k - k - 2, 3]: seed nested with a raw {2^k - 1, k} fragment", 3},
      {Recipe::kPerfectRecursion, "perfect_recursion", "k k2",
       "perfect [(2^(k+k2) - 1)/3] code from perfect_code(k), a raw {2^k2 - 1, k2} fragment and perfect_code(k2)", 3},
      {Recipe::kConcat25, "concat_25_1_9", "",
       "25-qubit concatenated code: code513a over five code513a subcodes with logical X^5, Z^5", 9},
  };
  return infos;
}

const RecipeInfo& recipe_info(Recipe recipe) {
  for (const auto& info : recipe_infos()) {
    if (info.recipe == recipe) return info;
  }
  throw std::logic_error("recipe without info");
}

RecipeId RecipeId::parse(std::string_view text) {
  std::string_view name = text;
  std::vector<std::size_t> args;
  if (const std::size_t open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') throw std::invalid_argument("bad recipe '" + std::string(text) + "'");
    name = text.substr(0, open);
    std::string_view inner = text.substr(open + 1, text.size() - open - 2);
    for (std::size_t pos = 0;;) {
      const std::size_t comma = inner.find(',', pos);
      args.push_back(parse_size(inner.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos),
                                "recipe argument"));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  for (const auto& info : recipe_infos()) {
    if (info.name != name) continue;
    const std::size_t want = info.params.empty() ? 0 : info.params == "k k2" ? 2 : 1;
    if (args.size() != want) {
      throw std::invalid_argument("recipe " + info.name + " takes " + std::to_string(want) + " argument(s)");
    }
    RecipeId id;
    id.recipe = info.recipe;
    if (info.params == "n") id.n = args[0];
    if (info.params == "k") id.k = args[0];
    if (info.params == "k k2") {
      id.k = args[0];
      id.k2 = args[1];
    }
    return id;
  }
  throw std::invalid_argument("unknown recipe '" + std::string(name) + "'");
}

std::string RecipeId::to_string() const {
  const auto& info = recipe_info(recipe);
  if (info.params == "n") return info.name + "(" + std::to_string(n) + ")";
  if (info.params == "k") return info.name + "(" + std::to_string(k) + ")";
  if (info.params == "k k2") return info.name + "(" + std::to_string(k) + "," + std::to_string(k2) + ")";
  return info.name;
}

std::vector<RecipeId> standard_recipes() {
  std::vector<RecipeId> out;
  for (Recipe r : {Recipe::kCode10, Recipe::kCode102, Recipe::kCode15, Recipe::kCode20, Recipe::kCode2517,
                   Recipe::kCode2518, Recipe::kCode30, Recipe::kCode35, Recipe::kCode16, Recipe::kCode37}) {
    out.push_back(RecipeId{r});
  }
  out.push_back(RecipeId{Recipe::kPower5, 2});
  out.push_back(RecipeId{Recipe::kPower5, 3});
  out.push_back(RecipeId{Recipe::kPower6x5, 1});
  out.push_back(RecipeId{Recipe::kPower6x5, 2});
  for (std::size_t k = 3; k <= 6; ++k) out.push_back(RecipeId{Recipe::kGottesman2k, 0, k});
  out.push_back(RecipeId{Recipe::kPerfectRecursion, 0, 2, 2});
  out.push_back(RecipeId{Recipe::kPerfectRecursion, 0, 2, 4});
  out.push_back(RecipeId{Recipe::kPerfectRecursion, 0, 4, 2});
  out.push_back(RecipeId{Recipe::kConcat25});
  return out;
}

std::optional<FixtureLink> fixture_link(const RecipeId& id) {
  switch (id.recipe) {
    case Recipe::kCode10:
      return FixtureLink{"code10", {}, true};
    case Recipe::kCode102:
      return FixtureLink{"code102", {}, false};
    case Recipe::kCode15:
      return FixtureLink{"code15", {}, false};
    case Recipe::kCode20:
      return FixtureLink{"code20", {}, false};
    case Recipe::kCode2517:
      return FixtureLink{"code2517", {}, true};
    case Recipe::kCode2518:
      return FixtureLink{"code2518", {}, false};
    case Recipe::kCode30:
      return FixtureLink{"code30", {}, true};
    case Recipe::kCode35:
      return FixtureLink{"code35", {}, false};
    case Recipe::kCode16:
      return FixtureLink{"code16", {}, false};
    case Recipe::kCode37:
      return FixtureLink{"code37", {}, false};
    case Recipe::kPower5:
      if (id.n == 1) return FixtureLink{"code513b", {}, true};
      if (id.n == 2) return FixtureLink{"code2517", {}, true};
      return std::nullopt;
    case Recipe::kPower6x5:
      if (id.n == 1) return FixtureLink{"code30", {}, true};
      return std::nullopt;
    case Recipe::kConcat25:
      return FixtureLink{"concat25", {}, true};
    case Recipe::kGottesman2k:
      if (id.k == 4) return FixtureLink{"code16", {}, false};
      return std::nullopt;
    case Recipe::kPerfectRecursion:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

SyndromeAssignment power5_assignment(std::size_t n) {
  const auto base = syndromes_of(catalog_fragment("code513b"));
  SyndromeAssignment out = base;
  for (std::size_t i = 1; i < n; ++i) out = nest(base, out);
  return out;
}

SyndromeAssignment nest_catalog(std::string_view block, std::string_view sub) {
  return nest(syndromes_of(catalog_fragment(block)), syndromes_of(catalog_fragment(sub)));
}

}  // namespace

StabilizerCode construct_named(const RecipeId& id) {
  const std::string who = id.to_string();
  const auto b = [] { return syndromes_of(catalog_fragment("code513b")); };
  switch (id.recipe) {
    case Recipe::kCode10:
      return checked_code(materialize(nest_catalog("code513a", "sub22")), who, true);
    case Recipe::kCode102:
      return checked_code(
          materialize(nest(syndromes_of(seed_fragment()), syndromes_of(two_copy_over_optimal(catalog_code("code513a"))))),
          who, true);
    case Recipe::kCode15:
      return checked_code(materialize(nest_catalog("code513a", "sub32")), who, true);
    case Recipe::kCode20:
      return checked_code(materialize(nest_catalog("code513b", "sub43")), who, true);
    case Recipe::kCode2517:
      return construct_named(RecipeId{Recipe::kPower5, 2});
    case Recipe::kCode2518:
      return checked_code(materialize(nest_catalog("code513a", "sub53")), who, true);
    case Recipe::kCode30:
      return construct_named(RecipeId{Recipe::kPower6x5, 1});
    case Recipe::kCode35: {
      const auto first = nest(b(), with_zero_qubit(b()));
      const auto second = nest(SyndromeAssignment::zero(1, 4), b());
      return checked_code(materialize(extend(first, second)), who, true);
    }
    case Recipe::kCode16:
      return gottesman_2k(raw_perfect_constructing(catalog_code("code513c")));
    case Recipe::kCode37: {
      const auto nested = nest_catalog("code833b", "frag42");
      return checked_code(materialize(extend(nested, syndromes_of(catalog_fragment("frag57")))), who, true);
    }
    case Recipe::kPower5:
      if (id.n < 1 || id.n > 3) throw std::invalid_argument("power5 supports 1 <= n <= 3");
      return checked_code(materialize(power5_assignment(id.n)), who, true);
    case Recipe::kPower6x5:
      if (id.n < 1 || id.n > 2) throw std::invalid_argument("power6x5 supports 1 <= n <= 2");
      return checked_code(materialize(nest(with_zero_qubit(b()), power5_assignment(id.n))), who, true);
    case Recipe::kGottesman2k:
      return gottesman_2k(id.k);
    case Recipe::kPerfectRecursion: {
      if (id.k < 2 || id.k2 < 2 || id.k % 2 || id.k2 % 2 || id.k + id.k2 > 10) {
        throw std::invalid_argument("perfect_recursion needs even k, k2 >= 2 with k + k2 <= 10");
      }
      return perfect_recursion(perfect_code(id.k), raw_perfect_constructing_linear(id.k2), perfect_code(id.k2));
    }
    case Recipe::kConcat25: {
      const StabilizerCode inner = catalog_code("code513a");
      LogicalSet logicals;
      logicals.pairs.emplace_back(PauliWord::uniform(5, Pauli::X), PauliWord::uniform(5, Pauli::Z));
      const std::vector<Subcode> subs(5, Subcode{inner, logicals});
      return nest_all_distance(inner.fragment(), subs).code;
    }
  }
  throw std::invalid_argument("unknown recipe");
}

FixtureComparison compare_with_fixture(const CodeFragment& built, const CodeFragment& fixture,
                                       const std::vector<std::size_t>& permutation) {
  FixtureComparison out;
  if (built.n != fixture.n || built.s() != fixture.s()) return out;
  out.same_shape = true;
  const CodeFragment aligned = permutation.empty() ? built : permute_qubits(built, permutation);
  out.verbatim = aligned == fixture;
  out.row_space_equal = same_row_space(aligned, fixture);
  for (std::size_t r = 0; r < aligned.s() && !out.first_difference; ++r) {
    for (std::size_t q = 0; q < aligned.n; ++q) {
      const char a = aligned.rows[r].letter(q);
      const char f = fixture.rows[r].letter(q);
      if (a != f) {
        out.first_difference = FixtureDifference{r, q, f, a};
        break;
      }
    }
  }
  return out;
}

}  // namespace qecc
