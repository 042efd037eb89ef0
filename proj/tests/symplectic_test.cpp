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

#include "qecc/symplectic.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qecc/bitvec.hpp"

using namespace qecc;

TEST(BitVec, StringRoundTripAndIndexing) {
  const BitVec v = BitVec::from_string("10110");
  EXPECT_EQ(v.size(), 5u);
  EXPECT_TRUE(v.get(0));
  EXPECT_FALSE(v.get(1));
  EXPECT_EQ(v.to_string(), "10110");
  EXPECT_EQ(v.popcount(), 3u);
  EXPECT_TRUE(v.parity());
  EXPECT_EQ(BitVec::from_u64(0b110, 3).to_string(), "011");
}

TEST(BitVec, ConcatAndSliceAcrossWordBoundary) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t a = rng() % 130;
    const std::size_t b = rng() % 130;
    std::string sa, sb;
    for (std::size_t i = 0; i < a; ++i) sa += "01"[rng() % 2];
    for (std::size_t i = 0; i < b; ++i) sb += "01"[rng() % 2];
    const BitVec joined = BitVec::from_string(sa).concat(BitVec::from_string(sb));
    EXPECT_EQ(joined.to_string(), sa + sb);
    EXPECT_EQ(joined.slice(a, b).to_string(), sb);
  }
}

TEST(BitVec, RejectsBadCharacters) { EXPECT_THROW(BitVec::from_string("01a"), std::invalid_argument); }

TEST(PauliWord, LetterEncoding) {
  const PauliWord w = parse_pauli_word("IXZY");
  EXPECT_EQ(w.x.to_string(), "0101");
  EXPECT_EQ(w.z.to_string(), "0011");
  EXPECT_EQ(format_pauli_word(w), "IXZY");
  EXPECT_EQ(format_pauli_word(w, WordStyle::kBinary), "0101|0011");
  EXPECT_EQ(w.weight(), 3u);
}

TEST(PauliWord, BinaryAndLetterStylesAgree) {
  EXPECT_EQ(parse_pauli_word("0101|0011"), parse_pauli_word("IXZY"));
  EXPECT_EQ(parse_pauli_word("01 01 | 00 11"), parse_pauli_word("I X Z Y"));
}

TEST(PauliWord, ParseErrors) {
  EXPECT_THROW(parse_pauli_word(""), std::invalid_argument);
  EXPECT_THROW(parse_pauli_word("IXQ"), std::invalid_argument);
  EXPECT_THROW(parse_pauli_word("01|0"), std::invalid_argument);
  EXPECT_THROW(parse_pauli_word("0|1|0"), std::invalid_argument);
  EXPECT_THROW(parse_pauli_word("IX", 3), std::invalid_argument);
}

TEST(PauliWord, TensorAndUniform) {
  EXPECT_EQ(format_pauli_word(parse_pauli_word("XZ").tensor(parse_pauli_word("YI"))), "XZYI");
  EXPECT_EQ(format_pauli_word(PauliWord::uniform(3, Pauli::Y)), "YYY");
}

TEST(SymplecticProduct, MatchesLetterOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 90;
    const auto a = oracle::random_word(n, rng);
    const auto b = oracle::random_word(n, rng);
    EXPECT_EQ(symplectic_product(parse_pauli_word(a), parse_pauli_word(b)), oracle::anticommute(a, b)) << a << " " << b;
  }
}

TEST(SymplecticProduct, ProductOfWordsMatchesOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 70;
    const auto a = oracle::random_word(n, rng);
    const auto b = oracle::random_word(n, rng);
    PauliWord p = parse_pauli_word(a);
    p += parse_pauli_word(b);
    EXPECT_EQ(format_pauli_word(p), oracle::mul(a, b));
  }
}

TEST(Rank, MatchesGroupSizeOracle) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const std::size_t m = rng() % 6;
    oracle::Rows rows;
    std::vector<PauliWord> words;
    for (std::size_t i = 0; i < m; ++i) {
      rows.push_back(oracle::random_word(n, rng));
      words.push_back(parse_pauli_word(rows.back()));
    }
    EXPECT_EQ(gf2_rank(words), oracle::rank(rows, n));
    const auto w = oracle::random_word(n, rng);
    EXPECT_EQ(in_row_space(parse_pauli_word(w), words), oracle::group(rows, n).count(w) == 1);
  }
}

TEST(Nullspace, VectorsAreOrthogonalAndComplete) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t width = 1 + rng() % 12;
    std::vector<BitVec> rows;
    for (std::size_t i = 0; i < rng() % 6; ++i) rows.push_back(BitVec::from_u64(rng(), width));
    const auto basis = gf2_nullspace(rows, width);
    for (const auto& v : basis) {
      for (const auto& r : rows) EXPECT_FALSE(v.dot(r));
    }
    std::vector<PauliWord> as_words;
    for (const auto& r : rows) as_words.push_back(PauliWord(r, BitVec(width)));
    EXPECT_EQ(basis.size() + gf2_rank(as_words), width);
  }
}

TEST(QubitPartition, BlockWeightCountsTouchedBlocks) {
  const QubitPartition p({2, 1, 3});
  EXPECT_EQ(p.total(), 6u);
  EXPECT_EQ(block_weight(parse_pauli_word("XIIIII"), p), 1u);
  EXPECT_EQ(block_weight(parse_pauli_word("XZIIII"), p), 1u);
  EXPECT_EQ(block_weight(parse_pauli_word("IXYIIZ"), p), 3u);
  EXPECT_EQ(block_weight(parse_pauli_word("IIIIII"), p), 0u);
  EXPECT_EQ(block_weight(parse_pauli_word("XYZ"), QubitPartition::singletons(3)), 3u);
}
