// Copyright 2026 The Subaspect Authors.
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

#include "subaspect/rouge.h"

#include <gtest/gtest.h>

#include <random>

#include "subaspect/corpus.h"
#include "support.h"

namespace subaspect {
namespace {

using Sents = std::vector<TokenizedSentence>;
namespace oracle = testing::oracle;

Sents T(std::initializer_list<const char*> sentences) {
  Sents out;
  for (const char* s : sentences) out.push_back(Tokenize(s));
  return out;
}

TEST(RougeNTest, Examples) {
  EXPECT_DOUBLE_EQ(RougeN(T({"a b c"}), T({"a b c"}), 1), 1.0);
  EXPECT_DOUBLE_EQ(RougeN(T({"a b c"}), T({"x y z"}), 1), 0.0);
  EXPECT_NEAR(RougeN(T({"the cat sat"}), T({"the cat ate"}), 1), 2.0 / 3.0,
              1e-12);
  EXPECT_NEAR(RougeN(T({"the cat sat"}), T({"the cat ate"}), 2), 0.5, 1e-12);
  EXPECT_THROW(RougeN(T({"a"}), T({"a"}), 3), std::invalid_argument);
}

TEST(RougeNTest, BigramsStayInsideSentences) {
  // "b c" only exists across the boundary of the candidate.
  EXPECT_DOUBLE_EQ(RougeN(T({"a b", "c d"}), T({"b c"}), 2), 0.0);
}

TEST(RougeNTest, ClippingBoundsRepeatedCandidate) {
  const Sents ref = T({"the cat"});
  const double once = RougeN(T({"the cat"}), ref, 1);
  const double thrice = RougeN(T({"the cat the cat the cat"}), ref, 1);
  EXPECT_DOUBLE_EQ(once, 1.0);
  // Recall stays 1, precision falls to 1/3.
  EXPECT_NEAR(thrice, 0.5, 1e-12);
}

TEST(RougeLTest, Examples) {
  EXPECT_DOUBLE_EQ(RougeL(T({"a b c"}), T({"a b c"})), 1.0);
  EXPECT_DOUBLE_EQ(RougeL(T({"a b c"}), T({"d e"})), 0.0);
  const Sents c = T({"a b c d"}), r = T({"a c", "b d"});
  EXPECT_NEAR(RougeL(c, r), oracle::RougeL(c, r), 1e-12);
  EXPECT_DOUBLE_EQ(RougeL(c, r), 1.0);
}

TEST(RougeLTest, MatchesUnigramForDistinctOrderedTokens) {
  const Sents c = T({"a c e g"}), r = T({"a b c d e"});
  EXPECT_NEAR(RougeL(c, r), RougeN(c, r, 1), 1e-12);
}

TEST(RougeAllTest, Examples) {
  const RougeScore same = RougeAll(T({"x y", "z"}), T({"x y", "z"}));
  EXPECT_DOUBLE_EQ(same.r1, 1.0);
  EXPECT_DOUBLE_EQ(same.r2, 1.0);
  EXPECT_DOUBLE_EQ(same.rl, 1.0);
  EXPECT_DOUBLE_EQ(same.mean, 1.0);
  const RougeScore empty = RougeAll(Sents{}, T({"x y"}));
  EXPECT_EQ(empty.r1 + empty.r2 + empty.rl + empty.mean, 0.0);
  const RougeScore cat = RougeAll(T({"the cat sat"}), T({"the cat ate"}));
  EXPECT_NEAR(cat.r1, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(cat.r2, 0.5, 1e-12);
  EXPECT_NEAR(cat.rl, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(cat.mean, (cat.r1 + cat.r2 + cat.rl) / 3.0, 1e-12);
}

TEST(FMeasureTest, Beta) {
  EXPECT_DOUBLE_EQ(FMeasure(0.5, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(FMeasure(0.0, 1.0), 0.0);
  // Large beta approaches recall.
  EXPECT_NEAR(FMeasure(0.2, 0.8, 1000.0), 0.8, 1e-4);
}

Sents RandomText(std::mt19937_64& rng, std::size_t max_sentences) {
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e"};
  Sents out(1 + rng() % max_sentences);
  for (auto& s : out) {
    const std::size_t len = 1 + rng() % 8;
    for (std::size_t i = 0; i < len; ++i) s.push_back(vocab[rng() % 5]);
  }
  return out;
}

TEST(RougeOracleTest, MatchesBruteForce) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const Sents c = RandomText(rng, 2), r = RandomText(rng, 2);
    EXPECT_NEAR(RougeN(c, r, 1), oracle::RougeN(c, r, 1), 1e-9);
    EXPECT_NEAR(RougeN(c, r, 2), oracle::RougeN(c, r, 2), 1e-9);
    EXPECT_NEAR(RougeL(c, r), oracle::RougeL(c, r), 1e-9);
    EXPECT_EQ(LcsLength(c[0], r[0]), oracle::BruteLcs(c[0], r[0]));
  }
}

TEST(RougePropertyTest, BoundedAndReflexive) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Sents c = RandomText(rng, 3), r = RandomText(rng, 3);
    const RougeScore s = RougeAll(c, r);
    for (double v : {s.r1, s.r2, s.rl, s.mean}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
    EXPECT_DOUBLE_EQ(RougeN(c, c, 1), 1.0);
    EXPECT_DOUBLE_EQ(RougeL(c, c), 1.0);
  }
}

}  // namespace
}  // namespace subaspect
