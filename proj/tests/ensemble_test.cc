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

#include "subaspect/ensemble.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "subaspect/errors.h"

namespace subaspect {
namespace {

using Idx = std::vector<std::size_t>;

Selection Sel(const std::string& alg, Idx idx, const std::string& doc = "d") {
  return MakeSelection(doc, alg, std::move(idx));
}

TEST(CombineTest, IdenticalInputsPassThrough) {
  const std::vector<Selection> in = {Sel("a", {1, 4}), Sel("b", {1, 4}),
                                     Sel("c", {1, 4})};
  for (auto mode : {EnsembleMode::kRand, EnsembleMode::kTopK}) {
    EXPECT_EQ(Combine(in, 2, mode, 42, "ens").indices, (Idx{1, 4}));
  }
}

TEST(CombineTest, TopKCountsWithLowIndexTies) {
  const std::vector<Selection> in = {Sel("a", {0, 1}), Sel("b", {1, 2}),
                                     Sel("c", {1, 3})};
  const Selection out = Combine(in, 2, EnsembleMode::kTopK, 0, "asp(topk)");
  EXPECT_EQ(out.indices, (Idx{0, 1}));
  EXPECT_EQ(out.algorithm, "asp(topk)");
  EXPECT_EQ(out.doc_id, "d");
}

TEST(CombineTest, RandIsReproducibleAndContained) {
  const std::vector<Selection> in = {Sel("a", {0, 5, 9}), Sel("b", {2, 5}),
                                     Sel("c", {7})};
  const Selection x = Combine(in, 3, EnsembleMode::kRand, 11, "r");
  EXPECT_EQ(x, Combine(in, 3, EnsembleMode::kRand, 11, "r"));
  const std::set<std::size_t> uni = {0, 2, 5, 7, 9};
  for (std::size_t i : x.indices) EXPECT_TRUE(uni.count(i));
  EXPECT_EQ(x.indices.size(), 3u);
  EXPECT_EQ(Combine(in, 10, EnsembleMode::kRand, 11, "r").indices,
            (Idx{0, 2, 5, 7, 9}));
}

TEST(CombineTest, RandCoversUnionUniformly) {
  const std::vector<Selection> in = {Sel("a", {0, 1}), Sel("b", {2, 3})};
  std::vector<int> counts(4, 0);
  for (std::uint64_t seed = 0; seed < 4000; ++seed) {
    for (std::size_t i : Combine(in, 1, EnsembleMode::kRand, seed, "r").indices) {
      ++counts[i];
    }
  }
  // Binomial(4000, 1/4): sigma ~ 27.4.
  for (int c : counts) EXPECT_NEAR(c, 1000, 3 * 27.4);
}

TEST(CombineTest, Errors) {
  EXPECT_THROW(Combine({}, 1, EnsembleMode::kTopK, 0, "x"),
               std::invalid_argument);
  EXPECT_THROW(Combine({Sel("a", {0}), Sel("b", {1}, "other")}, 1,
                       EnsembleMode::kTopK, 0, "x"),
               std::invalid_argument);
  EXPECT_THROW(ParseEnsembleMode("vote"), ValidationError);
  EXPECT_EQ(EnsembleModeName(ParseEnsembleMode("topk")), "topk");
  EXPECT_EQ(AspectPool(),
            (std::vector<std::string>{"first", "convexfall", "n_nearest"}));
}

TEST(CombineTest, ContractOnRandomInstances) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Selection> in;
    std::set<std::size_t> uni;
    const std::size_t n = 1 + rng() % 30;
    for (std::size_t s = 0; s < 1 + rng() % 5; ++s) {
      Idx idx;
      for (std::size_t j = 0; j < 1 + rng() % 6; ++j) idx.push_back(rng() % n);
      in.push_back(Sel("a" + std::to_string(s), idx, "doc" + std::to_string(trial)));
      uni.insert(in.back().indices.begin(), in.back().indices.end());
    }
    const std::size_t k = 1 + rng() % 8;
    for (auto mode : {EnsembleMode::kRand, EnsembleMode::kTopK}) {
      const Selection out = Combine(in, k, mode, trial, "e");
      EXPECT_EQ(out.indices.size(), std::min(k, uni.size()));
      EXPECT_TRUE(std::is_sorted(out.indices.begin(), out.indices.end()));
      for (std::size_t i : out.indices) EXPECT_TRUE(uni.count(i));
      EXPECT_EQ(out, Combine(in, k, mode, trial, "e"));
    }
  }
}

}  // namespace
}  // namespace subaspect
