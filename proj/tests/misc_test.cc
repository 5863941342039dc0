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

#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <set>
#include <stdexcept>

#include "subaspect/errors.h"
#include "subaspect/fileio.h"
#include "subaspect/parallel.h"
#include "subaspect/registry.h"
#include "subaspect/rng.h"
#include "subaspect/synthetic.h"
#include "support.h"

namespace subaspect {
namespace {

TEST(RngTest, SplitMixReferenceSequence) {
  // First outputs of SplitMix64 seeded with 1234567.
  std::uint64_t state = 1234567;
  EXPECT_EQ(SplitMix64(state), 6457827717110365317ull);
  EXPECT_EQ(SplitMix64(state), 3203168211198807973ull);
}

TEST(RngTest, KeyedStreamsDiffer) {
  auto a = KeyedRng(1, "doc", RngStream::kKMeans);
  auto b = KeyedRng(1, "doc", RngStream::kEnsemble);
  auto c = KeyedRng(1, "doc", RngStream::kKMeans);
  const auto x = a.Next();
  EXPECT_NE(x, b.Next());
  EXPECT_EQ(x, c.Next());
  auto d = KeyedRng(2, "doc", RngStream::kKMeans);
  EXPECT_NE(x, d.Next());
}

TEST(RngTest, UniformRanges) {
  Xoshiro256 rng(9);
  for (int i = 0; i < 10000; ++i) {
    EXPECT_LT(rng.UniformIndex(7), 7u);
    const double u = rng.UniformDouble();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(ParallelForTest, RunsEveryIndexAndRethrowsLowest) {
  std::vector<std::atomic<int>> hits(257);
  ParallelFor(hits.size(), 8, [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) EXPECT_EQ(h.load(), 1);
  try {
    ParallelFor(100, 4, [](std::size_t i) {
      if (i == 17 || i == 60) throw std::runtime_error(std::to_string(i));
    });
    FAIL() << "expected exception";
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "17");
  }
  EXPECT_GE(DefaultJobs(), 1u);
}

TEST(FileIoTest, AtomicWriteCreatesDirectories) {
  const auto dir = testing::TempDir("fileio");
  const std::string path = (dir / "a" / "b" / "x.txt").string();
  WriteFileAtomic(path, "hello");
  EXPECT_EQ(ReadFile(path), "hello");
  WriteFileAtomic(path, "again");
  EXPECT_EQ(ReadFile(path), "again");
  EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
  EXPECT_THROW(ReadFile((dir / "missing").string()), FormatError);
}

TEST(RegistryTest, NamesAndErrors) {
  const auto& names = AlgorithmNames();
  EXPECT_EQ(names.size(), 13u);
  EXPECT_EQ(names.front(), "first");
  EXPECT_EQ(names.back(), "oracle");
  EXPECT_TRUE(NeedsEmbeddings("convexfall"));
  EXPECT_FALSE(NeedsEmbeddings("textrank"));
  const Document doc = testing::PlainDocument("d", 4);
  try {
    RunAlgorithm("bogus", doc, nullptr, 1, {});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("convexfall"), std::string::npos);
  }
  EXPECT_THROW(RunAlgorithm("mmr", doc, nullptr, 1, {}), ValidationError);
  const Selection s = RunAlgorithm("last", doc, nullptr, 2, {});
  EXPECT_EQ(s.algorithm, "last");
  EXPECT_EQ(s.indices, (std::vector<std::size_t>{2, 3}));
}

TEST(SyntheticTest, PerfectCopyProvenance) {
  SyntheticOptions opts;
  opts.num_docs = 20;
  const SyntheticCorpus s = MakeSyntheticCorpus(SyntheticKind::kPerfectCopy, opts);
  ASSERT_EQ(s.corpus.size(), 20u);
  for (std::size_t d = 0; d < 20; ++d) {
    const Document& doc = s.corpus.documents()[d];
    ASSERT_EQ(s.provenance[d].size(), doc.num_target());
    for (std::size_t t = 0; t < doc.num_target(); ++t) {
      EXPECT_EQ(doc.target[t], doc.source[s.provenance[d][t]]);
    }
  }
}

TEST(SyntheticTest, DeterministicAndKindsParse) {
  SyntheticOptions opts;
  opts.num_docs = 5;
  const auto a = MakeSyntheticCorpus(SyntheticKind::kMixed, opts);
  const auto b = MakeSyntheticCorpus(SyntheticKind::kMixed, opts);
  for (std::size_t d = 0; d < 5; ++d) {
    EXPECT_EQ(a.corpus.documents()[d].source, b.corpus.documents()[d].source);
    EXPECT_EQ(a.corpus.documents()[d].target, b.corpus.documents()[d].target);
  }
  EXPECT_EQ(ParseSyntheticKind("tail"), SyntheticKind::kTailBiased);
  EXPECT_THROW(ParseSyntheticKind("other"), ValidationError);
}

}  // namespace
}  // namespace subaspect
