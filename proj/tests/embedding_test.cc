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

#include "subaspect/embedding.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "subaspect/errors.h"
#include "subaspect/rng.h"
#include "support.h"

namespace subaspect {
namespace {

// Published FNV-1a 64-bit test vectors.
TEST(Fnv1aTest, ReferenceVectors) {
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(Fnv1a64("foobar"), 0x85944171f73967e8ull);
}

std::uint64_t ReferenceFnv(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

TEST(FallbackEncoderTest, CatDogByHand) {
  const std::size_t dim = 8;
  std::vector<double> expected(dim, 0.0);
  for (const std::string tok : {"cat", "dog"}) {
    const std::uint64_t h = ReferenceFnv(tok);
    expected[h % dim] += (h >> 63) ? -1.0 : 1.0;
  }
  double norm = 0.0;
  for (double& v : expected) v /= 2.0;
  for (double v : expected) norm += v * v;
  norm = std::sqrt(norm);
  const auto got = EncodeSentenceFallback({"cat", "dog"}, dim);
  ASSERT_EQ(got.size(), dim);
  for (std::size_t i = 0; i < dim; ++i) {
    EXPECT_FLOAT_EQ(got[i], static_cast<float>(expected[i] / norm)) << i;
  }
}

TEST(FallbackEncoderTest, RepeatedTokenMatchesSingle) {
  const auto a = EncodeSentenceFallback({"a", "a"}, 64);
  const auto b = EncodeSentenceFallback({"a"}, 64);
  EXPECT_EQ(a, b);
  double norm = 0.0;
  for (float v : a) norm += double(v) * v;
  EXPECT_NEAR(std::sqrt(norm), 1.0, 1e-6);
}

TEST(FallbackEncoderTest, EmptySentenceIsZero) {
  const auto v = EncodeSentenceFallback({}, 16);
  EXPECT_EQ(v, std::vector<float>(16, 0.0f));
}

TEST(FallbackEncoderTest, NonEmptyRowsHaveUnitNorm) {
  const Document doc = MakeDocument(
      "d", {"Alpha beta gamma.", "Delta epsilon.", "Zeta eta theta iota."},
      {"Kappa lambda."});
  const EmbeddingMatrix m = EncodeFallback(doc, 64);
  EXPECT_EQ(m.num_source(), 3u);
  EXPECT_EQ(m.num_target(), 1u);
  for (std::size_t i = 0; i < 3; ++i) {
    double norm = 0.0;
    for (float v : m.source_row(i)) norm += double(v) * v;
    EXPECT_NEAR(std::sqrt(norm), 1.0, 1e-6);
  }
}

EmbeddingStore TwoDocStore() {
  EmbeddingStore store(3);
  store.Add(EmbeddingMatrix("d2", 3, 1, 1, {1, 2, 3, 4, 5, 6}));
  store.Add(EmbeddingMatrix("d1", 3, 2, 1, {0.5f, -1, 2, 7, 8, 9, 1e-7f, 3,
                                            -0.0f}));
  return store;
}

TEST(SaemTest, RoundTripBitExact) {
  const EmbeddingStore store = TwoDocStore();
  std::ostringstream out;
  SerializeEmbeddings(store, out);
  std::istringstream in(out.str());
  const EmbeddingStore back = ParseEmbeddings(in);
  EXPECT_TRUE(back == store);
}

TEST(SaemTest, RecordsInAscendingIdOrder) {
  std::ostringstream out;
  SerializeEmbeddings(TwoDocStore(), out);
  const std::string bytes = out.str();
  EXPECT_EQ(bytes.substr(0, 4), "SAEM");
  // Header is 12 bytes; the first record's id follows its u32 length.
  EXPECT_EQ(bytes.substr(16, 2), "d1");
  EXPECT_LT(bytes.find("d1"), bytes.find("d2"));
}

TEST(SaemTest, ZeroMatrixLayout) {
  EmbeddingStore store(4);
  store.Add(EmbeddingMatrix("d1", 4, 1, 1, std::vector<float>(8, 0.0f)));
  std::ostringstream out;
  SerializeEmbeddings(store, out);
  // magic + version + dim + id_len + id + n_src + n_tgt + 8 floats
  EXPECT_EQ(out.str().size(), 4u + 4 + 4 + 4 + 2 + 4 + 4 + 8 * 4);
  std::istringstream in(out.str());
  EXPECT_TRUE(ParseEmbeddings(in) == store);
}

TEST(SaemTest, TruncatedFileReportsOffset) {
  std::ostringstream out;
  SerializeEmbeddings(TwoDocStore(), out);
  std::string bytes = out.str();
  bytes.resize(bytes.size() - 3);
  std::istringstream in(bytes);
  try {
    ParseEmbeddings(in);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
  }
}

TEST(SaemTest, DimMismatchRejectedOnAdd) {
  EmbeddingStore store(3);
  EXPECT_THROW(store.Add(EmbeddingMatrix("x", 4, 1, 0, {1, 2, 3, 4})),
               ValidationError);
}

TEST(SaemTest, CorpusMismatchNamesDocument) {
  const Corpus corpus("c", {MakeDocument("d1", {"A.", "B."}, {"A."})});
  EmbeddingStore store(2);
  store.Add(EmbeddingMatrix("d1", 2, 3, 1, std::vector<float>(8, 1.0f)));
  try {
    CheckAgainstCorpus(store, corpus);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("d1"), std::string::npos);
  }
}

TEST(SaemTest, WriteReadFile) {
  const auto dir = testing::TempDir("saem");
  const Corpus corpus(
      "c", {MakeDocument("d1", {"A b.", "C d."}, {"A b."}),
            MakeDocument("d0", {"E f."}, {"E."})});
  const EmbeddingStore store = EncodeCorpusFallback(corpus, 16, 2);
  const std::string path = (dir / "e.saem").string();
  WriteEmbeddings(store, path);
  EXPECT_TRUE(ReadEmbeddings(path, corpus) == store);
  EXPECT_TRUE(EncodeCorpusFallback(corpus, 16, 1) == store);
}

}  // namespace
}  // namespace subaspect
