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

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "subaspect/aspects.h"
#include "subaspect/embedding.h"
#include "subaspect/geometry.h"
#include "subaspect/oracle.h"
#include "subaspect/rouge.h"
#include "subaspect/synthetic.h"

namespace subaspect {
namespace {

std::vector<Point2> GaussianPoints(std::size_t n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Point2> pts(n);
  for (auto& p : pts) p = {g(rng), g(rng)};
  return pts;
}

EmbeddingMatrix RandomMatrix(std::size_t n, std::size_t dim) {
  std::mt19937_64 rng(n * 31 + dim);
  std::normal_distribution<float> g(0.0f, 1.0f);
  std::vector<float> values(n * dim);
  for (auto& v : values) v = g(rng);
  return EmbeddingMatrix("bench", dim, n, 0, std::move(values));
}

const Corpus& SyntheticDocs() {
  static const Corpus corpus = [] {
    SyntheticOptions opts;
    opts.num_docs = 64;
    return MakeSyntheticCorpus(SyntheticKind::kMixed, opts).corpus;
  }();
  return corpus;
}

void BM_Quickhull(benchmark::State& state) {
  const auto pts = GaussianPoints(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(QuickhullIndexed(pts));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Quickhull)->RangeMultiplier(4)->Range(16, 16384);

void BM_RougeL(benchmark::State& state) {
  const auto& docs = SyntheticDocs().documents();
  std::size_t i = 0;
  for (auto _ : state) {
    const Document& doc = docs[i++ % docs.size()];
    benchmark::DoNotOptimize(RougeL(doc.source_tokens, doc.target_tokens));
  }
}
BENCHMARK(BM_RougeL);

void BM_Pca2d(benchmark::State& state) {
  const EmbeddingMatrix emb =
      RandomMatrix(static_cast<std::size_t>(state.range(0)), 768);
  const RowMatrix rows = emb.SourceMatrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Pca2d(rows));
  }
}
BENCHMARK(BM_Pca2d)->Arg(8)->Arg(32)->Arg(128);

void BM_ConvexFall(benchmark::State& state) {
  const EmbeddingMatrix emb =
      RandomMatrix(static_cast<std::size_t>(state.range(0)), 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SelectConvexFall(emb, 3));
  }
}
BENCHMARK(BM_ConvexFall)->Arg(8)->Arg(32)->Arg(128);

void BM_GreedyOracle(benchmark::State& state) {
  const auto& docs = SyntheticDocs().documents();
  std::size_t i = 0;
  for (auto _ : state) {
    const Document& doc = docs[i++ % docs.size()];
    benchmark::DoNotOptimize(GreedyOracle(doc, doc.num_target()));
  }
}
BENCHMARK(BM_GreedyOracle);

}  // namespace
}  // namespace subaspect

BENCHMARK_MAIN();
