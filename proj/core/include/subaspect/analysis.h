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

// Corpus-level aggregation: aspect triangle, Venn regions, rank histograms,
// n-gram novelty and the per-algorithm bias table.

#ifndef SUBASPECT_ANALYSIS_H_
#define SUBASPECT_ANALYSIS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subaspect/corpus.h"
#include "subaspect/embedding.h"
#include "subaspect/metrics.h"
#include "subaspect/rouge.h"
#include "subaspect/selection.h"

namespace subaspect {

// Uniform sample of min(k, N) sentences keyed on (seed, doc id), sorted.
Selection SelectRandom(const Document& doc, std::size_t k, std::uint64_t seed);

struct Triangle {
  double position = 0.0;
  double diversity = 0.0;
  double importance = 0.0;
  // All inputs were zero; the coordinates fall back to the barycenter.
  bool degenerate = false;
};

// Simplex normalization of three non-negative scores. Throws
// std::invalid_argument on negative input.
Triangle TriangleCoords(double position, double diversity, double importance);

// Regions of the (P, D, I) Venn diagram, each exclusive of the others.
enum VennRegion : std::size_t {
  kPOnly = 0,
  kDOnly,
  kIOnly,
  kPD,
  kPI,
  kDI,
  kPDI,
  kNumVennRegions
};

const std::array<const char*, kNumVennRegions>& VennRegionNames();

// Region sizes for one document.
std::array<std::size_t, kNumVennRegions> VennCounts(const Selection& p,
                                                    const Selection& d,
                                                    const Selection& i);

struct VennSummary {
  // Per-document region counts over the union size, averaged.
  std::array<double, kNumVennRegions> fractions{};
  // Raw region counts, averaged.
  std::array<double, kNumVennRegions> mean_counts{};
  double mean_union_size = 0.0;
  double oracle_recall = 0.0;
  std::size_t num_docs = 0;
};

// Parallel arrays, one entry per document.
VennSummary VennRegions(const std::vector<Selection>& p,
                        const std::vector<Selection>& d,
                        const std::vector<Selection>& i,
                        const std::vector<Selection>& oracle);

inline constexpr std::size_t kHistogramBins = 20;
using Histogram = std::array<std::uint64_t, kHistogramBins>;

// Adds one count per oracle sentence at bin floor(20 * rank / N), where rank
// is the sentence's position in the aspect ranking (a permutation of [0, N)).
void AccumulatePositionHistogram(const std::vector<std::size_t>& ranking,
                                 const Selection& oracle, Histogram& histogram);
Histogram PositionHistogram(const std::vector<std::size_t>& ranking,
                            const Selection& oracle);

struct AlgorithmSummary {
  std::string algorithm;
  std::size_t num_docs = 0;
  double r1 = 0.0;
  double r2 = 0.0;
  double rl = 0.0;
  double r = 0.0;
  std::optional<double> vo;
  std::size_t vo_missing = 0;
  double so = 0.0;
};

struct NoveltySummary {
  double rouge_oracle_target = 0.0;
  NgramNovelty unigram;
  NgramNovelty bigram;
  std::size_t num_docs = 0;
};

// ROUGE of one system's selections against each aspect's selections,
// normalized to the simplex.
struct SystemBias {
  std::string algorithm;
  double r_position = 0.0;
  double r_diversity = 0.0;
  double r_importance = 0.0;
  Triangle triangle;
};

struct ProjectedSentence {
  std::string doc_id;
  bool target = false;
  std::size_t index = 0;
  double x = 0.0;
  double y = 0.0;
};

struct BiasReport {
  std::string corpus;
  std::vector<AlgorithmSummary> algorithms;
  std::optional<Triangle> triangle;
  std::array<double, 3> triangle_inputs{};
  std::optional<VennSummary> venn;
  // position, diversity, importance
  std::optional<std::array<Histogram, 3>> histograms;
  std::optional<NoveltySummary> novelty;
  std::vector<SystemBias> system_bias;
  std::vector<ProjectedSentence> projections;
};

struct ReportInputs {
  std::string corpus_name;
  std::vector<MetricRecord> metrics;
  // Algorithms that must be present for every document.
  std::vector<std::string> required_algorithms;

  // Optional: enables Venn, histograms, novelty, system bias and PCA dumps.
  const Corpus* corpus = nullptr;
  const EmbeddingStore* embeddings = nullptr;
  const std::vector<Selection>* oracle = nullptr;
  std::vector<Selection> systems;
  KMode k_mode;
  RougeOptions rouge;
  std::size_t jobs = 1;
};

// Aggregates per-document records into the bias report. Throws
// ValidationError listing algorithms with missing documents.
BiasReport BuildReport(const ReportInputs& inputs);

}  // namespace subaspect

#endif  // SUBASPECT_ANALYSIS_H_
