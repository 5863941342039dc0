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

#ifndef SUBASPECT_METRICS_H_
#define SUBASPECT_METRICS_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "subaspect/corpus.h"
#include "subaspect/embedding.h"
#include "subaspect/rouge.h"
#include "subaspect/selection.h"

namespace subaspect {

// Reference hulls smaller than this have no volume overlap.
inline constexpr double kMinReferenceArea = 1e-12;

// Intersection area of the selected and reference hulls over the reference
// hull area, both projected through the 2D PCA basis of the source rows.
// Empty when the reference hull is degenerate.
std::optional<double> VolumeOverlap(const Selection& selection,
                                    const EmbeddingMatrix& emb);

// |selection n oracle| / |oracle|. The oracle must be non-empty.
double SentenceOverlap(const Selection& selection, const Selection& oracle);

struct NgramNovelty {
  // |O n T| / |T| over n-gram sets.
  double overlap_oracle_target = 0.0;
  // |T \ S| / |T| over n-gram sets.
  double novel_target_source = 0.0;
};

NgramNovelty ComputeNgramNovelty(const Document& doc, const Selection& oracle,
                                 int n);

// Fraction of oracle sentences outside the union of the three aspect
// selections.
double OracleRecall(const Selection& position, const Selection& diversity,
                    const Selection& importance, const Selection& oracle);

struct MetricRecord {
  std::string doc_id;
  std::string algorithm;
  RougeScore rouge;
  std::optional<double> vo;
  double so = 0.0;
};

MetricRecord EvaluateSelection(const Document& doc, const Selection& selection,
                               const Selection& oracle,
                               const EmbeddingMatrix* emb,
                               const RougeOptions& options = {});

// JSONL {"doc_id","algorithm","r1","r2","rl","r","vo","so"}; "vo" is null
// when missing.
void WriteMetrics(const std::vector<MetricRecord>& records, std::ostream& out);
std::vector<MetricRecord> ParseMetrics(std::istream& in,
                                       const std::string& source_name);
std::vector<MetricRecord> ReadMetrics(const std::string& path);

}  // namespace subaspect

#endif  // SUBASPECT_METRICS_H_
