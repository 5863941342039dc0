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

#ifndef SUBASPECT_BASELINES_H_
#define SUBASPECT_BASELINES_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "subaspect/corpus.h"
#include "subaspect/embedding.h"
#include "subaspect/matrix.h"
#include "subaspect/selection.h"

namespace subaspect {

// Lloyd's algorithm with k-means++ seeding (min(k, N) clusters, at most 100
// iterations). Clusters are visited largest first and each contributes the
// member nearest its centroid; further rounds take the next-nearest members.
Selection SelectKMeans(const EmbeddingMatrix& emb, std::size_t k,
                       std::uint64_t seed);

inline constexpr double kDefaultMmrLambda = 0.5;

// Maximal marginal relevance over cosine similarity. Relevance is the cosine
// with the document centroid.
Selection SelectMmr(const EmbeddingMatrix& emb, std::size_t k,
                    double lambda = kDefaultMmrLambda);

inline constexpr double kDefaultLexRankThreshold = 0.1;
inline constexpr double kDefaultDamping = 0.85;

// PageRank over a weighted graph given as a square matrix of non-negative
// edge weights (diagonal ignored). Rows without outgoing weight jump
// uniformly. Power iteration to an L1 change below 1e-10, at most 1000 rounds.
std::vector<double> PageRank(const RowMatrix& weights,
                             double damping = kDefaultDamping);

// Unweighted graph with an edge wherever cosine >= threshold.
std::vector<double> LexRankScores(const EmbeddingMatrix& emb,
                                  double threshold = kDefaultLexRankThreshold,
                                  double damping = kDefaultDamping);
Selection SelectLexRank(const EmbeddingMatrix& emb, std::size_t k,
                        double threshold = kDefaultLexRankThreshold,
                        double damping = kDefaultDamping);

// Token-overlap weight |A n B| / (log(1 + |a|) + log(1 + |b|)), where A and B
// are token sets and |a|, |b| token counts.
double TextRankSimilarity(const TokenizedSentence& a,
                          const TokenizedSentence& b);
std::vector<double> TextRankScores(const Document& doc,
                                   double damping = kDefaultDamping);
Selection SelectTextRank(const Document& doc, std::size_t k,
                         double damping = kDefaultDamping);

// Indices of the top min(k, n) scores, ties by lower index, returned sorted.
std::vector<std::size_t> TopK(const std::vector<double>& scores,
                              std::size_t k, double tolerance = 1e-12);

}  // namespace subaspect

#endif  // SUBASPECT_BASELINES_H_
