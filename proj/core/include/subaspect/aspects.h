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

// Sub-aspect extractors: position (First/Last/Middle), diversity (Heuristic
// volume, ConvexFall) and importance (N-Nearest, K-Nearest).

#ifndef SUBASPECT_ASPECTS_H_
#define SUBASPECT_ASPECTS_H_

#include <cstddef>
#include <string>
#include <vector>

#include "subaspect/corpus.h"
#include "subaspect/embedding.h"
#include "subaspect/selection.h"

namespace subaspect {

enum class PositionMode { kFirst, kLast, kMiddle };

// first: 0..m-1; last: the final m; middle: the block starting at
// floor((N - k) / 2), clamped at 0. m = min(k, N).
Selection SelectPosition(const Document& doc, std::size_t k,
                         PositionMode mode);

// Greedy farthest-from-centroid selection. The seed is farthest from the
// centroid of all source rows, each later pick farthest from the centroid of
// the rows chosen so far. Ties go to the lowest index.
Selection SelectHeuristicVolume(const EmbeddingMatrix& emb, std::size_t k);

// Every source sentence ordered by ConvexFall: rank r enters the selection at
// k = r + 1, so SelectConvexFall(emb, k) is the first k of this order.
// Hull vertices come first (the last survivor of pruning at rank 0), followed
// by interior points nearest the projected centroid first.
std::vector<std::size_t> ConvexFallRanking(const EmbeddingMatrix& emb);

// Convex hull of the 2D PCA projection, pruned one vertex at a time by lowest
// area-reduction ratio until k remain, or padded with the interior points
// nearest the projected centroid when the hull has fewer than k vertices.
Selection SelectConvexFall(const EmbeddingMatrix& emb, std::size_t k);

// Mean Pearson correlation of each source row with every other row; 0 for a
// single row.
std::vector<double> NNearestScores(const EmbeddingMatrix& emb);
// Source indices by descending score, ties by index.
std::vector<std::size_t> NNearestRanking(const EmbeddingMatrix& emb);
Selection SelectNNearest(const EmbeddingMatrix& emb, std::size_t k);

inline constexpr std::size_t kDefaultKnnK = 5;

// Repeatedly picks, from the remaining pool, the sentence whose K nearest
// pool-mates (distance 1 - Pearson) are closest on average.
Selection SelectKNearest(const EmbeddingMatrix& emb, std::size_t k,
                         std::size_t knn_k = kDefaultKnnK);

// Ranking helpers used by the position histograms.
std::vector<std::size_t> PositionRanking(std::size_t num_sentences);

}  // namespace subaspect

#endif  // SUBASPECT_ASPECTS_H_
