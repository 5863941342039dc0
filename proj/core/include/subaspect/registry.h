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

#ifndef SUBASPECT_REGISTRY_H_
#define SUBASPECT_REGISTRY_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "subaspect/aspects.h"
#include "subaspect/baselines.h"
#include "subaspect/corpus.h"
#include "subaspect/embedding.h"
#include "subaspect/rouge.h"
#include "subaspect/selection.h"

namespace subaspect {

struct ExtractOptions {
  std::uint64_t seed = 42;
  std::size_t knn_k = kDefaultKnnK;
  double mmr_lambda = kDefaultMmrLambda;
  double lexrank_threshold = kDefaultLexRankThreshold;
  double damping = kDefaultDamping;
  RougeOptions rouge;
};

// Registry names in canonical order: first, last, middle, heuristic_volume,
// convexfall, n_nearest, k_nearest, kmeans, mmr, textrank, lexrank, random,
// oracle.
const std::vector<std::string>& AlgorithmNames();
bool IsAlgorithm(const std::string& name);
bool NeedsEmbeddings(const std::string& name);

// Runs a registered algorithm on one document. emb may be null for
// algorithms that do not use embeddings. Throws ValidationError for unknown
// names (listing the registry) or a missing embedding matrix.
Selection RunAlgorithm(const std::string& name, const Document& doc,
                       const EmbeddingMatrix* emb, std::size_t k,
                       const ExtractOptions& options);

}  // namespace subaspect

#endif  // SUBASPECT_REGISTRY_H_
