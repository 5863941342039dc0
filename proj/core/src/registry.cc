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

#include "subaspect/registry.h"

#include <algorithm>

#include "subaspect/analysis.h"
#include "subaspect/errors.h"
#include "subaspect/oracle.h"

namespace subaspect {

const std::vector<std::string>& AlgorithmNames() {
  static const std::vector<std::string> kNames = {
      "first",     "last",      "middle",  "heuristic_volume", "convexfall",
      "n_nearest", "k_nearest", "kmeans",  "mmr",              "textrank",
      "lexrank",   "random",    "oracle"};
  return kNames;
}

bool IsAlgorithm(const std::string& name) {
  const auto& names = AlgorithmNames();
  return std::find(names.begin(), names.end(), name) != names.end();
}

bool NeedsEmbeddings(const std::string& name) {
  return name == "heuristic_volume" || name == "convexfall" ||
         name == "n_nearest" || name == "k_nearest" || name == "kmeans" ||
         name == "mmr" || name == "lexrank";
}

Selection RunAlgorithm(const std::string& name, const Document& doc,
                       const EmbeddingMatrix* emb, std::size_t k,
                       const ExtractOptions& options) {
  if (!IsAlgorithm(name)) {
    std::string known;
    for (const auto& n : AlgorithmNames()) {
      if (!known.empty()) known += ", ";
      known += n;
    }
    throw ValidationError("unknown algorithm \"" + name + "\"; known: " +
                          known);
  }
  if (k == 0) throw ValidationError("k must be at least 1");
  if (NeedsEmbeddings(name) && emb == nullptr) {
    throw ValidationError("algorithm \"" + name +
                          "\" needs embeddings for document \"" + doc.id +
                          "\"");
  }
  if (name == "first") return SelectPosition(doc, k, PositionMode::kFirst);
  if (name == "last") return SelectPosition(doc, k, PositionMode::kLast);
  if (name == "middle") return SelectPosition(doc, k, PositionMode::kMiddle);
  if (name == "heuristic_volume") return SelectHeuristicVolume(*emb, k);
  if (name == "convexfall") return SelectConvexFall(*emb, k);
  if (name == "n_nearest") return SelectNNearest(*emb, k);
  if (name == "k_nearest") return SelectKNearest(*emb, k, options.knn_k);
  if (name == "kmeans") return SelectKMeans(*emb, k, options.seed);
  if (name == "mmr") return SelectMmr(*emb, k, options.mmr_lambda);
  if (name == "textrank") return SelectTextRank(doc, k, options.damping);
  if (name == "lexrank") {
    return SelectLexRank(*emb, k, options.lexrank_threshold, options.damping);
  }
  if (name == "random") return SelectRandom(doc, k, options.seed);
  return GreedyOracle(doc, k, options.rouge);
}

}  // namespace subaspect
