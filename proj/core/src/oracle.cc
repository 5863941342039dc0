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

#include "subaspect/oracle.h"

#include <algorithm>

#include "ranking.h"

namespace subaspect {
namespace {

constexpr double kImprovementTolerance = 1e-12;

}  // namespace

double OracleObjective(const Document& doc,
                       const std::vector<std::size_t>& indices,
                       const RougeOptions& options) {
  std::vector<std::size_t> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<TokenizedSentence> candidate;
  candidate.reserve(sorted.size());
  for (std::size_t i : sorted) candidate.push_back(doc.source_tokens[i]);
  return RougeL(candidate, doc.target_tokens, options);
}

OracleTrace GreedyOracleTrace(const Document& doc, std::size_t k,
                              const RougeOptions& options) {
  const std::size_t n = doc.num_source();
  const std::size_t m = std::min(k, n);
  OracleTrace trace;
  trace.selection.doc_id = doc.id;
  trace.selection.algorithm = "oracle";
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> pool = internal::Iota(n);
  double best = 0.0;
  std::vector<std::size_t> trial;
  while (chosen.size() < m) {
    std::vector<double> scores(n, 0.0);
    for (std::size_t s : pool) {
      trial = chosen;
      trial.push_back(s);
      scores[s] = OracleObjective(doc, trial, options);
    }
    const std::size_t pick = internal::ArgMax(
        pool, [&](std::size_t s) { return scores[s]; }, kImprovementTolerance);
    // The first pick is mandatory so the oracle is never empty.
    if (!chosen.empty() && scores[pick] <= best + kImprovementTolerance) break;
    chosen.push_back(pick);
    pool.erase(std::find(pool.begin(), pool.end(), pick));
    best = scores[pick];
    trace.scores.push_back(best);
  }
  std::sort(chosen.begin(), chosen.end());
  trace.selection.indices = std::move(chosen);
  return trace;
}

Selection GreedyOracle(const Document& doc, std::size_t k,
                       const RougeOptions& options) {
  return GreedyOracleTrace(doc, k, options).selection;
}

}  // namespace subaspect
