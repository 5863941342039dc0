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

#ifndef SUBASPECT_ORACLE_H_
#define SUBASPECT_ORACLE_H_

#include <cstddef>
#include <vector>

#include "subaspect/corpus.h"
#include "subaspect/rouge.h"
#include "subaspect/selection.h"

namespace subaspect {

struct OracleTrace {
  Selection selection;
  // ROUGE-L F after each accepted round.
  std::vector<double> scores;
};

// Greedy forward selection on ROUGE-L F against the reference summary. Stops
// early when no sentence strictly improves the score, but always returns at
// least one sentence.
OracleTrace GreedyOracleTrace(const Document& doc, std::size_t k,
                              const RougeOptions& options = {});
Selection GreedyOracle(const Document& doc, std::size_t k,
                       const RougeOptions& options = {});

// ROUGE-L F of a set of source sentences against the reference.
double OracleObjective(const Document& doc,
                       const std::vector<std::size_t>& indices,
                       const RougeOptions& options = {});

}  // namespace subaspect

#endif  // SUBASPECT_ORACLE_H_
