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

#ifndef SUBASPECT_ROUGE_H_
#define SUBASPECT_ROUGE_H_

#include <cstddef>
#include <span>

#include "subaspect/corpus.h"

namespace subaspect {

using Text = std::span<const TokenizedSentence>;

struct RougeOptions {
  // F-measure weight; 1 gives the harmonic mean of precision and recall.
  double beta = 1.0;
};

struct RougeScore {
  double r1 = 0.0;
  double r2 = 0.0;
  double rl = 0.0;
  double mean = 0.0;
};

// F_beta from precision and recall; 0 when either is 0.
double FMeasure(double precision, double recall, double beta = 1.0);

// Clipped n-gram F-measure. N-grams never cross sentence boundaries.
// n must be 1 or 2 (std::invalid_argument otherwise).
double RougeN(Text candidate, Text reference, int n,
              const RougeOptions& options = {});

std::size_t LcsLength(std::span<const std::string> a,
                      std::span<const std::string> b);

// Summary-level ROUGE-L. The candidate is read as one token sequence; each
// reference sentence contributes its LCS with it. The hit total is capped by
// each side's token count before forming precision and recall.
double RougeL(Text candidate, Text reference, const RougeOptions& options = {});

RougeScore RougeAll(Text candidate, Text reference,
                    const RougeOptions& options = {});

}  // namespace subaspect

#endif  // SUBASPECT_ROUGE_H_
