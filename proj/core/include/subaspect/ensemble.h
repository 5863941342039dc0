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

#ifndef SUBASPECT_ENSEMBLE_H_
#define SUBASPECT_ENSEMBLE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "subaspect/selection.h"

namespace subaspect {

enum class EnsembleMode { kRand, kTopK };

EnsembleMode ParseEnsembleMode(const std::string& text);
std::string EnsembleModeName(EnsembleMode mode);

// Combines selections of one document. rand samples min(k, |union|) indices
// uniformly without replacement (RNG keyed on seed and doc id); topk ranks by
// occurrence count with ties to the lower index. The result is sorted.
// Throws std::invalid_argument on an empty input list or mixed documents.
Selection Combine(const std::vector<Selection>& selections, std::size_t k,
                  EnsembleMode mode, std::uint64_t seed,
                  const std::string& label);

// Members of the "asp" pool: one algorithm per sub-aspect.
const std::vector<std::string>& AspectPool();

}  // namespace subaspect

#endif  // SUBASPECT_ENSEMBLE_H_
