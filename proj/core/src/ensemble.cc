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

#include "subaspect/ensemble.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "subaspect/errors.h"
#include "subaspect/rng.h"

namespace subaspect {

EnsembleMode ParseEnsembleMode(const std::string& text) {
  if (text == "rand") return EnsembleMode::kRand;
  if (text == "topk") return EnsembleMode::kTopK;
  throw ValidationError("unknown ensemble mode \"" + text +
                        "\" (expected rand or topk)");
}

std::string EnsembleModeName(EnsembleMode mode) {
  return mode == EnsembleMode::kRand ? "rand" : "topk";
}

const std::vector<std::string>& AspectPool() {
  static const std::vector<std::string> kPool = {"first", "convexfall",
                                                 "n_nearest"};
  return kPool;
}

Selection Combine(const std::vector<Selection>& selections, std::size_t k,
                  EnsembleMode mode, std::uint64_t seed,
                  const std::string& label) {
  if (selections.empty()) {
    throw std::invalid_argument("ensemble: no input selections");
  }
  const std::string& doc_id = selections.front().doc_id;
  std::map<std::size_t, std::size_t> counts;
  for (const auto& s : selections) {
    if (s.doc_id != doc_id) {
      throw std::invalid_argument("ensemble: selections span documents \"" +
                                  doc_id + "\" and \"" + s.doc_id + "\"");
    }
    std::vector<std::size_t> unique = s.indices;
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    for (std::size_t i : unique) ++counts[i];
  }
  std::vector<std::size_t> pool;
  pool.reserve(counts.size());
  for (const auto& [index, count] : counts) pool.push_back(index);
  const std::size_t m = std::min(k, pool.size());

  std::vector<std::size_t> out;
  if (mode == EnsembleMode::kRand) {
    Xoshiro256 rng = KeyedRng(seed, doc_id, RngStream::kEnsemble);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = i + rng.UniformIndex(pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    out.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m));
  } else {
    // pool is ascending, so a stable sort by count keeps lower indices first.
    std::stable_sort(pool.begin(), pool.end(),
                     [&](std::size_t a, std::size_t b) {
                       return counts[a] > counts[b];
                     });
    out.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m));
  }
  std::sort(out.begin(), out.end());
  return {doc_id, label, std::move(out)};
}

}  // namespace subaspect
