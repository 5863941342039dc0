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

// Tolerant argmax/argmin helpers shared by the selectors. Scores within the
// tolerance of the current best count as ties and the lower index wins, which
// keeps selections stable under rounding (e.g. uniform rescaling).

#ifndef SUBASPECT_SRC_RANKING_H_
#define SUBASPECT_SRC_RANKING_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace subaspect::internal {

inline bool Exceeds(double candidate, double best, double abs_tol,
                    double rel_tol) {
  const double tol =
      abs_tol + rel_tol * std::max(std::abs(candidate), std::abs(best));
  return candidate > best + tol;
}

// Index of the largest score among `candidates` (scanned in ascending order).
template <typename ScoreFn>
std::size_t ArgMax(const std::vector<std::size_t>& candidates, ScoreFn score,
                   double abs_tol, double rel_tol = 0.0) {
  std::size_t best = candidates.front();
  double best_score = score(best);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double s = score(candidates[i]);
    if (Exceeds(s, best_score, abs_tol, rel_tol)) {
      best = candidates[i];
      best_score = s;
    }
  }
  return best;
}

template <typename ScoreFn>
std::size_t ArgMin(const std::vector<std::size_t>& candidates, ScoreFn score,
                   double abs_tol, double rel_tol = 0.0) {
  return ArgMax(
      candidates, [&](std::size_t i) { return -score(i); }, abs_tol, rel_tol);
}

// Full descending order by repeated tolerant argmax.
inline std::vector<std::size_t> RankDescending(const std::vector<double>& scores,
                                               double abs_tol,
                                               double rel_tol = 0.0) {
  std::vector<std::size_t> remaining(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) remaining[i] = i;
  std::vector<std::size_t> order;
  order.reserve(scores.size());
  while (!remaining.empty()) {
    const std::size_t pick = ArgMax(
        remaining, [&](std::size_t i) { return scores[i]; }, abs_tol, rel_tol);
    order.push_back(pick);
    remaining.erase(std::find(remaining.begin(), remaining.end(), pick));
  }
  return order;
}

inline std::vector<std::size_t> Iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace subaspect::internal

#endif  // SUBASPECT_SRC_RANKING_H_
