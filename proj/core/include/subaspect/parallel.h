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

#ifndef SUBASPECT_PARALLEL_H_
#define SUBASPECT_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace subaspect {

// Logical CPU count, at least 1.
std::size_t DefaultJobs();

// Calls fn(i) for i in [0, n) on up to `jobs` threads. Callers write results
// into per-index slots so output order never depends on scheduling. If any
// call throws, the exception from the lowest index is rethrown after all
// indices have run.
void ParallelFor(std::size_t n, std::size_t jobs,
                 const std::function<void(std::size_t)>& fn);

}  // namespace subaspect

#endif  // SUBASPECT_PARALLEL_H_
