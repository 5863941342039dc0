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

// Deterministic random number generation. Everything random in the toolkit
// derives from a user seed through these helpers so that results do not depend
// on the standard library's distribution implementations or on thread count.

#ifndef SUBASPECT_RNG_H_
#define SUBASPECT_RNG_H_

#include <array>
#include <cstdint>
#include <string_view>

namespace subaspect {

// 64-bit FNV-1a over raw bytes.
uint64_t Fnv1a64(std::string_view bytes);

uint64_t SplitMix64(uint64_t& state);

// xoshiro256** (Blackman & Vigna), seeded through SplitMix64.
class Xoshiro256 {
 public:
  explicit Xoshiro256(uint64_t seed);

  uint64_t Next();

  // Uniform integer in [0, bound). bound must be positive. Uses rejection
  // sampling so the result is unbiased and platform independent.
  uint64_t UniformIndex(uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double UniformDouble();

 private:
  std::array<uint64_t, 4> s_;
};

// Streams used to decorrelate generators that share (seed, doc_id).
enum class RngStream : uint64_t {
  kRandomSelection = 1,
  kKMeans = 2,
  kEnsemble = 3,
  kSynthetic = 4,
};

// Generator keyed on (seed, doc_id, stream), so per-document results never
// depend on processing order.
Xoshiro256 KeyedRng(uint64_t seed, std::string_view doc_id, RngStream stream);

}  // namespace subaspect

#endif  // SUBASPECT_RNG_H_
