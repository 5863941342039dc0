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

// Synthetic corpora with known ground truth, used by the bundled data set,
// the tests and the acceptance suite.

#ifndef SUBASPECT_SYNTHETIC_H_
#define SUBASPECT_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "subaspect/corpus.h"

namespace subaspect {

enum class SyntheticKind {
  // Targets copy k random source sentences verbatim.
  kPerfectCopy,
  // Targets are the first k source sentences with random token dropout.
  kLeadBiased,
  // Mirror of kLeadBiased drawing from the last k sentences.
  kTailBiased,
  // Mix of the above plus targets with fresh vocabulary.
  kMixed,
};

SyntheticKind ParseSyntheticKind(const std::string& text);

struct SyntheticOptions {
  std::size_t num_docs = 200;
  std::size_t min_sentences = 8;
  std::size_t max_sentences = 24;
  std::size_t min_target = 1;
  std::size_t max_target = 4;
  std::size_t min_words = 6;
  std::size_t max_words = 16;
  std::size_t vocabulary = 2000;
  // Probability of dropping each token in the biased kinds.
  double dropout = 0.3;
  std::uint64_t seed = 7;
};

struct SyntheticCorpus {
  Corpus corpus;
  // Source indices each target was drawn from (ascending), per document.
  std::vector<std::vector<std::size_t>> provenance;
};

SyntheticCorpus MakeSyntheticCorpus(SyntheticKind kind,
                                    const SyntheticOptions& options,
                                    const std::string& name = "synthetic");

}  // namespace subaspect

#endif  // SUBASPECT_SYNTHETIC_H_
