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

#ifndef SUBASPECT_SELECTION_H_
#define SUBASPECT_SELECTION_H_

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "subaspect/corpus.h"

namespace subaspect {

// Sentences chosen for one document by one algorithm. Canonical form has the
// indices sorted ascending without duplicates.
struct Selection {
  std::string doc_id;
  std::string algorithm;
  std::vector<std::size_t> indices;

  friend bool operator==(const Selection&, const Selection&) = default;
};

Selection MakeSelection(std::string doc_id, std::string algorithm,
                        std::vector<std::size_t> indices);

// The selected source sentences' tokens in document order.
std::vector<TokenizedSentence> SelectedTokens(const Document& doc,
                                              const Selection& selection);

// Number of sentences to select for a document.
struct KMode {
  // Unset: match the reference summary length.
  std::size_t fixed = 0;

  std::size_t For(const Document& doc) const {
    return fixed > 0 ? fixed : doc.num_target();
  }
};

// Parses "match-target" or "fixed:<n>" (n >= 1). ValidationError otherwise.
KMode ParseKMode(const std::string& text);

// JSONL lines {"doc_id","algorithm","indices":[...]}.
void WriteSelections(const std::vector<Selection>& selections,
                     std::ostream& out);
std::vector<Selection> ParseSelections(std::istream& in,
                                       const std::string& source_name);
std::vector<Selection> ReadSelections(const std::string& path);

// Checks doc ids exist and indices lie in range without duplicates; returns
// canonical (sorted) copies. Throws ValidationError.
std::vector<Selection> ValidateSelections(std::vector<Selection> selections,
                                          const Corpus& corpus);

}  // namespace subaspect

#endif  // SUBASPECT_SELECTION_H_
