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

#ifndef SUBASPECT_CORPUS_H_
#define SUBASPECT_CORPUS_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace subaspect {

// Lowercased maximal runs of ASCII alphanumeric characters. Every other byte,
// including non-ASCII UTF-8 bytes, separates tokens.
using TokenizedSentence = std::vector<std::string>;

TokenizedSentence Tokenize(std::string_view sentence);

// Splits after '.', '!' or '?' when followed by whitespace or end of text.
// Pieces are trimmed and empty pieces dropped.
std::vector<std::string> SplitSentences(std::string_view text);

struct Document {
  std::string id;
  std::vector<std::string> source;
  std::vector<std::string> target;
  std::vector<TokenizedSentence> source_tokens;
  std::vector<TokenizedSentence> target_tokens;
  // Source length before any --max-source-sentences truncation.
  std::size_t original_source_count = 0;

  std::size_t num_source() const { return source.size(); }
  std::size_t num_target() const { return target.size(); }
};

// Validates the sentence lists and fills in the token lists. Throws
// ValidationError naming the document when a list is empty or a sentence is
// blank.
Document MakeDocument(std::string id, std::vector<std::string> source,
                      std::vector<std::string> target,
                      std::optional<std::size_t> max_source_sentences = {});

class Corpus {
 public:
  Corpus() = default;
  // Throws ValidationError on an empty list or duplicate ids.
  Corpus(std::string name, std::vector<Document> documents);

  const std::string& name() const { return name_; }
  const std::vector<Document>& documents() const { return documents_; }
  std::size_t size() const { return documents_.size(); }

  // nullptr when the id is unknown.
  const Document* Find(std::string_view id) const;
  std::optional<std::size_t> IndexOf(std::string_view id) const;

 private:
  std::string name_;
  std::vector<Document> documents_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct LoadOptions {
  std::optional<std::size_t> max_source_sentences;
};

// Reads the JSONL corpus format: one {"id","source","target"} object per line.
// Blank lines are skipped; unknown keys are ignored. Malformed lines raise
// FormatError with the 1-based line number.
Corpus ParseCorpus(std::istream& in, std::string name,
                   const LoadOptions& options = {});

// Corpus name is the file stem.
Corpus LoadCorpus(const std::string& path, const LoadOptions& options = {});

void WriteCorpus(const Corpus& corpus, std::ostream& out);

}  // namespace subaspect

#endif  // SUBASPECT_CORPUS_H_
