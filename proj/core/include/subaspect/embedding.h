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

#ifndef SUBASPECT_EMBEDDING_H_
#define SUBASPECT_EMBEDDING_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "subaspect/corpus.h"
#include "subaspect/matrix.h"

namespace subaspect {

// Sentence vectors for one document, stored as 32-bit floats exactly as they
// appear on disk. Geometry and statistics use the double-precision views.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  EmbeddingMatrix(std::string doc_id, std::size_t dim,
                  std::size_t num_source, std::size_t num_target,
                  std::vector<float> values);

  const std::string& doc_id() const { return doc_id_; }
  std::size_t dim() const { return dim_; }
  std::size_t num_source() const { return num_source_; }
  std::size_t num_target() const { return num_target_; }

  std::span<const float> source_row(std::size_t i) const;
  std::span<const float> target_row(std::size_t i) const;
  // Source rows first, then target rows.
  const std::vector<float>& values() const { return values_; }

  RowMatrix SourceMatrix() const;
  RowMatrix TargetMatrix() const;

  // Copy keeping only the first n source rows.
  EmbeddingMatrix TruncateSource(std::size_t n) const;
  // Copy with every entry multiplied by factor (computed in double, stored as
  // float).
  EmbeddingMatrix Scaled(double factor) const;

  friend bool operator==(const EmbeddingMatrix&,
                         const EmbeddingMatrix&) = default;

 private:
  std::string doc_id_;
  std::size_t dim_ = 0;
  std::size_t num_source_ = 0;
  std::size_t num_target_ = 0;
  std::vector<float> values_;
};

class EmbeddingStore {
 public:
  EmbeddingStore() = default;
  explicit EmbeddingStore(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return matrices_.size(); }
  bool empty() const { return matrices_.empty(); }

  // Throws ValidationError on a dimension mismatch or a duplicate id.
  void Add(EmbeddingMatrix matrix);

  // Throws ValidationError when the id is missing.
  const EmbeddingMatrix& Get(const std::string& doc_id) const;
  bool Contains(const std::string& doc_id) const;

  // Ascending byte order of doc ids.
  const std::map<std::string, EmbeddingMatrix>& matrices() const {
    return matrices_;
  }

  friend bool operator==(const EmbeddingStore&,
                         const EmbeddingStore&) = default;

 private:
  std::size_t dim_ = 0;
  std::map<std::string, EmbeddingMatrix> matrices_;
};

inline constexpr std::size_t kDefaultFallbackDim = 64;

// Feature-hashing sentence vector: each token contributes a single +-1 at
// index Fnv1a64(token) % dim, negative when bit 63 of the hash is set. The
// token vectors are summed in sentence order, divided by the token count and
// L2-normalized. A sentence without tokens maps to the zero vector.
std::vector<float> EncodeSentenceFallback(const TokenizedSentence& tokens,
                                          std::size_t dim);

// Requires dim >= 2.
EmbeddingMatrix EncodeFallback(const Document& doc, std::size_t dim);
EmbeddingStore EncodeCorpusFallback(const Corpus& corpus, std::size_t dim,
                                    std::size_t jobs = 1);

// SAEM v1, little-endian:
//   "SAEM" u32 version=1 u32 dim
//   per record, ascending doc id: u32 id_len, id bytes, u32 n_source,
//   u32 n_target, (n_source + n_target) * dim f32, source rows first.
inline constexpr std::uint32_t kSaemVersion = 1;

// Parses without reference to a corpus. Truncation and bad headers raise
// FormatError carrying the byte offset.
EmbeddingStore ParseEmbeddings(std::istream& in);

// Reads and checks the store against the corpus: every document must be
// present with matching sentence counts (ValidationError naming the document
// otherwise). Records for documents truncated by max_source_sentences are
// truncated to match. Records for ids outside the corpus are dropped.
EmbeddingStore ReadEmbeddings(const std::string& path, const Corpus& corpus);
EmbeddingStore CheckAgainstCorpus(EmbeddingStore store, const Corpus& corpus);

void SerializeEmbeddings(const EmbeddingStore& store, std::ostream& out);
// Throws ValidationError on an empty store, FormatError on I/O failure.
void WriteEmbeddings(const EmbeddingStore& store, const std::string& path);

}  // namespace subaspect

#endif  // SUBASPECT_EMBEDDING_H_
