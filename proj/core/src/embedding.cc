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

#include "subaspect/embedding.h"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <utility>

#include "subaspect/errors.h"
#include "subaspect/fileio.h"
#include "subaspect/parallel.h"
#include "subaspect/rng.h"

namespace subaspect {

EmbeddingMatrix::EmbeddingMatrix(std::string doc_id, std::size_t dim,
                                 std::size_t num_source,
                                 std::size_t num_target,
                                 std::vector<float> values)
    : doc_id_(std::move(doc_id)),
      dim_(dim),
      num_source_(num_source),
      num_target_(num_target),
      values_(std::move(values)) {
  if (values_.size() != (num_source_ + num_target_) * dim_) {
    throw ValidationError("embedding matrix \"" + doc_id_ +
                          "\": value count does not match shape");
  }
}

std::span<const float> EmbeddingMatrix::source_row(std::size_t i) const {
  return {values_.data() + i * dim_, dim_};
}

std::span<const float> EmbeddingMatrix::target_row(std::size_t i) const {
  return {values_.data() + (num_source_ + i) * dim_, dim_};
}

RowMatrix EmbeddingMatrix::SourceMatrix() const {
  return RowMatrix(num_source_, dim_,
                   std::vector<double>(values_.begin(),
                                       values_.begin() + num_source_ * dim_));
}

RowMatrix EmbeddingMatrix::TargetMatrix() const {
  return RowMatrix(num_target_, dim_,
                   std::vector<double>(values_.begin() + num_source_ * dim_,
                                       values_.end()));
}

EmbeddingMatrix EmbeddingMatrix::TruncateSource(std::size_t n) const {
  if (n >= num_source_) return *this;
  std::vector<float> values(values_.begin(), values_.begin() + n * dim_);
  values.insert(values.end(), values_.begin() + num_source_ * dim_,
                values_.end());
  return EmbeddingMatrix(doc_id_, dim_, n, num_target_, std::move(values));
}

EmbeddingMatrix EmbeddingMatrix::Scaled(double factor) const {
  std::vector<float> values(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values[i] = static_cast<float>(static_cast<double>(values_[i]) * factor);
  }
  return EmbeddingMatrix(doc_id_, dim_, num_source_, num_target_,
                         std::move(values));
}

void EmbeddingStore::Add(EmbeddingMatrix matrix) {
  if (dim_ == 0) dim_ = matrix.dim();
  if (matrix.dim() != dim_) {
    throw ValidationError("embedding dim mismatch for \"" + matrix.doc_id() +
                          "\": " + std::to_string(matrix.dim()) + " vs " +
                          std::to_string(dim_));
  }
  std::string id = matrix.doc_id();
  if (!matrices_.emplace(id, std::move(matrix)).second) {
    throw ValidationError("duplicate embedding record \"" + id + "\"");
  }
}

const EmbeddingMatrix& EmbeddingStore::Get(const std::string& doc_id) const {
  auto it = matrices_.find(doc_id);
  if (it == matrices_.end()) {
    throw ValidationError("no embeddings for document \"" + doc_id + "\"");
  }
  return it->second;
}

bool EmbeddingStore::Contains(const std::string& doc_id) const {
  return matrices_.count(doc_id) > 0;
}

std::vector<float> EncodeSentenceFallback(const TokenizedSentence& tokens,
                                          std::size_t dim) {
  std::vector<double> sum(dim, 0.0);
  for (const auto& token : tokens) {
    const uint64_t h = Fnv1a64(token);
    sum[h % dim] += (h >> 63) ? -1.0 : 1.0;
  }
  std::vector<float> out(dim, 0.0f);
  if (tokens.empty()) return out;
  const double count = static_cast<double>(tokens.size());
  double norm_sq = 0.0;
  for (double& v : sum) {
    v /= count;
    norm_sq += v * v;
  }
  // Opposite-signed collisions can cancel every entry.
  if (norm_sq == 0.0) return out;
  const double norm = std::sqrt(norm_sq);
  for (std::size_t i = 0; i < dim; ++i) {
    out[i] = static_cast<float>(sum[i] / norm);
  }
  return out;
}

EmbeddingMatrix EncodeFallback(const Document& doc, std::size_t dim) {
  if (dim < 2) throw ValidationError("fallback encoder needs dim >= 2");
  std::vector<float> values;
  values.reserve((doc.num_source() + doc.num_target()) * dim);
  auto append = [&](const TokenizedSentence& tokens) {
    auto v = EncodeSentenceFallback(tokens, dim);
    values.insert(values.end(), v.begin(), v.end());
  };
  for (const auto& t : doc.source_tokens) append(t);
  for (const auto& t : doc.target_tokens) append(t);
  return EmbeddingMatrix(doc.id, dim, doc.num_source(), doc.num_target(),
                         std::move(values));
}

EmbeddingStore EncodeCorpusFallback(const Corpus& corpus, std::size_t dim,
                                    std::size_t jobs) {
  std::vector<EmbeddingMatrix> matrices(corpus.size());
  ParallelFor(corpus.size(), jobs, [&](std::size_t i) {
    matrices[i] = EncodeFallback(corpus.documents()[i], dim);
  });
  EmbeddingStore store(dim);
  for (auto& m : matrices) store.Add(std::move(m));
  return store;
}

namespace {

class Reader {
 public:
  explicit Reader(std::string bytes) : bytes_(std::move(bytes)) {}

  std::size_t offset() const { return pos_; }
  bool done() const { return pos_ == bytes_.size(); }

  uint32_t U32(const char* what) {
    Need(4, what);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      v |= static_cast<uint32_t>(static_cast<unsigned char>(bytes_[pos_ + i]))
           << (8 * i);
    }
    pos_ += 4;
    return v;
  }

  std::string Bytes(std::size_t n, const char* what) {
    Need(n, what);
    std::string out = bytes_.substr(pos_, n);
    pos_ += n;
    return out;
  }

  float F32(const char* what) { return std::bit_cast<float>(U32(what)); }

  [[noreturn]] void Fail(const std::string& message) const {
    throw FormatError("SAEM format error at byte " + std::to_string(pos_) +
                      ": " + message);
  }

 private:
  void Need(std::size_t n, const char* what) const {
    if (bytes_.size() - pos_ < n) {
      Fail(std::string("truncated while reading ") + what);
    }
  }

  std::string bytes_;
  std::size_t pos_ = 0;
};

void PutU32(std::string& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>(v >> (8 * i)));
}

}  // namespace

EmbeddingStore ParseEmbeddings(std::istream& in) {
  Reader reader(std::string(std::istreambuf_iterator<char>(in), {}));
  if (reader.Bytes(4, "magic") != "SAEM") {
    throw FormatError("SAEM format error at byte 0: bad magic");
  }
  const uint32_t version = reader.U32("version");
  if (version != kSaemVersion) {
    reader.Fail("unsupported version " + std::to_string(version));
  }
  const uint32_t dim = reader.U32("dim");
  if (dim == 0) reader.Fail("dim must be positive");
  EmbeddingStore store(dim);
  std::string previous;
  bool first = true;
  while (!reader.done()) {
    const std::size_t record_start = reader.offset();
    const uint32_t id_len = reader.U32("id length");
    std::string id = reader.Bytes(id_len, "document id");
    if (!first && id <= previous) {
      throw FormatError("SAEM format error at byte " +
                        std::to_string(record_start) + ": record \"" + id +
                        "\" is out of order or duplicated");
    }
    const uint32_t n_source = reader.U32("source row count");
    const uint32_t n_target = reader.U32("target row count");
    const std::size_t count =
        (static_cast<std::size_t>(n_source) + n_target) * dim;
    std::vector<float> values;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const float v = reader.F32("embedding values");
      if (!std::isfinite(v)) reader.Fail("non-finite value in \"" + id + "\"");
      values.push_back(v);
    }
    store.Add(EmbeddingMatrix(id, dim, n_source, n_target, std::move(values)));
    previous = std::move(id);
    first = false;
  }
  return store;
}

EmbeddingStore CheckAgainstCorpus(EmbeddingStore store, const Corpus& corpus) {
  EmbeddingStore checked(store.dim());
  for (const auto& doc : corpus.documents()) {
    const EmbeddingMatrix& m = store.Get(doc.id);
    if (m.num_target() != doc.num_target()) {
      throw ValidationError("document \"" + doc.id + "\": embeddings have " +
                            std::to_string(m.num_target()) +
                            " target rows, corpus has " +
                            std::to_string(doc.num_target()));
    }
    if (m.num_source() == doc.num_source()) {
      checked.Add(m);
    } else if (m.num_source() == doc.original_source_count &&
               doc.original_source_count > doc.num_source()) {
      checked.Add(m.TruncateSource(doc.num_source()));
    } else {
      throw ValidationError("document \"" + doc.id + "\": embeddings have " +
                            std::to_string(m.num_source()) +
                            " source rows, corpus has " +
                            std::to_string(doc.num_source()));
    }
  }
  return checked;
}

EmbeddingStore ReadEmbeddings(const std::string& path, const Corpus& corpus) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open embeddings " + path);
  EmbeddingStore store;
  try {
    store = ParseEmbeddings(in);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
  return CheckAgainstCorpus(std::move(store), corpus);
}

void SerializeEmbeddings(const EmbeddingStore& store, std::ostream& out) {
  if (store.empty()) throw ValidationError("refusing to write empty store");
  for (const auto& [id, m] : store.matrices()) {
    if (m.dim() != store.dim()) {
      throw ValidationError("embedding dim mismatch for \"" + id + "\"");
    }
  }
  std::string bytes = "SAEM";
  PutU32(bytes, kSaemVersion);
  PutU32(bytes, static_cast<uint32_t>(store.dim()));
  for (const auto& [id, m] : store.matrices()) {
    PutU32(bytes, static_cast<uint32_t>(id.size()));
    bytes += id;
    PutU32(bytes, static_cast<uint32_t>(m.num_source()));
    PutU32(bytes, static_cast<uint32_t>(m.num_target()));
    for (float v : m.values()) PutU32(bytes, std::bit_cast<uint32_t>(v));
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void WriteEmbeddings(const EmbeddingStore& store, const std::string& path) {
  std::ostringstream out;
  SerializeEmbeddings(store, out);
  WriteFileAtomic(path, out.str());
}

}  // namespace subaspect
