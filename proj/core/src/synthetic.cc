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

#include "subaspect/synthetic.h"

#include <algorithm>
#include <cctype>

#include "subaspect/errors.h"
#include "subaspect/rng.h"

namespace subaspect {
namespace {

constexpr const char* kOnsets[] = {"b", "d", "f", "g", "k", "l", "m", "n",
                                   "p", "r", "s", "t", "v", "z", "ch", "st"};
constexpr const char* kVowels[] = {"a", "e", "i", "o", "u", "ai", "ou", "ea"};

// Pronounceable, collision-free word for a vocabulary index.
std::string Word(std::size_t index) {
  std::string word;
  std::size_t v = index;
  do {
    word += kOnsets[v % 16];
    v /= 16;
    word += kVowels[v % 8];
    v /= 8;
  } while (v > 0);
  return word;
}

std::size_t Between(Xoshiro256& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.UniformIndex(hi - lo + 1));
}

std::vector<std::string> MakeWords(Xoshiro256& rng, std::size_t count,
                                   std::size_t vocab_begin,
                                   std::size_t vocab_size) {
  std::vector<std::string> words;
  words.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    words.push_back(Word(vocab_begin + rng.UniformIndex(vocab_size)));
  }
  return words;
}

std::string Render(std::vector<std::string> words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += ' ';
    out += words[i];
  }
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(out[0]));
  return out + ".";
}

std::vector<std::string> Dropout(Xoshiro256& rng,
                                 const std::vector<std::string>& words,
                                 double rate) {
  std::vector<std::string> kept;
  for (const auto& w : words) {
    if (rng.UniformDouble() >= rate) kept.push_back(w);
  }
  if (kept.empty()) kept.push_back(words.front());
  return kept;
}

}  // namespace

SyntheticKind ParseSyntheticKind(const std::string& text) {
  if (text == "copy") return SyntheticKind::kPerfectCopy;
  if (text == "lead") return SyntheticKind::kLeadBiased;
  if (text == "tail") return SyntheticKind::kTailBiased;
  if (text == "mixed") return SyntheticKind::kMixed;
  throw ValidationError("unknown synthetic kind \"" + text +
                        "\" (expected copy, lead, tail or mixed)");
}

SyntheticCorpus MakeSyntheticCorpus(SyntheticKind kind,
                                    const SyntheticOptions& options,
                                    const std::string& name) {
  if (options.num_docs == 0 || options.min_sentences == 0 ||
      options.min_sentences > options.max_sentences ||
      options.min_target == 0 || options.min_target > options.max_target ||
      options.min_words == 0 || options.min_words > options.max_words ||
      options.vocabulary < 2) {
    throw ValidationError("invalid synthetic corpus options");
  }
  SyntheticCorpus out;
  std::vector<Document> docs;
  const int width = 1 + static_cast<int>(std::to_string(options.num_docs).size());
  for (std::size_t d = 0; d < options.num_docs; ++d) {
    std::string id = std::to_string(d);
    id = "doc" + std::string(width - id.size(), '0') + id;
    Xoshiro256 rng = KeyedRng(options.seed, id, RngStream::kSynthetic);

    const std::size_t n =
        Between(rng, options.min_sentences, options.max_sentences);
    const std::size_t k =
        std::min(n, Between(rng, options.min_target, options.max_target));
    std::vector<std::vector<std::string>> source_words;
    std::vector<std::string> source;
    for (std::size_t i = 0; i < n; ++i) {
      source_words.push_back(
          MakeWords(rng, Between(rng, options.min_words, options.max_words), 0,
                    options.vocabulary));
      source.push_back(Render(source_words.back()));
    }

    SyntheticKind doc_kind = kind;
    bool fresh = false;
    if (kind == SyntheticKind::kMixed) {
      switch (rng.UniformIndex(4)) {
        case 0: doc_kind = SyntheticKind::kPerfectCopy; break;
        case 1: doc_kind = SyntheticKind::kLeadBiased; break;
        case 2: doc_kind = SyntheticKind::kTailBiased; break;
        default:
          doc_kind = SyntheticKind::kLeadBiased;
          fresh = true;
      }
    }

    std::vector<std::size_t> picked;
    switch (doc_kind) {
      case SyntheticKind::kPerfectCopy: {
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        for (std::size_t i = 0; i < k; ++i) {
          std::swap(pool[i], pool[i + rng.UniformIndex(n - i)]);
        }
        picked.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(picked.begin(), picked.end());
        break;
      }
      case SyntheticKind::kTailBiased:
        for (std::size_t i = n - k; i < n; ++i) picked.push_back(i);
        break;
      default:
        for (std::size_t i = 0; i < k; ++i) picked.push_back(i);
    }

    std::vector<std::string> target;
    for (std::size_t i : picked) {
      if (doc_kind == SyntheticKind::kPerfectCopy) {
        target.push_back(source[i]);
        continue;
      }
      std::vector<std::string> words =
          Dropout(rng, source_words[i], options.dropout);
      if (fresh) {
        // Abstractive flavour: add words unseen in any source sentence.
        auto extra = MakeWords(rng, 1 + rng.UniformIndex(3), options.vocabulary,
                               options.vocabulary);
        words.insert(words.end(), extra.begin(), extra.end());
      }
      target.push_back(Render(std::move(words)));
    }
    docs.push_back(MakeDocument(id, std::move(source), std::move(target)));
    out.provenance.push_back(std::move(picked));
  }
  out.corpus = Corpus(name, std::move(docs));
  return out;
}

}  // namespace subaspect
