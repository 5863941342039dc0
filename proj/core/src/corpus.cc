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

#include "subaspect/corpus.h"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <utility>

#include "json.hpp"
#include "subaspect/errors.h"

namespace subaspect {
namespace {

using json = nlohmann::json;

bool IsAsciiAlnum(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

bool IsSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string> StringList(const json& object, const char* key,
                                    std::size_t line) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw FormatError("line " + std::to_string(line) + ": missing key \"" +
                      key + "\"");
  }
  if (!it->is_array()) {
    throw FormatError("line " + std::to_string(line) + ": \"" + key +
                      "\" must be an array of strings");
  }
  std::vector<std::string> out;
  out.reserve(it->size());
  for (const auto& v : *it) {
    if (!v.is_string()) {
      throw FormatError("line " + std::to_string(line) + ": \"" + key +
                        "\" must be an array of strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

TokenizedSentence Tokenize(std::string_view sentence) {
  TokenizedSentence tokens;
  std::string current;
  for (unsigned char c : sentence) {
    if (IsAsciiAlnum(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> SplitSentences(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    std::string_view piece = Trim(text.substr(start, end - start));
    if (!piece.empty()) out.emplace_back(piece);
    start = end;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    if (i + 1 == text.size() || IsSpace(text[i + 1])) emit(i + 1);
  }
  emit(text.size());
  return out;
}

Document MakeDocument(std::string id, std::vector<std::string> source,
                      std::vector<std::string> target,
                      std::optional<std::size_t> max_source_sentences) {
  Document doc;
  doc.original_source_count = source.size();
  if (max_source_sentences && source.size() > *max_source_sentences) {
    source.resize(*max_source_sentences);
  }
  if (source.empty()) {
    throw ValidationError("document \"" + id + "\": empty source");
  }
  if (target.empty()) {
    throw ValidationError("document \"" + id + "\": empty target");
  }
  auto check = [&](const std::vector<std::string>& sentences,
                   const char* side) {
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      if (Trim(sentences[i]).empty()) {
        throw ValidationError("document \"" + id + "\": blank " + side +
                              " sentence " + std::to_string(i));
      }
    }
  };
  check(source, "source");
  check(target, "target");
  doc.id = std::move(id);
  doc.source = std::move(source);
  doc.target = std::move(target);
  doc.source_tokens.reserve(doc.source.size());
  for (const auto& s : doc.source) doc.source_tokens.push_back(Tokenize(s));
  doc.target_tokens.reserve(doc.target.size());
  for (const auto& s : doc.target) doc.target_tokens.push_back(Tokenize(s));
  return doc;
}

Corpus::Corpus(std::string name, std::vector<Document> documents)
    : name_(std::move(name)), documents_(std::move(documents)) {
  if (documents_.empty()) {
    throw ValidationError("corpus \"" + name_ + "\" has no documents");
  }
  index_.reserve(documents_.size());
  for (std::size_t i = 0; i < documents_.size(); ++i) {
    if (!index_.emplace(documents_[i].id, i).second) {
      throw ValidationError("duplicate document id \"" + documents_[i].id +
                            "\"");
    }
  }
}

const Document* Corpus::Find(std::string_view id) const {
  auto pos = IndexOf(id);
  return pos ? &documents_[*pos] : nullptr;
}

std::optional<std::size_t> Corpus::IndexOf(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Corpus ParseCorpus(std::istream& in, std::string name,
                   const LoadOptions& options) {
  std::vector<Document> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    json object;
    try {
      object = json::parse(line);
    } catch (const json::parse_error& e) {
      throw FormatError("line " + std::to_string(line_no) +
                        ": malformed JSON: " + e.what());
    }
    if (!object.is_object()) {
      throw FormatError("line " + std::to_string(line_no) +
                        ": expected a JSON object");
    }
    auto id = object.find("id");
    if (id == object.end() || !id->is_string()) {
      throw FormatError("line " + std::to_string(line_no) +
                        ": \"id\" must be a string");
    }
    docs.push_back(MakeDocument(id->get<std::string>(),
                                StringList(object, "source", line_no),
                                StringList(object, "target", line_no),
                                options.max_source_sentences));
  }
  if (in.bad()) throw FormatError("read failed for corpus " + name);
  return Corpus(std::move(name), std::move(docs));
}

Corpus LoadCorpus(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open corpus " + path);
  try {
    return ParseCorpus(in, std::filesystem::path(path).stem().string(),
                       options);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void WriteCorpus(const Corpus& corpus, std::ostream& out) {
  for (const auto& doc : corpus.documents()) {
    nlohmann::ordered_json object;
    object["id"] = doc.id;
    object["source"] = doc.source;
    object["target"] = doc.target;
    out << object.dump() << '\n';
  }
}

}  // namespace subaspect
