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

#include "subaspect/selection.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>

#include "json.hpp"
#include "subaspect/errors.h"

namespace subaspect {

using json = nlohmann::json;

Selection MakeSelection(std::string doc_id, std::string algorithm,
                        std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return {std::move(doc_id), std::move(algorithm), std::move(indices)};
}

std::vector<TokenizedSentence> SelectedTokens(const Document& doc,
                                              const Selection& selection) {
  std::vector<std::size_t> order = selection.indices;
  std::sort(order.begin(), order.end());
  std::vector<TokenizedSentence> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(doc.source_tokens.at(i));
  return out;
}

KMode ParseKMode(const std::string& text) {
  if (text == "match-target") return {};
  constexpr std::string_view kPrefix = "fixed:";
  if (text.rfind(kPrefix, 0) == 0) {
    const std::string digits = text.substr(kPrefix.size());
    std::size_t value = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc() && ptr == digits.data() + digits.size() &&
        value > 0) {
      return KMode{value};
    }
  }
  throw ValidationError("invalid --k-mode \"" + text +
                        "\" (expected match-target or fixed:<n>, n >= 1)");
}

void WriteSelections(const std::vector<Selection>& selections,
                     std::ostream& out) {
  for (const auto& s : selections) {
    nlohmann::ordered_json object;
    object["doc_id"] = s.doc_id;
    object["algorithm"] = s.algorithm;
    object["indices"] = s.indices;
    out << object.dump() << '\n';
  }
}

std::vector<Selection> ParseSelections(std::istream& in,
                                       const std::string& source_name) {
  std::vector<Selection> out;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw FormatError(source_name + ":" + std::to_string(line_no) + ": " +
                      what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json object;
    try {
      object = json::parse(line);
    } catch (const json::parse_error& e) {
      fail(std::string("malformed JSON: ") + e.what());
    }
    if (!object.is_object()) fail("expected a JSON object");
    auto doc = object.find("doc_id");
    auto alg = object.find("algorithm");
    auto idx = object.find("indices");
    if (doc == object.end() || !doc->is_string()) {
      fail("\"doc_id\" must be a string");
    }
    if (alg == object.end() || !alg->is_string()) {
      fail("\"algorithm\" must be a string");
    }
    if (idx == object.end() || !idx->is_array()) {
      fail("\"indices\" must be an array");
    }
    Selection s;
    s.doc_id = doc->get<std::string>();
    s.algorithm = alg->get<std::string>();
    for (const auto& v : *idx) {
      if (!v.is_number_unsigned()) fail("indices must be non-negative integers");
      s.indices.push_back(v.get<std::size_t>());
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Selection> ReadSelections(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open selections " + path);
  return ParseSelections(in, path);
}

std::vector<Selection> ValidateSelections(std::vector<Selection> selections,
                                          const Corpus& corpus) {
  std::set<std::pair<std::string, std::string>> seen;
  for (auto& s : selections) {
    const Document* doc = corpus.Find(s.doc_id);
    if (doc == nullptr) {
      throw ValidationError("selection for unknown document \"" + s.doc_id +
                            "\"");
    }
    if (!seen.emplace(s.doc_id, s.algorithm).second) {
      throw ValidationError("duplicate selection for document \"" + s.doc_id +
                            "\", algorithm \"" + s.algorithm + "\"");
    }
    std::sort(s.indices.begin(), s.indices.end());
    if (std::adjacent_find(s.indices.begin(), s.indices.end()) !=
        s.indices.end()) {
      throw ValidationError("document \"" + s.doc_id +
                            "\": duplicate sentence index in selection");
    }
    if (!s.indices.empty() && s.indices.back() >= doc->num_source()) {
      throw ValidationError("document \"" + s.doc_id + "\": index " +
                            std::to_string(s.indices.back()) +
                            " out of range (N=" +
                            std::to_string(doc->num_source()) + ")");
    }
  }
  return selections;
}

}  // namespace subaspect
