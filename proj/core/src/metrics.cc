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

#include "subaspect/metrics.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "subaspect/errors.h"
#include "subaspect/geometry.h"

namespace subaspect {
namespace {

using json = nlohmann::json;
using NgramSet = std::set<std::vector<std::string>>;

void AddNgrams(const TokenizedSentence& sentence, int n, NgramSet& out) {
  const std::size_t len = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + len <= sentence.size(); ++i) {
    out.emplace(sentence.begin() + static_cast<std::ptrdiff_t>(i),
                sentence.begin() + static_cast<std::ptrdiff_t>(i + len));
  }
}

std::size_t CountIntersection(const std::vector<std::size_t>& a,
                              const std::vector<std::size_t>& b) {
  const std::set<std::size_t> sb(b.begin(), b.end());
  std::set<std::size_t> shared;
  for (std::size_t i : a) {
    if (sb.count(i)) shared.insert(i);
  }
  return shared.size();
}

}  // namespace

std::optional<double> VolumeOverlap(const Selection& selection,
                                    const EmbeddingMatrix& emb) {
  const Pca2dResult pca = Pca2d(emb.SourceMatrix());
  const RowMatrix source = emb.SourceMatrix();
  const std::vector<Point2> model =
      pca.Project(source.SelectRows(selection.indices));
  const std::vector<Point2> reference = pca.Project(emb.TargetMatrix());
  const ConvexPolygon reference_hull = Quickhull(reference);
  const double reference_area = PolygonArea(reference_hull);
  if (reference_area < kMinReferenceArea) return std::nullopt;
  const double overlap =
      PolygonIntersectionArea(Quickhull(model), reference_hull);
  return std::clamp(overlap / reference_area, 0.0, 1.0);
}

double SentenceOverlap(const Selection& selection, const Selection& oracle) {
  if (oracle.indices.empty()) {
    throw std::invalid_argument("sentence overlap: empty oracle for \"" +
                                oracle.doc_id + "\"");
  }
  const std::set<std::size_t> unique(oracle.indices.begin(),
                                     oracle.indices.end());
  return static_cast<double>(
             CountIntersection(selection.indices, oracle.indices)) /
         static_cast<double>(unique.size());
}

NgramNovelty ComputeNgramNovelty(const Document& doc, const Selection& oracle,
                                 int n) {
  if (n != 1 && n != 2) throw std::invalid_argument("novelty: n must be 1 or 2");
  NgramSet oracle_set;
  NgramSet target_set;
  NgramSet source_set;
  for (std::size_t i : oracle.indices) {
    AddNgrams(doc.source_tokens.at(i), n, oracle_set);
  }
  for (const auto& s : doc.target_tokens) AddNgrams(s, n, target_set);
  for (const auto& s : doc.source_tokens) AddNgrams(s, n, source_set);
  NgramNovelty out;
  if (target_set.empty()) return out;
  std::size_t in_oracle = 0;
  std::size_t novel = 0;
  for (const auto& g : target_set) {
    if (oracle_set.count(g)) ++in_oracle;
    if (!source_set.count(g)) ++novel;
  }
  const double total = static_cast<double>(target_set.size());
  out.overlap_oracle_target = in_oracle / total;
  out.novel_target_source = novel / total;
  return out;
}

double OracleRecall(const Selection& position, const Selection& diversity,
                    const Selection& importance, const Selection& oracle) {
  if (oracle.indices.empty()) {
    throw std::invalid_argument("oracle recall: empty oracle for \"" +
                                oracle.doc_id + "\"");
  }
  std::set<std::size_t> covered(position.indices.begin(),
                                position.indices.end());
  covered.insert(diversity.indices.begin(), diversity.indices.end());
  covered.insert(importance.indices.begin(), importance.indices.end());
  const std::set<std::size_t> unique(oracle.indices.begin(),
                                     oracle.indices.end());
  std::size_t missed = 0;
  for (std::size_t i : unique) {
    if (!covered.count(i)) ++missed;
  }
  return static_cast<double>(missed) / static_cast<double>(unique.size());
}

MetricRecord EvaluateSelection(const Document& doc, const Selection& selection,
                               const Selection& oracle,
                               const EmbeddingMatrix* emb,
                               const RougeOptions& options) {
  MetricRecord record;
  record.doc_id = doc.id;
  record.algorithm = selection.algorithm;
  record.rouge =
      RougeAll(SelectedTokens(doc, selection), doc.target_tokens, options);
  if (emb != nullptr) record.vo = VolumeOverlap(selection, *emb);
  record.so = SentenceOverlap(selection, oracle);
  return record;
}

void WriteMetrics(const std::vector<MetricRecord>& records, std::ostream& out) {
  for (const auto& r : records) {
    nlohmann::ordered_json object;
    object["doc_id"] = r.doc_id;
    object["algorithm"] = r.algorithm;
    object["r1"] = r.rouge.r1;
    object["r2"] = r.rouge.r2;
    object["rl"] = r.rouge.rl;
    object["r"] = r.rouge.mean;
    if (r.vo) {
      object["vo"] = *r.vo;
    } else {
      object["vo"] = nullptr;
    }
    object["so"] = r.so;
    out << object.dump() << '\n';
  }
}

std::vector<MetricRecord> ParseMetrics(std::istream& in,
                                       const std::string& source_name) {
  std::vector<MetricRecord> out;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw FormatError(source_name + ":" + std::to_string(line_no) + ": " +
                      what);
  };
  auto number = [&](const json& object, const char* key) {
    auto it = object.find(key);
    if (it == object.end() || !it->is_number()) {
      fail(std::string("\"") + key + "\" must be a number");
    }
    return it->get<double>();
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
    MetricRecord r;
    auto doc = object.find("doc_id");
    auto alg = object.find("algorithm");
    if (doc == object.end() || !doc->is_string()) fail("\"doc_id\" must be a string");
    if (alg == object.end() || !alg->is_string()) {
      fail("\"algorithm\" must be a string");
    }
    r.doc_id = doc->get<std::string>();
    r.algorithm = alg->get<std::string>();
    r.rouge.r1 = number(object, "r1");
    r.rouge.r2 = number(object, "r2");
    r.rouge.rl = number(object, "rl");
    r.rouge.mean = number(object, "r");
    auto vo = object.find("vo");
    if (vo == object.end()) fail("missing \"vo\"");
    if (!vo->is_null()) r.vo = number(object, "vo");
    r.so = number(object, "so");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<MetricRecord> ReadMetrics(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open metrics " + path);
  return ParseMetrics(in, path);
}

}  // namespace subaspect
