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

#ifndef SUBASPECT_TESTS_SUPPORT_H_
#define SUBASPECT_TESTS_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "subaspect/corpus.h"
#include "subaspect/embedding.h"
#include "subaspect/geometry.h"
#include "subaspect/rouge.h"

namespace subaspect::testing {

using Rows = std::vector<std::vector<double>>;

inline EmbeddingMatrix MatrixFromRows(const Rows& source, const Rows& target = {},
                                      const std::string& id = "d") {
  const std::size_t dim = source.empty() ? 0 : source.front().size();
  std::vector<float> values;
  for (const auto* rows : {&source, &target}) {
    for (const auto& r : *rows) {
      for (double v : r) values.push_back(static_cast<float>(v));
    }
  }
  return EmbeddingMatrix(id, dim, source.size(), target.size(),
                         std::move(values));
}

// A document with n distinct, non-overlapping source sentences.
inline Document PlainDocument(const std::string& id, std::size_t n,
                              std::size_t num_target = 1) {
  std::vector<std::string> source;
  for (std::size_t i = 0; i < n; ++i) {
    source.push_back("w" + std::to_string(i) + "a w" + std::to_string(i) +
                     "b.");
  }
  std::vector<std::string> target(num_target, "w0a w0b.");
  return MakeDocument(id, source, target);
}

inline std::filesystem::path TempDir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() /
             ("subaspect_test_" + name + "_" +
              std::to_string(std::random_device{}()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// Independent reference implementations used as test oracles.
namespace oracle {

// Longest common subsequence by enumerating every subsequence of the shorter
// side and testing containment in the longer one.
inline std::size_t BruteLcs(const std::vector<std::string>& a,
                            const std::vector<std::string>& b) {
  const auto& s = a.size() <= b.size() ? a : b;
  const auto& t = a.size() <= b.size() ? b : a;
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
    std::size_t len = 0;
    std::size_t j = 0;
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      ++len;
      while (j < t.size() && t[j] != s[i]) ++j;
      if (j == t.size()) ok = false;
      else ++j;
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

inline double F1(double matched, double candidate_total,
                 double reference_total) {
  if (candidate_total == 0 || reference_total == 0 || matched == 0) return 0.0;
  const double p = matched / candidate_total;
  const double r = matched / reference_total;
  return 2 * p * r / (p + r);
}

inline std::vector<std::vector<std::string>> Ngrams(
    const std::vector<TokenizedSentence>& text, int n) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : text) {
    for (std::size_t i = 0; i + n <= s.size(); ++i) {
      out.emplace_back(s.begin() + i, s.begin() + i + n);
    }
  }
  return out;
}

// Clipped n-gram matching by pairing each candidate n-gram with an unused
// equal reference n-gram.
inline double RougeN(const std::vector<TokenizedSentence>& c,
                     const std::vector<TokenizedSentence>& r, int n) {
  const auto cg = Ngrams(c, n);
  const auto rg = Ngrams(r, n);
  std::vector<bool> used(rg.size(), false);
  std::size_t matched = 0;
  for (const auto& g : cg) {
    for (std::size_t j = 0; j < rg.size(); ++j) {
      if (!used[j] && rg[j] == g) {
        used[j] = true;
        ++matched;
        break;
      }
    }
  }
  return F1(static_cast<double>(matched), static_cast<double>(cg.size()),
            static_cast<double>(rg.size()));
}

inline double RougeL(const std::vector<TokenizedSentence>& c,
                     const std::vector<TokenizedSentence>& r) {
  std::vector<std::string> flat;
  for (const auto& s : c) flat.insert(flat.end(), s.begin(), s.end());
  std::size_t ref_tokens = 0;
  std::size_t hits = 0;
  for (const auto& s : r) {
    ref_tokens += s.size();
    hits += BruteLcs(s, flat);
  }
  const double m = static_cast<double>(
      std::min({hits, flat.size(), ref_tokens}));
  return F1(m, static_cast<double>(flat.size()),
            static_cast<double>(ref_tokens));
}

inline double Shoelace(const std::vector<Point2>& p) {
  double twice = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& a = p[i];
    const auto& b = p[(i + 1) % p.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return std::abs(twice) / 2.0;
}

inline double PearsonByHand(const std::vector<double>& u,
                            const std::vector<double>& v) {
  const double n = static_cast<double>(u.size());
  double mu = 0, mv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    mu += u[i] / n;
    mv += v[i] / n;
  }
  double cov = 0, su = 0, sv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    cov += (u[i] - mu) * (v[i] - mv);
    su += (u[i] - mu) * (u[i] - mu);
    sv += (v[i] - mv) * (v[i] - mv);
  }
  if (su == 0 || sv == 0) return 0.0;
  return cov / std::sqrt(su * sv);
}

}  // namespace oracle
}  // namespace subaspect::testing

#endif  // SUBASPECT_TESTS_SUPPORT_H_
