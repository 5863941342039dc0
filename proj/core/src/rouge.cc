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

#include "subaspect/rouge.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace subaspect {
namespace {

using NgramCounts = std::map<std::string, std::size_t>;

// N-grams joined with a unit separator, which never occurs inside a token.
std::size_t CountNgrams(Text text, int n, NgramCounts& counts) {
  std::size_t total = 0;
  for (const auto& sentence : text) {
    if (sentence.size() < static_cast<std::size_t>(n)) continue;
    for (std::size_t i = 0; i + n <= sentence.size(); ++i) {
      std::string key = sentence[i];
      for (int j = 1; j < n; ++j) {
        key.push_back('\x1f');
        key += sentence[i + j];
      }
      ++counts[key];
      ++total;
    }
  }
  return total;
}

}  // namespace

double FMeasure(double precision, double recall, double beta) {
  if (precision <= 0.0 || recall <= 0.0) return 0.0;
  const double b2 = beta * beta;
  return (1.0 + b2) * precision * recall / (b2 * precision + recall);
}

double RougeN(Text candidate, Text reference, int n,
              const RougeOptions& options) {
  if (n != 1 && n != 2) throw std::invalid_argument("rouge-n: n must be 1 or 2");
  NgramCounts cand;
  NgramCounts ref;
  const std::size_t cand_total = CountNgrams(candidate, n, cand);
  const std::size_t ref_total = CountNgrams(reference, n, ref);
  if (cand_total == 0 || ref_total == 0) return 0.0;
  std::size_t matches = 0;
  auto c = cand.begin();
  auto r = ref.begin();
  while (c != cand.end() && r != ref.end()) {
    if (c->first < r->first) {
      ++c;
    } else if (r->first < c->first) {
      ++r;
    } else {
      matches += std::min(c->second, r->second);
      ++c;
      ++r;
    }
  }
  return FMeasure(static_cast<double>(matches) / cand_total,
                  static_cast<double>(matches) / ref_total, options.beta);
}

std::size_t LcsLength(std::span<const std::string> a,
                      std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double RougeL(Text candidate, Text reference, const RougeOptions& options) {
  std::vector<std::string> flat;
  for (const auto& sentence : candidate) {
    flat.insert(flat.end(), sentence.begin(), sentence.end());
  }
  std::size_t ref_total = 0;
  std::size_t hits = 0;
  for (const auto& sentence : reference) {
    ref_total += sentence.size();
    hits += LcsLength(sentence, flat);
  }
  if (flat.empty() || ref_total == 0) return 0.0;
  const double matched = static_cast<double>(std::min(hits, flat.size()));
  const double precision = matched / static_cast<double>(flat.size());
  const double recall = matched / static_cast<double>(ref_total);
  return FMeasure(precision, recall, options.beta);
}

RougeScore RougeAll(Text candidate, Text reference,
                    const RougeOptions& options) {
  RougeScore s;
  s.r1 = RougeN(candidate, reference, 1, options);
  s.r2 = RougeN(candidate, reference, 2, options);
  s.rl = RougeL(candidate, reference, options);
  s.mean = (s.r1 + s.r2 + s.rl) / 3.0;
  return s;
}

}  // namespace subaspect
