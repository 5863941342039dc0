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

#include "subaspect/baselines.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "ranking.h"
#include "subaspect/errors.h"
#include "subaspect/rng.h"

namespace subaspect {
namespace {

using internal::ArgMax;
using internal::Iota;

constexpr int kMaxLloydIterations = 100;
constexpr double kCentroidShiftTolerance = 1e-8;
constexpr double kScoreTieTolerance = 1e-12;
constexpr double kCosineTieTolerance = 1e-6;
constexpr double kDistanceTieTolerance = 1e-6;
constexpr int kMaxPageRankIterations = 1000;
constexpr double kPageRankTolerance = 1e-10;

RowMatrix CosineMatrix(const RowMatrix& rows) {
  const std::size_t n = rows.rows();
  RowMatrix sim(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    sim(i, i) = Cosine(rows.row(i), rows.row(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      const double c = Cosine(rows.row(i), rows.row(j));
      sim(i, j) = c;
      sim(j, i) = c;
    }
  }
  return sim;
}

// k-means++ seeding: first centre uniform, later ones proportional to the
// squared distance from the nearest existing centre.
std::vector<std::size_t> SeedCenters(const RowMatrix& rows, std::size_t m,
                                     Xoshiro256& rng) {
  const std::size_t n = rows.rows();
  std::vector<std::size_t> centers;
  centers.push_back(static_cast<std::size_t>(rng.UniformIndex(n)));
  std::vector<double> nearest(n);
  for (std::size_t i = 0; i < n; ++i) {
    nearest[i] = SquaredDistance(rows.row(i), rows.row(centers[0]));
  }
  while (centers.size() < m) {
    double total = 0.0;
    for (double d : nearest) total += d;
    std::size_t pick = n;
    if (total > 0.0) {
      const double target = rng.UniformDouble() * total;
      double cumulative = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (nearest[i] <= 0.0) continue;
        cumulative += nearest[i];
        pick = i;
        if (cumulative > target) break;
      }
    } else {
      // Every remaining point coincides with a centre.
      for (std::size_t i = 0; i < n && pick == n; ++i) {
        if (std::find(centers.begin(), centers.end(), i) == centers.end()) {
          pick = i;
        }
      }
    }
    centers.push_back(pick);
    for (std::size_t i = 0; i < n; ++i) {
      nearest[i] =
          std::min(nearest[i], SquaredDistance(rows.row(i), rows.row(pick)));
    }
  }
  return centers;
}

std::vector<std::size_t> Assign(const RowMatrix& rows,
                                const std::vector<std::vector<double>>& centers) {
  const std::vector<std::size_t> clusters = Iota(centers.size());
  std::vector<std::size_t> assignment(rows.rows());
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    assignment[i] = internal::ArgMin(
        clusters,
        [&](std::size_t c) { return SquaredDistance(rows.row(i), centers[c]); },
        0.0, kDistanceTieTolerance);
  }
  return assignment;
}

}  // namespace

std::vector<std::size_t> TopK(const std::vector<double>& scores, std::size_t k,
                              double tolerance) {
  std::vector<std::size_t> order = internal::RankDescending(scores, tolerance);
  order.resize(std::min(k, order.size()));
  std::sort(order.begin(), order.end());
  return order;
}

Selection SelectKMeans(const EmbeddingMatrix& emb, std::size_t k,
                       std::uint64_t seed) {
  const RowMatrix rows = emb.SourceMatrix();
  const std::size_t n = rows.rows();
  const std::size_t m = std::min(k, n);
  Xoshiro256 rng = KeyedRng(seed, emb.doc_id(), RngStream::kKMeans);

  std::vector<std::vector<double>> centers;
  for (std::size_t c : SeedCenters(rows, m, rng)) {
    centers.emplace_back(rows.row(c).begin(), rows.row(c).end());
  }
  double scale = 0.0;
  for (double v : rows.data()) scale += v * v;
  scale = std::sqrt(scale / static_cast<double>(n));

  std::vector<std::size_t> assignment = Assign(rows, centers);
  for (int iter = 0; iter < kMaxLloydIterations; ++iter) {
    double max_shift = 0.0;
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<double> sum(rows.cols(), 0.0);
      std::size_t count = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (assignment[i] != c) continue;
        auto r = rows.row(i);
        for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += r[j];
        ++count;
      }
      if (count == 0) continue;  // Empty clusters keep their centre.
      for (double& v : sum) v /= static_cast<double>(count);
      max_shift = std::max(max_shift, std::sqrt(SquaredDistance(sum, centers[c])));
      centers[c] = std::move(sum);
    }
    std::vector<std::size_t> next = Assign(rows, centers);
    const bool stable = next == assignment;
    assignment = std::move(next);
    if (stable || max_shift < kCentroidShiftTolerance * scale) break;
  }

  struct Cluster {
    std::vector<std::size_t> members;  // nearest the centre first
  };
  std::vector<Cluster> clusters(m);
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<double> closeness(n, 0.0);
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (assignment[i] == c) {
        members.push_back(i);
        closeness[i] = -SquaredDistance(rows.row(i), centers[c]);
      }
    }
    while (!members.empty()) {
      const std::size_t pick = ArgMax(
          members, [&](std::size_t i) { return closeness[i]; }, 0.0,
          kDistanceTieTolerance);
      clusters[c].members.push_back(pick);
      members.erase(std::find(members.begin(), members.end(), pick));
    }
  }
  std::stable_sort(clusters.begin(), clusters.end(),
                   [](const Cluster& a, const Cluster& b) {
                     if (a.members.size() != b.members.size()) {
                       return a.members.size() > b.members.size();
                     }
                     if (a.members.empty()) return false;
                     return *std::min_element(a.members.begin(),
                                              a.members.end()) <
                            *std::min_element(b.members.begin(),
                                              b.members.end());
                   });

  std::vector<std::size_t> chosen;
  for (std::size_t round = 0; chosen.size() < m; ++round) {
    for (const auto& cluster : clusters) {
      if (chosen.size() == m) break;
      if (round < cluster.members.size()) {
        chosen.push_back(cluster.members[round]);
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return {emb.doc_id(), "kmeans", std::move(chosen)};
}

Selection SelectMmr(const EmbeddingMatrix& emb, std::size_t k, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ValidationError("MMR lambda must lie in [0, 1]");
  }
  const RowMatrix rows = emb.SourceMatrix();
  const std::size_t n = rows.rows();
  const std::size_t m = std::min(k, n);
  const std::vector<double> centroid = Centroid(rows);
  std::vector<double> relevance(n);
  for (std::size_t i = 0; i < n; ++i) relevance[i] = Cosine(rows.row(i), centroid);
  const RowMatrix sim = CosineMatrix(rows);

  std::vector<std::size_t> pool = Iota(n);
  std::vector<std::size_t> chosen;
  while (chosen.size() < m) {
    std::size_t pick;
    if (chosen.empty()) {
      pick = ArgMax(
          pool, [&](std::size_t i) { return relevance[i]; }, kCosineTieTolerance);
    } else {
      pick = ArgMax(
          pool,
          [&](std::size_t i) {
            double redundancy = -1.0;
            for (std::size_t j : chosen) redundancy = std::max(redundancy, sim(i, j));
            return lambda * relevance[i] - (1.0 - lambda) * redundancy;
          },
          kCosineTieTolerance);
    }
    chosen.push_back(pick);
    pool.erase(std::find(pool.begin(), pool.end(), pick));
  }
  std::sort(chosen.begin(), chosen.end());
  return {emb.doc_id(), "mmr", std::move(chosen)};
}

std::vector<double> PageRank(const RowMatrix& weights, double damping) {
  const std::size_t n = weights.rows();
  if (n == 0) return {};
  const double uniform = 1.0 / static_cast<double>(n);
  RowMatrix transition(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) total += weights(i, j);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (total > 0.0) {
        transition(i, j) = j == i ? 0.0 : weights(i, j) / total;
      } else {
        transition(i, j) = uniform;
      }
    }
  }
  std::vector<double> rank(n, uniform);
  std::vector<double> next(n);
  for (int iter = 0; iter < kMaxPageRankIterations; ++iter) {
    std::fill(next.begin(), next.end(), (1.0 - damping) * uniform);
    for (std::size_t i = 0; i < n; ++i) {
      const double mass = damping * rank[i];
      auto row = transition.row(i);
      for (std::size_t j = 0; j < n; ++j) next[j] += mass * row[j];
    }
    double change = 0.0;
    for (std::size_t j = 0; j < n; ++j) change += std::abs(next[j] - rank[j]);
    rank.swap(next);
    if (change < kPageRankTolerance) break;
  }
  double total = 0.0;
  for (double r : rank) total += r;
  for (double& r : rank) r /= total;
  return rank;
}

std::vector<double> LexRankScores(const EmbeddingMatrix& emb, double threshold,
                                  double damping) {
  const RowMatrix sim = CosineMatrix(emb.SourceMatrix());
  const std::size_t n = sim.rows();
  RowMatrix graph(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      graph(i, j) = (i != j && sim(i, j) >= threshold) ? 1.0 : 0.0;
    }
  }
  return PageRank(graph, damping);
}

Selection SelectLexRank(const EmbeddingMatrix& emb, std::size_t k,
                        double threshold, double damping) {
  return {emb.doc_id(), "lexrank",
          TopK(LexRankScores(emb, threshold, damping), k, kScoreTieTolerance)};
}

double TextRankSimilarity(const TokenizedSentence& a,
                          const TokenizedSentence& b) {
  if (a.empty() || b.empty()) return 0.0;
  const std::set<std::string> sa(a.begin(), a.end());
  std::set<std::string> shared;
  for (const auto& t : b) {
    if (sa.count(t)) shared.insert(t);
  }
  if (shared.empty()) return 0.0;
  return static_cast<double>(shared.size()) /
         (std::log(1.0 + static_cast<double>(a.size())) +
          std::log(1.0 + static_cast<double>(b.size())));
}

std::vector<double> TextRankScores(const Document& doc, double damping) {
  const std::size_t n = doc.num_source();
  RowMatrix graph(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w =
          TextRankSimilarity(doc.source_tokens[i], doc.source_tokens[j]);
      graph(i, j) = w;
      graph(j, i) = w;
    }
  }
  return PageRank(graph, damping);
}

Selection SelectTextRank(const Document& doc, std::size_t k, double damping) {
  return {doc.id, "textrank",
          TopK(TextRankScores(doc, damping), k, kScoreTieTolerance)};
}

}  // namespace subaspect
