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

#include "subaspect/aspects.h"

#include <algorithm>
#include <cmath>

#include "ranking.h"
#include "subaspect/errors.h"
#include "subaspect/geometry.h"

namespace subaspect {
namespace {

using internal::ArgMax;
using internal::ArgMin;
using internal::Iota;

constexpr double kRelativeTieTolerance = 1e-6;
constexpr double kRatioTieTolerance = 1e-6;
constexpr double kCorrelationTieTolerance = 1e-6;

std::vector<std::size_t> FirstSorted(const std::vector<std::size_t>& ranking,
                                     std::size_t k) {
  std::vector<std::size_t> out(
      ranking.begin(),
      ranking.begin() + static_cast<std::ptrdiff_t>(std::min(k, ranking.size())));
  std::sort(out.begin(), out.end());
  return out;
}

double HullArea(const std::vector<Point2>& points,
                const std::vector<std::size_t>& members) {
  std::vector<Point2> subset;
  subset.reserve(members.size());
  for (std::size_t i : members) subset.push_back(points[i]);
  return PolygonArea(Quickhull(subset));
}

RowMatrix PearsonMatrix(const EmbeddingMatrix& emb) {
  if (emb.dim() < 2) {
    throw ValidationError("document \"" + emb.doc_id() +
                          "\": Pearson correlation needs dim >= 2");
  }
  const RowMatrix rows = emb.SourceMatrix();
  const std::size_t n = rows.rows();
  RowMatrix corr(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    corr(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double c = Pearson(rows.row(i), rows.row(j));
      corr(i, j) = c;
      corr(j, i) = c;
    }
  }
  return corr;
}

}  // namespace

std::vector<std::size_t> PositionRanking(std::size_t num_sentences) {
  return Iota(num_sentences);
}

Selection SelectPosition(const Document& doc, std::size_t k,
                         PositionMode mode) {
  const std::size_t n = doc.num_source();
  const std::size_t m = std::min(k, n);
  std::size_t start = 0;
  std::string label = "first";
  switch (mode) {
    case PositionMode::kFirst:
      break;
    case PositionMode::kLast:
      start = n - m;
      label = "last";
      break;
    case PositionMode::kMiddle:
      start = k >= n ? 0 : (n - k) / 2;
      label = "middle";
      break;
  }
  std::vector<std::size_t> indices(m);
  for (std::size_t i = 0; i < m; ++i) indices[i] = start + i;
  return {doc.id, label, std::move(indices)};
}

Selection SelectHeuristicVolume(const EmbeddingMatrix& emb, std::size_t k) {
  const RowMatrix rows = emb.SourceMatrix();
  const std::size_t m = std::min(k, rows.rows());
  std::vector<std::size_t> pool = Iota(rows.rows());
  std::vector<std::size_t> chosen;
  std::vector<double> centroid = Centroid(rows);
  while (chosen.size() < m) {
    const std::size_t pick = ArgMax(
        pool,
        [&](std::size_t i) { return SquaredDistance(rows.row(i), centroid); },
        0.0, kRelativeTieTolerance);
    chosen.push_back(pick);
    pool.erase(std::find(pool.begin(), pool.end(), pick));
    centroid = Centroid(rows.SelectRows(chosen));
  }
  std::sort(chosen.begin(), chosen.end());
  return {emb.doc_id(), "heuristic_volume", std::move(chosen)};
}

std::vector<std::size_t> ConvexFallRanking(const EmbeddingMatrix& emb) {
  const std::vector<Point2> points = Pca2d(emb.SourceMatrix()).Points();
  const std::size_t n = points.size();
  if (n == 0) return {};

  std::vector<std::size_t> members = QuickhullIndexed(points).indices;
  std::sort(members.begin(), members.end());
  std::vector<bool> on_hull(n, false);
  for (std::size_t i : members) on_hull[i] = true;

  // Prune hull members one at a time by lowest area-reduction ratio.
  std::vector<std::size_t> removed;
  while (members.size() > 1) {
    const double area = HullArea(points, members);
    std::size_t victim = members.front();
    if (area > 0.0) {
      std::vector<std::size_t> without;
      victim = ArgMin(
          members,
          [&](std::size_t h) {
            without.clear();
            for (std::size_t j : members) {
              if (j != h) without.push_back(j);
            }
            return (area - HullArea(points, without)) / area;
          },
          kRatioTieTolerance);
    }
    removed.push_back(victim);
    members.erase(std::find(members.begin(), members.end(), victim));
  }

  std::vector<std::size_t> ranking;
  ranking.reserve(n);
  ranking.push_back(members.front());
  ranking.insert(ranking.end(), removed.rbegin(), removed.rend());

  Point2 centroid;
  for (const auto& p : points) {
    centroid.x += p.x;
    centroid.y += p.y;
  }
  centroid.x /= static_cast<double>(n);
  centroid.y /= static_cast<double>(n);
  std::vector<std::size_t> interior;
  for (std::size_t i = 0; i < n; ++i) {
    if (!on_hull[i]) interior.push_back(i);
  }
  std::vector<double> closeness(n, 0.0);
  for (std::size_t i : interior) {
    closeness[i] = -std::hypot(points[i].x - centroid.x,
                               points[i].y - centroid.y);
  }
  while (!interior.empty()) {
    const std::size_t pick =
        ArgMax(interior, [&](std::size_t i) { return closeness[i]; }, 0.0,
               kRelativeTieTolerance);
    ranking.push_back(pick);
    interior.erase(std::find(interior.begin(), interior.end(), pick));
  }
  return ranking;
}

Selection SelectConvexFall(const EmbeddingMatrix& emb, std::size_t k) {
  return {emb.doc_id(), "convexfall", FirstSorted(ConvexFallRanking(emb), k)};
}

std::vector<double> NNearestScores(const EmbeddingMatrix& emb) {
  const std::size_t n = emb.num_source();
  std::vector<double> scores(n, 0.0);
  if (n < 2) return scores;
  const RowMatrix corr = PearsonMatrix(emb);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) sum += corr(i, j);
    }
    scores[i] = sum / static_cast<double>(n - 1);
  }
  return scores;
}

std::vector<std::size_t> NNearestRanking(const EmbeddingMatrix& emb) {
  return internal::RankDescending(NNearestScores(emb),
                                  kCorrelationTieTolerance);
}

Selection SelectNNearest(const EmbeddingMatrix& emb, std::size_t k) {
  return {emb.doc_id(), "n_nearest", FirstSorted(NNearestRanking(emb), k)};
}

Selection SelectKNearest(const EmbeddingMatrix& emb, std::size_t k,
                         std::size_t knn_k) {
  if (knn_k == 0) throw ValidationError("K-Nearest needs K >= 1");
  const std::size_t n = emb.num_source();
  const std::size_t m = std::min(k, n);
  std::vector<std::size_t> pool = Iota(n);
  std::vector<std::size_t> chosen;
  if (n < 2) {
    chosen.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m));
    return {emb.doc_id(), "k_nearest", std::move(chosen)};
  }
  const RowMatrix corr = PearsonMatrix(emb);
  std::vector<double> dist;
  while (chosen.size() < m) {
    std::size_t pick = pool.front();
    if (pool.size() > 1) {
      const std::size_t neighbours = std::min(knn_k, pool.size() - 1);
      pick = ArgMin(
          pool,
          [&](std::size_t c) {
            dist.clear();
            for (std::size_t j : pool) {
              if (j != c) dist.push_back(1.0 - corr(c, j));
            }
            std::partial_sort(
                dist.begin(),
                dist.begin() + static_cast<std::ptrdiff_t>(neighbours),
                dist.end());
            double sum = 0.0;
            for (std::size_t t = 0; t < neighbours; ++t) sum += dist[t];
            return sum / static_cast<double>(neighbours);
          },
          kCorrelationTieTolerance);
    }
    chosen.push_back(pick);
    pool.erase(std::find(pool.begin(), pool.end(), pick));
  }
  std::sort(chosen.begin(), chosen.end());
  return {emb.doc_id(), "k_nearest", std::move(chosen)};
}

}  // namespace subaspect
