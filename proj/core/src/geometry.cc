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

#include "subaspect/geometry.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "subaspect/rng.h"

namespace subaspect {
namespace {

constexpr double kCollinearEpsilon = 1e-9;

struct IndexedPoint {
  Point2 p;
  std::size_t index;
};

double Length(const Point2& a, const Point2& b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

// Appends the hull vertices strictly right of a -> b, ordered from a to b.
void FindHull(const std::vector<IndexedPoint>& points, const IndexedPoint& a,
              const IndexedPoint& b, double eps,
              std::vector<IndexedPoint>& out) {
  if (points.empty()) return;
  std::size_t best = 0;
  double best_dist = -1.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double dist = -Cross(a.p, b.p, points[i].p);
    if (dist > best_dist ||
        (dist == best_dist && points[i].index < points[best].index)) {
      best_dist = dist;
      best = i;
    }
  }
  const IndexedPoint c = points[best];
  std::vector<IndexedPoint> right_of_ac;
  std::vector<IndexedPoint> right_of_cb;
  const double len_ac = Length(a.p, c.p);
  const double len_cb = Length(c.p, b.p);
  for (const auto& q : points) {
    if (Cross(a.p, c.p, q.p) < -eps * len_ac) {
      right_of_ac.push_back(q);
    } else if (Cross(c.p, b.p, q.p) < -eps * len_cb) {
      right_of_cb.push_back(q);
    }
  }
  FindHull(right_of_ac, a, c, eps, out);
  out.push_back(c);
  FindHull(right_of_cb, c, b, eps, out);
}

void Orient(std::vector<double>& v) {
  std::size_t arg = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[arg])) arg = i;
  }
  if (!v.empty() && v[arg] < 0) {
    for (double& x : v) x = -x;
  }
}

bool NormalizeInPlace(std::vector<double>& v) {
  const double n = Norm(v);
  if (n == 0.0 || !std::isfinite(n)) return false;
  for (double& x : v) x /= n;
  return true;
}

// Covariance-vector product without forming the d x d matrix.
// Explicit symmetric operator for the power iteration: the d x d sample
// covariance when d <= N, otherwise the N x N Gram matrix of the centered rows,
// which has the same non-zero eigenvalues.
class SymmetricOperator {
 public:
  SymmetricOperator(const RowMatrix& centered, double denom)
      : centered_(centered), gram_(centered.rows() < centered.cols()) {
    const std::size_t n = centered.rows();
    const std::size_t d = centered.cols();
    dim_ = gram_ ? n : d;
    m_ = RowMatrix(dim_, dim_);
    if (gram_) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          m_(i, j) = m_(j, i) = Dot(centered.row(i), centered.row(j)) / denom;
        }
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        auto r = centered.row(i);
        for (std::size_t a = 0; a < d; ++a) {
          for (std::size_t b = a; b < d; ++b) m_(a, b) += r[a] * r[b];
        }
      }
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a; b < d; ++b) m_(b, a) = m_(a, b) /= denom;
      }
    }
  }

  std::size_t dim() const { return dim_; }
  bool gram() const { return gram_; }

  // Random start drawn in feature space; on the Gram side it is mapped
  // through C so both sides follow the same iterates.
  std::vector<double> Start(std::uint64_t seed) const {
    Xoshiro256 rng(seed);
    std::vector<double> x(centered_.cols());
    for (double& v : x) v = 2.0 * rng.UniformDouble() - 1.0;
    if (!gram_) return x;
    std::vector<double> u(dim_);
    for (std::size_t i = 0; i < dim_; ++i) u[i] = Dot(centered_.row(i), x);
    return u;
  }

  std::vector<double> Apply(const std::vector<double>& v) const {
    std::vector<double> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out[i] = Dot(m_.row(i), v);
    return out;
  }

 private:
  const RowMatrix& centered_;
  bool gram_;
  std::size_t dim_ = 0;
  RowMatrix m_;
};

constexpr int kMaxPowerIterations = 1000;
constexpr double kPowerTolerance = 1e-10;

// Dominant eigenpair of the covariance restricted to the complement of
// `deflate`. Returns eigenvalue 0 and an empty vector when nothing remains.
std::pair<double, std::vector<double>> PowerIteration(
    const SymmetricOperator& op,
    const std::vector<std::pair<double, std::vector<double>>>& deflate) {
  const std::size_t dim = op.dim();
  auto apply = [&](const std::vector<double>& v) {
    std::vector<double> w = op.Apply(v);
    for (const auto& [lambda, u] : deflate) {
      const double proj = Dot(u, v);
      for (std::size_t j = 0; j < dim; ++j) w[j] -= lambda * proj * u[j];
    }
    // Re-orthogonalize against found components to stop rounding drift.
    for (const auto& [lambda, u] : deflate) {
      const double proj = Dot(u, w);
      for (std::size_t j = 0; j < dim; ++j) w[j] -= proj * u[j];
    }
    return w;
  };

  std::vector<double> v = op.Start(0x9ca2d5eedULL + deflate.size());
  for (const auto& [lambda, u] : deflate) {
    const double proj = Dot(u, v);
    for (std::size_t j = 0; j < dim; ++j) v[j] -= proj * u[j];
  }
  if (!NormalizeInPlace(v)) return {0.0, {}};
  v = apply(v);
  if (!NormalizeInPlace(v)) return {0.0, {}};
  Orient(v);
  for (int iter = 0; iter < kMaxPowerIterations; ++iter) {
    std::vector<double> w = apply(v);
    if (!NormalizeInPlace(w)) return {0.0, {}};
    Orient(w);
    const double change = std::sqrt(SquaredDistance(w, v));
    v = std::move(w);
    if (change < kPowerTolerance) break;
  }
  const double lambda = Dot(v, apply(v));
  return {lambda, v};
}

}  // namespace

double Cross(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

HullResult QuickhullIndexed(std::span<const Point2> points) {
  std::vector<IndexedPoint> sorted;
  sorted.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    sorted.push_back({points[i], i});
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const IndexedPoint& a, const IndexedPoint& b) {
              if (a.p.x != b.p.x) return a.p.x < b.p.x;
              if (a.p.y != b.p.y) return a.p.y < b.p.y;
              return a.index < b.index;
            });
  // Equal points are adjacent after sorting; keep the lowest index of each.
  sorted.erase(std::unique(sorted.begin(), sorted.end(),
                           [](const IndexedPoint& a, const IndexedPoint& b) {
                             return a.p == b.p;
                           }),
               sorted.end());

  HullResult result;
  if (sorted.empty()) return result;
  const IndexedPoint& left = sorted.front();
  const IndexedPoint& right = sorted.back();
  if (sorted.size() == 1) {
    result.polygon = ConvexPolygon({left.p});
    result.indices = {left.index};
    return result;
  }

  double min_y = sorted.front().p.y;
  double max_y = min_y;
  for (const auto& q : sorted) {
    min_y = std::min(min_y, q.p.y);
    max_y = std::max(max_y, q.p.y);
  }
  const double extent = std::max(right.p.x - left.p.x, max_y - min_y);
  const double eps = kCollinearEpsilon * extent;

  std::vector<IndexedPoint> below;
  std::vector<IndexedPoint> above;
  const double len = Length(left.p, right.p);
  for (std::size_t i = 1; i + 1 < sorted.size(); ++i) {
    const double c = Cross(left.p, right.p, sorted[i].p);
    if (c < -eps * len) {
      below.push_back(sorted[i]);
    } else if (c > eps * len) {
      above.push_back(sorted[i]);
    }
  }

  std::vector<IndexedPoint> hull;
  hull.push_back(left);
  FindHull(below, left, right, eps, hull);
  hull.push_back(right);
  FindHull(above, right, left, eps, hull);

  // Drop vertices that ended up (nearly) collinear with their neighbours.
  bool changed = hull.size() >= 3;
  while (changed && hull.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < hull.size() && hull.size() >= 3; ++i) {
      const auto& prev = hull[(i + hull.size() - 1) % hull.size()];
      const auto& next = hull[(i + 1) % hull.size()];
      if (Cross(prev.p, hull[i].p, next.p) <= eps * Length(prev.p, next.p)) {
        hull.erase(hull.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }

  if (hull.size() < 3) {
    // Collinear input: report the two extreme points.
    result.polygon = ConvexPolygon({left.p, right.p});
    result.indices = {left.index, right.index};
    return result;
  }

  auto start = std::min_element(
      hull.begin(), hull.end(), [](const IndexedPoint& a, const IndexedPoint& b) {
        if (a.p.y != b.p.y) return a.p.y < b.p.y;
        return a.p.x < b.p.x;
      });
  std::rotate(hull.begin(), start, hull.end());
  std::vector<Point2> vertices;
  vertices.reserve(hull.size());
  for (const auto& q : hull) {
    vertices.push_back(q.p);
    result.indices.push_back(q.index);
  }
  result.polygon = ConvexPolygon(std::move(vertices));
  return result;
}

ConvexPolygon Quickhull(std::span<const Point2> points) {
  return QuickhullIndexed(points).polygon;
}

namespace {

double Shoelace(const std::vector<Point2>& v) {
  if (v.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    twice += v[j].x * v[i].y - v[i].x * v[j].y;
  }
  return std::abs(twice) / 2.0;
}

}  // namespace

double PolygonArea(const ConvexPolygon& polygon) {
  if (polygon.degenerate()) return 0.0;
  return Shoelace(polygon.vertices());
}

std::vector<Point2> ClipConvex(const ConvexPolygon& subject,
                               const ConvexPolygon& clip) {
  if (subject.degenerate() || clip.degenerate()) return {};
  std::vector<Point2> output = subject.vertices();
  const auto& edges = clip.vertices();
  for (std::size_t e = 0; e < edges.size() && !output.empty(); ++e) {
    const Point2& a = edges[e];
    const Point2& b = edges[(e + 1) % edges.size()];
    std::vector<Point2> input;
    input.swap(output);
    Point2 prev = input.back();
    double prev_side = Cross(a, b, prev);
    for (const Point2& cur : input) {
      const double cur_side = Cross(a, b, cur);
      if (cur_side >= 0) {
        if (prev_side < 0) {
          const double t = prev_side / (prev_side - cur_side);
          output.push_back(
              {prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y)});
        }
        output.push_back(cur);
      } else if (prev_side >= 0) {
        const double t = prev_side / (prev_side - cur_side);
        output.push_back(
            {prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y)});
      }
      prev = cur;
      prev_side = cur_side;
    }
  }
  return output;
}

double PolygonIntersectionArea(const ConvexPolygon& a,
                               const ConvexPolygon& b) {
  return Shoelace(ClipConvex(a, b));
}

bool ContainsPoint(const ConvexPolygon& polygon, const Point2& p,
                   double tolerance) {
  const auto& v = polygon.vertices();
  if (v.empty()) return false;
  if (v.size() == 1) return Length(v[0], p) <= tolerance;
  if (v.size() == 2) {
    const double len = Length(v[0], v[1]);
    const double t = ((p.x - v[0].x) * (v[1].x - v[0].x) +
                      (p.y - v[0].y) * (v[1].y - v[0].y)) /
                     (len * len);
    const double clamped = std::clamp(t, 0.0, 1.0);
    const Point2 nearest{v[0].x + clamped * (v[1].x - v[0].x),
                         v[0].y + clamped * (v[1].y - v[0].y)};
    return Length(nearest, p) <= tolerance;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % v.size()];
    if (Cross(a, b, p) < -tolerance * Length(a, b)) return false;
  }
  return true;
}

PearsonResult PearsonCorrelation(std::span<const double> u,
                                 std::span<const double> v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("pearson: length mismatch");
  }
  if (u.size() < 2) throw std::invalid_argument("pearson: need >= 2 entries");
  const double n = static_cast<double>(u.size());
  double mean_u = 0.0;
  double mean_v = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    mean_u += u[i];
    mean_v += v[i];
  }
  mean_u /= n;
  mean_v /= n;
  double suv = 0.0;
  double suu = 0.0;
  double svv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double du = u[i] - mean_u;
    const double dv = v[i] - mean_v;
    suv += du * dv;
    suu += du * du;
    svv += dv * dv;
  }
  if (suu == 0.0 || svv == 0.0) return {0.0, true};
  return {std::clamp(suv / std::sqrt(suu * svv), -1.0, 1.0), false};
}

double Pearson(std::span<const double> u, std::span<const double> v) {
  return PearsonCorrelation(u, v).value;
}

std::vector<Point2> Pca2dResult::Project(const RowMatrix& rows) const {
  std::vector<Point2> out;
  out.reserve(rows.rows());
  std::vector<double> centered(mean.size());
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    auto r = rows.row(i);
    for (std::size_t j = 0; j < mean.size(); ++j) centered[j] = r[j] - mean[j];
    out.push_back({Dot(centered, basis[0]), Dot(centered, basis[1])});
  }
  return out;
}

std::vector<Point2> Pca2dResult::Points() const {
  std::vector<Point2> out;
  out.reserve(projections.rows());
  for (std::size_t i = 0; i < projections.rows(); ++i) {
    out.push_back({projections(i, 0), projections(i, 1)});
  }
  return out;
}

Pca2dResult Pca2d(const RowMatrix& rows) {
  Pca2dResult result;
  const std::size_t n = rows.rows();
  const std::size_t d = rows.cols();
  result.mean = Centroid(rows);
  result.basis = {std::vector<double>(d, 0.0), std::vector<double>(d, 0.0)};
  result.projections = RowMatrix(n, 2);
  if (n == 0 || d == 0) return result;

  RowMatrix centered(n, d);
  double total_variance = 0.0;
  double raw_scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto src = rows.row(i);
    auto dst = centered.row(i);
    for (std::size_t j = 0; j < d; ++j) {
      dst[j] = src[j] - result.mean[j];
      total_variance += dst[j] * dst[j];
      raw_scale += src[j] * src[j];
    }
  }
  const double denom = n > 1 ? static_cast<double>(n - 1) : 1.0;
  total_variance /= denom;
  raw_scale /= static_cast<double>(n);
  // Variance that is pure rounding noise relative to the data magnitude.
  if (total_variance == 0.0 || total_variance <= 1e-20 * raw_scale) {
    return result;
  }

  const SymmetricOperator op(centered, denom);
  std::vector<std::pair<double, std::vector<double>>> found;
  for (int component = 0; component < 2; ++component) {
    auto [lambda, vec] = PowerIteration(op, found);
    if (vec.empty() || lambda <= 1e-12 * total_variance) break;
    std::vector<double> basis = vec;
    if (op.gram()) {
      // Map the Gram eigenvector back to the covariance eigenvector C^T u.
      basis.assign(d, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        auto r = centered.row(i);
        for (std::size_t j = 0; j < d; ++j) basis[j] += vec[i] * r[j];
      }
      if (!NormalizeInPlace(basis)) break;
      Orient(basis);
    }
    result.basis[component] = std::move(basis);
    result.eigenvalues[component] = lambda;
    found.emplace_back(lambda, std::move(vec));
    result.rank = component + 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    result.projections(i, 0) = Dot(centered.row(i), result.basis[0]);
    result.projections(i, 1) = Dot(centered.row(i), result.basis[1]);
  }
  return result;
}

}  // namespace subaspect
