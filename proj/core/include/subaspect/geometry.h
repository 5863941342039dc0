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

#ifndef SUBASPECT_GEOMETRY_H_
#define SUBASPECT_GEOMETRY_H_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "subaspect/matrix.h"

namespace subaspect {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

// Twice the signed area of triangle (a, b, c); positive when counter-clockwise.
double Cross(const Point2& a, const Point2& b, const Point2& c);

// Convex polygon with counter-clockwise vertices and no three consecutive
// collinear. Fewer than three vertices means degenerate (zero area); the
// vertices then hold the distinct extreme points (0, 1 or 2).
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  explicit ConvexPolygon(std::vector<Point2> vertices)
      : vertices_(std::move(vertices)) {}

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool degenerate() const { return vertices_.size() < 3; }

 private:
  std::vector<Point2> vertices_;
};

struct HullResult {
  ConvexPolygon polygon;
  // Input index of each polygon vertex, in polygon order. Among duplicate
  // input points the lowest index is reported.
  std::vector<std::size_t> indices;
};

// Quickhull. Output starts at the lowest (y, x) vertex and runs
// counter-clockwise; points on hull edges are excluded. Collinearity is
// judged relative to the extent of the input (1e-9).
HullResult QuickhullIndexed(std::span<const Point2> points);
ConvexPolygon Quickhull(std::span<const Point2> points);

// Shoelace area; zero for degenerate polygons.
double PolygonArea(const ConvexPolygon& polygon);

// Sutherland-Hodgman clip of a against b, then shoelace area. Zero when either
// input is degenerate.
double PolygonIntersectionArea(const ConvexPolygon& a, const ConvexPolygon& b);

// Clipped polygon vertices (may be empty).
std::vector<Point2> ClipConvex(const ConvexPolygon& subject,
                               const ConvexPolygon& clip);

// Inside or on the boundary, within tolerance.
bool ContainsPoint(const ConvexPolygon& polygon, const Point2& p,
                   double tolerance = 1e-9);

struct PearsonResult {
  double value = 0.0;
  // Either input had zero variance; value is then 0.
  bool degenerate = false;
};

// Sample Pearson correlation. Throws std::invalid_argument on length mismatch
// or fewer than two entries.
PearsonResult PearsonCorrelation(std::span<const double> u,
                                 std::span<const double> v);
double Pearson(std::span<const double> u, std::span<const double> v);

struct Pca2dResult {
  // N x 2 projections of the centered rows.
  RowMatrix projections;
  std::vector<double> mean;
  // Unit basis vectors; a missing component is all zeros.
  std::array<std::vector<double>, 2> basis;
  std::array<double, 2> eigenvalues{0.0, 0.0};
  // Number of non-zero components found (0, 1 or 2). Fewer than two means the
  // input was degenerate.
  int rank = 0;

  // Projects arbitrary rows of the same dimension through this basis.
  std::vector<Point2> Project(const RowMatrix& rows) const;
  std::vector<Point2> Points() const;
};

// Top-2 principal components by power iteration with deflation
// (tolerance 1e-10, at most 1000 iterations per component). Each basis
// vector's largest-magnitude entry is made positive.
Pca2dResult Pca2d(const RowMatrix& rows);

}  // namespace subaspect

#endif  // SUBASPECT_GEOMETRY_H_
