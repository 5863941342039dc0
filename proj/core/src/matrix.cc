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

#include "subaspect/matrix.h"

#include <cmath>

namespace subaspect {

RowMatrix RowMatrix::SelectRows(std::span<const std::size_t> indices) const {
  RowMatrix out(indices.size(), cols_);
  for (std::size_t r = 0; r < indices.size(); ++r) {
    auto src = row(indices[r]);
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  return out;
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double Norm(std::span<const double> a) { return std::sqrt(Dot(a, a)); }

double SquaredDistance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

double Cosine(std::span<const double> a, std::span<const double> b) {
  const double denom = Norm(a) * Norm(b);
  if (denom == 0.0) return 0.0;
  return Dot(a, b) / denom;
}

std::vector<double> Centroid(const RowMatrix& m) {
  std::vector<double> c(m.cols(), 0.0);
  if (m.rows() == 0) return c;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) c[j] += r[j];
  }
  for (double& v : c) v /= static_cast<double>(m.rows());
  return c;
}

}  // namespace subaspect
