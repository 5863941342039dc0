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

#ifndef SUBASPECT_MATRIX_H_
#define SUBASPECT_MATRIX_H_

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace subaspect {

// Dense row-major matrix of doubles. Rows are sentence vectors.
class RowMatrix {
 public:
  RowMatrix() = default;
  RowMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  RowMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    assert(data_.size() == rows_ * cols_);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<double> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }

  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  const std::vector<double>& data() const { return data_; }

  // Rows picked by index, in the given order.
  RowMatrix SelectRows(std::span<const std::size_t> indices) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double Dot(std::span<const double> a, std::span<const double> b);
double Norm(std::span<const double> a);
double SquaredDistance(std::span<const double> a, std::span<const double> b);
double Cosine(std::span<const double> a, std::span<const double> b);

// Column means; empty matrix gives a zero-length vector.
std::vector<double> Centroid(const RowMatrix& m);

}  // namespace subaspect

#endif  // SUBASPECT_MATRIX_H_
