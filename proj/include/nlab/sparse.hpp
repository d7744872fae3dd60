/*
 * Copyright 2026 The nelsonlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstddef>
#include <vector>

#include "nlab/kernels.hpp"

namespace nlab {

struct Entry {
  std::size_t row;
  std::size_t col;
  cplx value;
};

// Square complex operator held as compressed rows, built from triplets.
class SparseOperator {
 public:
  using Matrix = Eigen::SparseMatrix<cplx, Eigen::RowMajor>;

  SparseOperator() = default;
  explicit SparseOperator(std::size_t dim);
  SparseOperator(std::size_t dim, const std::vector<Entry>& entries);
  explicit SparseOperator(Matrix m);

  static SparseOperator identity(std::size_t dim);
  static SparseOperator diagonal(const std::vector<cplx>& d);
  static SparseOperator kron(const SparseOperator& a, const SparseOperator& b);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t nnz() const { return static_cast<std::size_t>(m_.nonZeros()); }
  const Matrix& matrix() const { return m_; }

  std::vector<Entry> entries() const;

  // y = A x
  void apply(const cplx* x, cplx* y) const;
  std::vector<cplx> apply(const std::vector<cplx>& x) const;

  SparseOperator adjoint() const;
  SparseOperator operator+(const SparseOperator& o) const;
  SparseOperator operator-(const SparseOperator& o) const;
  SparseOperator operator*(const SparseOperator& o) const;
  SparseOperator scaled(cplx s) const;
  SparseOperator pruned(double threshold) const;

  Eigen::MatrixXcd to_dense() const;
  // max |A_ij - conj(A_ji)|
  double hermiticity_defect() const;

 private:
  Matrix m_;
};

}  // namespace nlab
