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

#include "nlab/sparse.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>

namespace nlab {

SparseOperator::SparseOperator(std::size_t dim) : m_(dim, dim) {}

SparseOperator::SparseOperator(std::size_t dim,
                               const std::vector<Entry>& entries)
    : m_(dim, dim) {
  std::vector<Eigen::Triplet<cplx>> t;
  t.reserve(entries.size());
  for (const Entry& e : entries)
    t.emplace_back(static_cast<int>(e.row), static_cast<int>(e.col), e.value);
  m_.setFromTriplets(t.begin(), t.end());
  m_.makeCompressed();
}

SparseOperator::SparseOperator(Matrix m) : m_(std::move(m)) {
  m_.makeCompressed();
}

SparseOperator SparseOperator::identity(std::size_t dim) {
  Matrix m(dim, dim);
  m.setIdentity();
  return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::diagonal(const std::vector<cplx>& d) {
  std::vector<Entry> e;
  e.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != cplx(0.0)) e.push_back({i, i, d[i]});
  return SparseOperator(d.size(), e);
}

SparseOperator SparseOperator::kron(const SparseOperator& a,
                                    const SparseOperator& b) {
  Matrix m = Eigen::kroneckerProduct(a.m_, b.m_).eval();
  return SparseOperator(std::move(m));
}

std::vector<Entry> SparseOperator::entries() const {
  std::vector<Entry> out;
  out.reserve(nnz());
  for (int r = 0; r < m_.outerSize(); ++r)
    for (Matrix::InnerIterator it(m_, r); it; ++it)
      out.push_back({static_cast<std::size_t>(it.row()),
                     static_cast<std::size_t>(it.col()), it.value()});
  return out;
}

void SparseOperator::apply(const cplx* x, cplx* y) const {
  const int* outer = m_.outerIndexPtr();
  const int* inner = m_.innerIndexPtr();
  const cplx* val = m_.valuePtr();
  const int rows = static_cast<int>(m_.rows());
  for (int r = 0; r < rows; ++r) {
    cplx s(0.0);
    for (int k = outer[r]; k < outer[r + 1]; ++k) s += val[k] * x[inner[k]];
    y[r] = s;
  }
}

std::vector<cplx> SparseOperator::apply(const std::vector<cplx>& x) const {
  std::vector<cplx> y(dim());
  apply(x.data(), y.data());
  return y;
}

SparseOperator SparseOperator::adjoint() const {
  Matrix m = m_.adjoint();
  return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::operator+(const SparseOperator& o) const {
  Matrix m = m_ + o.m_;
  return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::operator-(const SparseOperator& o) const {
  Matrix m = m_ - o.m_;
  return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::operator*(const SparseOperator& o) const {
  Matrix m = m_ * o.m_;
  return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::scaled(cplx s) const {
  Matrix m = m_ * s;
  return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::pruned(double threshold) const {
  Matrix m = m_;
  m.prune([threshold](const int&, const int&, const cplx& v) {
    return std::abs(v) > threshold;
  });
  return SparseOperator(std::move(m));
}

Eigen::MatrixXcd SparseOperator::to_dense() const {
  return Eigen::MatrixXcd(m_);
}

double SparseOperator::hermiticity_defect() const {
  Matrix d = m_ - Matrix(m_.adjoint());
  double worst = 0.0;
  for (int r = 0; r < d.outerSize(); ++r)
    for (Matrix::InnerIterator it(d, r); it; ++it)
      worst = std::max(worst, std::abs(it.value()));
  return worst;
}

}  // namespace nlab
