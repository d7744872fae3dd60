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

#include "nlab/lanczos.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace nlab {

namespace {

double normalize(std::size_t n, cplx* x) {
  const double s = kern::nrm(n, x);
  if (s > 0.0) kern::scal(n, cplx(1.0 / s, 0.0), x);
  return s;
}

// Two passes of classical Gram-Schmidt against the stored basis.
void reorthogonalize(std::size_t n, const std::vector<std::vector<cplx>>& V,
                     std::size_t count, cplx* w) {
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i < count; ++i) {
      const cplx c = kern::dot(n, V[i].data(), w);
      kern::axpy(n, -c, V[i].data(), w);
    }
}

}  // namespace

double rayleigh_quotient(std::size_t dim, const MatVec& H, const cplx* x) {
  std::vector<cplx> y(dim);
  H(x, y.data());
  return kern::dot(dim, x, y.data()).real() /
         kern::dot(dim, x, x).real();
}

double residual_norm(std::size_t dim, const MatVec& H, const cplx* x,
                     double E) {
  std::vector<cplx> y(dim);
  H(x, y.data());
  kern::axpy(dim, cplx(-E, 0.0), x, y.data());
  return kern::nrm(dim, y.data());
}

SpectralResult lanczos_ground(std::size_t dim, const MatVec& H,
                              const std::vector<cplx>& seed,
                              const LanczosOptions& opt) {
  if (seed.size() != dim) throw std::invalid_argument("lanczos: seed size");
  if (dim == 0) throw std::invalid_argument("lanczos: empty space");
  SpectralResult res;
  std::vector<cplx> x = seed;
  if (normalize(dim, x.data()) == 0.0)
    throw std::invalid_argument("lanczos: zero seed");

  const std::size_t cap =
      std::max<std::size_t>(2, std::min<std::size_t>(opt.basis_cap, dim));
  std::vector<std::vector<cplx>> V;
  std::vector<cplx> w(dim);
  int it = 0;

  while (true) {
    V.assign(1, x);
    std::vector<double> a, b;
    double theta = 0.0;
    Eigen::VectorXd s;
    bool stop = false;
    for (std::size_t j = 0;; ++j) {
      H(V[j].data(), w.data());
      ++it;
      const double aj = kern::dot(dim, V[j].data(), w.data()).real();
      a.push_back(aj);
      kern::axpy(dim, cplx(-aj, 0.0), V[j].data(), w.data());
      if (j > 0) kern::axpy(dim, cplx(-b[j - 1], 0.0), V[j - 1].data(), w.data());
      reorthogonalize(dim, V, j + 1, w.data());
      const double bj = kern::nrm(dim, w.data());

      const int k = static_cast<int>(a.size());
      Eigen::MatrixXd T = Eigen::MatrixXd::Zero(k, k);
      for (int i = 0; i < k; ++i) {
        T(i, i) = a[i];
        if (i + 1 < k) T(i, i + 1) = T(i + 1, i) = b[i];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
      theta = es.eigenvalues()(0);
      s = es.eigenvectors().col(0);
      const double est = bj * std::abs(s(k - 1));

      const bool breakdown = bj <= 1e-13 * std::max(1.0, std::abs(theta));
      if (breakdown || est <= 0.5 * opt.tol || V.size() >= cap ||
          it >= opt.maxit || V.size() >= dim) {
        stop = breakdown || est <= 0.5 * opt.tol;
        break;
      }
      b.push_back(bj);
      V.emplace_back(w);
      kern::scal(dim, cplx(1.0 / bj, 0.0), V.back().data());
    }

    std::fill(x.begin(), x.end(), cplx(0.0, 0.0));
    for (std::size_t i = 0; i < static_cast<std::size_t>(s.size()); ++i)
      kern::axpy(dim, cplx(s(i), 0.0), V[i].data(), x.data());
    normalize(dim, x.data());
    res.energy = rayleigh_quotient(dim, H, x.data());
    res.history.push_back(res.energy);
    res.residual = residual_norm(dim, H, x.data(), res.energy);
    (void)theta;
    if (res.residual <= opt.tol) {
      res.converged = true;
      break;
    }
    if (it >= opt.maxit) {
      res.note = "not converged after maxit matrix-vector products";
      break;
    }
    if (stop && V.size() >= dim) {
      res.note = "Krylov space exhausted";
      break;
    }
    ++res.restarts;
  }
  res.iterations = it;
  res.vector = std::move(x);
  return res;
}

SpectralResult dense_ground(std::size_t dim, const MatVec& H,
                            bool want_vector) {
  Eigen::MatrixXcd M(dim, dim);
  std::vector<cplx> e(dim, cplx(0.0, 0.0)), col(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    e[j] = 1.0;
    H(e.data(), col.data());
    e[j] = 0.0;
    for (std::size_t i = 0; i < dim; ++i) M(i, j) = col[i];
  }
  Eigen::MatrixXcd Hs = 0.5 * (M + M.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      Hs, want_vector ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  SpectralResult r;
  r.energy = es.eigenvalues()(0);
  r.converged = es.info() == Eigen::Success;
  if (want_vector) {
    r.vector.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) r.vector[i] = es.eigenvectors()(i, 0);
    r.residual = residual_norm(dim, H, r.vector.data(), r.energy);
  }
  r.iterations = static_cast<int>(dim);
  return r;
}

}  // namespace nlab
