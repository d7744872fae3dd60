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

#include "nlab/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace nlab {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Gross:
      return "gross";
    case Variant::Nelson:
      return "nelson";
    case Variant::V0:
      return "v0";
    case Variant::Fiber:
      return "fiber";
  }
  return "unknown";
}

Hamiltonian::Hamiltonian(const ModelParams& p, const ScaleFrame& f,
                         std::optional<PositionGrid> grid,
                         const ModeGrid& physical_modes, int n_max, Variant v,
                         std::array<double, 3> P)
    : params_(p), frame_(f), grid_(std::move(grid)), variant_(v), P_(P) {
  if (v == Variant::Fiber && grid_)
    throw std::invalid_argument("fiber variant has no particle factor");
  if (v != Variant::Fiber && !grid_)
    throw std::invalid_argument("variant needs a position grid");
  np_ = grid_ ? grid_->size() : 1;
  const int M = static_cast<int>(physical_modes.size());
  const std::size_t fock = FockBasis::binomial(M + n_max, n_max);
  if (fock == 0 || fock > kMaxDimension / np_)
    throw std::length_error("basis dimension exceeds 500000");

  modes_ = scale_modes(physical_modes, frame_, Direction::Forward);
  basis_ = std::make_shared<const FockBasis>(M, n_max);

  const double r = frame_.r_of(frame_.tau);
  const double r2 = frame_.r_of(2.0 * frame_.tau);
  g1_ = p.e * r / p.m;
  g2_ = p.e * p.e * r * r / p.m;

  c_.resize(M);
  beta_.resize(M);
  nelson_.resize(M);
  for (auto& v3 : ck_) v3.resize(M);
  for (int j = 0; j < M; ++j) {
    const Mode& md = modes_.modes[j];
    const double k = mode_abs(md);
    beta_[j] = 1.0 / (k + r2 * k * k / (2.0 * p.m));
    const double amp = std::sqrt(md.weight) / std::sqrt(2.0 * k);
    c_[j] = amp * beta_[j];
    nelson_[j] = p.e * amp;
    for (int i = 0; i < 3; ++i) ck_[i][j] = c_[j] * md.k[i];
  }

  phase_.assign(M, std::vector<cplx>(np_, cplx(1.0, 0.0)));
  if (grid_) {
    for (int j = 0; j < M; ++j) {
      const auto& k = modes_.modes[j].k;
      for (std::size_t s = 0; s < np_; ++s) {
        const auto x = grid_->point(s);
        const double ph = r * (k[0] * x[0] + k[1] * x[1] + k[2] * x[2]);
        phase_[j][s] = cplx(std::cos(ph), std::sin(ph));
      }
    }
    coulomb_ = v == Variant::V0 ? 0.0 : p.alpha * p.Z * frame_.r_of(-frame_.tau);
    if (coulomb_ != 0.0)
      potential_ = coulomb_diagonal(*grid_, coulomb_, 0.5 * grid_->h());
  }

  field_ = field_energy(*basis_, modes_);
  if (v == Variant::Fiber) {
    const std::size_t F = basis_->dim();
    fiber_kin_.assign(F, 0.0);
    for (int i = 0; i < 3; ++i) {
      fiber_q_[i].assign(F, P_[i]);
      for (std::size_t s = 0; s < F; ++s) {
        const auto& occ = basis_->occupations(s);
        for (int j = 0; j < M; ++j)
          fiber_q_[i][s] -= r * modes_.modes[j].k[i] * occ[j];
        fiber_kin_[s] += fiber_q_[i][s] * fiber_q_[i][s] / (2.0 * p.m);
      }
    }
  }
}

void Hamiltonian::lower(const std::vector<double>& coef, cplx a,
                        const cplx* x, cplx* y) const {
  for (int j = 0; j < basis_->mode_count(); ++j) {
    if (coef[j] == 0.0) continue;
    const cplx* ph = phase_[j].data();
    for (const auto& t : basis_->lowering(j))
      kern::diag_axpy(np_, a * (coef[j] * t.amp), ph, x + t.from * np_,
                      y + t.to * np_);
  }
}

void Hamiltonian::raise(const std::vector<double>& coef, cplx a,
                        const cplx* x, cplx* y) const {
  for (int j = 0; j < basis_->mode_count(); ++j) {
    if (coef[j] == 0.0) continue;
    const cplx* ph = phase_[j].data();
    for (const auto& t : basis_->lowering(j))
      kern::diag_conj_axpy(np_, a * (coef[j] * t.amp), ph, x + t.to * np_,
                           y + t.from * np_);
  }
}

void Hamiltonian::apply_A(int axis, cplx a, const cplx* x, cplx* y) const {
  lower(ck_[axis], a, x, y);
}

void Hamiltonian::apply_Adag(int axis, cplx a, const cplx* x, cplx* y) const {
  raise(ck_[axis], a, x, y);
}

void Hamiltonian::apply_p(int axis, cplx a, const cplx* x, cplx* y) const {
  const std::size_t F = basis_->dim();
  if (grid_) {
    for (std::size_t f = 0; f < F; ++f)
      grid_->apply_momentum(axis, a, x + f * np_, y + f * np_);
  } else {
    for (std::size_t f = 0; f < F; ++f) y[f] += a * fiber_q_[axis][f] * x[f];
  }
}

void Hamiltonian::apply(const cplx* x, cplx* y) const {
  const std::size_t F = basis_->dim();
  const std::size_t n = dim();
  std::fill(y, y + n, cplx(0.0, 0.0));
  for (std::size_t f = 0; f < F; ++f) {
    const cplx* xf = x + f * np_;
    cplx* yf = y + f * np_;
    if (grid_) {
      grid_->apply_kinetic(1.0 / params_.m, xf, yf);
      if (!potential_.empty())
        kern::rdiag_axpy(np_, 1.0, potential_.data(), xf, yf);
    } else {
      yf[0] += fiber_kin_[f] * xf[0];
    }
    if (field_[f] != 0.0) kern::axpy(np_, field_[f], xf, yf);
  }
  if (params_.e == 0.0) return;
  if (variant_ == Variant::Nelson) {
    lower(nelson_, 1.0, x, y);
    raise(nelson_, 1.0, x, y);
    return;
  }
  std::vector<cplx> w(n), z(n);
  for (int i = 0; i < 3; ++i) {
    std::fill(w.begin(), w.end(), cplx(0.0, 0.0));
    std::fill(z.begin(), z.end(), cplx(0.0, 0.0));
    apply_A(i, 1.0, x, w.data());
    apply_p(i, g1_, x, z.data());
    apply_Adag(i, 0.5 * g2_, x, z.data());
    apply_p(i, g1_, w.data(), y);
    apply_A(i, 0.5 * g2_, w.data(), y);
    apply_Adag(i, g2_, w.data(), y);
    apply_Adag(i, 1.0, z.data(), y);
  }
}

MatVec Hamiltonian::matvec() const {
  return [this](const cplx* x, cplx* y) { apply(x, y); };
}

SparseOperator Hamiltonian::to_sparse() const {
  const std::size_t F = basis_->dim();
  const int M = basis_->mode_count();
  const SparseOperator IF = SparseOperator::identity(F);
  const SparseOperator IP = SparseOperator::identity(np_);
  auto real_diag = [](const std::vector<double>& d) {
    return SparseOperator::diagonal(std::vector<cplx>(d.begin(), d.end()));
  };

  SparseOperator H = SparseOperator::kron(real_diag(field_), IP);
  if (grid_) {
    H = H + SparseOperator::kron(IF, grid_->kinetic_operator().scaled(1.0 / params_.m));
    if (!potential_.empty()) H = H + SparseOperator::kron(IF, real_diag(potential_));
  } else {
    H = H + SparseOperator::kron(real_diag(fiber_kin_), IP);
  }
  if (params_.e == 0.0) return H;

  std::vector<SparseOperator> lo(M);
  for (int j = 0; j < M; ++j)
    lo[j] = SparseOperator::kron(ladder_ops(*basis_, j).a,
                                 SparseOperator::diagonal(phase_[j]));
  if (variant_ == Variant::Nelson) {
    SparseOperator I(dim());
    for (int j = 0; j < M; ++j) I = I + lo[j].scaled(nelson_[j]);
    return H + I + I.adjoint();
  }
  for (int i = 0; i < 3; ++i) {
    SparseOperator A(dim());
    for (int j = 0; j < M; ++j) A = A + lo[j].scaled(ck_[i][j]);
    const SparseOperator Ad = A.adjoint();
    const SparseOperator Pi =
        grid_ ? SparseOperator::kron(IF, grid_->momentum_operator(i))
              : SparseOperator::kron(real_diag(fiber_q_[i]), IP);
    H = H + (Pi * A + Ad * Pi).scaled(g1_) + (A * A).scaled(0.5 * g2_) +
        (Ad * A).scaled(g2_) + (Ad * Ad).scaled(0.5 * g2_);
  }
  return H;
}

std::vector<cplx> Hamiltonian::product_with_vacuum(
    const std::vector<cplx>& psi) const {
  if (psi.size() != np_) throw std::invalid_argument("particle vector size");
  std::vector<cplx> v(dim(), cplx(0.0, 0.0));
  std::copy(psi.begin(), psi.end(), v.begin());
  return v;
}

}  // namespace nlab
