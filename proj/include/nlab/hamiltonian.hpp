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

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nlab/fockspace.hpp"
#include "nlab/lanczos.hpp"
#include "nlab/model.hpp"
#include "nlab/particle.hpp"
#include "nlab/sparse.hpp"

namespace nlab {

enum class Variant { Gross, Nelson, V0, Fiber };
std::string variant_name(Variant v);

constexpr std::size_t kMaxDimension = 500000;

// Truncated Hamiltonian on Fock (x) particle, vector index
// fock_index * particle_size + particle_index.  The fiber variant has no
// particle factor (particle_size == 1).
//
//   gross:  p^2/2m + V + H_f + (e r/m)(p.A + A*.p)
//           + (e^2 r^2/2m)(A.A + 2 A*.A + A*.A*)
//   nelson: p^2/2m + V + H_f + e sum_j (w_j/sqrt(2 omega_j))(Phi_j a_j + h.c.)
//   v0:     gross without V
//   fiber:  gross with p -> P - r P_f and A -> A at x = 0
//
// with r = rho^tau, A_i = sum_j c_j k_ji Phi_j a_j, Phi_j = e^{i r k_j.x},
// c_j = sqrt(w_j) beta_tau(k_j) / sqrt(2 omega_j) and
// beta_tau(k) = (|k| + rho^{2 tau} |k|^2/2m)^{-1}, all in frame units.
class Hamiltonian {
 public:
  Hamiltonian(const ModelParams& p, const ScaleFrame& f,
              std::optional<PositionGrid> grid, const ModeGrid& physical_modes,
              int n_max, Variant v, std::array<double, 3> P = {0, 0, 0});

  Variant variant() const { return variant_; }
  const ModelParams& params() const { return params_; }
  const ScaleFrame& frame() const { return frame_; }
  const ModeGrid& modes() const { return modes_; }
  const FockBasis& basis() const { return *basis_; }
  const PositionGrid& grid() const { return *grid_; }
  bool has_particle() const { return grid_.has_value(); }
  std::size_t particle_size() const { return np_; }
  std::size_t dim() const { return basis_->dim() * np_; }

  // Per-mode coupling coefficients c_j and the dressed denominator.
  const std::vector<double>& coupling() const { return c_; }
  const std::vector<double>& beta() const { return beta_; }
  double g1() const { return g1_; }
  double g2() const { return g2_; }
  double coulomb_strength() const { return coulomb_; }

  void apply(const cplx* x, cplx* y) const;
  MatVec matvec() const;

  // y += a A_i x and y += a A_i^* x.
  void apply_A(int axis, cplx a, const cplx* x, cplx* y) const;
  void apply_Adag(int axis, cplx a, const cplx* x, cplx* y) const;
  // y += a p_i x (particle momentum, or P_i - r P_f,i for the fiber).
  void apply_p(int axis, cplx a, const cplx* x, cplx* y) const;
  // Mode phase Phi_j on the particle grid.
  const std::vector<cplx>& phase(int j) const { return phase_[j]; }

  // Independent assembly from Kronecker products of the factor operators.
  SparseOperator to_sparse() const;

  // psi (x) vacuum.
  std::vector<cplx> product_with_vacuum(const std::vector<cplx>& psi) const;

 private:
  void lower(const std::vector<double>& coef, cplx a, const cplx* x,
             cplx* y) const;
  void raise(const std::vector<double>& coef, cplx a, const cplx* x,
             cplx* y) const;

  ModelParams params_;
  ScaleFrame frame_;
  std::optional<PositionGrid> grid_;
  ModeGrid modes_;
  std::shared_ptr<const FockBasis> basis_;
  Variant variant_;
  std::array<double, 3> P_;
  std::size_t np_ = 1;
  double g1_ = 0.0;
  double g2_ = 0.0;
  double coulomb_ = 0.0;
  std::vector<double> c_;
  std::vector<double> beta_;
  std::vector<double> nelson_;
  std::array<std::vector<double>, 3> ck_;
  std::vector<std::vector<cplx>> phase_;
  std::vector<double> potential_;
  std::vector<double> field_;
  std::array<std::vector<double>, 3> fiber_q_;
  std::vector<double> fiber_kin_;
};

}  // namespace nlab
