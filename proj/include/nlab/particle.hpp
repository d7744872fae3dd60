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
#include <string>
#include <vector>

#include "nlab/kernels.hpp"
#include "nlab/lanczos.hpp"
#include "nlab/sparse.hpp"

namespace nlab {

// Periodic cube [-L, L)^3 with n points per axis.  Particle vectors hold grid
// values times h^{3/2}, so the Euclidean norm is the h^3-weighted L^2 norm.
// Index (ix, iy, iz) -> (ix n + iy) n + iz.
class PositionGrid {
 public:
  PositionGrid(int n, double L);

  int n() const { return n_; }
  double L() const { return L_; }
  double h() const { return h_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_ * n_; }
  double coord(int m) const { return -L_ + m * h_; }
  std::array<double, 3> point(std::size_t i) const;
  double radius(std::size_t i) const;
  // Momentum lattice m pi / L, m = -n/2 .. n/2 - 1.
  const std::vector<double>& momenta() const { return q_; }

  // Dense n x n spectral derivative (-i d/dx) and its square, row major.
  const std::vector<cplx>& dmat() const { return d_; }
  const std::vector<cplx>& dmat2() const { return d2_; }

  // y += a M_axis x for a row-major n x n matrix M acting on one axis.
  void apply_axis(const std::vector<cplx>& M, int axis, cplx a,
                  const cplx* x, cplx* y) const;
  // y += a p_axis x
  void apply_momentum(int axis, cplx a, const cplx* x, cplx* y) const;
  // y += a p^2/2 x
  void apply_kinetic(cplx a, const cplx* x, cplx* y) const;

  SparseOperator momentum_operator(int axis) const;
  SparseOperator kinetic_operator() const;

 private:
  int n_;
  double L_;
  double h_;
  std::vector<double> q_;
  std::vector<cplx> d_;
  std::vector<cplx> d2_;
};

// -strength / max(|x|, softening) on the grid.
std::vector<double> coulomb_diagonal(const PositionGrid& g, double strength,
                                     double softening);

struct AtomicState {
  double energy = 0.0;
  std::vector<cplx> psi;
  double analytic_energy = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  std::string warning;
};

// Sampled pi^{-1/2} a^{3/2} e^{-a|x|}, renormalized on the grid; constant
// for a = 0.
std::vector<cplx> analytic_atomic(const PositionGrid& g, double alphaZ);

// Lowest eigenpair of p^2/2 - alphaZ / max(|x|, softening).
AtomicState atomic_ground(const PositionGrid& g, double alphaZ,
                          double softening, const LanczosOptions& opt = {});

enum class Profile { Log, Sqrt, Abs };

// Localization function G_R = chi_R g with chi_R = 0 for r < R/2, 1 for
// r > R and linear in between.
double profile_value(Profile p, double r, double c);
double localization_value(Profile p, double r, double R, double c);

enum class PositionKind { Abs, AbsSquared, Log3, Exp, PlaneWave, Localization };

struct PositionFunction {
  PositionKind kind = PositionKind::Abs;
  double beta = 0.0;
  std::array<double, 3> k{0.0, 0.0, 0.0};
  double R = 8.0;
  double c = 1.0;
  Profile profile = Profile::Sqrt;
};

std::vector<cplx> position_diagonal(const PositionGrid& g,
                                    const PositionFunction& f);
SparseOperator position_operator(const PositionGrid& g,
                                 const PositionFunction& f);
// Largest nearest-neighbour difference quotient of G_R on the grid.
double localization_grad_sup(const PositionGrid& g, Profile p, double R,
                             double c);

// sum_i |p_i psi|^2
double momentum_norm2(const PositionGrid& g, const std::vector<cplx>& psi);

// Trigonometric interpolation from the n grid to a finer n2 grid on the same
// box, scaled to an isometry.  n2 x n, row major.
std::vector<cplx> padding_matrix(int n, double L, int n2);

// <p psi_at, (H_at - E_at + shift)^{-1} p psi_at> summed over the three
// components, from the l = 1 radial equation on a finite-difference grid.
struct RadialOptions {
  int points = 8000;
  double rmax = 50.0;
};
double radial_resolvent_l1(double alphaZ, double shift,
                           const RadialOptions& opt = {});
// The same discretization's value of |p psi_at|^2 (exact: alphaZ^2).
double radial_pnorm2_l1(double alphaZ, const RadialOptions& opt = {});

}  // namespace nlab
