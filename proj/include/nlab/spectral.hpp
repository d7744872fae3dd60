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
#include <cstdint>
#include <string>
#include <vector>

#include "nlab/hamiltonian.hpp"
#include "nlab/lanczos.hpp"

namespace nlab {

// Ground state of an assembled model seeded with psi (x) vacuum.
SpectralResult ground_state(const Hamiltonian& H, const std::vector<cplx>& psi,
                            const LanczosOptions& opt = {});

// Operator norm, by power iteration, of
//   [a_j, H] - omega_j a_j - (e r/m) c_j conj(Phi_j) k_j.(p + e r (A + A^*))
// compressed to the states with at most n_max - 1 bosons (the truncation
// leaves the identity intact only there).  Gross, v0 and fiber variants.
double pull_through_residual(const Hamiltonian& H, int j, int iterations = 40,
                             std::uint64_t seed = 7);

// Moves every phase momentum r k_j onto the box lattice (pi/L) Z^3 keeping
// the weights.  Reports the largest relative change of |k_j|.
struct SnappedModes {
  ModeGrid modes;
  double max_relative_change = 0.0;
};
SnappedModes snap_modes(const ModeGrid& g, double L, double r);

struct TelescopeSetup {
  ModelParams params;
  int n = 8;
  double L = 8.0 * 3.14159265358979323846;
  int n_max = 2;
  ModeGrid modes;  // relativistic units, phases on the lattice
  std::array<double, 3> k{0.25, 0.125, 0.0};
  double eps = 0.75;
  int n_fine = 0;  // 0: chosen from the spectral support
};

struct TelescopeResult {
  double res1 = 0.0;
  double res2 = 0.0;
  double norm_I0 = 0.0;
  double norm_I1 = 0.0;
  double f1_exact = 0.0;
  double f1_lattice = 0.0;
  bool lattice_ok = true;
  int n_fine = 0;
  std::size_t fine_dim = 0;
  double ground_energy = 0.0;
  std::string note;
};

// Both steps of the soft-photon telescoping with f1 = |k|^eps, f2 = -f1,
// evaluated on the ground vector of the n-grid model after trigonometric
// interpolation to a grid fine enough that no plane-wave shift aliases.
// Throws std::invalid_argument unless 1/2 < eps < 1 and k is a lattice
// vector with |k| < 1.
TelescopeResult soft_decomposition_residual(const TelescopeSetup& s,
                                            const LanczosOptions& opt = {});

// |[H, T_a exp(-i h r P_f,a)] v| / |v| for a random v, T_a the cyclic shift
// by one grid step along axis a.
double translation_residual(const Hamiltonian& H, int axis,
                            std::uint64_t seed = 11);

struct EffectiveMass {
  double ratio = 1.0;             // m_eff / m
  double quadratic_form = 0.0;    // sum_i <W_i psi, (H - E)^{-1} W_i psi>
  double mean_W = 0.0;            // max_i |<psi, W_i psi>|
  double ground_energy = 0.0;
  double riemann = 0.0;           // e^2 times the mode sum of the integrand
  int cg_iterations = 0;
  bool converged = true;
  std::string note;
};

// (2/3) sum_j w_j |k_j|^2 beta_j^3 / (2 omega_j) on a relativistic grid.
double effective_mass_riemann(const ModeGrid& modes, double m = 1.0);

// Fiber model at P = 0 with W = P_f - e(A + A^*) and
// m / m_eff = 1 - (2/3) sum_i <W_i psi, (H - E)^{-1} W_i psi>.
EffectiveMass effective_mass_numeric(const ModelParams& p,
                                     const ModeGrid& modes, int n_max,
                                     const LanczosOptions& opt = {});

struct ScalingCheck {
  double energy0 = 0.0;
  double energy_tau = 0.0;
  double predicted = 0.0;
  double relative_error = 0.0;
};
// Solves the gross model at tau = 0 on (n, L) and at (tau, rho) on
// (n, rho^tau L) with the scaled modes.
ScalingCheck scaling_covariance(const ModelParams& p, int n, double L,
                                const ModeGrid& modes, int n_max, double tau,
                                double rho, const LanczosOptions& opt = {});

}  // namespace nlab
