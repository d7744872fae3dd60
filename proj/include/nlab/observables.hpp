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
#include <memory>
#include <string>
#include <vector>

#include "nlab/fockspace.hpp"
#include "nlab/hamiltonian.hpp"
#include "nlab/lanczos.hpp"
#include "nlab/model.hpp"
#include "nlab/particle.hpp"

namespace nlab {

struct PhotonNumbers {
  double total = 0.0;
  double soft = 0.0;
  double hard = 0.0;
};

// Expectations of N_f and its soft (|k| < 1) and hard parts.
PhotonNumbers photon_number(const Hamiltonian& H, const std::vector<cplx>& state);

// sum over the Fock index of |psi(f, x)|^2.
std::vector<double> particle_density(const Hamiltonian& H,
                                     const std::vector<cplx>& state);

// <psi, f(x) psi> with f evaluated at the relativistic position
// x_frame / rho^tau.  For Exp the window 1/2 - 2/R - (beta b)^2/4 > 0,
// b = 4 pi/(e^2 Z), must be open for some R > 4.
double spatial_moment(const Hamiltonian& H, const std::vector<cplx>& state,
                      const PositionFunction& f);

// <psi, G(x) psi> with G evaluated in frame coordinates.
double frame_expectation(const Hamiltonian& H, const std::vector<cplx>& state,
                         const PositionFunction& f);

struct Overlap {
  double overlap_P = 0.0;
  double overlap_Q = 0.0;
  double vacuum_weight = 0.0;
};
Overlap overlap_with_decoupled(const Hamiltonian& H,
                               const std::vector<cplx>& state,
                               const std::vector<cplx>& atomic);

struct Resolution {
  int n = 16;
  double L = 8.0;
  int n_radial = 2;
  int n_angular = 2;
  int n_max = 2;
};

struct SolveSetup {
  ModelParams params;
  double lambda1 = 1.0;
  Resolution res;
  LanczosOptions lanczos;
};

struct Moments {
  double abs = 0.0;
  double abs_squared = 0.0;
  double log3 = 0.0;
  double exp = 0.0;
  double exp_beta = 0.0;
};

struct GroundStateReport {
  std::string variant;
  double energy = 0.0;            // frame units
  double energy_rel = 0.0;        // relativistic units
  double atomic_energy = 0.0;     // discrete E_at_h, frame units
  double atomic_energy_rel = 0.0;
  double atomic_analytic = 0.0;   // frame units
  double residual = 0.0;
  int iterations = 0;
  int restarts = 0;
  bool converged = false;
  std::size_t dimension = 0;
  PhotonNumbers photons;
  Moments moments;
  Overlap overlap;
  double frame_tau = 0.0;
  double frame_rho = 1.0;
  std::string note;
};

// Working frame of the solver: tau = 1 with rho = alpha Z lambda1, or the
// physical frame for e = 0.
ScaleFrame solver_frame(const ModelParams& p, double lambda1);

struct SolvedModel {
  ScaleFrame frame;
  ModeGrid modes;
  AtomicState atomic;
  std::unique_ptr<Hamiltonian> H;
  SpectralResult ground;
  GroundStateReport report;
};

// Gross model ground state and its observables.
SolvedModel solve_ground(const SolveSetup& s);

// Ground energy of the v0 model on the same grid and modes seeded with the
// constant particle state times the vacuum; frame units.
SpectralResult solve_v0(const SolveSetup& s);

// beta used for the exponential moment: half the largest admissible value at
// R = 8.
double default_exp_beta(double e, double Z);

}  // namespace nlab
