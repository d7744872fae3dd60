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
#include "nlab/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nlab/closedform.hpp"
#include "nlab/spectral.hpp"

namespace nlab {

PhotonNumbers photon_number(const Hamiltonian& H,
                            const std::vector<cplx>& state) {
  const FockBasis& b = H.basis();
  const std::size_t np = H.particle_size();
  if (state.size() != H.dim()) throw std::invalid_argument("state dimension");
  std::vector<bool> soft(b.mode_count());
  for (int j = 0; j < b.mode_count(); ++j) soft[j] = H.modes().modes[j].soft;
  PhotonNumbers out;
  for (std::size_t f = 0; f < b.dim(); ++f) {
    if (b.total(f) == 0) continue;
    const auto& occ = b.occupations(f);
    int ns = 0, nh = 0;
    for (int j = 0; j < b.mode_count(); ++j) (soft[j] ? ns : nh) += occ[j];
    const double w = kern::norm2(np, state.data() + f * np);
    out.soft += ns * w;
    out.hard += nh * w;
  }
  out.total = out.soft + out.hard;
  return out;
}

std::vector<double> particle_density(const Hamiltonian& H,
                                     const std::vector<cplx>& state) {
  const std::size_t np = H.particle_size(), F = H.basis().dim();
  if (state.size() != H.dim()) throw std::invalid_argument("state dimension");
  std::vector<double> rho(np, 0.0);
  for (std::size_t f = 0; f < F; ++f)
    for (std::size_t i = 0; i < np; ++i) rho[i] += std::norm(state[f * np + i]);
  return rho;
}

namespace {

double scalar_of(const PositionFunction& f, double r) {
  switch (f.kind) {
    case PositionKind::Abs:
      return r;
    case PositionKind::AbsSquared:
      return r * r;
    case PositionKind::Log3:
      return std::log(3.0 + r);
    case PositionKind::Exp:
      return std::exp(f.beta * r);
    case PositionKind::Localization: {
      const double G = localization_value(f.profile, r, f.R, f.c);
      return G * G;
    }
    case PositionKind::PlaneWave:
      break;
  }
  throw std::invalid_argument("moment needs a radial function");
}

double radial_expectation(const Hamiltonian& H, const std::vector<cplx>& state,
                          const PositionFunction& f, double scale) {
  if (!H.has_particle()) throw std::invalid_argument("model has no particle");
  const std::vector<double> rho = particle_density(H, state);
  const PositionGrid& g = H.grid();
  double s = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i)
    s += rho[i] * scalar_of(f, g.radius(i) * scale);
  return s;
}

}  // namespace

double spatial_moment(const Hamiltonian& H, const std::vector<cplx>& state,
                      const PositionFunction& f) {
  if (f.kind == PositionKind::Exp) {
    const ModelParams& p = H.params();
    if (p.e == 0.0) throw DomainError("exponential moment needs e != 0");
    const double b = 4.0 * std::numbers::pi / (p.e * p.e * p.Z);
    if (!(0.5 - 0.25 * f.beta * f.beta * b * b > 0.0))
      throw DomainError("beta outside the exponential window for every R > 4");
  }
  return radial_expectation(H, state, f, H.frame().r_of(-H.frame().tau));
}

double frame_expectation(const Hamiltonian& H, const std::vector<cplx>& state,
                         const PositionFunction& f) {
  return radial_expectation(H, state, f, 1.0);
}

Overlap overlap_with_decoupled(const Hamiltonian& H,
                               const std::vector<cplx>& state,
                               const std::vector<cplx>& atomic) {
  const std::size_t np = H.particle_size();
  if (atomic.size() != np || state.size() != H.dim())
    throw std::invalid_argument("overlap dimensions");
  Overlap o;
  o.vacuum_weight = kern::norm2(np, state.data());
  o.overlap_P = std::norm(kern::dot(np, atomic.data(), state.data()));
  o.overlap_Q = std::max(0.0, o.vacuum_weight - o.overlap_P);
  return o;
}

ScaleFrame solver_frame(const ModelParams& p, double lambda1) {
  if (p.e == 0.0) {
    ScaleFrame f;
    f.lambda1 = lambda1;
    return f;
  }
  return make_frame(p, 1.0, lambda1, RhoMode::AtomicScale);
}

double default_exp_beta(double e, double Z) {
  return 0.5 * e * e * Z / (4.0 * std::numbers::pi);
}

namespace {

void check_resolution(const Resolution& r) {
  if (r.n < 4 || r.n % 2) throw std::invalid_argument("grid-n must be even and >= 4");
  if (!(r.L > 0.0)) throw std::invalid_argument("box-L must be positive");
  if (r.n_radial < 1 || r.n_angular < 1)
    throw std::invalid_argument("mode counts must be positive");
  if (r.n_max < 0) throw std::invalid_argument("nmax must be >= 0");
}

}  // namespace

SolvedModel solve_ground(const SolveSetup& s) {
  check_resolution(s.res);
  SolvedModel out;
  const ModelParams& p = s.params;
  out.frame = solver_frame(p, s.lambda1);
  out.modes = build_modes(p.kappa, p.lambda, s.res.n_radial, s.res.n_angular);
  const PositionGrid grid(s.res.n, s.res.L);
  const double az = p.alpha * p.Z * out.frame.r_of(-out.frame.tau);
  out.atomic = atomic_ground(grid, az, 0.5 * grid.h(), s.lanczos);
  out.H = std::make_unique<Hamiltonian>(p, out.frame, grid, out.modes,
                                        s.res.n_max, Variant::Gross);
  out.ground = ground_state(*out.H, out.atomic.psi, s.lanczos);

  GroundStateReport& r = out.report;
  const double to_rel = out.frame.r_of(2.0 * out.frame.tau);
  r.variant = variant_name(Variant::Gross);
  r.energy = out.ground.energy;
  r.energy_rel = out.ground.energy * to_rel;
  r.atomic_energy = out.atomic.energy;
  r.atomic_energy_rel = out.atomic.energy * to_rel;
  r.atomic_analytic = out.atomic.analytic_energy;
  r.residual = out.ground.residual;
  r.iterations = out.ground.iterations;
  r.restarts = out.ground.restarts;
  r.converged = out.ground.converged && out.atomic.converged;
  r.dimension = out.H->dim();
  r.frame_tau = out.frame.tau;
  r.frame_rho = out.frame.rho;
  r.photons = photon_number(*out.H, out.ground.vector);
  r.overlap = overlap_with_decoupled(*out.H, out.ground.vector, out.atomic.psi);
  const auto& v = out.ground.vector;
  PositionFunction f;
  f.kind = PositionKind::Abs;
  r.moments.abs = spatial_moment(*out.H, v, f);
  f.kind = PositionKind::AbsSquared;
  r.moments.abs_squared = spatial_moment(*out.H, v, f);
  f.kind = PositionKind::Log3;
  r.moments.log3 = spatial_moment(*out.H, v, f);
  if (p.e != 0.0) {
    f.kind = PositionKind::Exp;
    f.beta = default_exp_beta(p.e, p.Z);
    r.moments.exp_beta = f.beta;
    r.moments.exp = spatial_moment(*out.H, v, f);
  }
  std::string note = out.atomic.warning;
  if (!out.ground.note.empty())
    note += (note.empty() ? "" : "; ") + out.ground.note;
  r.note = note;
  return out;
}

SpectralResult solve_v0(const SolveSetup& s) {
  check_resolution(s.res);
  const ModelParams& p = s.params;
  const ScaleFrame frame = solver_frame(p, s.lambda1);
  const ModeGrid modes =
      build_modes(p.kappa, p.lambda, s.res.n_radial, s.res.n_angular);
  const PositionGrid grid(s.res.n, s.res.L);
  const Hamiltonian H(p, frame, grid, modes, s.res.n_max, Variant::V0);
  return ground_state(H, analytic_atomic(grid, 0.0), s.lanczos);
}

}  // namespace nlab
