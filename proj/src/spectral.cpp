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

#include "nlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace nlab {

namespace {

using Vec = std::vector<cplx>;

Vec random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  Vec v(n);
  for (auto& c : v) {
    const double re = nd(rng);
    c = cplx(re, nd(rng));
  }
  return v;
}

double normalize(Vec& v) {
  const double s = kern::nrm(v.size(), v.data());
  if (s > 0.0) kern::scal(v.size(), cplx(1.0 / s, 0.0), v.data());
  return s;
}

// y += a (a_j (x) 1) x  and  y += a (a_j^* (x) 1) x
void fock_lower(const FockBasis& b, std::size_t np, int j, cplx a,
                const cplx* x, cplx* y) {
  for (const auto& t : b.lowering(j))
    kern::axpy(np, a * t.amp, x + t.from * np, y + t.to * np);
}
void fock_raise(const FockBasis& b, std::size_t np, int j, cplx a,
                const cplx* x, cplx* y) {
  for (const auto& t : b.lowering(j))
    kern::axpy(np, a * t.amp, x + t.to * np, y + t.from * np);
}

// y += a (k . D) x with D = p + e r (A + A^*)
void apply_kD(const Hamiltonian& H, const std::array<double, 3>& k, cplx a,
              const cplx* x, cplx* y) {
  const double er = H.params().e * H.frame().r_of(H.frame().tau);
  for (int i = 0; i < 3; ++i) {
    if (k[i] == 0.0) continue;
    H.apply_p(i, a * k[i], x, y);
    if (er != 0.0) {
      H.apply_A(i, a * (k[i] * er), x, y);
      H.apply_Adag(i, a * (k[i] * er), x, y);
    }
  }
}

// y += a d.x blockwise for a particle diagonal d
void blockwise(std::size_t np, std::size_t blocks, const Vec& d, bool conj,
               cplx a, const cplx* x, cplx* y) {
  for (std::size_t f = 0; f < blocks; ++f) {
    if (conj)
      kern::diag_conj_axpy(np, a, d.data(), x + f * np, y + f * np);
    else
      kern::diag_axpy(np, a, d.data(), x + f * np, y + f * np);
  }
}

}  // namespace

SpectralResult ground_state(const Hamiltonian& H, const std::vector<cplx>& psi,
                            const LanczosOptions& opt) {
  return lanczos_ground(H.dim(), H.matvec(), H.product_with_vacuum(psi), opt);
}

double pull_through_residual(const Hamiltonian& H, int j, int iterations,
                             std::uint64_t seed) {
  if (H.variant() != Variant::Gross && H.variant() != Variant::V0)
    throw std::invalid_argument("pull-through identity needs the gross or v0 variant");
  const FockBasis& b = H.basis();
  if (j < 0 || j >= b.mode_count()) throw std::out_of_range("mode index");
  const std::size_t np = H.particle_size(), F = b.dim(), n = H.dim();
  const double omega = mode_abs(H.modes().modes[j]);
  const auto& kj = H.modes().modes[j].k;
  const double pref = H.g1() * H.coupling()[j];
  const Vec& ph = H.phase(j);

  auto project = [&](Vec& v) {
    for (std::size_t f = 0; f < F; ++f)
      if (b.total(f) >= b.n_max())
        std::fill(v.begin() + f * np, v.begin() + (f + 1) * np, cplx(0.0, 0.0));
  };
  Vec t1(n), t2(n), t3(n);
  // out = P R v
  auto applyR = [&](const Vec& v, Vec& out) {
    std::fill(out.begin(), out.end(), cplx(0.0, 0.0));
    H.apply(v.data(), t1.data());
    fock_lower(b, np, j, 1.0, t1.data(), out.data());
    std::fill(t2.begin(), t2.end(), cplx(0.0, 0.0));
    fock_lower(b, np, j, 1.0, v.data(), t2.data());
    H.apply(t2.data(), t1.data());
    kern::axpy(n, -1.0, t1.data(), out.data());
    kern::axpy(n, -omega, t2.data(), out.data());
    std::fill(t3.begin(), t3.end(), cplx(0.0, 0.0));
    apply_kD(H, kj, 1.0, v.data(), t3.data());
    blockwise(np, F, ph, true, -pref, t3.data(), out.data());
    project(out);
  };
  // out = P R^* v
  auto applyRt = [&](const Vec& v, Vec& out) {
    std::fill(out.begin(), out.end(), cplx(0.0, 0.0));
    std::fill(t2.begin(), t2.end(), cplx(0.0, 0.0));
    fock_raise(b, np, j, 1.0, v.data(), t2.data());
    H.apply(t2.data(), t1.data());
    kern::axpy(n, 1.0, t1.data(), out.data());
    kern::axpy(n, -omega, t2.data(), out.data());
    H.apply(v.data(), t1.data());
    fock_raise(b, np, j, -1.0, t1.data(), out.data());
    std::fill(t3.begin(), t3.end(), cplx(0.0, 0.0));
    blockwise(np, F, ph, false, 1.0, v.data(), t3.data());
    apply_kD(H, kj, -pref, t3.data(), out.data());
    project(out);
  };

  Vec v = random_vector(n, seed), u(n), w(n);
  project(v);
  normalize(v);
  double est = 0.0;
  for (int it = 0; it < iterations; ++it) {
    applyR(v, u);
    est = std::max(est, kern::nrm(n, u.data()));
    applyRt(u, w);
    if (normalize(w) == 0.0) break;
    v.swap(w);
  }
  return est;
}

SnappedModes snap_modes(const ModeGrid& g, double L, double r) {
  const double dq = std::numbers::pi / L;
  SnappedModes out;
  std::vector<std::array<double, 3>> ks;
  std::vector<double> ws;
  for (const Mode& m : g.modes) {
    std::array<double, 3> k{};
    for (int i = 0; i < 3; ++i) k[i] = std::round(r * m.k[i] / dq) * dq / r;
    const double a = mode_abs(m);
    const double b = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
    if (b == 0.0) throw std::invalid_argument("mode snaps to zero momentum; enlarge the box");
    out.max_relative_change = std::max(out.max_relative_change, std::abs(b - a) / a);
    ks.push_back(k);
    ws.push_back(m.weight);
  }
  out.modes = custom_modes(ks, ws);
  return out;
}

namespace {

bool on_lattice(double q, double dq) {
  const double t = q / dq;
  return std::abs(t - std::round(t)) < 1e-9;
}

// Trigonometric interpolation of one particle block to the fine grid.
void pad3(const Vec& P, int n, int n2, const cplx* in, cplx* out) {
  const std::size_t a = n, b = n2;
  Vec s1(a * a * b, cplx(0.0, 0.0)), s2(a * b * b, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < a * a; ++i)
    for (std::size_t l2 = 0; l2 < b; ++l2)
      s1[i * b + l2] = kern::dotu(a, &P[l2 * a], in + i * a);
  for (std::size_t ix = 0; ix < a; ++ix)
    for (std::size_t l2 = 0; l2 < b; ++l2)
      for (std::size_t l = 0; l < a; ++l)
        kern::axpy(b, P[l2 * a + l], &s1[(ix * a + l) * b], &s2[(ix * b + l2) * b]);
  std::fill(out, out + b * b * b, cplx(0.0, 0.0));
  for (std::size_t l2 = 0; l2 < b; ++l2)
    for (std::size_t l = 0; l < a; ++l)
      kern::axpy(b * b, P[l2 * a + l], &s2[l * b * b], out + l2 * b * b);
}

}  // namespace

TelescopeResult soft_decomposition_residual(const TelescopeSetup& s,
                                            const LanczosOptions& opt) {
  if (!(s.eps > 0.5 && s.eps < 1.0))
    throw std::invalid_argument("telescoping needs 1/2 < eps < 1");
  if (s.params.m != 1.0)
    throw std::invalid_argument("telescoping identities are stated for m = 1");
  const double dq = std::numbers::pi / s.L;
  const auto& k = s.k;
  const double kabs = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
  if (!(kabs > 0.0 && kabs < 1.0)) throw std::invalid_argument("need 0 < |k| < 1");
  for (double q : k)
    if (!on_lattice(q, dq)) throw std::invalid_argument("k is not a box lattice vector");
  double qmax = 0.0;
  for (const Mode& m : s.modes.modes)
    for (double q : m.k) {
      if (!on_lattice(q, dq))
        throw std::invalid_argument("mode momenta are not on the box lattice");
      qmax = std::max(qmax, std::abs(q));
    }

  TelescopeResult out;
  out.f1_exact = std::pow(kabs, s.eps);
  double f1 = std::round(out.f1_exact / dq) * dq;
  if (f1 == 0.0) f1 = dq;
  out.f1_lattice = f1;
  if (std::abs(f1 - out.f1_exact) > 0.1 * out.f1_exact) {
    out.lattice_ok = false;
    out.note = "lattice incompatibility: rounding changes |k|^eps by more than 10%";
  }

  const ScaleFrame fr = make_frame_rho(0.0, 1.0);
  const PositionGrid coarse(s.n, s.L);
  const Hamiltonian Hc(s.params, fr, coarse, s.modes, s.n_max, Variant::Gross);
  const AtomicState at = atomic_ground(coarse, Hc.coulomb_strength(), 0.5 * coarse.h());
  const SpectralResult gs = ground_state(Hc, at.psi, opt);
  out.ground_energy = gs.energy;

  double kinf = 0.0;
  for (double q : k) kinf = std::max(kinf, std::abs(q));
  int n2 = s.n_fine;
  if (n2 == 0) {
    const double shift = kinf + std::abs(f1) + 2.0 * qmax;
    n2 = s.n + 2 * static_cast<int>(std::ceil(shift / dq - 1e-9)) + 2;
  }
  if (n2 % 2) ++n2;
  out.n_fine = n2;
  const PositionGrid fine(n2, s.L);
  const Hamiltonian H(s.params, fr, fine, s.modes, s.n_max, Variant::Gross);
  const std::size_t np = H.particle_size(), F = H.basis().dim(), dim = H.dim();
  out.fine_dim = dim;

  Vec psi(dim);
  const Vec P = padding_matrix(s.n, s.L, n2);
  for (std::size_t f = 0; f < F; ++f)
    pad3(P, s.n, n2, gs.vector.data() + f * coarse.size(), psi.data() + f * np);

  auto plane = [&](std::array<double, 3> g) {
    PositionFunction pf;
    pf.kind = PositionKind::PlaneWave;
    pf.k = g;
    return position_diagonal(fine, pf);
  };
  // y += a e^{i g x} x
  auto mul = [&](const Vec& ph, cplx a, const Vec& x, Vec& y) {
    blockwise(np, F, ph, false, a, x.data(), y.data());
  };
  auto zero = [&]() { return Vec(dim, cplx(0.0, 0.0)); };
  auto D = [&](int l, const Vec& x) {
    Vec y = zero();
    std::array<double, 3> e{0.0, 0.0, 0.0};
    e[l] = 1.0;
    apply_kD(H, e, 1.0, x.data(), y.data());
    return y;
  };
  Vec Gpsi(dim);
  H.apply(psi.data(), Gpsi.data());
  // y += a [G, e^{i g x}] psi
  auto comm = [&](const Vec& ph, cplx a, Vec& y) {
    Vec t = zero(), u(dim);
    mul(ph, 1.0, psi, t);
    H.apply(t.data(), u.data());
    kern::axpy(dim, a, u.data(), y.data());
    mul(ph, -a, Gpsi, y);
  };
  auto axpy = [&](cplx a, const Vec& x, Vec& y) { kern::axpy(dim, a, x.data(), y.data()); };

  const Vec g0 = plane({-k[0], -k[1], -k[2]});
  std::array<Vec, 3> g1, pf1, pf2, Dpsi;
  std::array<double, 3> c1{}, z1sq{};
  for (int j = 0; j < 3; ++j) {
    std::array<double, 3> z = k;
    z[j] += f1;
    z1sq[j] = z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
    g1[j] = plane({-z[0], -z[1], -z[2]});
    std::array<double, 3> e{0.0, 0.0, 0.0};
    e[j] = f1;
    pf1[j] = plane(e);
    e[j] = -f1;
    pf2[j] = plane(e);
    c1[j] = k[j] * (k[j] + f1) / f1;
    Dpsi[j] = D(j, psi);
  }

  // First step.
  Vec I0 = zero(), lhs1 = zero(), rhs1 = zero();
  {
    Vec t = zero();
    for (int j = 0; j < 3; ++j) axpy(k[j], Dpsi[j], t);
    mul(g0, 1.0, t, I0);
  }
  const double ksum = k[0] + k[1] + k[2];
  mul(g0, -0.5 * f1 * ksum, psi, rhs1);                      // Psi_10
  comm(g0, ksum / f1, rhs1);                                 // Psi_11
  for (int j = 0; j < 3; ++j)
    mul(g0, -0.5 * k[j] / f1 * z1sq[j], psi, rhs1);          // Psi_12
  Vec I1 = zero();
  for (int j = 0; j < 3; ++j) {
    if (k[j] == 0.0) continue;
    Vec shifted = zero();
    mul(pf1[j], 1.0, psi, shifted);
    for (int l = 0; l < 3; ++l) {
      if (l == j || k[l] == 0.0) continue;
      mul(g1[j], k[j] * k[l] / f1, D(l, shifted), rhs1);     // Psi_13
    }
    mul(g1[j], c1[j], Dpsi[j], I1);                          // I_1
    axpy(-1.0, psi, shifted);
    mul(g1[j], c1[j], D(j, shifted), rhs1);                  // Psi_1^er
  }
  axpy(1.0, I1, rhs1);
  lhs1 = I0;
  axpy(-1.0, rhs1, lhs1);
  out.res1 = kern::nrm(dim, lhs1.data());
  out.norm_I0 = kern::nrm(dim, I0.data());
  out.norm_I1 = kern::nrm(dim, I1.data());

  // Second step, f2 = -f1 so zeta^(2) = k and e^{-i zeta^(2) x} = g0.
  const double f2 = -f1;
  const double kk = kabs * kabs;
  Vec rhs2 = zero();
  for (int j = 0; j < 3; ++j) {
    if (c1[j] == 0.0) continue;
    mul(g1[j], -0.5 * c1[j] * f2, psi, rhs2);                // Psi_20
    comm(g1[j], c1[j] / f2, rhs2);                           // Psi_21
    mul(g1[j], -0.5 * c1[j] / f2 * kk, psi, rhs2);           // Psi_22
    Vec shifted = zero();
    mul(pf2[j], 1.0, psi, shifted);
    for (int l = 0; l < 3; ++l) {
      if (l == j || k[l] == 0.0) continue;
      mul(g0, c1[j] * k[l] / f2, D(l, shifted), rhs2);       // Psi_23
    }
    mul(g0, c1[j] * k[j] / f2, D(j, shifted), rhs2);         // I_2
  }
  Vec lhs2 = I1;
  axpy(-1.0, rhs2, lhs2);
  out.res2 = kern::nrm(dim, lhs2.data());
  return out;
}

double translation_residual(const Hamiltonian& H, int axis,
                            std::uint64_t seed) {
  if (!H.has_particle()) throw std::invalid_argument("translation needs a particle grid");
  if (axis < 0 || axis > 2) throw std::out_of_range("axis");
  const PositionGrid& g = H.grid();
  const FockBasis& b = H.basis();
  const std::size_t np = H.particle_size(), F = b.dim(), n = H.dim();
  const std::size_t N = g.n();
  const double r = H.frame().r_of(H.frame().tau);
  Vec phase(F);
  for (std::size_t f = 0; f < F; ++f) {
    double pf = 0.0;
    for (int j = 0; j < b.mode_count(); ++j)
      pf += r * H.modes().modes[j].k[axis] * b.occupations(f)[j];
    phase[f] = std::polar(1.0, -g.h() * pf);
  }
  const std::size_t stride = axis == 0 ? N * N : (axis == 1 ? N : 1);
  auto U = [&](const Vec& x, Vec& y) {
    for (std::size_t f = 0; f < F; ++f)
      for (std::size_t s = 0; s < np; ++s) {
        const std::size_t c = (s / stride) % N;
        const std::size_t src = s - c * stride + ((c + N - 1) % N) * stride;
        y[f * np + s] = phase[f] * x[f * np + src];
      }
  };
  Vec v = random_vector(n, seed), a(n), bvec(n), c(n);
  normalize(v);
  U(v, a);
  H.apply(a.data(), bvec.data());
  H.apply(v.data(), a.data());
  U(a, c);
  kern::axpy(n, -1.0, c.data(), bvec.data());
  return kern::nrm(n, bvec.data());
}

double effective_mass_riemann(const ModeGrid& modes, double m) {
  double s = 0.0;
  for (const Mode& md : modes.modes) {
    const double k = mode_abs(md);
    const double beta = 1.0 / (k + k * k / (2.0 * m));
    s += md.weight * k * k * beta * beta * beta / (2.0 * k);
  }
  return 2.0 / (3.0 * m) * s;
}

EffectiveMass effective_mass_numeric(const ModelParams& p,
                                     const ModeGrid& modes, int n_max,
                                     const LanczosOptions& opt) {
  EffectiveMass out;
  out.riemann = p.e * p.e * effective_mass_riemann(modes, p.m);
  const ScaleFrame fr = make_frame_rho(0.0, 1.0);
  const Hamiltonian H(p, fr, std::nullopt, modes, n_max, Variant::Fiber);
  const std::size_t n = H.dim();
  Vec seed(n, cplx(0.0, 0.0));
  seed[0] = 1.0;
  const SpectralResult gs = lanczos_ground(n, H.matvec(), seed, opt);
  out.ground_energy = gs.energy;
  if (!gs.converged) {
    out.converged = false;
    out.note = "fiber ground state: " + gs.note;
  }
  const Vec& psi = gs.vector;
  const double E = gs.energy;
  auto project = [&](Vec& v) {
    const cplx c = kern::dot(n, psi.data(), v.data());
    kern::axpy(n, -c, psi.data(), v.data());
  };
  auto op = [&](const Vec& x, Vec& y) {
    Vec t = x;
    project(t);
    H.apply(t.data(), y.data());
    kern::axpy(n, -E, t.data(), y.data());
    project(y);
  };
  double qf = 0.0;
  for (int i = 0; i < 3; ++i) {
    Vec w(n, cplx(0.0, 0.0));
    H.apply_p(i, -1.0, psi.data(), w.data());
    H.apply_A(i, -p.e, psi.data(), w.data());
    H.apply_Adag(i, -p.e, psi.data(), w.data());
    out.mean_W = std::max(out.mean_W, std::abs(kern::dot(n, psi.data(), w.data())));
    project(w);
    const double bn = kern::nrm(n, w.data());
    if (bn == 0.0) continue;
    Vec x(n, cplx(0.0, 0.0)), r = w, d = w, Ad(n);
    double rr = kern::norm2(n, r.data());
    int it = 0;
    for (; it < 5000 && std::sqrt(rr) > 1e-13 * bn; ++it) {
      op(d, Ad);
      const double dAd = kern::dot(n, d.data(), Ad.data()).real();
      if (!(dAd > 0.0)) {
        out.converged = false;
        out.note = "conjugate gradient: operator not positive on the complement";
        break;
      }
      const double al = rr / dAd;
      kern::axpy(n, al, d.data(), x.data());
      kern::axpy(n, -al, Ad.data(), r.data());
      const double rr2 = kern::norm2(n, r.data());
      kern::scal(n, rr2 / rr, d.data());
      kern::axpy(n, 1.0, r.data(), d.data());
      rr = rr2;
    }
    out.cg_iterations += it;
    if (std::sqrt(rr) > 1e-13 * bn && out.converged) {
      out.converged = false;
      out.note = "conjugate gradient did not converge";
    }
    qf += kern::dot(n, w.data(), x.data()).real();
  }
  out.quadratic_form = qf;
  out.ratio = 1.0 / (1.0 - 2.0 / (3.0 * p.m) * qf);
  return out;
}

ScalingCheck scaling_covariance(const ModelParams& p, int n, double L,
                                const ModeGrid& modes, int n_max, double tau,
                                double rho, const LanczosOptions& opt) {
  ScalingCheck out;
  auto solve = [&](const ScaleFrame& fr, double len) {
    const PositionGrid g(n, len);
    const Hamiltonian H(p, fr, g, modes, n_max, Variant::Gross);
    const AtomicState at = atomic_ground(g, H.coulomb_strength(), 0.5 * g.h(), opt);
    return ground_state(H, at.psi, opt).energy;
  };
  const ScaleFrame f0 = make_frame_rho(0.0, rho);
  const ScaleFrame ft = make_frame_rho(tau, rho);
  out.energy0 = solve(f0, L);
  out.energy_tau = solve(ft, L * ft.r_of(tau));
  out.predicted = scale_energy(ft, out.energy0, Direction::Forward);
  out.relative_error = std::abs(out.energy_tau - out.predicted) /
                       std::max(1e-300, std::abs(out.predicted));
  return out;
}

}  // namespace nlab
