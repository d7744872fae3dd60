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

#include "nlab/particle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nlab {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

PositionGrid::PositionGrid(int n, double L) : n_(n), L_(L) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("grid size must be even and >= 2");
  if (!(L > 0.0)) throw std::invalid_argument("box half-width must be positive");
  h_ = 2.0 * L / n;
  q_.resize(n);
  for (int m = 0; m < n; ++m) q_[m] = (m - n / 2) * kPi / L;
  d_.assign(static_cast<std::size_t>(n) * n, cplx(0.0, 0.0));
  d2_ = d_;
  for (int l = 0; l < n; ++l)
    for (int lp = 0; lp < n; ++lp) {
      cplx s1(0.0, 0.0), s2(0.0, 0.0);
      for (int m = 0; m < n; ++m) {
        const double ph = 2.0 * kPi * (m - n / 2) * (l - lp) / n;
        const cplx e(std::cos(ph), std::sin(ph));
        s1 += q_[m] * e;
        s2 += q_[m] * q_[m] * e;
      }
      d_[l * n + lp] = s1 / static_cast<double>(n);
      d2_[l * n + lp] = s2 / static_cast<double>(n);
    }
}

std::array<double, 3> PositionGrid::point(std::size_t i) const {
  const std::size_t n = n_;
  return {coord(static_cast<int>(i / (n * n))),
          coord(static_cast<int>((i / n) % n)), coord(static_cast<int>(i % n))};
}

double PositionGrid::radius(std::size_t i) const {
  const auto p = point(i);
  return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
}

void PositionGrid::apply_axis(const std::vector<cplx>& M, int axis, cplx a,
                              const cplx* x, cplx* y) const {
  const std::size_t n = n_;
  switch (axis) {
    case 2:
      for (std::size_t b = 0; b < n * n; ++b)
        for (std::size_t l = 0; l < n; ++l)
          y[b * n + l] += a * kern::dotu(n, &M[l * n], x + b * n);
      break;
    case 1:
      for (std::size_t ix = 0; ix < n; ++ix)
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t lp = 0; lp < n; ++lp)
            kern::axpy(n, a * M[l * n + lp], x + (ix * n + lp) * n,
                       y + (ix * n + l) * n);
      break;
    case 0:
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t lp = 0; lp < n; ++lp)
          kern::axpy(n * n, a * M[l * n + lp], x + lp * n * n, y + l * n * n);
      break;
    default:
      throw std::out_of_range("axis must be 0, 1 or 2");
  }
}

void PositionGrid::apply_momentum(int axis, cplx a, const cplx* x,
                                  cplx* y) const {
  apply_axis(d_, axis, a, x, y);
}

void PositionGrid::apply_kinetic(cplx a, const cplx* x, cplx* y) const {
  for (int ax = 0; ax < 3; ++ax) apply_axis(d2_, ax, 0.5 * a, x, y);
}

namespace {

SparseOperator axis_operator(const PositionGrid& g, const std::vector<cplx>& M,
                             int axis) {
  const std::size_t n = g.n();
  std::vector<Entry> e;
  e.reserve(g.size() * n);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::size_t c[3] = {i / (n * n), (i / n) % n, i % n};
    const std::size_t stride = axis == 0 ? n * n : (axis == 1 ? n : 1);
    const std::size_t base = i - c[axis] * stride;
    for (std::size_t lp = 0; lp < n; ++lp) {
      const cplx v = M[c[axis] * n + lp];
      if (v != cplx(0.0, 0.0)) e.push_back({i, base + lp * stride, v});
    }
  }
  return SparseOperator(g.size(), e);
}

}  // namespace

SparseOperator PositionGrid::momentum_operator(int axis) const {
  return axis_operator(*this, d_, axis);
}

SparseOperator PositionGrid::kinetic_operator() const {
  SparseOperator t = axis_operator(*this, d2_, 0) +
                     axis_operator(*this, d2_, 1) +
                     axis_operator(*this, d2_, 2);
  return t.scaled(0.5);
}

std::vector<double> coulomb_diagonal(const PositionGrid& g, double strength,
                                     double softening) {
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    v[i] = -strength / std::max(g.radius(i), softening);
  return v;
}

std::vector<cplx> analytic_atomic(const PositionGrid& g, double alphaZ) {
  std::vector<cplx> psi(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    psi[i] = std::exp(-alphaZ * g.radius(i));
  const double s = kern::nrm(psi.size(), psi.data());
  kern::scal(psi.size(), cplx(1.0 / s, 0.0), psi.data());
  return psi;
}

AtomicState atomic_ground(const PositionGrid& g, double alphaZ,
                          double softening, const LanczosOptions& opt) {
  if (alphaZ < 0.0) throw std::invalid_argument("alphaZ must be >= 0");
  AtomicState st;
  st.analytic_energy = -0.5 * alphaZ * alphaZ;
  if (alphaZ > 0.0) {
    if (g.h() * alphaZ > 0.25)
      st.warning = "Bohr radius resolved by fewer than 4 grid points";
    else if (g.L() * alphaZ < 4.0)
      st.warning = "box half-width below 4 Bohr radii";
  }
  const std::vector<double> v = coulomb_diagonal(g, alphaZ, softening);
  const std::size_t n = g.size();
  MatVec H = [&](const cplx* x, cplx* y) {
    std::fill(y, y + n, cplx(0.0, 0.0));
    g.apply_kinetic(1.0, x, y);
    kern::rdiag_axpy(n, 1.0, v.data(), x, y);
  };
  SpectralResult r = lanczos_ground(n, H, analytic_atomic(g, alphaZ), opt);
  // Fix the global phase so the largest component is real and positive.
  std::size_t imax = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (std::abs(r.vector[i]) > std::abs(r.vector[imax])) imax = i;
  const cplx ph = std::conj(r.vector[imax]) / std::abs(r.vector[imax]);
  kern::scal(n, ph, r.vector.data());
  st.energy = r.energy;
  st.psi = std::move(r.vector);
  st.residual = r.residual;
  st.iterations = r.iterations;
  st.converged = r.converged;
  if (!r.converged) st.warning += (st.warning.empty() ? "" : "; ") + r.note;
  return st;
}

double profile_value(Profile p, double r, double c) {
  switch (p) {
    case Profile::Log:
      return std::sqrt(std::log(3.0 + c * r));
    case Profile::Sqrt:
      return std::sqrt(r);
    case Profile::Abs:
      return r;
  }
  return 0.0;
}

double localization_value(Profile p, double r, double R, double c) {
  double chi = 1.0;
  if (r < 0.5 * R)
    chi = 0.0;
  else if (r < R)
    chi = (r - 0.5 * R) / (0.5 * R);
  return chi * profile_value(p, r, c);
}

std::vector<cplx> position_diagonal(const PositionGrid& g,
                                    const PositionFunction& f) {
  std::vector<cplx> d(g.size());
  if (f.kind == PositionKind::Exp && f.beta * g.L() * std::sqrt(3.0) >= 700.0)
    throw std::overflow_error("exp(beta|x|) would overflow: need beta L sqrt3 < 700");
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = g.radius(i);
    switch (f.kind) {
      case PositionKind::Abs:
        d[i] = r;
        break;
      case PositionKind::AbsSquared:
        d[i] = r * r;
        break;
      case PositionKind::Log3:
        d[i] = std::log(3.0 + r);
        break;
      case PositionKind::Exp:
        d[i] = std::exp(f.beta * r);
        break;
      case PositionKind::PlaneWave: {
        const auto x = g.point(i);
        const double ph = f.k[0] * x[0] + f.k[1] * x[1] + f.k[2] * x[2];
        d[i] = cplx(std::cos(ph), std::sin(ph));
        break;
      }
      case PositionKind::Localization:
        d[i] = localization_value(f.profile, r, f.R, f.c);
        break;
    }
  }
  return d;
}

SparseOperator position_operator(const PositionGrid& g,
                                 const PositionFunction& f) {
  return SparseOperator::diagonal(position_diagonal(g, f));
}

double localization_grad_sup(const PositionGrid& g, Profile p, double R,
                             double c) {
  const int n = g.n();
  double sup = 0.0;
  auto G = [&](int a, int b, int cc) {
    const double x = g.coord(a), y = g.coord(b), z = g.coord(cc);
    return localization_value(p, std::sqrt(x * x + y * y + z * z), R, c);
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc) {
        const double g0 = G(a, b, cc);
        if (a + 1 < n) sup = std::max(sup, std::abs(G(a + 1, b, cc) - g0) / g.h());
        if (b + 1 < n) sup = std::max(sup, std::abs(G(a, b + 1, cc) - g0) / g.h());
        if (cc + 1 < n) sup = std::max(sup, std::abs(G(a, b, cc + 1) - g0) / g.h());
      }
  return sup;
}

double momentum_norm2(const PositionGrid& g, const std::vector<cplx>& psi) {
  std::vector<cplx> y(psi.size());
  double s = 0.0;
  for (int ax = 0; ax < 3; ++ax) {
    std::fill(y.begin(), y.end(), cplx(0.0, 0.0));
    g.apply_momentum(ax, 1.0, psi.data(), y.data());
    s += kern::norm2(y.size(), y.data());
  }
  return s;
}

std::vector<cplx> padding_matrix(int n, double L, int n2) {
  if (n2 < n) throw std::invalid_argument("padding target must not be coarser");
  const double h = 2.0 * L / n, h2 = 2.0 * L / n2;
  std::vector<cplx> P(static_cast<std::size_t>(n2) * n);
  const double scale = std::sqrt(static_cast<double>(n) / n2) / n;
  for (int l2 = 0; l2 < n2; ++l2)
    for (int l = 0; l < n; ++l) {
      const double dx = (-L + l2 * h2) - (-L + l * h);
      cplx s(0.0, 0.0);
      for (int m = 0; m < n; ++m) {
        const double ph = (m - n / 2) * kPi / L * dx;
        s += cplx(std::cos(ph), std::sin(ph));
      }
      P[static_cast<std::size_t>(l2) * n + l] = scale * s;
    }
  return P;
}

namespace {

std::vector<double> radial_source(const RadialOptions& opt, double& hr) {
  hr = opt.rmax / (opt.points + 1);
  std::vector<double> u(opt.points);
  for (int i = 0; i < opt.points; ++i) {
    const double r = (i + 1) * hr;
    u[i] = r * std::exp(-r) / std::sqrt(kPi);
  }
  return u;
}

}  // namespace

double radial_resolvent_l1(double alphaZ, double shift,
                           const RadialOptions& opt) {
  if (!(shift > 0.0)) throw std::invalid_argument("resolvent shift must be positive");
  if (alphaZ == 0.0) return 0.0;
  const double sigma = shift / (alphaZ * alphaZ);
  double hr = 0.0;
  const std::vector<double> f = radial_source(opt, hr);
  const int N = opt.points;
  const double off = -0.5 / (hr * hr);
  std::vector<double> diag(N), cp(N), dp(N);
  for (int i = 0; i < N; ++i) {
    const double r = (i + 1) * hr;
    diag[i] = 1.0 / (hr * hr) + 1.0 / (r * r) - 1.0 / r + 0.5 + sigma;
  }
  cp[0] = off / diag[0];
  dp[0] = f[0] / diag[0];
  for (int i = 1; i < N; ++i) {
    const double den = diag[i] - off * cp[i - 1];
    if (!(den > 0.0)) throw std::runtime_error("radial resolvent: pivot breakdown");
    cp[i] = off / den;
    dp[i] = (f[i] - off * dp[i - 1]) / den;
  }
  std::vector<double> x(N);
  x[N - 1] = dp[N - 1];
  for (int i = N - 2; i >= 0; --i) x[i] = dp[i] - cp[i] * x[i + 1];
  double s = 0.0;
  for (int i = 0; i < N; ++i) s += f[i] * x[i];
  return 4.0 * kPi * s * hr;
}

double radial_pnorm2_l1(double alphaZ, const RadialOptions& opt) {
  double hr = 0.0;
  const std::vector<double> u = radial_source(opt, hr);
  double s = 0.0;
  for (double v : u) s += v * v;
  return 4.0 * kPi * s * hr * alphaZ * alphaZ;
}

}  // namespace nlab
