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

#include "nlab/closedform.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace nlab {

namespace {

constexpr double kPi = std::numbers::pi;

double alpha_of(double e) { return e * e / (4.0 * kPi); }

// Root of an increasing f on [lo, hi] with f(lo) < 0 < f(hi).
template <class F>
double bracketed_root(F f, double lo, double hi) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  boost::math::tools::eps_tolerance<double> tol(52);
  std::uintmax_t it = 200;
  auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, it);
  const double a = r.first, b = r.second;
  return std::abs(f(a)) <= std::abs(f(b)) ? a : b;
}

// Largest e in [lo, hi] with g(e) > 0, g positive at lo and negative at hi.
template <class G>
double last_positive(G g, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = std::sqrt(lo * hi);
    if (g(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi / lo - 1.0 < 1e-14) break;
  }
  return lo;
}

}  // namespace

double c_uv(double e, double Z) {
  const double a = std::abs(e);
  const double t = e * e * Z / (4.0 * kPi);
  return (2.0 * a / kPi) * std::sqrt(1.0 + 0.5 * t * t) +
         (14.0 + std::sqrt(6.0) * kPi) * e * e / (4.0 * kPi * kPi);
}

double e_uv(double Z) {
  if (Z < 0.0) throw DomainError("e_uv needs Z >= 0");
  auto f = [Z](double e) { return c_uv(e, Z) - 1.0; };
  return bracketed_root(f, 1e-12, 10.0);
}

CStar c_star_c1(double e, double Z, double tau, double rho) {
  if (!(rho > 0.0)) throw DomainError("c_star needs rho > 0");
  const double a = alpha_of(e);
  const double r1 = std::pow(rho, tau);
  const double rm1 = std::pow(rho, -tau);
  const double e_at = -0.5 * (a * Z) * (a * Z) * std::pow(rho, -2.0 * tau);
  CStar out;
  out.c_star = std::sqrt(6.0) * a * rm1 +
               4.0 * std::sqrt(a) * std::sqrt((1.0 - e_at) / kPi) +
               (2.0 / kPi) * a * (r1 * r1 + 3.0 * r1 + 3.0);
  if (out.c_star < 1.0) {
    out.c1 = 1.0 / std::sqrt(1.0 - out.c_star);
    out.c1_defined = true;
  } else {
    out.c1 = std::numeric_limits<double>::quiet_NaN();
    out.c1_defined = false;
  }
  return out;
}

namespace {
double c1_zero(double e, double Z) {
  const double c = c_uv(e, Z);
  if (!(c < 1.0)) throw DomainError("C_UV >= 1: outside the coupling window");
  return 1.0 / std::sqrt(1.0 - c);
}
}  // namespace

double c_d(double e, double Z) {
  const double a = alpha_of(e);
  return c1_zero(e, Z) *
         (std::sqrt(2.0 + (a * Z) * (a * Z)) + 2.0 * std::sqrt(2.0 * a / kPi));
}

double c_d_restated(double e, double Z) {
  const double t = e * e * Z / (4.0 * kPi);
  return c1_zero(e, Z) *
         (std::sqrt(2.0 + t * t) + std::sqrt(2.0) * std::abs(e) / kPi);
}

double l_coefficient(LCoefficient c) {
  return c == LCoefficient::Large ? 9.0e2 : 9.0e-2;
}

double log_factor_L(double e, double Z) {
  return std::log(3.0 + 400.0 * kPi / (e * e * Z));
}

double photon_K(double e, double Z, LCoefficient c) {
  const double cd = c_d(e, Z);
  const double c1 = c1_zero(e, Z);
  const double L = log_factor_L(e, Z);
  const double a = 28.0 * cd + 39.0;
  return a * a + 6.0 * c1 * c1 * (cd + 2.0) * (cd + 2.0) *
                     (9.0 + 2.0 * L * L + l_coefficient(c) * L);
}

double hard_photon_bound(double e, double Z) {
  const double cd = c_d(e, Z);
  return 4.0 * alpha_of(e) * cd * cd / (3.0 * kPi);
}

double soft_photon_bound(double e, double Z, LCoefficient c) {
  if (e == 0.0) return 0.0;
  const double eps = 0.75;
  const double delta = 1.0 - eps;
  const double a = alpha_of(e);
  const double cd = c_d(e, Z);
  const double c1 = c1_zero(e, Z);
  const double L = log_factor_L(e, Z);
  const double M = 18.0 * c1 * c1 * (cd + 2.0) * (cd + 2.0) / (eps * kPi * kPi);
  const double b = 8.0 * cd + 10.5;
  return 9.0 * a / (kPi * delta) * b * b +
         2.0 * M * a * (9.0 + 2.0 * L * L + l_coefficient(c) * L);
}

double total_photon_bound(double e, double Z, LCoefficient c) {
  if (e == 0.0) return 0.0;
  return photon_K(e, Z, c) * alpha_of(e);
}

double c_tau(double e, double Z, double tau) {
  const double a = std::abs(e);
  return std::pow(a, 2.0 - 2.0 * tau) + a * std::sqrt(1.0 + Z * Z) + e * e;
}

double f_ir(double e, double Z, double tau) {
  const double a = std::abs(e);
  return std::sqrt(1.0 + Z * Z) *
             (std::pow(a, 4.0 * tau - 3.0) + 3.0 * std::sqrt(a)) +
         e * e;
}

double q_bound(double e, double Z, double tau) {
  const double s = 4.0 * kPi / Z;
  return 8.0 * s * s * f_ir(e, Z, tau);
}

double g_ir(double e, double Z, double tau) {
  return 1.0 - total_photon_bound(e, Z) - q_bound(e, Z, tau);
}

OverlapConstants overlap_constants(double e, double Z, double tau,
                                   double eps) {
  if (!(tau > 0.75 && tau <= 1.0))
    throw DomainError("tau must lie in (3/4, 1]");
  if (!(eps > 0.0 && eps < 0.25)) throw DomainError("eps must lie in (0, 1/4)");
  OverlapConstants o;
  o.tau = tau;
  o.eps = eps;
  o.rho = e * e;
  const double a = alpha_of(e);
  o.c_tau = c_tau(e, Z, tau);
  o.f_ir = f_ir(e, Z, tau);
  o.q_bound = q_bound(e, Z, tau);
  o.c1 = c1_zero(e, Z);
  o.c_d = c_d(e, Z);
  o.L = log_factor_L(e, Z);
  o.M = 18.0 * o.c1 * o.c1 * (o.c_d + 2.0) * (o.c_d + 2.0) /
        (0.75 * kPi * kPi);
  o.photon_K = photon_K(e, Z, LCoefficient::Large);
  o.photon_K_small = photon_K(e, Z, LCoefficient::Small);
  o.g_ir = 1.0 - total_photon_bound(e, Z) - o.q_bound;
  if (e == 0.0) {
    o.e_at_tau = 0.0;
    o.c_star = 0.0;
    o.c1_tau = 1.0;
    o.c1_tau_defined = true;
    o.theta1 = 0.0;
    o.theta2 = 0.0;
    return o;
  }
  const double rho = o.rho;
  auto r = [rho](double s) { return std::pow(rho, s); };
  o.e_at_tau = -0.5 * (a * Z) * (a * Z) * r(-2.0 * tau);
  const CStar cs = c_star_c1(e, Z, tau, rho);
  o.c_star = cs.c_star;
  o.c1_tau = cs.c1;
  o.c1_tau_defined = cs.c1_defined;
  const double s2 = std::sqrt(2.0 * (1.0 - o.e_at_tau));
  o.theta1 = std::sqrt(a) * s2;
  const double u = s2 + std::sqrt(2.0 / kPi) * std::sqrt(a) * r(tau);
  const double inner =
      u * u * std::pow(a, 3) / (eps * (1.0 - 2.0 * eps)) * r(-2.0 * tau) +
      std::pow(a, 4) / ((1.0 - 16.0 * eps * eps) * kPi) * r(-2.0 * tau);
  o.theta2 = 0.5 * a * r(2.0 * tau) + std::sqrt(2.0) * a * r(tau) +
             std::sqrt(6.0) / (eps * (1.0 - eps)) * std::sqrt(inner);
  return o;
}

RootReport a_ir1(double Z, double tau) {
  RootReport rep;
  if (!(tau > 0.75 && tau <= 1.0)) {
    rep.note = "tau outside (3/4, 1]";
    return rep;
  }
  if (tau >= 1.0) {
    rep.note = "no root: C_tau >= 1 for every e at tau = 1";
    return rep;
  }
  auto f = [Z, tau](double e) { return c_tau(e, Z, tau) - 0.5; };
  rep.value = bracketed_root(f, 1e-300, 10.0);
  rep.found = true;
  return rep;
}

RootReport a_ir2(double Z, double tau) {
  RootReport rep;
  if (!(tau > 0.75 && tau <= 1.0)) {
    rep.note = "tau outside (3/4, 1]";
    return rep;
  }
  const double target = (Z / (4.0 * kPi)) * (Z / (4.0 * kPi)) / 16.0;
  auto f = [Z, tau, target](double e) { return f_ir(e, Z, tau) - target; };
  rep.value = bracketed_root(f, 1e-300, 10.0);
  rep.found = true;
  return rep;
}

RootReport e_sqrtpi_over_c0(double Z) {
  RootReport rep;
  const double hi = std::min(1.0, e_uv(Z)) * (1.0 - 1e-12);
  auto g = [Z](double e) {
    return std::sqrt(kPi) - e * photon_K(e, Z);
  };
  if (g(hi) > 0.0) {
    rep.value = hi;
    rep.found = true;
    rep.note = "condition holds up to the coupling window edge";
    return rep;
  }
  double lo = hi;
  while (g(lo) <= 0.0 && lo > 1e-300) lo *= 0.5;
  if (!(g(lo) > 0.0)) {
    rep.note = "no e satisfies the condition";
    return rep;
  }
  rep.value = last_positive(g, lo, lo * 2.0);
  rep.found = true;
  return rep;
}

CouplingWindow e_ir(double Z, double tau) {
  CouplingWindow w;
  w.tau = tau;
  w.Z = Z;
  w.e_uv = e_uv(Z);
  w.a_ir1 = a_ir1(Z, tau);
  w.a_ir2 = a_ir2(Z, tau);
  w.sqrtpi_over_c0 = e_sqrtpi_over_c0(Z);
  if (!w.a_ir1.found || !w.a_ir2.found) {
    w.empty = true;
    w.note = "infrared threshold undefined: " +
             (w.a_ir1.found ? w.a_ir2.note : w.a_ir1.note);
    return w;
  }
  if (w.sqrtpi_over_c0.found) {
    w.e_ir_literal = std::min({w.sqrtpi_over_c0.value, 1.0, w.a_ir1.value,
                               w.a_ir2.value});
    w.literal_defined = true;
  }
  // G_IR needs C_UV < 1, so the scan stays strictly inside the UV window.
  const double hi =
      std::min({1.0, w.a_ir1.value, w.a_ir2.value, w.e_uv * (1.0 - 1e-12)});
  auto g = [Z, tau](double e) { return g_ir(e, Z, tau); };
  if (g(hi) > 0.0) {
    w.e_ir = hi;
    w.note = "G_IR positive on the whole admissible interval";
    return w;
  }
  double lo = hi;
  while (!(g(lo) > 0.0) && lo > 1e-280) lo *= 0.5;
  if (!(g(lo) > 0.0)) {
    w.empty = true;
    w.note = "G_IR <= 0 throughout the admissible interval";
    return w;
  }
  w.e_ir = last_positive(g, lo, std::min(hi, lo * 2.0));
  w.note = "largest e with G_IR(e) > 0";
  return w;
}

double xi_bound(const NormBundle& f, const NormBundle& g) {
  return (g.f_ir_over_sqrt_omega + g.f_ir_l2) * f.f_uv_over_sqrt_omega +
         (f.f_ir_over_sqrt_omega + f.f_ir_l2) * g.f_uv_over_sqrt_omega +
         f.f_ir_over_sqrt_omega * g.f_ir_over_sqrt_omega +
         std::sqrt(3.0) * f.f_uv_over_quarter_omega *
             g.f_uv_over_quarter_omega +
         0.5 * (g.f_ir_over_sqrt_omega * f.f_ir_l2 +
                f.f_ir_over_sqrt_omega * g.f_ir_l2);
}

double ceiling_f_over_sqrt_omega(double rho, double tau) {
  return std::pow(rho, -tau) / (std::sqrt(2.0) * kPi);
}
double ceiling_f_ir_l2() { return 1.0 / (2.0 * kPi); }
double ceiling_f_ir_over_sqrt_omega() { return 1.0 / (2.0 * kPi); }
double ceiling_f_uv_over_sqrt_omega(double rho, double tau) {
  return std::pow(rho, -tau) / (std::sqrt(2.0) * kPi);
}
double ceiling_f_uv_over_quarter_omega(double rho, double tau) {
  return std::pow(rho, -1.5 * tau) *
         std::sqrt(1.0 / (2.0 * std::sqrt(2.0) * kPi) +
                   std::pow(rho, tau) / (2.0 * kPi * kPi));
}
double ceiling_a_squared(double rho, double tau) {
  const double r = std::pow(rho, -tau);
  return 1.0 / (2.0 * kPi * kPi) + std::sqrt(2.0) / (kPi * kPi) * r +
         std::sqrt(3.0) / (2.0 * kPi * kPi) * r * r +
         std::sqrt(3.0) / (2.0 * std::sqrt(2.0) * kPi) * r * r * r;
}

double grad_ceiling_log(double R, double c) {
  return 4.0 / (R * R) * std::log(3.0 + c * R) + 5.0 / (R * R);
}
double grad_ceiling_sqrt(double R) { return 7.0 / R; }
double grad_ceiling_abs() { return 9.0; }

double moment_log_bound(double e, double Z, double R) {
  const double l = std::log(3.0 + 4.0 * kPi * R / (e * e * Z));
  return l * l + 4.0 * (1.0 / (R * R) + 1.0 / R) * l + 5.0 / (R * R);
}

double moment_abs_bound(double e, double Z) {
  return 40.0 * kPi / (e * e * Z);
}

double moment_sq_bound(double e, double Z, double R) {
  if (!(R > 4.0)) throw DomainError("second moment bound needs R > 4");
  const double b = 4.0 * kPi / (e * e * Z);
  return b * b * (R * R + 5.0 / (0.5 - 2.0 / R));
}

double exp_decay_window(double e, double Z, double R, double beta) {
  const double b = 4.0 * kPi / (e * e * Z);
  return 0.5 - 2.0 / R - 0.25 * beta * beta * b * b;
}

double exp_decay_bound(double e, double Z, double R, double beta,
                       ExpBracket br) {
  if (!(R > 4.0)) throw DomainError("exponential bound needs R > 4");
  const double b = 4.0 * kPi / (e * e * Z);
  const double bt = beta * b;
  double den = 0.0;
  switch (br) {
    case ExpBracket::Precondition:
      den = 0.5 - 2.0 / R - 0.25 * bt * bt;
      break;
    case ExpBracket::Statement:
      den = 0.5 - 2.0 / (R * R) - 0.25 * bt * bt;
      break;
    case ExpBracket::Proof:
      den = 0.5 - 2.0 / R - 0.25 * bt;
      break;
  }
  if (!(den > 0.0)) throw DomainError("exponential decay window violated");
  const double pre = 4.0 / (R * R) + 2.0 * bt / R;
  return (1.0 + pre / den) * std::exp(bt * R);
}

double atomic_energy_rel(double e, double Z) {
  const double az = alpha_of(e) * Z;
  return -0.5 * az * az;
}

}  // namespace nlab
