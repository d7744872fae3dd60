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

#include <optional>
#include <stdexcept>
#include <string>

namespace nlab {

// Raised when a constant is evaluated outside the window where it is defined.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double c_uv(double e, double Z);
// Positive root of c_uv(., Z) = 1.  Z = 0 gives the small-Z limit.
double e_uv(double Z);

struct CStar {
  double c_star = 0.0;
  double c1 = 1.0;
  bool c1_defined = true;
};
CStar c_star_c1(double e, double Z, double tau, double rho);

// C_D = C_1 (sqrt(2 + (alpha Z)^2) + 2 sqrt(2 alpha / pi)).
double c_d(double e, double Z);
// Same constant in the restated form sqrt(2 + (e^2 Z/4pi)^2) + sqrt2 |e|/pi.
double c_d_restated(double e, double Z);

// Two readings of the coefficient of L in the photon bounds.
enum class LCoefficient { Small, Large };
double l_coefficient(LCoefficient c);

double log_factor_L(double e, double Z);
double photon_K(double e, double Z, LCoefficient c = LCoefficient::Large);
double hard_photon_bound(double e, double Z);
// Soft photon bound at eps = 3/4, delta = 1/4.
double soft_photon_bound(double e, double Z,
                         LCoefficient c = LCoefficient::Large);
double total_photon_bound(double e, double Z,
                          LCoefficient c = LCoefficient::Large);

double c_tau(double e, double Z, double tau);
double f_ir(double e, double Z, double tau);
double q_bound(double e, double Z, double tau);
double g_ir(double e, double Z, double tau);

struct OverlapConstants {
  double tau = 0.9;
  double eps = 0.2;
  double rho = 0.0;
  double e_at_tau = 0.0;
  double c_star = 0.0;
  double c1_tau = 1.0;
  bool c1_tau_defined = true;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double c_tau = 0.0;
  double f_ir = 0.0;
  double q_bound = 0.0;
  double g_ir = 1.0;
  double photon_K = 0.0;
  double photon_K_small = 0.0;
  double L = 0.0;
  double M = 0.0;
  double c_d = 0.0;
  double c1 = 1.0;
};
// tau in (3/4, 1], 0 < eps < 1/4, rho = e^2.
OverlapConstants overlap_constants(double e, double Z, double tau,
                                   double eps = 0.2);

struct RootReport {
  bool found = false;
  double value = 0.0;
  std::string note;
};
RootReport a_ir1(double Z, double tau);
RootReport a_ir2(double Z, double tau);
// Largest e with e photon_K(e) <= sqrt(pi), i.e. c0 alpha^{1/2} <= 1/2.
RootReport e_sqrtpi_over_c0(double Z);

enum class EirMode { Window, Literal };
struct CouplingWindow {
  double tau = 0.9;
  double Z = 1.0;
  double e_uv = 0.0;
  RootReport a_ir1;
  RootReport a_ir2;
  RootReport sqrtpi_over_c0;
  double one = 1.0;
  bool empty = false;
  double e_ir = 0.0;
  double e_ir_literal = 0.0;
  bool literal_defined = false;
  std::string note;
};
CouplingWindow e_ir(double Z, double tau);

struct NormBundle {
  double f_ir_l2 = 0.0;
  double f_ir_over_sqrt_omega = 0.0;
  double f_uv_over_sqrt_omega = 0.0;
  double f_uv_over_quarter_omega = 0.0;
};
double xi_bound(const NormBundle& f, const NormBundle& g);

// Ceilings of the coupling-function norms in frame (rho, tau).
double ceiling_f_over_sqrt_omega(double rho, double tau);
double ceiling_f_ir_l2();
double ceiling_f_ir_over_sqrt_omega();
double ceiling_f_uv_over_sqrt_omega(double rho, double tau);
double ceiling_f_uv_over_quarter_omega(double rho, double tau);
double ceiling_a_squared(double rho, double tau);

// Localization gradient ceilings for G_R built on the named profile.
double grad_ceiling_log(double R, double c);
double grad_ceiling_sqrt(double R);
double grad_ceiling_abs();

// Ground state moment bounds in relativistic units.
double moment_log_bound(double e, double Z, double R);
double moment_abs_bound(double e, double Z);
double moment_sq_bound(double e, double Z, double R);

enum class ExpBracket { Precondition, Statement, Proof };
// Left side of the exponential-decay precondition; must be > 0.
double exp_decay_window(double e, double Z, double R, double beta);
double exp_decay_bound(double e, double Z, double R, double beta,
                       ExpBracket b = ExpBracket::Precondition);

// Atomic ground state energy -(alpha Z)^2/2 in relativistic units.
double atomic_energy_rel(double e, double Z);

}  // namespace nlab
