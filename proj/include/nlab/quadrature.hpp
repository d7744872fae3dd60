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

#include <cstddef>
#include <functional>
#include <limits>
#include <string>

#include "nlab/closedform.hpp"
#include "nlab/model.hpp"

namespace nlab {

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t nodes_used = 0;
  bool converged = true;
};

struct QuadOptions {
  double rtol = 1e-10;
  double atol = 1e-300;
  std::size_t max_intervals = 2000;
};

// Globally adaptive Gauss-Kronrod 7/15 on [a, b]; b may be +infinity, in which
// case the tail is mapped by r = a + t/(1-t).
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, const QuadOptions& opt = {});

enum class Region { Full, Infrared, Ultraviolet };

struct ShellSpec {
  double kappa = 0.0;
  double lambda = std::numeric_limits<double>::infinity();
  Region region = Region::Full;
};

// 4 pi int r^{a+2} (r + rho2tau r^2/2)^{-b} dr over the region.
// Throws std::domain_error naming the divergent endpoint.
QuadResult shell_moment(double a, double b, double rho2tau,
                        const ShellSpec& spec, const QuadOptions& opt = {});

// e^2 int |phi|^2/(2 omega) (beta + Z^2/omega) d^3k over [kappa, lambda].
QuadResult energy_renormalization(const ModelParams& p);

double correction_potential(const ModelParams& p, double x);

// (2/3)(2 pi)^{-3} int (2 omega)^{-1} k^2 beta^3 d^3k over all k.
QuadResult effective_mass_coefficient(bool massive = false);

double cin(double x);

struct BindingExpansion {
  double second_order = 0.0;
  double envelope = 0.0;
  double worst_envelope_ratio = 0.0;
  double leading_term = 0.0;
  double ratio_term = 0.0;
  double ratio_one_term = 0.0;
  double ratio_one_analytic = 0.0;
  double pnorm2 = 0.0;
  std::size_t nodes_used = 0;
  double abs_error_estimate = 0.0;
};

using ResolventElement = std::function<double(double shift)>;

// Second order binding correction
//   -e^2 (1/3)(2pi)^{-3} int (2 omega)^{-1} beta^2 k^2 M(omega + k^2/2) d^3k
// where M is supplied by the callback, together with the split into the
// leading term and the operator ratio term (exact and with ratio -> 1).
BindingExpansion binding_second_order(double e, double Z,
                                      const ResolventElement& element,
                                      double pnorm2,
                                      const QuadOptions& opt = {});

// Four coupling-function norms on the frame shell [kappa, lambda] rho^{-2tau}.
NormBundle f_tau_norms(double kappa, double lambda, double tau, double rho);
NormBundle f_tau_norms(const ModelParams& p, double tau, double rho);

}  // namespace nlab
