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

#include "nlab/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nlab {

ModelParams make_params(double e, double Z, double m, double kappa,
                        double lambda) {
  if (!(Z > 0.0)) throw std::invalid_argument("Z must be positive");
  if (!(m > 0.0)) throw std::invalid_argument("m must be positive");
  if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be positive");
  if (!(kappa < lambda))
    throw std::invalid_argument("cutoff order violated: need kappa < lambda");
  if (!std::isfinite(e) || !std::isfinite(lambda))
    throw std::invalid_argument("e and lambda must be finite");
  ModelParams p;
  p.e = e;
  p.Z = Z;
  p.m = m;
  p.kappa = kappa;
  p.lambda = lambda;
  p.alpha = e * e / (4.0 * std::numbers::pi);
  return p;
}

double ScaleFrame::r_of(double s) const { return std::pow(rho, s); }

ScaleFrame make_frame(const ModelParams& p, double tau, double lambda1,
                      RhoMode mode) {
  ScaleFrame f;
  f.tau = tau;
  f.mode = mode;
  if (mode == RhoMode::AtomicScale) {
    if (!(lambda1 > 0.0)) throw std::invalid_argument("lambda1 must be > 0");
    f.lambda1 = lambda1;
    f.rho = p.alpha * p.Z * lambda1;
  } else {
    f.lambda1 = 4.0 * std::numbers::pi / p.Z;
    f.rho = p.e * p.e;
  }
  if (!(f.rho > 0.0))
    throw std::invalid_argument("scale frame needs rho > 0 (nonzero charge)");
  return f;
}

ScaleFrame make_frame_rho(double tau, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be > 0");
  ScaleFrame f;
  f.tau = tau;
  f.rho = rho;
  return f;
}

std::string rho_mode_name(RhoMode mode) {
  return mode == RhoMode::AtomicScale ? "rho=alpha*Z*lambda1" : "rho=e^2";
}

double scale_energy(const ScaleFrame& f, double E, Direction d) {
  const double s = d == Direction::Forward ? -2.0 * f.tau : 2.0 * f.tau;
  return f.r_of(s) * E;
}

double scale_length(const ScaleFrame& f, double x, Direction d) {
  const double s = d == Direction::Forward ? f.tau : -f.tau;
  return f.r_of(s) * x;
}

std::array<double, 3> scale_momentum(const ScaleFrame& f,
                                     const std::array<double, 3>& k,
                                     Direction d) {
  const double s = d == Direction::Forward ? -2.0 * f.tau : 2.0 * f.tau;
  const double c = f.r_of(s);
  return {c * k[0], c * k[1], c * k[2]};
}

double atomic_energy(const ModelParams& p, const ScaleFrame& f) {
  const double az = p.alpha * p.Z;
  return -0.5 * az * az * f.r_of(-2.0 * f.tau);
}

}  // namespace nlab
