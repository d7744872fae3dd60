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
#include <string>

namespace nlab {

struct ModelParams {
  double e = 0.0;
  double Z = 1.0;
  double m = 1.0;
  double kappa = 0.1;
  double lambda = 10.0;
  double alpha = 0.0;
};

// Throws std::invalid_argument on Z <= 0, m <= 0, kappa <= 0 or
// kappa >= lambda.
ModelParams make_params(double e, double Z, double m, double kappa,
                        double lambda);

enum class RhoMode { AtomicScale, ChargeSquared };

// Unit frame reached by the dilation U_tau: lengths scale by r(tau) = rho^tau,
// energies by rho^{-2 tau}, boson momenta by rho^{-2 tau}.
struct ScaleFrame {
  double tau = 0.0;
  double lambda1 = 1.0;
  double rho = 1.0;
  RhoMode mode = RhoMode::AtomicScale;

  double r_of(double s) const;
};

// rho = alpha Z lambda1 (AtomicScale) or rho = e^2 with lambda1 = 4 pi / Z
// (ChargeSquared).  Throws if rho would not be positive.
ScaleFrame make_frame(const ModelParams& p, double tau, double lambda1,
                      RhoMode mode);
// Frame with an explicit rho, used by the scaling tests.
ScaleFrame make_frame_rho(double tau, double rho);

std::string rho_mode_name(RhoMode mode);

enum class Direction { Forward, Inverse };

double scale_energy(const ScaleFrame& f, double E, Direction d);
double scale_length(const ScaleFrame& f, double x, Direction d);
std::array<double, 3> scale_momentum(const ScaleFrame& f,
                                     const std::array<double, 3>& k,
                                     Direction d);

// Atomic ground state energy -(alpha Z)^2 rho^{-2 tau} / 2 in frame f.
double atomic_energy(const ModelParams& p, const ScaleFrame& f);

}  // namespace nlab
