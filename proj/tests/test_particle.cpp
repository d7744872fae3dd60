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
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "nlab/particle.hpp"

using namespace nlab;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<cplx> plane_wave(const PositionGrid& g, std::array<double, 3> k) {
  PositionFunction f;
  f.kind = PositionKind::PlaneWave;
  f.k = k;
  return position_diagonal(g, f);
}

}  // namespace

TEST_CASE("grid geometry") {
  const PositionGrid g(8, 4.0);
  CHECK(g.h() == 1.0);
  CHECK(g.size() == 512);
  CHECK(g.coord(0) == -4.0);
  CHECK(g.momenta().front() == doctest::Approx(-kPi));
  const auto p = g.point((3 * 8 + 5) * 8 + 1);
  CHECK(p[0] == -1.0);
  CHECK(p[1] == 1.0);
  CHECK(p[2] == -3.0);
  CHECK_THROWS_AS(PositionGrid(7, 1.0), std::invalid_argument);
}

TEST_CASE("lattice plane waves are momentum and kinetic eigenvectors") {
  const PositionGrid g(8, 4.0);
  const double dq = kPi / 4.0;
  const std::array<double, 3> k{dq, -2 * dq, 3 * dq};
  const auto psi = plane_wave(g, k);
  for (int ax = 0; ax < 3; ++ax) {
    std::vector<cplx> y(psi.size());
    g.apply_momentum(ax, 1.0, psi.data(), y.data());
    double err = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) err = std::max(err, std::abs(y[i] - k[ax] * psi[i]));
    CHECK(err < 1e-12);
  }
  std::vector<cplx> y(psi.size());
  g.apply_kinetic(1.0, psi.data(), y.data());
  const double e = 0.5 * (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
  double err = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) err = std::max(err, std::abs(y[i] - e * psi[i]));
  CHECK(err < 1e-12);
}

TEST_CASE("sparse momentum and kinetic operators match the structured ones") {
  const PositionGrid g(6, 3.0);
  std::vector<cplx> x(g.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = cplx(std::sin(1.0 + i), std::cos(0.3 * i));
  for (int ax = 0; ax < 3; ++ax) {
    std::vector<cplx> y(x.size());
    g.apply_momentum(ax, 1.0, x.data(), y.data());
    const auto z = g.momentum_operator(ax).apply(x);
    double err = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) err = std::max(err, std::abs(y[i] - z[i]));
    CHECK(err < 1e-12);
  }
  CHECK(g.kinetic_operator().hermiticity_defect() < 1e-13);
}

TEST_CASE("atomic ground state approaches -(alpha Z)^2/2 under refinement") {
  const AtomicState coarse = atomic_ground(PositionGrid(12, 8.0), 1.0, 8.0 / 12);
  const AtomicState fine = atomic_ground(PositionGrid(24, 8.0), 1.0, 8.0 / 24);
  CHECK(coarse.converged);
  CHECK(fine.converged);
  CHECK(fine.residual <= 1e-10);
  CHECK(coarse.analytic_energy == -0.5);
  CHECK(std::abs(fine.energy + 0.5) < std::abs(coarse.energy + 0.5));
  CHECK(kern::nrm(fine.psi.size(), fine.psi.data()) == doctest::Approx(1.0));
  CHECK_FALSE(coarse.warning.empty());
}

TEST_CASE("free particle ground state is the constant") {
  const PositionGrid g(8, 4.0);
  const AtomicState s = atomic_ground(g, 0.0, 0.5);
  CHECK(std::abs(s.energy) < 1e-12);
  const auto c = analytic_atomic(g, 0.0);
  CHECK(std::norm(kern::dot(c.size(), c.data(), s.psi.data())) == doctest::Approx(1.0));
}

TEST_CASE("padding is an isometry preserving momenta") {
  const int n = 6, n2 = 10;
  const double L = 3.0;
  const auto P = padding_matrix(n, L, n2);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      cplx s = 0.0;
      for (int r = 0; r < n2; ++r) s += std::conj(P[r * n + a]) * P[r * n + b];
      CHECK(std::abs(s - (a == b ? 1.0 : 0.0)) < 1e-13);
    }
  CHECK_THROWS_AS(padding_matrix(6, L, 4), std::invalid_argument);
}

TEST_CASE("position functions") {
  const PositionGrid g(8, 4.0);
  PositionFunction f;
  f.kind = PositionKind::Exp;
  f.beta = 200.0;
  CHECK_THROWS_AS(position_diagonal(g, f), std::overflow_error);
  CHECK(localization_value(Profile::Sqrt, 1.0, 4.0, 1.0) == 0.0);
  CHECK(localization_value(Profile::Sqrt, 3.0, 4.0, 1.0) == doctest::Approx(0.5 * std::sqrt(3.0)));
  CHECK(localization_value(Profile::Abs, 9.0, 4.0, 1.0) == 9.0);
  CHECK(profile_value(Profile::Log, 2.0, 0.5) == doctest::Approx(std::sqrt(std::log(4.0))));
  for (double R : {2.0, 4.0, 8.0}) {
    const double d = localization_grad_sup(PositionGrid(16, 8.0), Profile::Sqrt, R, 1.0);
    CHECK(d * d <= 7.0 / R);
  }
  const auto c = coulomb_diagonal(g, 2.0, 0.5);
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(c[i] == doctest::Approx(-2.0 / std::max(g.radius(i), 0.5)));
}

TEST_CASE("radial l = 1 resolvent") {
  CHECK(radial_pnorm2_l1(1.0) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(radial_pnorm2_l1(0.5) == doctest::Approx(0.25).epsilon(1e-4));
  double prev = radial_resolvent_l1(1.0, 0.01);
  CHECK(prev > 0.0);
  for (double s : {0.1, 1.0, 10.0}) {
    const double v = radial_resolvent_l1(1.0, s);
    CHECK(v > 0.0);
    CHECK(v < prev);
    CHECK(v <= radial_pnorm2_l1(1.0) / s);
    prev = v;
  }
  CHECK(radial_resolvent_l1(0.0, 1.0) == 0.0);
}

TEST_CASE("momentum_norm2 of the analytic atomic state") {
  const PositionGrid g(24, 8.0);
  const auto psi = analytic_atomic(g, 1.0);
  CHECK(momentum_norm2(g, psi) == doctest::Approx(1.0).epsilon(0.15));
}
