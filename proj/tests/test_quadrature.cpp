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
#include <limits>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "nlab/quadrature.hpp"
#include "nlab/special.hpp"

using namespace nlab;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("integrate on finite and semi-infinite ranges") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 3.0).value ==
        doctest::Approx(9.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, kInf).value ==
        doctest::Approx(1.0).epsilon(1e-10));
  const QuadResult r =
      integrate([](double x) { return 1.0 / std::sqrt(x) / (1 + x); }, 0.0, kInf);
  CHECK(r.value == doctest::Approx(kPi).epsilon(1e-8));
}

TEST_CASE("shell moments against antiderivatives") {
  for (double c : {0.5, 1.0, 2.0, 4.0}) {
    const QuadResult q = shell_moment(0.0, 2.0, c, {0.0, kInf, Region::Full});
    CHECK(std::abs(q.value - 8 * kPi / c) < 1e-9 * 8 * kPi / c);
  }
  const QuadResult full = shell_moment(0.5, 2.0, 1.0, {0.0, kInf, Region::Full});
  const QuadResult ir = shell_moment(0.5, 2.0, 1.0, {0.0, kInf, Region::Infrared});
  const QuadResult uv = shell_moment(0.5, 2.0, 1.0, {0.0, kInf, Region::Ultraviolet});
  CHECK(std::isfinite(uv.value));
  CHECK(std::abs(ir.value + uv.value - full.value) < 1e-10 * full.value);
  CHECK_THROWS_AS(shell_moment(1.0, 2.0, 1.0, {0.0, kInf, Region::Full}),
                  std::domain_error);
  CHECK_THROWS_AS(shell_moment(0.0, 3.5, 1.0, {0.0, 1.0, Region::Full}),
                  std::domain_error);
  CHECK(shell_moment(0.0, 2.0, 1.0, {2.0, 5.0, Region::Infrared}).value == 0.0);
}

TEST_CASE("effective mass coefficient equals 1/(6 pi^2)") {
  const QuadResult q = effective_mass_coefficient();
  CHECK(std::abs(q.value - 1 / (6 * kPi * kPi)) < 1e-9 / (6 * kPi * kPi));
  const QuadResult m = effective_mass_coefficient(true);
  CHECK(std::isfinite(m.value));
  CHECK(m.value < q.value);
}

TEST_CASE("cin") {
  CHECK(cin(0.0) == 0.0);
  CHECK(cin(100.0) == doctest::Approx(5.1875).epsilon(1e-4));
  CHECK(cin(100.0) == doctest::Approx(kEulerGamma + std::log(100.0) -
                                      cosine_integral(100.0))
                          .epsilon(1e-10));
  CHECK(cin(1e4) <= kEulerGamma + std::log(15.0) + 91.0 / 30 + 2 * std::log(1e4));
}

TEST_CASE("sine integral") {
  CHECK(sine_integral(0.0) == 0.0);
  CHECK(sine_integral(1.0) == doctest::Approx(0.946083070367183).epsilon(1e-12));
  for (double x : {3.0, 5.0, 50.0}) {
    const double q = integrate([](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; },
                               0.0, x).value;
    CHECK(sine_integral(x) == doctest::Approx(q).epsilon(1e-11));
  }
}

TEST_CASE("energy renormalization and correction potential") {
  CHECK(energy_renormalization(make_params(0.0, 1.0, 1.0, 0.1, 10.0)).value == 0.0);
  const double v10 = energy_renormalization(make_params(0.3, 1.0, 1.0, 0.1, 10.0)).value;
  const double v100 = energy_renormalization(make_params(0.3, 1.0, 1.0, 0.1, 100.0)).value;
  CHECK(v10 > 0.0);
  CHECK(v100 > v10);
  CHECK(correction_potential(make_params(0.0, 1.0, 1.0, 0.1, 10.0), 1.0) == 0.0);
  const ModelParams p = make_params(0.3, 1.0, 1.0, 1e-6, 1e6);
  CHECK(std::abs(correction_potential(p, 1.0)) < 1e-4 * p.e * p.e * p.Z);
  const ModelParams q = make_params(0.3, 1.0, 1.0, 0.1, 10.0);
  double worst = 0.0;
  for (double x = 0.1; x <= 100.0; x *= 1.5)
    worst = std::max(worst, std::abs(x * correction_potential(q, x)));
  CHECK(worst < 1.0);
}

TEST_CASE("binding expansion") {
  auto element = [](double s) { return 1.0 / (1.0 + s); };
  const BindingExpansion z = binding_second_order(0.0, 1.0, element, 1.0);
  CHECK(z.second_order == 0.0);
  const BindingExpansion b = binding_second_order(0.3, 1.0, element, 1.0);
  CHECK(b.second_order < 0.0);
  CHECK(std::abs(b.second_order) <= b.envelope);
  CHECK(b.worst_envelope_ratio <= 1.0);
  CHECK(b.ratio_one_term == doctest::Approx(b.ratio_one_analytic).epsilon(1e-9));
}

TEST_CASE("coupling norms") {
  const NormBundle n = f_tau_norms(1.0, 10.0, 0.0, 1.0);
  CHECK(n.f_ir_l2 == 0.0);
  CHECK(n.f_ir_over_sqrt_omega == 0.0);
  const NormBundle all = f_tau_norms(0.0, kInf, 0.0, 1.0);
  CHECK(all.f_ir_l2 < ceiling_f_ir_l2());
  CHECK(all.f_ir_over_sqrt_omega < ceiling_f_ir_over_sqrt_omega());
  CHECK(all.f_uv_over_sqrt_omega < ceiling_f_uv_over_sqrt_omega(1.0, 0.0));
  CHECK(all.f_uv_over_quarter_omega < ceiling_f_uv_over_quarter_omega(1.0, 0.0));
  const NormBundle small = f_tau_norms(0.1, 5.0, 0.0, 1.0);
  const NormBundle large = f_tau_norms(0.1, 10.0, 0.0, 1.0);
  CHECK(small.f_uv_over_sqrt_omega < large.f_uv_over_sqrt_omega);
  CHECK(small.f_uv_over_quarter_omega < large.f_uv_over_quarter_omega);
}
