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
#include "nlab/model.hpp"

using namespace nlab;

TEST_CASE("make_params validates and fills alpha") {
  const ModelParams p = make_params(0.3, 1.0, 1.0, 0.1, 10.0);
  CHECK(p.alpha == doctest::Approx(0.09 / (4.0 * std::numbers::pi)));
  CHECK_THROWS_AS(make_params(0.3, 0.0, 1.0, 0.1, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(make_params(0.3, 1.0, -1.0, 0.1, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(make_params(0.3, 1.0, 1.0, 0.0, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(make_params(0.3, 1.0, 1.0, 20.0, 10.0), std::invalid_argument);
}

TEST_CASE("atomic frame puts the Bohr radius at lambda1") {
  const ModelParams p = make_params(0.5, 2.0, 1.0, 0.1, 10.0);
  const ScaleFrame f = make_frame(p, 1.0, 2.0, RhoMode::AtomicScale);
  CHECK(f.rho == doctest::Approx(p.alpha * p.Z * 2.0));
  CHECK(atomic_energy(p, f) == doctest::Approx(-0.125));
  const double bohr = 1.0 / (p.alpha * p.Z);
  CHECK(scale_length(f, bohr, Direction::Forward) == doctest::Approx(2.0));
}

TEST_CASE("scaling maps invert each other") {
  const ScaleFrame f = make_frame_rho(0.7, 0.3);
  const double E = -1.25, x = 3.5;
  CHECK(scale_energy(f, scale_energy(f, E, Direction::Forward), Direction::Inverse) ==
        doctest::Approx(E));
  CHECK(scale_length(f, scale_length(f, x, Direction::Forward), Direction::Inverse) ==
        doctest::Approx(x));
  const auto k = scale_momentum(f, {1.0, -2.0, 0.5}, Direction::Forward);
  CHECK(k[1] == doctest::Approx(-2.0 * std::pow(0.3, -1.4)));
  CHECK_THROWS(make_frame_rho(1.0, 0.0));
  const ModelParams p0 = make_params(0.0, 1.0, 1.0, 0.1, 10.0);
  CHECK_THROWS(make_frame(p0, 1.0, 1.0, RhoMode::AtomicScale));
}
