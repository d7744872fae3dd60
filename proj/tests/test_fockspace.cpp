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

#include "doctest.h"
#include "nlab/fockspace.hpp"

using namespace nlab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("basis dimension and ordering") {
  const FockBasis b(3, 2);
  CHECK(b.dim() == FockBasis::binomial(5, 2));
  CHECK(b.dim_up_to(0) == 1);
  CHECK(b.dim_up_to(1) == 4);
  CHECK(b.total(0) == 0);
  for (std::size_t i = 0; i < b.dim(); ++i) {
    CHECK(b.index(b.occupations(i)) == i);
    if (i) CHECK(b.total(i) >= b.total(i - 1));
  }
  CHECK(b.index({3, 0, 0}) == b.dim());
}

TEST_CASE("lowering amplitudes are sqrt(n)") {
  const FockBasis b(2, 3);
  for (int j = 0; j < 2; ++j)
    for (const auto& t : b.lowering(j)) {
      const auto& from = b.occupations(t.from);
      const auto& to = b.occupations(t.to);
      CHECK(t.amp == doctest::Approx(std::sqrt(static_cast<double>(from[j]))));
      CHECK(to[j] + 1 == from[j]);
    }
}

TEST_CASE("ladder operators obey the truncated commutator") {
  const FockBasis b(2, 3);
  const LadderOps L = ladder_ops(b, 0);
  const SparseOperator comm = L.a * L.adag - L.adag * L.a;
  const auto dense = comm.to_dense();
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const double expect = b.total(i) < 3 ? 1.0 : -static_cast<double>(b.occupations(i)[0]);
    CHECK(std::real(dense(i, i)) == doctest::Approx(expect));
  }
  CHECK((L.adag * L.a - L.n).to_dense().norm() < 1e-14);
}

TEST_CASE("mode weights integrate the shell volume") {
  const ModeGrid g = build_modes(0.1, 10.0, 4, 6);
  CHECK(g.size() == 24);
  double w = 0.0;
  for (const auto& m : g.modes) w += m.weight;
  const double vol = 4 * kPi / 3 * (1000.0 - 0.001) / std::pow(2 * kPi, 3);
  CHECK(w == doctest::Approx(vol).epsilon(1e-12));
  CHECK(g.soft_count + g.hard_count == g.size());
  for (const auto& m : g.modes) CHECK(m.soft == (mode_abs(m) < 1.0));
}

TEST_CASE("direction sets are unit vectors with zero sum") {
  for (int n : {1, 2, 4, 6, 8, 12, 20}) {
    const auto d = direction_set(n);
    CHECK(d.size() == static_cast<std::size_t>(n));
    double sx = 0, sy = 0, sz = 0;
    for (const auto& v : d) {
      CHECK(std::hypot(v[0], v[1], v[2]) == doctest::Approx(1.0));
      sx += v[0];
      sy += v[1];
      sz += v[2];
    }
    if (n % 2 == 0 && n != 20) CHECK(std::abs(sx) + std::abs(sy) + std::abs(sz) < 1e-12);
  }
}

TEST_CASE("scaled modes keep the soft flag and rescale weights") {
  const ModeGrid g = build_modes(0.1, 10.0, 2, 2);
  const ScaleFrame f = make_frame_rho(1.0, 0.5);
  const ModeGrid s = scale_modes(g, f, Direction::Forward);
  for (std::size_t j = 0; j < g.size(); ++j) {
    CHECK(mode_abs(s.modes[j]) == doctest::Approx(4.0 * mode_abs(g.modes[j])));
    CHECK(s.modes[j].weight == doctest::Approx(64.0 * g.modes[j].weight));
    CHECK(s.modes[j].soft == g.modes[j].soft);
  }
}

TEST_CASE("field energy and number diagonals") {
  const ModeGrid g = custom_modes({{0.5, 0, 0}, {0, 2, 0}}, {1.0, 1.0});
  const FockBasis b(2, 2);
  const auto hf = field_energy(b, g);
  const auto nsoft = number_diagonal(b, {true, false});
  const auto n = number_diagonal(b);
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const auto& o = b.occupations(i);
    CHECK(hf[i] == doctest::Approx(0.5 * o[0] + 2.0 * o[1]));
    CHECK(nsoft[i] == o[0]);
    CHECK(n[i] == o[0] + o[1]);
  }
}

TEST_CASE("displacement is unitary and displaces the vacuum") {
  const FockBasis b(1, 12);
  const cplx eta(0.3, -0.2);
  const SparseOperator D = displacement(b, 0, eta);
  const auto M = D.to_dense();
  CHECK((M.adjoint() * M - decltype(M)::Identity(b.dim(), b.dim())).norm() < 1e-12);
  const double n2 = std::norm(eta);
  double fact = 1.0;
  cplx pw = 1.0;
  for (int k = 0; k < 5; ++k) {
    if (k) {
      fact *= k;
      pw *= eta;
    }
    const cplx ref = std::exp(-0.5 * n2) * pw / std::sqrt(fact);
    CHECK(std::abs(M(k, 0) - ref) < 1e-8);
  }
}
