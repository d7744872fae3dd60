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
#include <random>
#include <vector>

#include "doctest.h"
#include "nlab/kernels.hpp"

using namespace nlab;

namespace {

std::vector<cplx> random_vector(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<cplx> v(n);
  for (auto& x : v) x = {d(rng), d(rng)};
  return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const kern::KernelTable* v = kern::avx2_table();
  if (v == nullptr || !kern::avx2_supported()) {
    MESSAGE("AVX2 kernels unavailable; equivalence not exercised");
    return;
  }
  const kern::KernelTable& s = kern::scalar_table();
  for (std::size_t n : {0u, 1u, 2u, 3u, 7u, 8u, 33u, 1000u, 4097u}) {
    CAPTURE(n);
    const auto x = random_vector(n, 1 + n);
    const auto y0 = random_vector(n, 2 + n);
    const auto d = random_vector(n, 3 + n);
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = std::real(d[i]);
    const cplx a(0.7, -1.3);
    const double tol = 1e-13 * (1.0 + static_cast<double>(n));

    auto ys = y0, yv = y0;
    s.axpy(n, a, x.data(), ys.data());
    v->axpy(n, a, x.data(), yv.data());
    CHECK(max_diff(ys, yv) <= tol);

    CHECK(std::abs(s.dot(n, x.data(), y0.data()) - v->dot(n, x.data(), y0.data())) <= tol);
    CHECK(std::abs(s.dotu(n, x.data(), y0.data()) - v->dotu(n, x.data(), y0.data())) <= tol);
    CHECK(std::abs(s.norm2(n, x.data()) - v->norm2(n, x.data())) <= tol);

    ys = y0;
    yv = y0;
    s.diag_axpy(n, a, d.data(), x.data(), ys.data());
    v->diag_axpy(n, a, d.data(), x.data(), yv.data());
    CHECK(max_diff(ys, yv) <= tol);

    ys = y0;
    yv = y0;
    s.diag_conj_axpy(n, a, d.data(), x.data(), ys.data());
    v->diag_conj_axpy(n, a, d.data(), x.data(), yv.data());
    CHECK(max_diff(ys, yv) <= tol);

    ys = y0;
    yv = y0;
    s.rdiag_axpy(n, 0.25, r.data(), x.data(), ys.data());
    v->rdiag_axpy(n, 0.25, r.data(), x.data(), yv.data());
    CHECK(max_diff(ys, yv) <= tol);

    ys = y0;
    yv = y0;
    s.scal(n, a, ys.data());
    v->scal(n, a, yv.data());
    CHECK(max_diff(ys, yv) <= tol);
  }
}

TEST_CASE("scalar kernels match their definitions") {
  const kern::KernelTable& s = kern::scalar_table();
  const std::vector<cplx> x = {{1, 2}, {3, -1}, {0, 1}};
  const std::vector<cplx> y = {{2, 0}, {1, 1}, {-1, 0}};
  CHECK(s.dot(3, x.data(), y.data()) == cplx(2, -4) + cplx(2, 4) + cplx(0, 1));
  CHECK(s.dotu(3, x.data(), y.data()) == cplx(2, 4) + cplx(4, 2) + cplx(0, -1));
  CHECK(s.norm2(3, x.data()) == doctest::Approx(5 + 10 + 1));
  CHECK(kern::nrm(3, x.data()) == doctest::Approx(4.0));
}

TEST_CASE("isa selection can be forced to scalar and restored") {
  const kern::Isa before = kern::active_isa();
  kern::set_isa(kern::Isa::Scalar);
  CHECK(kern::active_isa() == kern::Isa::Scalar);
  CHECK(&kern::table() == &kern::scalar_table());
  kern::set_isa(before);
  CHECK(kern::active_isa() == before);
  CHECK(!kern::isa_name(before).empty());
}
