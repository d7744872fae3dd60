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

#include "nlab/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace nlab {
namespace kern {

namespace {

void axpy_s(std::size_t n, cplx a, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

cplx dot_s(std::size_t n, const cplx* x, const cplx* y) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

cplx dotu_s(std::size_t n, const cplx* x, const cplx* y) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

double norm2_s(std::size_t n, const cplx* x) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::norm(x[i]);
  return s;
}

void diag_axpy_s(std::size_t n, cplx a, const cplx* d, const cplx* x,
                 cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * (d[i] * x[i]);
}

void diag_conj_axpy_s(std::size_t n, cplx a, const cplx* d, const cplx* x,
                      cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * (std::conj(d[i]) * x[i]);
}

void rdiag_axpy_s(std::size_t n, double a, const double* r, const cplx* x,
                  cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += (a * r[i]) * x[i];
}

void scal_s(std::size_t n, cplx a, cplx* x) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

const KernelTable kScalar{axpy_s,      dot_s,           dotu_s,
                          norm2_s,     diag_axpy_s,     diag_conj_axpy_s,
                          rdiag_axpy_s, scal_s};

Isa initial_isa() {
  const char* env = std::getenv("NLAB_FORCE_SCALAR");
  if (env && *env && std::string(env) != "0") return Isa::Scalar;
  return avx2_supported() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<int>& isa_slot() {
  static std::atomic<int> slot{static_cast<int>(initial_isa())};
  return slot;
}

}  // namespace

#ifdef NLAB_BUILD_AVX2
const KernelTable* avx2_table_impl();
#endif

const KernelTable& scalar_table() { return kScalar; }

const KernelTable* avx2_table() {
#ifdef NLAB_BUILD_AVX2
  return avx2_table_impl();
#else
  return nullptr;
#endif
}

bool avx2_supported() {
#if defined(NLAB_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() { return static_cast<Isa>(isa_slot().load()); }

void set_isa(Isa isa) {
  if (isa == Isa::Avx2 && !avx2_supported()) isa = Isa::Scalar;
  isa_slot().store(static_cast<int>(isa));
}

std::string isa_name(Isa isa) {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

const KernelTable& table() {
  if (active_isa() == Isa::Avx2) return *avx2_table();
  return kScalar;
}

}  // namespace kern
}  // namespace nlab
