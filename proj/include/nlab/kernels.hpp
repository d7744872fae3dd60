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

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>

namespace nlab {

using cplx = std::complex<double>;

namespace kern {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  void (*axpy)(std::size_t n, cplx a, const cplx* x, cplx* y);
  cplx (*dot)(std::size_t n, const cplx* x, const cplx* y);
  cplx (*dotu)(std::size_t n, const cplx* x, const cplx* y);
  double (*norm2)(std::size_t n, const cplx* x);
  void (*diag_axpy)(std::size_t n, cplx a, const cplx* d, const cplx* x,
                    cplx* y);
  void (*diag_conj_axpy)(std::size_t n, cplx a, const cplx* d, const cplx* x,
                         cplx* y);
  void (*rdiag_axpy)(std::size_t n, double a, const double* r, const cplx* x,
                     cplx* y);
  void (*scal)(std::size_t n, cplx a, cplx* x);
};

// Scalar reference kernels.
const KernelTable& scalar_table();
// AVX2/FMA kernels; nullptr when the library was built without them.
const KernelTable* avx2_table();

bool avx2_supported();
// Selected once: AVX2 when the CPU has it, unless NLAB_FORCE_SCALAR is set.
Isa active_isa();
void set_isa(Isa isa);
std::string isa_name(Isa isa);

const KernelTable& table();

// y += a x
inline void axpy(std::size_t n, cplx a, const cplx* x, cplx* y) {
  table().axpy(n, a, x, y);
}
// sum conj(x_i) y_i
inline cplx dot(std::size_t n, const cplx* x, const cplx* y) {
  return table().dot(n, x, y);
}
// sum x_i y_i
inline cplx dotu(std::size_t n, const cplx* x, const cplx* y) {
  return table().dotu(n, x, y);
}
// sum |x_i|^2
inline double norm2(std::size_t n, const cplx* x) {
  return table().norm2(n, x);
}
inline double nrm(std::size_t n, const cplx* x) {
  return std::sqrt(table().norm2(n, x));
}
// y += a d.x
inline void diag_axpy(std::size_t n, cplx a, const cplx* d, const cplx* x,
                      cplx* y) {
  table().diag_axpy(n, a, d, x, y);
}
// y += a conj(d).x
inline void diag_conj_axpy(std::size_t n, cplx a, const cplx* d, const cplx* x,
                           cplx* y) {
  table().diag_conj_axpy(n, a, d, x, y);
}
// y += a r.x with real r
inline void rdiag_axpy(std::size_t n, double a, const double* r,
                       const cplx* x, cplx* y) {
  table().rdiag_axpy(n, a, r, x, y);
}
inline void scal(std::size_t n, cplx a, cplx* x) { table().scal(n, a, x); }

}  // namespace kern
}  // namespace nlab
