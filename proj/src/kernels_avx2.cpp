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

#include <immintrin.h>

#include "nlab/kernels.hpp"

namespace nlab {
namespace kern {

namespace {

inline const double* dp(const cplx* p) {
  return reinterpret_cast<const double*>(p);
}
inline double* dp(cplx* p) { return reinterpret_cast<double*>(p); }

// (ar,ai) x (br,bi) for two packed complex numbers
inline __m256d cmul(__m256d a, __m256d b) {
  __m256d are = _mm256_movedup_pd(a);
  __m256d aim = _mm256_permute_pd(a, 0xF);
  __m256d bsw = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(are, b, _mm256_mul_pd(aim, bsw));
}

// conj(a) x b
inline __m256d cmulc(__m256d a, __m256d b) {
  __m256d are = _mm256_movedup_pd(a);
  __m256d aim = _mm256_permute_pd(a, 0xF);
  __m256d bsw = _mm256_permute_pd(b, 0x5);
  return _mm256_fmsubadd_pd(are, b, _mm256_mul_pd(aim, bsw));
}

inline __m256d bcast(cplx a) {
  return _mm256_setr_pd(a.real(), a.imag(), a.real(), a.imag());
}

inline double hsum_even_odd(__m256d v, double* odd) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  double out[2];
  _mm_storeu_pd(out, s);
  *odd = out[1];
  return out[0];
}

void axpy_v(std::size_t n, cplx a, const cplx* x, cplx* y) {
  const __m256d va = bcast(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(dp(x + i));
    __m256d vy = _mm256_loadu_pd(dp(y + i));
    _mm256_storeu_pd(dp(y + i), _mm256_add_pd(vy, cmul(va, vx)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

cplx dot_v(std::size_t n, const cplx* x, const cplx* y) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(dp(x + i));
    __m256d vy = _mm256_loadu_pd(dp(y + i));
    acc_re = _mm256_fmadd_pd(vx, vy, acc_re);
    acc_im = _mm256_fmadd_pd(vx, _mm256_permute_pd(vy, 0x5), acc_im);
  }
  double r1, i1;
  double r0 = hsum_even_odd(acc_re, &r1);
  double i0 = hsum_even_odd(acc_im, &i1);
  double re = r0 + r1;
  double im = i0 - i1;
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

cplx dotu_v(std::size_t n, const cplx* x, const cplx* y) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(dp(x + i));
    __m256d vy = _mm256_loadu_pd(dp(y + i));
    acc_re = _mm256_fmadd_pd(vx, vy, acc_re);
    acc_im = _mm256_fmadd_pd(vx, _mm256_permute_pd(vy, 0x5), acc_im);
  }
  double r1, i1;
  double r0 = hsum_even_odd(acc_re, &r1);
  double i0 = hsum_even_odd(acc_im, &i1);
  double re = r0 - r1;
  double im = i0 + i1;
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

double norm2_v(std::size_t n, const cplx* x) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(dp(x + i));
    acc = _mm256_fmadd_pd(vx, vx, acc);
  }
  double odd;
  double s = hsum_even_odd(acc, &odd) + odd;
  for (; i < n; ++i) s += std::norm(x[i]);
  return s;
}

void diag_axpy_v(std::size_t n, cplx a, const cplx* d, const cplx* x,
                 cplx* y) {
  const __m256d va = bcast(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vd = _mm256_loadu_pd(dp(d + i));
    __m256d vx = _mm256_loadu_pd(dp(x + i));
    __m256d vy = _mm256_loadu_pd(dp(y + i));
    _mm256_storeu_pd(dp(y + i), _mm256_add_pd(vy, cmul(va, cmul(vd, vx))));
  }
  for (; i < n; ++i) y[i] += a * (d[i] * x[i]);
}

void diag_conj_axpy_v(std::size_t n, cplx a, const cplx* d, const cplx* x,
                      cplx* y) {
  const __m256d va = bcast(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vd = _mm256_loadu_pd(dp(d + i));
    __m256d vx = _mm256_loadu_pd(dp(x + i));
    __m256d vy = _mm256_loadu_pd(dp(y + i));
    _mm256_storeu_pd(dp(y + i), _mm256_add_pd(vy, cmul(va, cmulc(vd, vx))));
  }
  for (; i < n; ++i) y[i] += a * (std::conj(d[i]) * x[i]);
}

void rdiag_axpy_v(std::size_t n, double a, const double* r, const cplx* x,
                  cplx* y) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vr = _mm256_setr_pd(a * r[i], a * r[i], a * r[i + 1],
                                a * r[i + 1]);
    __m256d vx = _mm256_loadu_pd(dp(x + i));
    __m256d vy = _mm256_loadu_pd(dp(y + i));
    _mm256_storeu_pd(dp(y + i), _mm256_fmadd_pd(vr, vx, vy));
  }
  for (; i < n; ++i) y[i] += (a * r[i]) * x[i];
}

void scal_v(std::size_t n, cplx a, cplx* x) {
  const __m256d va = bcast(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(dp(x + i));
    _mm256_storeu_pd(dp(x + i), cmul(va, vx));
  }
  for (; i < n; ++i) x[i] *= a;
}

const KernelTable kAvx2{axpy_v,      dot_v,           dotu_v,
                        norm2_v,     diag_axpy_v,     diag_conj_axpy_v,
                        rdiag_axpy_v, scal_v};

}  // namespace

const KernelTable* avx2_table_impl() { return &kAvx2; }

}  // namespace kern
}  // namespace nlab
