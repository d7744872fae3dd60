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

#include "nlab/special.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace nlab {

namespace {

constexpr double kSeriesLimit = 4.0;

void series(double x, double* si, double* ci) {
  double s = 0.0, c = 0.0;
  double term = x;  // x^{2k+1}/(2k+1)! with alternating sign
  for (int k = 0; k < 60; ++k) {
    const double ts = term / (2 * k + 1);
    s += ts;
    const double next = -term * x / (2 * k + 2);  // x^{2k+2}/(2k+2)!
    const double tc = next / (2 * k + 2);
    c += tc;
    term = next * x / (2 * k + 3);
    if (std::abs(ts) < 1e-18 * std::abs(s) && std::abs(tc) < 1e-18) break;
  }
  *si = s;
  *ci = kEulerGamma + std::log(x) + c;
}

// Modified Lentz evaluation of E1(i x), valid for x >= 2.
void continued_fraction(double x, double* si, double* ci) {
  using C = std::complex<double>;
  const double tiny = 1e-300;
  C b(1.0, x);
  C c(1.0 / tiny, 0.0);
  C d = 1.0 / b;
  C h = d;
  for (int i = 1; i < 100000; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < 1e-16) break;
  }
  h *= C(std::cos(x), -std::sin(x));
  *ci = -h.real();
  *si = std::numbers::pi / 2.0 + h.imag();
}

void sici(double x, double* si, double* ci) {
  if (x < kSeriesLimit)
    series(x, si, ci);
  else
    continued_fraction(x, si, ci);
}

}  // namespace

double sine_integral(double x) {
  if (x == 0.0) return 0.0;
  const double ax = std::abs(x);
  double si, ci;
  sici(ax, &si, &ci);
  return x < 0.0 ? -si : si;
}

double cosine_integral(double x) {
  if (!(x > 0.0)) throw std::domain_error("cosine_integral needs x > 0");
  double si, ci;
  sici(x, &si, &ci);
  return ci;
}

}  // namespace nlab
