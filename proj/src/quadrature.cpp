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

#include "nlab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <vector>

#include "nlab/special.hpp"

namespace nlab {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const {
    if (error != o.error) return error < o.error;
    return a > o.a;
  }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = kWgk[7] * fc;
  double g = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    k += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) g += kWg[j / 2] * (f1 + f2);
  }
  Panel p{a, b, k * h, std::abs((k - g) * h)};
  return p;
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, const QuadOptions& opt) {
  QuadResult res;
  if (a == b) return res;
  std::function<double(double)> g = f;
  double lo = a, hi = b;
  if (std::isinf(b)) {
    g = [&f, a](double t) {
      const double s = 1.0 - t;
      if (!(s > 0.0)) return 0.0;
      const double r = a + t / s;
      if (!std::isfinite(r)) return 0.0;
      return f(r) / (s * s);
    };
    lo = 0.0;
    hi = 1.0;
  }
  std::priority_queue<Panel> heap;
  Panel first = gk15(g, lo, hi);
  heap.push(first);
  double total = first.value;
  double err = first.error;
  std::size_t nodes = 15;
  while (err > std::max(opt.atol, opt.rtol * std::abs(total))) {
    if (heap.size() >= opt.max_intervals) {
      res.converged = false;
      break;
    }
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel l = gk15(g, worst.a, mid);
    Panel r = gk15(g, mid, worst.b);
    nodes += 30;
    total += l.value + r.value - worst.value;
    err += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
  }
  // Final sums in positional order so the result does not depend on the
  // refinement history.
  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double v = 0.0, e = 0.0;
  for (const Panel& p : panels) {
    v += p.value;
    e += p.error;
  }
  res.value = v;
  if (!std::isfinite(v)) res.converged = false;
  res.abs_error_estimate = e;
  res.nodes_used = nodes;
  return res;
}

QuadResult shell_moment(double a, double b, double rho2tau,
                        const ShellSpec& spec, const QuadOptions& opt) {
  if (!(rho2tau > 0.0)) throw std::domain_error("shell_moment needs rho^{2tau} > 0");
  double lo = spec.kappa;
  double hi = spec.lambda;
  if (spec.region == Region::Infrared) hi = std::min(hi, 1.0);
  if (spec.region == Region::Ultraviolet) lo = std::max(lo, 1.0);
  if (!(lo < hi)) return QuadResult{};
  if (lo == 0.0 && !(a + 2.0 - b > -1.0))
    throw std::domain_error("shell_moment diverges at the endpoint |k| = 0");
  if (std::isinf(hi) && !(a + 2.0 - 2.0 * b < -1.0))
    throw std::domain_error("shell_moment diverges at the endpoint |k| = inf");
  const double c = 0.5 * rho2tau;
  auto f = [a, b, c](double r) {
    return 4.0 * kPi * std::pow(r, a + 2.0 - b) * std::pow(1.0 + c * r, -b);
  };
  if (lo < 1.0 && hi > 1.0) {
    // Split at |k| = 1 so both regions see the same panels.
    QuadResult r1 = integrate(f, lo, 1.0, opt);
    QuadResult r2 = integrate(f, 1.0, hi, opt);
    QuadResult r;
    r.value = r1.value + r2.value;
    r.abs_error_estimate = r1.abs_error_estimate + r2.abs_error_estimate;
    r.nodes_used = r1.nodes_used + r2.nodes_used;
    r.converged = r1.converged && r2.converged;
    return r;
  }
  return integrate(f, lo, hi, opt);
}

QuadResult energy_renormalization(const ModelParams& p) {
  if (!(p.kappa > 0.0)) throw std::domain_error("energy_renormalization needs kappa > 0");
  const double m = p.m, Z = p.Z;
  const double pref = p.e * p.e * 4.0 * kPi / std::pow(2.0 * kPi, 3);
  auto f = [m, Z, pref](double r) {
    const double beta = 1.0 / (r + r * r / (2.0 * m));
    return pref * r * r / (2.0 * r) * (beta + Z * Z / r);
  };
  return integrate(f, p.kappa, p.lambda);
}

double correction_potential(const ModelParams& p, double x) {
  if (!(x > 0.0)) throw std::domain_error("correction_potential needs x > 0");
  const double m = p.m;
  const double u = x / m;
  const double tails = sine_integral(p.kappa * u) + kPi / 2.0 -
                       sine_integral(p.lambda * u);
  return (p.e * p.e * p.Z / m) * (4.0 * kPi / std::pow(2.0 * kPi, 3)) *
         tails / u;
}

QuadResult effective_mass_coefficient(bool massive) {
  const double pref = (2.0 / 3.0) * 4.0 * kPi / std::pow(2.0 * kPi, 3);
  std::function<double(double)> f;
  if (!massive) {
    // r^2 (2r)^{-1} r^2 (r + r^2/2)^{-3} written without cancellation.
    f = [pref](double r) {
      const double d = 1.0 + 0.5 * r;
      return pref * 0.5 / (d * d * d);
    };
  } else {
    f = [pref](double r) {
      const double w = std::sqrt(r * r + 1.0);
      const double beta = 1.0 / (w + 0.5 * r * r);
      return pref * r * r * r * r * beta * beta * beta / (2.0 * w);
    };
  }
  return integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

double cin(double x) {
  const double ax = std::abs(x);
  if (ax == 0.0) return 0.0;
  if (ax < 0.5) {
    const double x2 = ax * ax;
    double term = 1.0;  // x^{2k}/(2k)!
    double s = 0.0;
    for (int k = 1; k < 40; ++k) {
      term *= x2 / ((2.0 * k - 1.0) * (2.0 * k));
      const double t = (k % 2 == 1 ? 1.0 : -1.0) * term / (2.0 * k);
      s += t;
      if (std::abs(t) < 1e-18 * std::abs(s)) break;
    }
    return s;
  }
  auto f = [](double s) {
    const double h = std::sin(0.5 * s);
    return 2.0 * h * h / s;
  };
  const double panel = kPi;
  const long n = static_cast<long>(std::ceil(ax / panel));
  double total = 0.0;
  QuadOptions opt;
  opt.rtol = 1e-13;
  opt.atol = 1e-16;
  for (long i = 0; i < n; ++i) {
    const double a = i * panel;
    const double b = std::min(ax, (i + 1) * panel);
    total += integrate(f, a, b, opt).value;
  }
  return total;
}

BindingExpansion binding_second_order(double e, double Z,
                                      const ResolventElement& element,
                                      double pnorm2, const QuadOptions& opt) {
  (void)Z;
  BindingExpansion out;
  out.pnorm2 = pnorm2;
  const double inf = std::numeric_limits<double>::infinity();
  const double c3 = e * e / 3.0 / (4.0 * kPi * kPi);
  if (e == 0.0) return out;
  // r^3 beta^2 = r (1 + r/2)^{-2}; r^3 beta^3 = (1 + r/2)^{-3}
  double worst = 0.0;
  auto full = [&](double r) {
    const double d = 1.0 + 0.5 * r;
    const double M = element(r + 0.5 * r * r);
    const double env = 2.0 * pnorm2 / (d * d);
    const double val = r * M / (d * d);
    if (env > 0.0) worst = std::max(worst, val / env);
    return val;
  };
  QuadResult q = integrate(full, 0.0, inf, opt);
  out.second_order = -c3 * q.value;
  out.nodes_used = q.nodes_used;
  out.abs_error_estimate = c3 * q.abs_error_estimate;
  out.worst_envelope_ratio = worst;
  // Envelope: (e^2/3)(2pi)^{-3} int omega^{-2} beta^2 k^2 pnorm2 d^3k
  auto env = [pnorm2](double r) {
    const double d = 1.0 + 0.5 * r;
    return pnorm2 / (d * d);
  };
  out.envelope = e * e / 3.0 / (2.0 * kPi * kPi) * integrate(env, 0.0, inf, opt).value;
  auto lead = [pnorm2](double r) {
    const double d = 1.0 + 0.5 * r;
    return pnorm2 / (d * d * d);
  };
  out.leading_term = -c3 * integrate(lead, 0.0, inf, opt).value;
  out.ratio_one_term = -out.leading_term;
  auto ratio = [&](double r) {
    const double d = 1.0 + 0.5 * r;
    const double s = r + 0.5 * r * r;
    return (pnorm2 - s * element(s)) / (d * d * d);
  };
  out.ratio_term = c3 * integrate(ratio, 0.0, inf, opt).value;
  out.ratio_one_analytic = e * e * pnorm2 / (12.0 * kPi * kPi);
  return out;
}

NormBundle f_tau_norms(double kappa, double lambda, double tau, double rho) {
  const double sc = std::pow(rho, -2.0 * tau);
  const double rho2tau = std::pow(rho, 2.0 * tau);
  ShellSpec ir{kappa * sc, lambda * sc, Region::Infrared};
  ShellSpec uv{kappa * sc, lambda * sc, Region::Ultraviolet};
  const double norm = 1.0 / (2.0 * std::pow(2.0 * kPi, 3));
  NormBundle n;
  n.f_ir_l2 = std::sqrt(norm * shell_moment(1.0, 2.0, rho2tau, ir).value);
  n.f_ir_over_sqrt_omega =
      std::sqrt(norm * shell_moment(0.0, 2.0, rho2tau, ir).value);
  n.f_uv_over_sqrt_omega =
      std::sqrt(norm * shell_moment(0.0, 2.0, rho2tau, uv).value);
  n.f_uv_over_quarter_omega =
      std::sqrt(norm * shell_moment(0.5, 2.0, rho2tau, uv).value);
  return n;
}

NormBundle f_tau_norms(const ModelParams& p, double tau, double rho) {
  return f_tau_norms(p.kappa, p.lambda, tau, rho);
}

}  // namespace nlab
