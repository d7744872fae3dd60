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

#include "nlab/fockspace.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace nlab {

namespace {

constexpr double kPi = std::numbers::pi;

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    double p0 = 1.0, p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    x[n - 1 - i] = z;
    w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

std::array<double, 3> unit(double a, double b, double c) {
  const double r = std::sqrt(a * a + b * b + c * c);
  return {a / r, b / r, c / r};
}

}  // namespace

double mode_abs(const Mode& m) {
  return std::sqrt(m.k[0] * m.k[0] + m.k[1] * m.k[1] + m.k[2] * m.k[2]);
}

std::vector<std::array<double, 3>> direction_set(int n) {
  if (n < 1) throw std::invalid_argument("n_angular must be >= 1");
  std::vector<std::array<double, 3>> d;
  const double s = 1.0 / std::sqrt(3.0);
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  switch (n) {
    case 1:
      d = {{0.0, 0.0, 1.0}};
      break;
    case 2:
      d = {{0.0, 0.0, 1.0}, {0.0, 0.0, -1.0}};
      break;
    case 4:
      d = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
      break;
    case 6:
      d = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
      break;
    case 8:
      for (int a : {1, -1})
        for (int b : {1, -1})
          for (int c : {1, -1}) d.push_back({a * s, b * s, c * s});
      break;
    case 12:
      for (int a : {1, -1})
        for (int b : {1, -1}) {
          d.push_back(unit(0.0, a, b * phi));
          d.push_back(unit(a, b * phi, 0.0));
          d.push_back(unit(b * phi, 0.0, a));
        }
      break;
    default: {
      const double golden = kPi * (3.0 - std::sqrt(5.0));
      for (int i = 0; i < n; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / n;
        const double r = std::sqrt(1.0 - z * z);
        d.push_back({r * std::cos(golden * i), r * std::sin(golden * i), z});
      }
    }
  }
  return d;
}

ModeGrid build_modes(double kappa, double lambda, int n_radial,
                     int n_angular) {
  if (!(kappa < lambda)) throw std::invalid_argument("cutoff order violated: need kappa < lambda");
  if (n_radial < 1) throw std::invalid_argument("n_radial must be >= 1");
  std::vector<double> x, w;
  gauss_legendre(n_radial, x, w);
  const double half = 0.5 * (lambda - kappa);
  const double mid = 0.5 * (lambda + kappa);
  std::vector<double> r(n_radial), wr(n_radial);
  double sum = 0.0;
  for (int i = 0; i < n_radial; ++i) {
    r[i] = mid + half * x[i];
    wr[i] = half * w[i] * r[i] * r[i];
    sum += wr[i];
  }
  const double exact = (lambda * lambda * lambda - kappa * kappa * kappa) / 3.0;
  for (double& v : wr) v *= exact / sum;
  const auto dirs = direction_set(n_angular);
  const double wang = 4.0 * kPi / static_cast<double>(dirs.size());
  const double norm = 1.0 / std::pow(2.0 * kPi, 3);
  ModeGrid g;
  g.kappa = kappa;
  g.lambda = lambda;
  for (int i = 0; i < n_radial; ++i)
    for (const auto& u : dirs) {
      Mode m;
      m.k = {r[i] * u[0], r[i] * u[1], r[i] * u[2]};
      m.weight = wr[i] * wang * norm;
      m.soft = r[i] < 1.0;
      (m.soft ? g.soft_count : g.hard_count)++;
      g.modes.push_back(m);
    }
  return g;
}

ModeGrid custom_modes(const std::vector<std::array<double, 3>>& k,
                      const std::vector<double>& weights) {
  if (k.size() != weights.size())
    throw std::invalid_argument("custom_modes: size mismatch");
  ModeGrid g;
  double lo = 1e300, hi = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    Mode m;
    m.k = k[i];
    m.weight = weights[i];
    const double a = mode_abs(m);
    if (!(a > 0.0)) throw std::invalid_argument("custom_modes: zero momentum");
    m.soft = a < 1.0;
    (m.soft ? g.soft_count : g.hard_count)++;
    lo = std::min(lo, a);
    hi = std::max(hi, a);
    g.modes.push_back(m);
  }
  g.kappa = lo;
  g.lambda = hi;
  return g;
}

ModeGrid scale_modes(const ModeGrid& g, const ScaleFrame& f, Direction d) {
  ModeGrid out = g;
  const double s = d == Direction::Forward ? f.r_of(-2.0 * f.tau)
                                           : f.r_of(2.0 * f.tau);
  for (Mode& m : out.modes) {
    m.k = {s * m.k[0], s * m.k[1], s * m.k[2]};
    m.weight *= s * s * s;
  }
  out.kappa *= s;
  out.lambda *= s;
  return out;
}

std::size_t FockBasis::binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / i;
  return r;
}

FockBasis::FockBasis(int modes, int n_max) : m_(modes), nmax_(n_max) {
  if (modes < 0 || n_max < 0) throw std::invalid_argument("FockBasis: negative size");
  std::vector<std::uint8_t> occ(modes, 0);
  // Ordered by total number, then lexicographically with mode 0 most
  // significant.
  for (int n = 0; n <= n_max; ++n) {
    std::function<void(int, int)> rec = [&](int j, int left) {
      if (j == modes - 1 || modes == 0) {
        if (modes == 0) {
          if (left == 0) {
            states_.push_back(occ);
            totals_.push_back(n);
          }
          return;
        }
        occ[j] = static_cast<std::uint8_t>(left);
        states_.push_back(occ);
        totals_.push_back(n);
        return;
      }
      for (int v = left; v >= 0; --v) {
        occ[j] = static_cast<std::uint8_t>(v);
        rec(j + 1, left - v);
      }
      occ[j] = 0;
    };
    rec(0, n);
  }
  for (std::size_t i = 0; i < states_.size(); ++i) lookup_[code(states_[i])] = i;
  lower_.resize(modes);
  for (int j = 0; j < modes; ++j)
    for (std::size_t i = 0; i < states_.size(); ++i) {
      if (states_[i][j] == 0) continue;
      std::vector<std::uint8_t> o = states_[i];
      const double amp = std::sqrt(static_cast<double>(o[j]));
      o[j] -= 1;
      lower_[j].push_back({i, index(o), amp});
    }
}

std::uint64_t FockBasis::code(const std::vector<std::uint8_t>& occ) const {
  std::uint64_t c = 0;
  for (int j = m_ - 1; j >= 0; --j) c = c * (nmax_ + 1) + occ[j];
  return c;
}

std::size_t FockBasis::index(const std::vector<std::uint8_t>& occ) const {
  int t = 0;
  for (auto v : occ) t += v;
  if (t > nmax_) return dim();
  auto it = lookup_.find(code(occ));
  return it == lookup_.end() ? dim() : it->second;
}

std::size_t FockBasis::dim_up_to(int n) const {
  if (n < 0) return 0;
  if (n >= nmax_) return dim();
  return binomial(m_ + n, n);
}

LadderOps ladder_ops(const FockBasis& b, int j) {
  if (j < 0 || j >= b.mode_count()) throw std::out_of_range("ladder_ops: mode index");
  std::vector<Entry> ea, en;
  for (const auto& t : b.lowering(j)) ea.push_back({t.to, t.from, t.amp});
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const double n = b.occupations(i)[j];
    if (n != 0.0) en.push_back({i, i, n});
  }
  LadderOps ops;
  ops.a = SparseOperator(b.dim(), ea);
  ops.adag = ops.a.adjoint();
  ops.n = SparseOperator(b.dim(), en);
  return ops;
}

std::vector<double> field_energy(const FockBasis& b, const ModeGrid& g) {
  std::vector<double> d(b.dim(), 0.0);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.mode_count(); ++j)
      d[i] += b.occupations(i)[j] * mode_abs(g.modes[j]);
  return d;
}

std::vector<double> number_diagonal(const FockBasis& b,
                                    const std::vector<bool>& mask) {
  std::vector<double> d(b.dim(), 0.0);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.mode_count(); ++j)
      if (mask[j]) d[i] += b.occupations(i)[j];
  return d;
}

std::vector<double> number_diagonal(const FockBasis& b) {
  return number_diagonal(b, std::vector<bool>(b.mode_count(), true));
}

SparseOperator displacement(const FockBasis& b, int j, cplx eta) {
  LadderOps ops = ladder_ops(b, j);
  Eigen::MatrixXcd gen = eta * ops.adag.to_dense() - std::conj(eta) * ops.a.to_dense();
  Eigen::MatrixXcd d = gen.exp();
  SparseOperator::Matrix m = d.sparseView();
  return SparseOperator(std::move(m)).pruned(1e-14);
}

}  // namespace nlab
