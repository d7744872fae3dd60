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

#include <array>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "nlab/model.hpp"
#include "nlab/sparse.hpp"

namespace nlab {

struct Mode {
  std::array<double, 3> k{0.0, 0.0, 0.0};
  double weight = 0.0;  // includes the (2 pi)^{-3} of |phi|^2
  bool soft = false;    // |k| < 1 in relativistic units
};

struct ModeGrid {
  std::vector<Mode> modes;
  std::size_t soft_count = 0;
  std::size_t hard_count = 0;
  double kappa = 0.0;
  double lambda = 0.0;

  std::size_t size() const { return modes.size(); }
};

double mode_abs(const Mode& m);

// Gauss-Legendre radial rule on [kappa, lambda] times an equal-weight
// direction set; weights integrate d^3k/(2 pi)^3 over the shell.
ModeGrid build_modes(double kappa, double lambda, int n_radial,
                     int n_angular);
// Modes at prescribed momenta (soft flag from |k| < 1).
ModeGrid custom_modes(const std::vector<std::array<double, 3>>& k,
                      const std::vector<double>& weights);
// k -> rho^{-2tau} k (Forward) with weights rescaled as d^3k.
ModeGrid scale_modes(const ModeGrid& g, const ScaleFrame& f, Direction d);

std::vector<std::array<double, 3>> direction_set(int n);

class FockBasis {
 public:
  FockBasis(int modes, int n_max);

  int mode_count() const { return m_; }
  int n_max() const { return nmax_; }
  std::size_t dim() const { return states_.size(); }
  const std::vector<std::uint8_t>& occupations(std::size_t i) const {
    return states_[i];
  }
  int total(std::size_t i) const { return totals_[i]; }
  // Number of states with total occupation <= n.
  std::size_t dim_up_to(int n) const;
  // Index of an occupation vector, or dim() when outside the basis.
  std::size_t index(const std::vector<std::uint8_t>& occ) const;

  struct Transition {
    std::size_t from;
    std::size_t to;
    double amp;
  };
  // Nonzero matrix elements of a_j: a_j|from> = amp |to>.
  const std::vector<Transition>& lowering(int j) const { return lower_[j]; }

  static std::size_t binomial(int n, int k);

 private:
  std::uint64_t code(const std::vector<std::uint8_t>& occ) const;

  int m_;
  int nmax_;
  std::vector<std::vector<std::uint8_t>> states_;
  std::vector<int> totals_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
  std::vector<std::vector<Transition>> lower_;
};

struct LadderOps {
  SparseOperator a;
  SparseOperator adag;
  SparseOperator n;
};
LadderOps ladder_ops(const FockBasis& b, int j);

// Diagonal of H_f = sum_j omega_j n_j.
std::vector<double> field_energy(const FockBasis& b, const ModeGrid& g);
// Diagonal of the number operator restricted to modes with mask[j].
std::vector<double> number_diagonal(const FockBasis& b,
                                    const std::vector<bool>& mask);
std::vector<double> number_diagonal(const FockBasis& b);

// exp(eta a_j^* - conj(eta) a_j) on the truncated space, pruned at 1e-14.
SparseOperator displacement(const FockBasis& b, int j, cplx eta);

}  // namespace nlab
