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

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "nlab/kernels.hpp"

namespace nlab {

// y = H x for a Hermitian operator of the given dimension.
using MatVec = std::function<void(const cplx* x, cplx* y)>;

struct LanczosOptions {
  double tol = 1e-10;
  int maxit = 5000;
  int basis_cap = 100;
};

struct SpectralResult {
  double energy = 0.0;
  std::vector<cplx> vector;
  double residual = 0.0;
  int iterations = 0;
  int restarts = 0;
  bool converged = false;
  // Rayleigh quotient of the seed followed by that of each restart vector.
  std::vector<double> history;
  std::string note;
};

// Lowest eigenpair by Lanczos with full reorthogonalization and explicit
// restart from the current Ritz vector once the basis reaches basis_cap.
// The returned energy never exceeds the Rayleigh quotient of the seed.
SpectralResult lanczos_ground(std::size_t dim, const MatVec& H,
                              const std::vector<cplx>& seed,
                              const LanczosOptions& opt = {});

// Dense oracle: lowest eigenpair of the matrix assembled column by column.
SpectralResult dense_ground(std::size_t dim, const MatVec& H,
                            bool want_vector = true);

double rayleigh_quotient(std::size_t dim, const MatVec& H, const cplx* x);
double residual_norm(std::size_t dim, const MatVec& H, const cplx* x,
                     double E);

}  // namespace nlab
