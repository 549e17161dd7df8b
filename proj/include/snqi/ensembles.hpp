// Copyright 2026 The snqi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SNQI_ENSEMBLES_HPP
#define SNQI_ENSEMBLES_HPP

#include <functional>
#include <optional>
#include <string>

#include "snqi/qmat.hpp"
#include "snqi/sphere.hpp"

namespace snqi {

/// Pure spin state (1 + n.sigma)/2.
DensityOperator rho_n(const Direction& n);

/// Depolarized spin (1-delta) rho_n + delta 1/2. delta in [0, 1].
DensityOperator rho_n_delta(const Direction& n, double delta);

/// Flagged pair rho_{n,delta} (x) |0><0|/2 + rho_{-n,delta} (x) |1><1|/2 on
/// H (x) H' with H index major.
DensityOperator tau_n_delta(const Direction& n, double delta);

// A direction-parameterized family of states under the uniform sphere prior.
struct Ensemble {
  std::function<DensityOperator(const Direction&)> state_fn;
  std::size_t dim = 2;
  int copies = 1;
  std::string label;
  std::optional<double> delta;
};

Ensemble ensemble_rho();
Ensemble ensemble_rho_delta(double delta);
Ensemble ensemble_tau(double delta);

/// state_fn(n) -> state(n) (x) state(n), native slot order (copy 1 factors
/// first). Throws if e is already doubled.
Ensemble two_copies(const Ensemble& e);

/// Permutation taking the native doubled tau order (H1, H'1, H2, H'2) to
/// (H1, H2, H'1, H'2).
ComplexMatrix tau_pair_reorder();

ComplexMatrix average_state(const Ensemble& e, const SphereQuadrature& q);

}  // namespace snqi

#endif  // SNQI_ENSEMBLES_HPP
