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

#include "snqi/ensembles.hpp"

namespace snqi {

namespace {

void check_delta(double delta) {
  if (delta < 0.0 || delta > 1.0)
    throw std::invalid_argument("delta must lie in [0, 1]");
}

}  // namespace

DensityOperator rho_n(const Direction& n) {
  ComplexMatrix m = ComplexMatrix::identity(2) + pauli_x() * cplx(n.x, 0) +
                    pauli_y() * cplx(n.y, 0) + pauli_z() * cplx(n.z, 0);
  return DensityOperator(m * cplx(0.5, 0));
}

DensityOperator rho_n_delta(const Direction& n, double delta) {
  check_delta(delta);
  const ComplexMatrix m = rho_n(n).matrix() * cplx(1.0 - delta, 0) +
                          ComplexMatrix::identity(2) * cplx(delta / 2.0, 0);
  return DensityOperator(m);
}

DensityOperator tau_n_delta(const Direction& n, double delta) {
  check_delta(delta);
  const ComplexMatrix m = kron(rho_n_delta(n, delta).matrix(), ket0_proj()) * cplx(0.5, 0) +
                          kron(rho_n_delta(-n, delta).matrix(), ket1_proj()) * cplx(0.5, 0);
  return DensityOperator(m);
}

Ensemble ensemble_rho() {
  return {[](const Direction& n) { return rho_n(n); }, 2, 1, "E_rho", std::nullopt};
}

Ensemble ensemble_rho_delta(double delta) {
  check_delta(delta);
  return {[delta](const Direction& n) { return rho_n_delta(n, delta); }, 2, 1, "E_rho_delta",
          delta};
}

Ensemble ensemble_tau(double delta) {
  check_delta(delta);
  return {[delta](const Direction& n) { return tau_n_delta(n, delta); }, 4, 1, "E_tau", delta};
}

Ensemble two_copies(const Ensemble& e) {
  if (e.copies != 1) throw std::invalid_argument("two_copies: ensemble already doubled");
  auto base = e.state_fn;
  Ensemble d;
  d.state_fn = [base](const Direction& n) {
    const ComplexMatrix s = base(n).matrix();
    return DensityOperator(kron(s, s));
  };
  d.dim = e.dim * e.dim;
  d.copies = 2;
  d.label = e.label + "^2";
  d.delta = e.delta;
  return d;
}

ComplexMatrix tau_pair_reorder() {
  return subsystem_permutation({0, 2, 1, 3}, {2, 2, 2, 2});
}

ComplexMatrix average_state(const Ensemble& e, const SphereQuadrature& q) {
  return integrate_matrix(q, [&e](const Direction& n) { return e.state_fn(n).matrix(); });
}

}  // namespace snqi
