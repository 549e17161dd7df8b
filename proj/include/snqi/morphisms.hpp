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

#ifndef SNQI_MORPHISMS_HPP
#define SNQI_MORPHISMS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "snqi/qmat.hpp"

namespace snqi {

// Linear map B(C^in) -> B(C^out) stored as its Choi matrix
// C = sum_ij |i><j| (x) map(|i><j|). The map is CP iff C is PSD.
class Superoperator {
 public:
  Superoperator(std::size_t in_dim, std::size_t out_dim, ComplexMatrix choi, std::string label);

  static Superoperator from_action(std::size_t in_dim, std::size_t out_dim,
                                   const std::function<ComplexMatrix(const ComplexMatrix&)>& fn,
                                   std::string label);

  std::size_t in_dim() const { return in_; }
  std::size_t out_dim() const { return out_; }
  const ComplexMatrix& choi() const { return choi_; }
  const std::string& label() const { return label_; }

  /// Action by Choi contraction: out_{ab} = sum_ij C_{(i,a),(j,b)} X_{ij}.
  ComplexMatrix apply(const ComplexMatrix& x) const;

  bool is_unital(double tol = 1e-12) const;

 private:
  std::size_t in_, out_;
  ComplexMatrix choi_;
  std::string label_;
};

/// f after g, computed in transfer-matrix form.
Superoperator compose(const Superoperator& f, const Superoperator& g);

/// Parallel application a (x) b on B(C^{a.in * b.in}).
Superoperator tensor(const Superoperator& a, const Superoperator& b);

Superoperator identity_map(std::size_t dim);
Superoperator transpose_map(std::size_t dim);
/// Spin flip E -> sigma_y E^T sigma_y on B(C^2).
Superoperator spin_flip_map();

/// Lambda_0(E) = 1/2 tr_{H'}[E(1 (x) |0><0|)]
///             + 1/2 sigma_y {tr_{H'}[E(1 (x) |1><1|)]}^T sigma_y,
/// transposition in the computational basis. B(H (x) H') -> B(H).
Superoperator lambda0();

/// Hilbert-Schmidt adjoint of the depolarizing channel:
/// D_delta(E) = (1-delta) E + delta (tr E / 2) 1. Satisfies
/// tr[D_delta(E) rho_n] = tr[E rho_{n,delta}] for every operator E.
Superoperator conj_depolarizer(double delta);

/// Lambda_delta = D_delta after Lambda_0.
Superoperator lambda_delta(double delta);

/// J(E) = E (x) |0><0| + sigma_y E^T sigma_y (x) |1><1|. B(H) -> B(H (x) H').
Superoperator j_morphism();

struct PositivityReport {
  double choi_min_eig = 0;
  bool is_cp = false;              // certified by the Choi eigensolve
  std::size_t positivity_samples = 0;
  double min_output_eig = 0;       // worst output eigenvalue over sampled PSD inputs
};

/// Choi spectrum plus sampled positivity over random pure projectors and
/// PSD mixtures (trace-normalized).
PositivityReport positivity_report(const Superoperator& s, std::size_t samples,
                                   std::uint64_t seed);

// ---------------------------------------------------------------------------
// Classical (simultaneously diagonal) carriers, the contrast case where
// doubled simulation maps always stay valid.
// Conditional tables are row-major: t[i][x] = t(i|x), columns sum to 1.

using ConditionalTable = std::vector<std::vector<double>>;

struct ClassicalSimulation {
  bool feasible = false;
  // post_processing[i][j] = M(i|j): the simulating effect for outcome i is
  // sum_j M(i|j) |j><j|; sum_i M(i|j) = 1 for each j.
  std::vector<std::vector<double>> post_processing;
  double residual = 0;  // least-squares infeasibility certificate when !feasible
};

/// Finds a classical post-processing M with t(i|x) = sum_j M(i|j) r(j|x)
/// and sum_i M(i|j) = 1, M >= 0, or reports infeasibility with the best
/// residual. Solved as a nonnegative least-squares problem.
ClassicalSimulation classical_ensemble_map(const ConditionalTable& tau_probs,
                                           const ConditionalTable& rho_probs);

/// Brute-force check of the doubled-carrier identity: for every product
/// effect (i1, i2) and every x,
///   t(i1|x) t(i2|x) = sum_{j1 j2} M(i1|j1) M(i2|j2) r(j1|x) r(j2|x),
/// and M (x) M is a valid effect map (entries >= 0, outcome sums = 1).
bool classical_quantitativity_check(const ClassicalSimulation& sim,
                                    const ConditionalTable& tau_probs,
                                    const ConditionalTable& rho_probs, double tol = 1e-12);

/// Max | tr[E tau_{n,delta}] - tr[Lambda_delta(E) rho_n] | over seeded random
/// Hermitian effects and sphere nodes.
double morphism_identity_residual(double delta, std::size_t n_effects, std::size_t n_nodes,
                                  std::uint64_t seed);

/// Same for tr[J(E) tau_{n,delta}] = tr[E rho_{n,delta}].
double j_identity_residual(double delta, std::size_t n_effects, std::size_t n_nodes,
                           std::uint64_t seed);

}  // namespace snqi

#endif  // SNQI_MORPHISMS_HPP
