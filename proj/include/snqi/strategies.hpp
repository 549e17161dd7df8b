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

#ifndef SNQI_STRATEGIES_HPP
#define SNQI_STRATEGIES_HPP

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "snqi/qmat.hpp"
#include "snqi/sphere.hpp"

namespace snqi {

struct FinitePOVM {
  std::vector<ComplexMatrix> effects;
  std::vector<std::string> labels;

  /// Completeness and per-effect PSD at the given tolerance.
  void validate(double tol = 1e-10) const;
};

// How SU(2) acts on the carrier space, used to sweep a covariant seed
// effect over its orbit.
enum class RepKind {
  Qubit,      // U
  QubitPair,  // U (x) U
  TauCarrier  // U (x) 1_{H'}
};

ComplexMatrix representation_matrix(RepKind kind, const Rotation& r);

// Covariant POVM given by one seed effect; orbit element at direction m is
// U_{R_m} E_up U_{R_m}^dagger with the guess g(m) = m.
struct CovariantPOVM {
  ComplexMatrix seed_effect;
  int copies = 1;
  RepKind rep = RepKind::Qubit;

  ComplexMatrix effect_at(const Direction& m) const;
  /// Orbit average, which must reproduce the identity.
  ComplexMatrix orbit_average(const SphereQuadrature& q) const;
};

struct CovariantStrategy {
  CovariantPOVM povm;
  std::string label;
};

struct FiniteStrategy {
  FinitePOVM povm;
  std::vector<Direction> guesses;
  std::string label;
};

using MeasurementStrategy = std::variant<CovariantStrategy, FiniteStrategy>;

const std::string& strategy_label(const MeasurementStrategy& s);

/// Seed 1 + r3 sigma_3 = (1+r3)|0><0| + (1-r3)|1><1| on the qubit carrier.
MeasurementStrategy single_copy_covariant(double r3);

/// The same measurement transported to the flagged carrier H (x) H' through
/// the inverse morphism: seed J(1 + r3 sigma_3).
MeasurementStrategy tau_single_copy_covariant(double r3);

/// Two-copy seed with density (3 gamma/4) cos^2 + alpha cos + 1 - gamma/4:
/// 1 + (alpha/2)(s3 (x) 1 + 1 (x) s3) + (gamma/4)(2 s3s3 - s1s1 - s2s2).
/// Positivity requires |alpha| <= gamma/2 + 1 and gamma <= 1.
MeasurementStrategy two_copy_covariant(double alpha, double gamma);

enum class Parity { Plus, Minus };

/// Per-index phases (index 0 gauged to 0) making the four vectors
/// sqrt(3)/2 e^{i phi_i} |n_i n_i> + 1/2 |Psi^-> orthonormal. A single
/// common phase cannot do it in this Bloch convention.
std::array<double, 4> solve_tetra_phases(Parity kind);

/// The parallel-spin vectors |A^+->_i as kets on H (x) H.
std::array<Ket, 4> parallel_states(Parity kind);

/// Antiparallel vectors a|n_i>|-n_i> - b sum_{j!=i} |n_j>|-n_j| with
/// a = (3 sqrt3 + 1)/(4 sqrt2), b = (sqrt3 - 1)/(4 sqrt2); the product kets
/// are re-gauged so all pairwise overlaps equal +1/3, which makes the four
/// vectors orthonormal.
std::array<Ket, 4> antiparallel_states(Parity kind);

/// |Psi^-> = (|01> - |10>)/sqrt(2).
Ket singlet();

/// Four-outcome entangled POVM on the doubled flagged carrier, expressed in
/// the native slot order (H1, H'1, H2, H'2); guesses are the tetrahedron
/// directions.
MeasurementStrategy tetra_two_copy_tau_povm();

/// Flag-sector effect pieces of outcome i in native order:
/// flag (f1, f2) in {0,1}^2 indexes A+/B+/B-/A-.
ComplexMatrix tetra_effect_piece(std::size_t i, int f1, int f2);

// Probability densities for seed-frame evaluation.
double density_single_copy(double r3, double delta, double cos_theta);  // (1-d) r3 c + 1
double density_two_copy_rho(double alpha, double gamma, double cos_theta);
double density_parallel(double delta, double cos_theta);      // <A+_0| rho rho |A+_0>
double density_antiparallel(double delta, double cos_theta);  // <B+_0| rho rhobar |B+_0>
double density_tau_pair(double delta, double cos_theta);      // tr[tau tau E_0]

}  // namespace snqi

#endif  // SNQI_STRATEGIES_HPP
