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

#include "snqi/strategies.hpp"

#include <cmath>
#include <numbers>

#include "snqi/ensembles.hpp"
#include "snqi/morphisms.hpp"

namespace snqi {

namespace {
constexpr double kPi = std::numbers::pi;
}

void FinitePOVM::validate(double tol) const {
  if (effects.empty()) throw std::invalid_argument("FinitePOVM: no effects");
  ComplexMatrix sum(effects[0].dim());
  for (const auto& e : effects) {
    if (e.dim() != sum.dim()) throw std::invalid_argument("FinitePOVM: mixed dimensions");
    if (min_eigenvalue(e) < -tol) throw NumericalError("FinitePOVM: effect is not PSD");
    sum = sum + e;
  }
  if (max_abs_diff(sum, ComplexMatrix::identity(sum.dim())) > tol)
    throw NumericalError("FinitePOVM: effects do not sum to identity");
}

ComplexMatrix representation_matrix(RepKind kind, const Rotation& r) {
  const ComplexMatrix u = su2_of_rotation(r);
  switch (kind) {
    case RepKind::Qubit:
      return u;
    case RepKind::QubitPair:
      return kron(u, u);
    case RepKind::TauCarrier:
      // U (x) |0><0| + sigma_y U^* sigma_y (x) |1><1| collapses to U (x) 1
      // for SU(2), which is self-conjugate under sigma_y.
      return kron(u, ComplexMatrix::identity(2));
  }
  throw std::logic_error("representation_matrix: unknown kind");
}

ComplexMatrix CovariantPOVM::effect_at(const Direction& m) const {
  const ComplexMatrix u = representation_matrix(rep, rotation_taking_up_to(m));
  return u * seed_effect * u.adjoint();
}

ComplexMatrix CovariantPOVM::orbit_average(const SphereQuadrature& q) const {
  return integrate_matrix(q, [this](const Direction& m) { return effect_at(m); });
}

const std::string& strategy_label(const MeasurementStrategy& s) {
  return std::visit([](const auto& v) -> const std::string& { return v.label; }, s);
}

MeasurementStrategy single_copy_covariant(double r3) {
  if (r3 < -1.0 || r3 > 1.0)
    throw std::invalid_argument("single_copy_covariant: r3 must lie in [-1, 1]");
  CovariantStrategy s;
  s.povm.seed_effect = ComplexMatrix::identity(2) + pauli_z() * cplx(r3, 0);
  s.povm.copies = 1;
  s.povm.rep = RepKind::Qubit;
  s.label = "covariant(r3=" + std::to_string(r3) + ")";
  return s;
}

MeasurementStrategy tau_single_copy_covariant(double r3) {
  if (r3 < -1.0 || r3 > 1.0)
    throw std::invalid_argument("tau_single_copy_covariant: r3 must lie in [-1, 1]");
  const ComplexMatrix seed = ComplexMatrix::identity(2) + pauli_z() * cplx(r3, 0);
  CovariantStrategy s;
  s.povm.seed_effect = j_morphism().apply(seed);
  s.povm.copies = 1;
  s.povm.rep = RepKind::TauCarrier;
  s.label = "tau_covariant(r3=" + std::to_string(r3) + ")";
  return s;
}

MeasurementStrategy two_copy_covariant(double alpha, double gamma) {
  if (gamma > 1.0 || alpha > gamma / 2.0 + 1.0 || alpha < -gamma / 2.0 - 1.0)
    throw std::invalid_argument("two_copy_covariant: (alpha, gamma) outside positivity region");
  const ComplexMatrix s3 = pauli_z(), id = ComplexMatrix::identity(2);
  ComplexMatrix seed = ComplexMatrix::identity(4) +
                       (kron(s3, id) + kron(id, s3)) * cplx(alpha / 2.0, 0) +
                       (kron(s3, s3) * cplx(2, 0) - kron(pauli_x(), pauli_x()) -
                        kron(pauli_y(), pauli_y())) *
                           cplx(gamma / 4.0, 0);
  CovariantStrategy s;
  s.povm.seed_effect = seed;
  s.povm.copies = 2;
  s.povm.rep = RepKind::QubitPair;
  s.label = "covariant2(alpha=" + std::to_string(alpha) + ",gamma=" + std::to_string(gamma) + ")";
  return s;
}

Ket singlet() {
  const double inv = 1.0 / std::sqrt(2.0);
  return {0.0, cplx(inv, 0), cplx(-inv, 0), 0.0};
}

namespace {

std::array<Ket, 4> summit_pair_kets(Parity kind, bool antiparallel) {
  const auto ns = tetrahedron_directions();
  const double sign = (kind == Parity::Plus) ? 1.0 : -1.0;
  std::array<Ket, 4> v;
  for (std::size_t i = 0; i < 4; ++i) {
    const Direction first(sign * ns[i].x, sign * ns[i].y, sign * ns[i].z);
    const Direction second = antiparallel ? -first : first;
    v[i] = ket_kron(bloch_ket(first), bloch_ket(second));
  }
  return v;
}

// One Gauss-Newton polish step set for the phase vector (phi_1..phi_3),
// driving the off-diagonal Gram entries of the A-family to zero.
std::array<double, 4> polish_phases(const std::array<Ket, 4>& base, std::array<double, 4> phi) {
  const Ket psi = singlet();
  const double c = std::sqrt(3.0) / 2.0;
  for (int iter = 0; iter < 40; ++iter) {
    std::array<Ket, 4> a;
    for (std::size_t i = 0; i < 4; ++i) {
      a[i] = Ket(4);
      const cplx ph = c * cplx(std::cos(phi[i]), std::sin(phi[i]));
      for (std::size_t k = 0; k < 4; ++k) a[i][k] = ph * base[i][k] + 0.5 * psi[k];
    }
    // residuals: complex off-diagonal Gram entries
    double grad[3] = {0, 0, 0}, hess[3] = {0, 0, 0};
    double worst = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        if (i == j) continue;
        const cplx gij = inner(a[i], a[j]);
        worst = std::max(worst, std::abs(gij));
        // d g_ij / d phi_j = i * (3/4) e^{i(phi_j - phi_i)} <ii|jj>
        const cplx core = 0.75 * cplx(std::cos(phi[j] - phi[i]), std::sin(phi[j] - phi[i])) *
                          inner(base[i], base[j]);
        const cplx dj = cplx(0, 1) * core;
        if (j >= 1) {
          grad[j - 1] += (std::conj(dj) * gij).real();
          hess[j - 1] += std::norm(dj);
        }
        if (i >= 1) {
          const cplx di = -dj;  // d/d phi_i of e^{i(phi_j-phi_i)}
          grad[i - 1] += (std::conj(di) * gij).real();
          hess[i - 1] += std::norm(di);
        }
      }
    if (worst < 1e-13) break;
    for (int k = 0; k < 3; ++k)
      if (hess[k] > 0) phi[k + 1] -= grad[k] / hess[k];
  }
  return phi;
}

}  // namespace

std::array<double, 4> solve_tetra_phases(Parity kind) {
  const auto base = summit_pair_kets(kind, /*antiparallel=*/false);
  // Gram entry (i, j): (3/4) e^{i(phi_j - phi_i)} <ii|jj> + 1/4, so each
  // pair needs e^{i(phi_j - phi_i)} <ii|jj> = -1/3. Fix phi_0 = 0 and read
  // the others off the (0, j) pairs; the remaining pairs are consistent.
  std::array<double, 4> phi = {0, 0, 0, 0};
  for (std::size_t j = 1; j < 4; ++j)
    phi[j] = kPi - std::arg(inner(base[0], base[j]));
  phi = polish_phases(base, phi);
  // Verify the full Gram matrix.
  const Ket psi = singlet();
  const double c = std::sqrt(3.0) / 2.0;
  double worst = 0;
  std::array<Ket, 4> a;
  for (std::size_t i = 0; i < 4; ++i) {
    a[i] = Ket(4);
    const cplx ph = c * cplx(std::cos(phi[i]), std::sin(phi[i]));
    for (std::size_t k = 0; k < 4; ++k) a[i][k] = ph * base[i][k] + 0.5 * psi[k];
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const cplx gij = inner(a[i], a[j]);
      worst = std::max(worst, std::abs(gij - (i == j ? cplx(1, 0) : cplx(0, 0))));
    }
  if (worst > 1e-12)
    throw NumericalError("solve_tetra_phases: residual " + std::to_string(worst));
  return phi;
}

std::array<Ket, 4> parallel_states(Parity kind) {
  const auto base = summit_pair_kets(kind, false);
  const auto phi = solve_tetra_phases(kind);
  const Ket psi = singlet();
  const double c = std::sqrt(3.0) / 2.0;
  std::array<Ket, 4> a;
  for (std::size_t i = 0; i < 4; ++i) {
    a[i] = Ket(4);
    const cplx ph = c * cplx(std::cos(phi[i]), std::sin(phi[i]));
    for (std::size_t k = 0; k < 4; ++k) a[i][k] = ph * base[i][k] + 0.5 * psi[k];
  }
  return a;
}

std::array<Ket, 4> antiparallel_states(Parity kind) {
  const double a = (3.0 * std::sqrt(3.0) + 1.0) / (4.0 * std::sqrt(2.0));
  const double b = (std::sqrt(3.0) - 1.0) / (4.0 * std::sqrt(2.0));
  auto v = summit_pair_kets(kind, /*antiparallel=*/true);
  // Re-gauge so <v_0|v_j> is real positive; all pairwise overlaps then
  // equal +1/3, the structure under which (a, b) orthonormalize.
  for (std::size_t j = 1; j < 4; ++j) {
    const double psi_j = -std::arg(inner(v[0], v[j]));
    const cplx ph(std::cos(psi_j), std::sin(psi_j));
    for (auto& c : v[j]) c *= ph;
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const cplx ov = inner(v[i], v[j]);
      const cplx want = (i == j) ? cplx(1, 0) : cplx(1.0 / 3.0, 0);
      if (std::abs(ov - want) > 1e-12)
        throw NumericalError("antiparallel_states: overlap gauge failed");
    }
  std::array<Ket, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = Ket(4);
    for (std::size_t k = 0; k < 4; ++k) {
      cplx rest = 0;
      for (std::size_t j = 0; j < 4; ++j)
        if (j != i) rest += v[j][k];
      out[i][k] = cplx(a, 0) * v[i][k] - cplx(b, 0) * rest;
    }
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const cplx gij = inner(out[i], out[j]);
      if (std::abs(gij - (i == j ? cplx(1, 0) : cplx(0, 0))) > 1e-10)
        throw NumericalError("antiparallel_states: family is not orthonormal");
    }
  return out;
}

namespace {

// Flag projectors |f1 f2><f1 f2| on H'1 (x) H'2.
ComplexMatrix flag_projector(int f1, int f2) {
  return kron(f1 == 0 ? ket0_proj() : ket1_proj(), f2 == 0 ? ket0_proj() : ket1_proj());
}

struct TetraFamilies {
  std::array<Ket, 4> ap, am, bp, bm;
};

const TetraFamilies& tetra_families() {
  static const TetraFamilies fam = {parallel_states(Parity::Plus), parallel_states(Parity::Minus),
                                    antiparallel_states(Parity::Plus),
                                    antiparallel_states(Parity::Minus)};
  return fam;
}

}  // namespace

ComplexMatrix tetra_effect_piece(std::size_t i, int f1, int f2) {
  if (i >= 4 || f1 < 0 || f1 > 1 || f2 < 0 || f2 > 1)
    throw std::invalid_argument("tetra_effect_piece: bad index");
  const auto& fam = tetra_families();
  const Ket* ket = nullptr;
  if (f1 == 0 && f2 == 0) ket = &fam.ap[i];
  if (f1 == 0 && f2 == 1) ket = &fam.bp[i];
  if (f1 == 1 && f2 == 0) ket = &fam.bm[i];
  if (f1 == 1 && f2 == 1) ket = &fam.am[i];
  const ComplexMatrix piece_b2 = kron(outer(*ket), flag_projector(f1, f2));
  const ComplexMatrix p = tau_pair_reorder();
  return p.adjoint() * piece_b2 * p;
}

MeasurementStrategy tetra_two_copy_tau_povm() {
  FiniteStrategy s;
  const auto ns = tetrahedron_directions();
  for (std::size_t i = 0; i < 4; ++i) {
    ComplexMatrix e = tetra_effect_piece(i, 0, 0) + tetra_effect_piece(i, 0, 1) +
                      tetra_effect_piece(i, 1, 0) + tetra_effect_piece(i, 1, 1);
    s.povm.effects.push_back(e.hermitized(1e-10));
    s.povm.labels.push_back("E_" + std::to_string(i));
    s.guesses.push_back(ns[i]);
  }
  s.label = "tetra_tau_pair";
  return s;
}

double density_single_copy(double r3, double delta, double cos_theta) {
  return (1.0 - delta) * r3 * cos_theta + 1.0;
}

double density_two_copy_rho(double alpha, double gamma, double cos_theta) {
  return 0.75 * gamma * cos_theta * cos_theta + alpha * cos_theta + 1.0 - 0.25 * gamma;
}

double density_parallel(double delta, double cos_theta) {
  const double q = 1.0 - delta, c = cos_theta;
  return (3.0 * q * q * c * c + 6.0 * q * c - (delta + 1.0) * (delta - 3.0)) / 16.0;
}

double density_antiparallel(double delta, double cos_theta) {
  const double q = 1.0 - delta, c = cos_theta;
  return (3.0 * q * q * c * c + 2.0 * std::sqrt(3.0) * q * c - (delta * delta - 2.0 * delta - 1.0)) /
         8.0;
}

double density_tau_pair(double delta, double cos_theta) {
  return 0.5 * density_parallel(delta, cos_theta) + 0.5 * density_antiparallel(delta, cos_theta);
}

}  // namespace snqi
