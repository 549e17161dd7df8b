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

#include "doctest.h"

#include "snqi/ensembles.hpp"

using namespace snqi;

TEST_CASE("single copy covariant seed") {
  const auto s = std::get<CovariantStrategy>(single_copy_covariant(1.0));
  CHECK(max_abs_diff(s.povm.seed_effect, ComplexMatrix(2, {2, 0, 0, 0})) < 1e-15);
  CHECK(std::abs(s.povm.seed_effect.trace() - cplx(2, 0)) < 1e-15);

  const auto u = std::get<CovariantStrategy>(single_copy_covariant(0.0));
  CHECK(max_abs_diff(u.povm.seed_effect, ComplexMatrix::identity(2)) < 1e-15);

  // density at the equator is 1 for any r3, delta
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> ur(-1.0, 1.0), ud(0.0, 1.0);
  for (int k = 0; k < 10; ++k) {
    const double r3 = ur(rng), d = ud(rng);
    CHECK(std::abs(density_single_copy(r3, d, 0.0) - 1.0) < 1e-15);
    const Direction n = Direction::from_spherical(std::numbers::pi / 2, ud(rng));
    const auto st = std::get<CovariantStrategy>(single_copy_covariant(r3));
    const double direct = (rho_n_delta(n, d).matrix() * st.povm.seed_effect).trace().real();
    CHECK(std::abs(direct - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(single_copy_covariant(1.2), std::invalid_argument);
}

TEST_CASE("tau-side covariant strategy") {
  const auto s = std::get<CovariantStrategy>(tau_single_copy_covariant(1.0));
  CHECK(s.povm.seed_effect.dim() == 4);
  CHECK(std::abs(s.povm.seed_effect.trace() - cplx(4, 0)) < 1e-14);

  // the transported measurement reproduces the bare-carrier statistics
  std::mt19937_64 rng(2);
  for (int k = 0; k < 20; ++k) {
    const Direction n = random_direction(rng);
    const double d = 0.25;
    const double on_tau = (tau_n_delta(n, d).matrix() * s.povm.seed_effect).trace().real();
    const double on_rho = density_single_copy(1.0, d, n.z);
    CHECK(std::abs(on_tau - on_rho) < 1e-13);
  }

  // covariance under the flagged representation
  for (int k = 0; k < 10; ++k) {
    const Direction m = random_direction(rng);
    const ComplexMatrix um = representation_matrix(RepKind::TauCarrier, rotation_taking_up_to(m));
    const ComplexMatrix tn = tau_n_delta(Direction::up(), 0.2).matrix();
    CHECK(max_abs_diff(um * tn * um.adjoint(), tau_n_delta(m, 0.2).matrix()) < 1e-12);
  }
}

TEST_CASE("two copy covariant seed") {
  CHECK_THROWS_AS(two_copy_covariant(2.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(two_copy_covariant(0.0, 1.5), std::invalid_argument);

  const auto s = std::get<CovariantStrategy>(two_copy_covariant(1.5, 1.0));
  CHECK(std::abs(s.povm.seed_effect.trace() - cplx(4, 0)) < 1e-14);
  CHECK(min_eigenvalue(s.povm.seed_effect) > -1e-12);

  // positivity boundary points stay PSD
  const std::pair<double, double> boundary[] = {{1.5, 1.0}, {-1.5, 1.0}, {0.75, -0.5}, {0.0, 1.0}};
  for (const auto& pg : boundary) {
    const auto b = std::get<CovariantStrategy>(two_copy_covariant(pg.first, pg.second));
    CHECK(min_eigenvalue(b.povm.seed_effect) > -1e-12);
  }

  SUBCASE("densities") {
    CHECK(std::abs(density_two_copy_rho(0.0, 0.0, 0.37) - 1.0) < 1e-15);
    CHECK(density_two_copy_rho(1.5, 1.0, 1.0) == doctest::Approx(3.0).epsilon(1e-15));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ur(-1.0, 1.0);
    for (int k = 0; k < 50; ++k) {
      const double g = ur(rng), a = (g / 2.0 + 1.0) * ur(rng);
      const Direction n = random_direction(rng);
      const auto st = std::get<CovariantStrategy>(two_copy_covariant(a, g));
      const ComplexMatrix rr = kron(rho_n(n).matrix(), rho_n(n).matrix());
      const double direct = (rr * st.povm.seed_effect).trace().real();
      CHECK(std::abs(direct - density_two_copy_rho(a, g, n.z)) < 1e-12);
    }
  }

  SUBCASE("orbit average is the identity") {
    const SphereQuadrature q = SphereQuadrature::gauss_legendre_product(24, 24);
    const auto st = std::get<CovariantStrategy>(two_copy_covariant(0.8, 0.6));
    CHECK(max_abs_diff(st.povm.orbit_average(q), ComplexMatrix::identity(4)) < 1e-8);
  }
}

TEST_CASE("tetra phases") {
  const auto phi = solve_tetra_phases(Parity::Plus);
  CHECK(phi[0] == 0.0);
  // in this Bloch convention the solved gauge is (0, pi, pi, pi)
  for (int i = 1; i < 4; ++i)
    CHECK(std::abs(std::remainder(phi[i] - std::numbers::pi, 2 * std::numbers::pi)) < 1e-12);

  const auto a = parallel_states(Parity::Plus);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const cplx g = inner(a[i], a[j]);
      CHECK(std::abs(g - (i == j ? cplx(1, 0) : cplx(0, 0))) < 1e-12);
    }

  // |<n_i n_i | n_j n_j>| = 1/3 from the tetrahedron geometry
  const auto ns = tetrahedron_directions();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      const Ket vi = ket_kron(bloch_ket(ns[i]), bloch_ket(ns[i]));
      const Ket vj = ket_kron(bloch_ket(ns[j]), bloch_ket(ns[j]));
      CHECK(std::abs(std::abs(inner(vi, vj)) - 1.0 / 3.0) < 1e-12);
    }

  // <Psi^-|A^+_i> = 1/2 because the summit pair kets are singlet-orthogonal
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(inner(singlet(), a[i]) - cplx(0.5, 0)) < 1e-12);

  // the minus family is also orthonormal
  const auto am = parallel_states(Parity::Minus);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(std::abs(inner(am[i], am[j]) - (i == j ? cplx(1, 0) : cplx(0, 0))) < 1e-12);
}

TEST_CASE("antiparallel states") {
  const double a_coef = (3.0 * std::sqrt(3.0) + 1.0) / (4.0 * std::sqrt(2.0));
  const double b_coef = (std::sqrt(3.0) - 1.0) / (4.0 * std::sqrt(2.0));
  CHECK(a_coef == doctest::Approx(1.09533).epsilon(1e-5));
  CHECK(b_coef == doctest::Approx(0.12941).epsilon(1e-4));

  for (Parity kind : {Parity::Plus, Parity::Minus}) {
    const auto b = antiparallel_states(kind);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const cplx g = inner(b[i], b[j]);
        CHECK(std::abs(g - (i == j ? cplx(1, 0) : cplx(0, 0))) < 1e-10);
      }
  }
}

TEST_CASE("tetra two copy povm") {
  const auto strat = tetra_two_copy_tau_povm();
  const auto& fin = std::get<FiniteStrategy>(strat);
  REQUIRE(fin.povm.effects.size() == 4);
  fin.povm.validate(1e-10);

  ComplexMatrix sum(16);
  for (const auto& e : fin.povm.effects) {
    sum = sum + e;
    CHECK(min_eigenvalue(e) > -1e-10);
    CHECK(e.hermiticity_defect() < 1e-12);
  }
  CHECK(max_abs_diff(sum, ComplexMatrix::identity(16)) < 1e-10);

  SUBCASE("analytic densities match direct sandwiches") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    const auto ap = parallel_states(Parity::Plus);
    const auto bp = antiparallel_states(Parity::Plus);
    for (int k = 0; k < 100; ++k) {
      const Direction n = random_direction(rng);
      const double d = ud(rng);
      const ComplexMatrix rho = rho_n_delta(n, d).matrix();
      const ComplexMatrix rho_f = rho_n_delta(-n, d).matrix();
      CHECK(std::abs(sandwich(ap[0], kron(rho, rho), ap[0]).real() -
                     density_parallel(d, n.z)) < 1e-12);
      CHECK(std::abs(sandwich(bp[0], kron(rho, rho_f), bp[0]).real() -
                     density_antiparallel(d, n.z)) < 1e-12);
      const ComplexMatrix tt = kron(tau_n_delta(n, d).matrix(), tau_n_delta(n, d).matrix());
      CHECK(std::abs((tt * fin.povm.effects[0]).trace().real() - density_tau_pair(d, n.z)) <
            1e-12);
    }
  }

  SUBCASE("guesses are the tetrahedron directions") {
    const auto ns = tetrahedron_directions();
    for (int i = 0; i < 4; ++i) CHECK(fin.guesses[i].dot(ns[i]) == doctest::Approx(1.0));
  }
}

TEST_CASE("finite povm validation catches bad families") {
  FinitePOVM p;
  p.effects = {ComplexMatrix::identity(2) * cplx(0.5, 0)};
  p.labels = {"half"};
  CHECK_THROWS_AS(p.validate(1e-10), NumericalError);
  p.effects = {pauli_z(), ComplexMatrix::identity(2) - pauli_z()};
  p.labels = {"a", "b"};
  CHECK_THROWS_AS(p.validate(1e-10), NumericalError);  // first effect not PSD
}

TEST_CASE("covariant reduction matches off-axis orbit points") {
  // integral against the effect at m equals the seed-frame integral
  const SphereQuadrature q = SphereQuadrature::gauss_legendre_product(48, 48);
  const auto st = std::get<CovariantStrategy>(single_copy_covariant(1.0));
  const double seed_frame = integrate(q, [&](const Direction& n) {
    return (rho_n_delta(n, 0.1).matrix() * st.povm.seed_effect).trace().real() * (1.0 + n.z) /
           2.0;
  });
  std::mt19937_64 rng(5);
  for (int k = 0; k < 5; ++k) {
    const Direction m = random_direction(rng);
    const ComplexMatrix em = st.povm.effect_at(m);
    const double at_m = integrate(q, [&](const Direction& n) {
      return (rho_n_delta(n, 0.1).matrix() * em).trace().real() * (1.0 + n.dot(m)) / 2.0;
    });
    CHECK(std::abs(at_m - seed_frame) < 1e-10);
  }
}
