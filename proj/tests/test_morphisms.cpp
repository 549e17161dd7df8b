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

#include "snqi/morphisms.hpp"

#include <cmath>

#include "doctest.h"

#include "snqi/ensembles.hpp"
#include "snqi/strategies.hpp"

using namespace snqi;

TEST_CASE("lambda0") {
  const Superoperator l0 = lambda0();
  CHECK(l0.is_unital(1e-12));

  std::mt19937_64 rng(1);
  const Direction m = random_direction(rng);
  const ComplexMatrix img = l0.apply(kron(rho_n(m).matrix(), ket0_proj()));
  CHECK(max_abs_diff(img, rho_n(m).matrix() * cplx(0.5, 0)) < 1e-13);

  // tr[Lambda_0(E) rho_{n,delta}] = tr[E tau_{n,delta}]
  double worst = 0;
  for (int k = 0; k < 50; ++k) {
    const ComplexMatrix e = random_hermitian(4, rng);
    for (int j = 0; j < 20; ++j) {
      const Direction n = random_direction(rng);
      for (double d : {0.0, 0.03, 0.5, 1.0}) {
        const cplx lhs = (l0.apply(e) * rho_n_delta(n, d).matrix()).trace();
        const cplx rhs = (e * tau_n_delta(n, d).matrix()).trace();
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("conjugate depolarizer") {
  const Superoperator d0 = conj_depolarizer(0.0);
  std::mt19937_64 rng(2);
  const ComplexMatrix e = random_hermitian(2, rng);
  CHECK(max_abs_diff(d0.apply(e), e) < 1e-13);

  // The Hilbert-Schmidt adjoint keeps traceless operators traceless:
  // D_1(sigma_3) = 0, and tr[D_d(E) rho_n] = tr[E rho_{n,delta}] for all E.
  const Superoperator d1 = conj_depolarizer(1.0);
  CHECK(d1.apply(pauli_z()).max_abs() < 1e-14);
  CHECK(max_abs_diff(d1.apply(ComplexMatrix::identity(2)), ComplexMatrix::identity(2)) < 1e-14);

  const Superoperator d03 = conj_depolarizer(0.3);
  const double lhs = (d03.apply(pauli_z()) * rho_n(Direction::up()).matrix()).trace().real();
  const double rhs =
      (pauli_z() * rho_n_delta(Direction::up(), 0.3).matrix()).trace().real();
  CHECK(lhs == doctest::Approx(0.7).epsilon(1e-13));
  CHECK(rhs == doctest::Approx(0.7).epsilon(1e-13));

  double worst = 0;
  for (int k = 0; k < 30; ++k) {
    const ComplexMatrix f = random_hermitian(2, rng);
    const Direction n = random_direction(rng);
    for (double dd : {0.0, 0.3, 0.7, 1.0}) {
      const Superoperator dep = conj_depolarizer(dd);
      worst = std::max(worst, std::abs((dep.apply(f) * rho_n(n).matrix()).trace() -
                                       (f * rho_n_delta(n, dd).matrix()).trace()));
    }
  }
  CHECK(worst < 1e-12);
  CHECK_THROWS_AS(conj_depolarizer(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(conj_depolarizer(1.2), std::invalid_argument);
}

TEST_CASE("lambda_delta") {
  SUBCASE("identity residual and unitality") {
    CHECK(morphism_identity_residual(0.03, 50, 20, 99) < 1e-12);
    CHECK(lambda_delta(0.03).is_unital(1e-12));
    CHECK(max_abs_diff(lambda_delta(0.5).apply(ComplexMatrix::identity(4)),
                       ComplexMatrix::identity(2)) < 1e-13);
  }

  SUBCASE("choi spectrum") {
    CHECK(min_eigenvalue(lambda_delta(0.0).choi()) < -0.1);
    for (double d : {0.0, 0.03, 0.5, 2.0 / 3.0, 0.9, 1.0}) {
      const double eig = min_eigenvalue(lambda_delta(d).choi());
      CHECK(std::abs(eig - (3.0 * d - 2.0) / 4.0) < 1e-12);
    }
  }
}

TEST_CASE("j morphism") {
  const Superoperator j = j_morphism();
  CHECK(max_abs_diff(j.apply(ComplexMatrix::identity(2)), ComplexMatrix::identity(4)) < 1e-14);
  const double v = (j.apply(pauli_z()) * tau_n_delta(Direction::up(), 0.0).matrix())
                       .trace()
                       .real();
  CHECK(v == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(j_identity_residual(0.5, 50, 20, 7) < 1e-12);

  // Choi spectrum {2, 1, 1, 1, 0, 0, 0, -1}
  const Spectrum s = eig_hermitian(j.choi());
  const double want[] = {2, 1, 1, 1, 0, 0, 0, -1};
  for (int i = 0; i < 8; ++i) CHECK(std::abs(s.eigenvalues[i] - want[i]) < 1e-12);
}

TEST_CASE("compose and tensor machinery") {
  const Superoperator id2 = identity_map(2);
  CHECK(max_abs_diff(compose(id2, id2).choi(), id2.choi()) < 1e-14);

  // transpose (x) transpose acts as the transpose on the composite space
  const Superoperator tt = tensor(transpose_map(2), transpose_map(2));
  CHECK(max_abs_diff(tt.choi(), transpose_map(4).choi()) < 1e-13);

  std::mt19937_64 rng(3);
  SUBCASE("tensor acts factorwise") {
    const Superoperator lam = lambda_delta(0.1);
    const Superoperator lam2 = tensor(lam, lam);
    const ComplexMatrix x = random_hermitian(4, rng), y = random_hermitian(4, rng);
    CHECK(max_abs_diff(lam2.apply(kron(x, y)), kron(lam.apply(x), lam.apply(y))) < 1e-12);
  }

  SUBCASE("tensor is linear on entangled inputs") {
    const Superoperator flip = spin_flip_map();
    const Superoperator ff = tensor(flip, flip);
    ComplexMatrix ent(4);
    std::vector<std::pair<ComplexMatrix, ComplexMatrix>> pieces;
    for (int k = 0; k < 3; ++k) {
      pieces.emplace_back(random_hermitian(2, rng), random_hermitian(2, rng));
      ent = ent + kron(pieces.back().first, pieces.back().second);
    }
    ComplexMatrix want(4);
    for (const auto& pc : pieces)
      want = want + kron(flip.apply(pc.first), flip.apply(pc.second));
    CHECK(max_abs_diff(ff.apply(ent), want) < 1e-12);
  }

  SUBCASE("spin flip reverses the Bloch vector") {
    const Direction n = random_direction(rng);
    CHECK(max_abs_diff(spin_flip_map().apply(rho_n(n).matrix()), rho_n(-n).matrix()) < 1e-13);
  }
}

TEST_CASE("positivity report") {
  SUBCASE("transpose is positive but not CP") {
    const PositivityReport rep = positivity_report(transpose_map(2), 500, 11);
    CHECK(!rep.is_cp);
    CHECK(rep.choi_min_eig == doctest::Approx(-1.0).epsilon(1e-12));
    const Spectrum s = eig_hermitian(transpose_map(2).choi());
    CHECK(s.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(s.eigenvalues[2] == doctest::Approx(1.0));
    CHECK(rep.min_output_eig > -1e-12);
  }

  SUBCASE("identity is CP") {
    const PositivityReport rep = positivity_report(identity_map(4), 200, 12);
    CHECK(rep.is_cp);
    CHECK(rep.choi_min_eig >= -1e-12);
  }

  SUBCASE("composed morphism is positive on samples but not CP") {
    const PositivityReport rep = positivity_report(lambda_delta(0.03), 2000, 13);
    CHECK(!rep.is_cp);
    CHECK(rep.choi_min_eig < -1e-6);
    CHECK(rep.min_output_eig > -1e-10);
  }

  SUBCASE("doubled morphism maps an entangled effect piece outside PSD") {
    for (double d : {0.0, 0.03, 0.0575}) {
      const Superoperator lam2 = tensor(lambda_delta(d), lambda_delta(d));
      const ComplexMatrix witness = tetra_effect_piece(0, 0, 1);
      CHECK(min_eigenvalue(witness) > -1e-12);  // the input is PSD
      const double eig = min_eigenvalue(lam2.apply(witness).hermitized(1e-9));
      CHECK(eig < -1e-6);
    }
    // the full outcome-0 effect is also a witness at delta = 0
    const Superoperator lam2 = tensor(lambda_delta(0.0), lambda_delta(0.0));
    const auto strat = tetra_two_copy_tau_povm();
    const ComplexMatrix e0 = std::get<FiniteStrategy>(strat).povm.effects[0];
    CHECK(min_eigenvalue(lam2.apply(e0).hermitized(1e-9)) < -1e-6);
  }
}

TEST_CASE("classical ensemble maps") {
  SUBCASE("identical carriers give the identity") {
    const ConditionalTable r = {{0.2, 0.7, 0.1}, {0.5, 0.2, 0.3}, {0.3, 0.1, 0.6}};
    const ClassicalSimulation sim = classical_ensemble_map(r, r);
    REQUIRE(sim.feasible);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(std::abs(sim.post_processing[i][j] - (i == j ? 1.0 : 0.0)) < 1e-9);
    CHECK(classical_quantitativity_check(sim, r, r));
  }

  SUBCASE("perfect carrier reads the table off directly") {
    const ConditionalTable r = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const ConditionalTable t = {{0.9, 0.3, 0.5}, {0.1, 0.7, 0.5}};
    const ClassicalSimulation sim = classical_ensemble_map(t, r);
    REQUIRE(sim.feasible);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(std::abs(sim.post_processing[i][j] - t[i][j]) < 1e-9);
    CHECK(classical_quantitativity_check(sim, t, r));
  }

  SUBCASE("garbled channel recovered") {
    const ConditionalTable r = {{0.6, 0.2, 0.3, 0.15}, {0.4, 0.8, 0.7, 0.85}};
    const ConditionalTable chan = {{0.9, 0.25}, {0.1, 0.75}};
    ConditionalTable t(2, std::vector<double>(4, 0.0));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t j = 0; j < 2; ++j) t[i][x] += chan[i][j] * r[j][x];
    const ClassicalSimulation sim = classical_ensemble_map(t, r);
    REQUIRE(sim.feasible);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        CHECK(std::abs(sim.post_processing[i][j] - chan[i][j]) < 1e-9);
    CHECK(classical_quantitativity_check(sim, t, r));
  }

  SUBCASE("infeasible pair is certified") {
    const ConditionalTable t = {{1.0, 0.0}, {0.0, 1.0}};
    const ConditionalTable r = {{0.5, 0.5}, {0.5, 0.5}};
    const ClassicalSimulation sim = classical_ensemble_map(t, r);
    CHECK(!sim.feasible);
    CHECK(sim.residual > 1e-3);
  }

  SUBCASE("rank-deficient carrier still admits a deterministic solution") {
    // two identical carrier letters leave the map underdetermined
    const ConditionalTable r = {{0.3, 0.25, 0.1, 0.4},
                                {0.4, 0.5, 0.8, 0.2},
                                {0.3, 0.25, 0.1, 0.4}};
    const ConditionalTable chan = {{0.7, 0.2, 0.1}, {0.3, 0.8, 0.9}};
    ConditionalTable t(2, std::vector<double>(4, 0.0));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t j = 0; j < 3; ++j) t[i][x] += chan[i][j] * r[j][x];
    const ClassicalSimulation sim = classical_ensemble_map(t, r);
    REQUIRE(sim.feasible);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t x = 0; x < 4; ++x) {
        double got = 0;
        for (std::size_t j = 0; j < 3; ++j) got += sim.post_processing[i][j] * r[j][x];
        CHECK(std::abs(got - t[i][x]) < 1e-10);
      }
    CHECK(classical_quantitativity_check(sim, t, r));
    const ClassicalSimulation again = classical_ensemble_map(t, r);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(sim.post_processing[i][j] == again.post_processing[i][j]);
  }

  SUBCASE("degenerate tables raise") {
    CHECK_THROWS_AS(classical_ensemble_map({}, {{1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(classical_ensemble_map({{0.5, 0.6}, {0.5, 0.5}}, {{1, 1}}),
                    std::invalid_argument);
  }
}
