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

#include "snqi/qmat.hpp"

#include <cmath>

#include "doctest.h"

#include "snqi/ensembles.hpp"
#include "snqi/sphere.hpp"

using namespace snqi;

namespace {

ComplexMatrix diag2(double a, double b) { return ComplexMatrix(2, {a, 0, 0, b}); }

}  // namespace

TEST_CASE("kron basics") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);

  const ComplexMatrix k = kron(pauli_z(), ket0_proj());
  ComplexMatrix want(4);
  want(0, 0) = 1.0;
  want(2, 2) = -1.0;
  CHECK(max_abs_diff(k, want) == 0.0);

  const ComplexMatrix rz = diag2(1, 0);
  ComplexMatrix want2(4);
  want2(0, 0) = 1.0;
  CHECK(max_abs_diff(kron(rz, rz), want2) == 0.0);
}

TEST_CASE("partial trace") {
  std::mt19937_64 rng(7);
  const ComplexMatrix a = random_hermitian(2, rng), b = random_hermitian(2, rng);
  const ComplexMatrix ab = kron(a, b);

  SUBCASE("product factorization") {
    const ComplexMatrix keep_a = partial_trace(ab, 0, {2, 2});
    CHECK(max_abs_diff(keep_a, a * b.trace()) < 1e-12);
    const ComplexMatrix keep_b = partial_trace(ab, 1, {2, 2});
    CHECK(max_abs_diff(keep_b, b * a.trace()) < 1e-12);
  }

  SUBCASE("maximally entangled marginal") {
    const double inv = 1.0 / std::sqrt(2.0);
    const Ket psi = {0, inv, -inv, 0};
    const ComplexMatrix marg = partial_trace(outer(psi), 0, {2, 2});
    CHECK(max_abs_diff(marg, ComplexMatrix::identity(2) * cplx(0.5, 0)) < 1e-12);
  }

  SUBCASE("flag marginal of the flagged state is maximally mixed") {
    std::mt19937_64 rng2(11);
    for (double delta : {0.0, 0.3, 1.0}) {
      const Direction n = random_direction(rng2);
      const ComplexMatrix marg = partial_trace(tau_n_delta(n, delta).matrix(), 1, {2, 2});
      CHECK(max_abs_diff(marg, ComplexMatrix::identity(2) * cplx(0.5, 0)) < 1e-12);
    }
  }

  SUBCASE("trace preserved and dimension checked") {
    CHECK(std::abs(partial_trace(ab, 0, {2, 2}).trace() - ab.trace()) < 1e-12);
    CHECK_THROWS_AS(partial_trace(ab, 0, {2, 3}), std::invalid_argument);
  }
}

TEST_CASE("hermitian eigendecomposition reconstructs") {
  std::mt19937_64 rng(42);
  for (std::size_t dim : {2u, 4u, 8u, 16u}) {
    const ComplexMatrix m = random_hermitian(dim, rng);
    const Spectrum s = eig_hermitian(m);
    // descending order
    for (std::size_t k = 1; k < dim; ++k) CHECK(s.eigenvalues[k - 1] >= s.eigenvalues[k]);
    // reconstruction
    ComplexMatrix rec(dim);
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          rec(i, j) += s.eigenvalues[k] * s.eigenvectors(i, k) * std::conj(s.eigenvectors(j, k));
    CHECK(max_abs_diff(rec, m) < 1e-10);
    // orthonormal eigenvectors
    CHECK(max_abs_diff(s.eigenvectors.adjoint() * s.eigenvectors, ComplexMatrix::identity(dim)) <
          1e-10);
  }
}

TEST_CASE("vn_entropy") {
  CHECK(vn_entropy(DensityOperator(diag2(0.5, 0.5))) == doctest::Approx(1.0).epsilon(1e-12));
  std::mt19937_64 rng(3);
  const Direction n = random_direction(rng);
  CHECK(std::abs(vn_entropy(rho_n(n))) < 1e-12);

  // flagged-state entropy from its eigenvalues {(1-d/2)/2 twice, d/4 twice}
  for (double d : {0.1, 0.5, 0.9}) {
    const double want = 1.0 - (1.0 - d / 2) * std::log2(1.0 - d / 2) - (d / 2) * std::log2(d / 2);
    CHECK(vn_entropy(tau_n_delta(n, d)) == doctest::Approx(want).epsilon(1e-12));
  }

  SUBCASE("unitary invariance") {
    std::mt19937_64 rng2(5);
    for (int k = 0; k < 5; ++k) {
      const ComplexMatrix u = random_unitary(4, rng2);
      const ComplexMatrix rho = random_psd(4, rng2);
      const double h0 = vn_entropy(DensityOperator(rho));
      const double h1 = vn_entropy(DensityOperator(u * rho * u.adjoint()));
      CHECK(std::abs(h0 - h1) < 1e-10);
    }
  }
}

TEST_CASE("matrix_sqrt") {
  CHECK(max_abs_diff(matrix_sqrt(ComplexMatrix::identity(4)), ComplexMatrix::identity(4)) < 1e-12);
  CHECK(max_abs_diff(matrix_sqrt(diag2(4, 1)), diag2(2, 1)) < 1e-12);
  std::mt19937_64 rng(8);
  const ComplexMatrix proj = rho_n(random_direction(rng)).matrix();
  CHECK(max_abs_diff(matrix_sqrt(proj), proj) < 1e-10);

  const ComplexMatrix m = random_psd(4, rng);
  const ComplexMatrix r = matrix_sqrt(m);
  CHECK(max_abs_diff(r * r, m) < 1e-10);
  CHECK(r.hermiticity_defect() < 1e-12);

  CHECK_THROWS_AS(matrix_sqrt(pauli_z()), NumericalError);
}

TEST_CASE("pairwise fidelity of pure states is the overlap magnitude") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 10; ++k) {
    const Direction n = random_direction(rng), m = random_direction(rng);
    const double want = std::sqrt((1.0 + n.dot(m)) / 2.0);
    CHECK(pairwise_fidelity(rho_n(n).matrix(), rho_n(m).matrix()) ==
          doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("density operator validation") {
  CHECK_THROWS_AS(DensityOperator(diag2(0.9, 0.2)), NumericalError);   // trace != 1
  CHECK_THROWS_AS(ComplexMatrix(2, {0, 1, 0, 0}).hermitized(), NumericalError);
  const DensityOperator ok(diag2(0.7, 0.3));
  ok.validate();
  DensityOperator bad(diag2(1.5, -0.5));
  CHECK_THROWS_AS(bad.validate(), NumericalError);
  CHECK_THROWS_AS(vn_entropy(bad), NumericalError);
}

TEST_CASE("subsystem permutation") {
  std::mt19937_64 rng(23);
  const ComplexMatrix a = random_hermitian(2, rng), b = random_hermitian(2, rng);
  const ComplexMatrix p = subsystem_permutation({1, 0}, {2, 2});
  CHECK(max_abs_diff(p * kron(a, b) * p.adjoint(), kron(b, a)) < 1e-13);
  // swap of the middle qubits in a 4-qubit register
  const ComplexMatrix q = subsystem_permutation({0, 2, 1, 3}, {2, 2, 2, 2});
  const ComplexMatrix c = random_hermitian(2, rng), d = random_hermitian(2, rng);
  CHECK(max_abs_diff(q * kron(kron(a, b), kron(c, d)) * q.adjoint(),
                     kron(kron(a, c), kron(b, d))) < 1e-12);
  CHECK(max_abs_diff(q * q.adjoint(), ComplexMatrix::identity(16)) == 0.0);
}

TEST_CASE("entry count is checked") {
  CHECK_THROWS_AS(ComplexMatrix(2, {1, 2, 3}), std::invalid_argument);
}
