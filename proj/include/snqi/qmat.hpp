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

#ifndef SNQI_QMAT_HPP
#define SNQI_QMAT_HPP

#include <complex>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace snqi {

using cplx = std::complex<double>;

/// Raised when a numeric precondition fails (non-PSD input, tolerance blown, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Dense square complex matrix, row-major. Dimensions stay small (<= 16)
// so everything is plain O(n^3) with no blocking.
class ComplexMatrix {
 public:
  ComplexMatrix() : dim_(0) {}
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, cplx(0)) {}
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
  const std::vector<cplx>& entries() const { return a_; }

  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix operator*(cplx s) const;
  friend ComplexMatrix operator*(cplx s, const ComplexMatrix& m) { return m * s; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  cplx trace() const;

  double max_abs() const;
  /// max |M - M^dagger| over entries.
  double hermiticity_defect() const;
  bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }
  /// (M + M^dagger)/2; throws if the defect exceeds pre_check_tol.
  ComplexMatrix hermitized(double pre_check_tol = 1e-10) const;

 private:
  std::size_t dim_;
  std::vector<cplx> a_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Pauli matrices and friends.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix ket0_proj();  // |0><0|
ComplexMatrix ket1_proj();  // |1><1|

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out every subsystem except `keep`. dims lists the tensor factors
/// in row-major (leftmost-major) order; their product must equal m.dim().
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t keep,
                            const std::vector<std::size_t>& dims);

/// Permutation unitary P reordering tensor factors: target slot t holds
/// source slot perm[t], so X_target = P X_source P^dagger.
ComplexMatrix subsystem_permutation(const std::vector<std::size_t>& perm,
                                    const std::vector<std::size_t>& dims);

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // columns, same order
};

/// Hermitian eigendecomposition. Throws if the input is not Hermitian
/// within 1e-10.
Spectrum eig_hermitian(const ComplexMatrix& m);

double min_eigenvalue(const ComplexMatrix& m);

// A trace-one positive semidefinite Hermitian matrix. Construction
// symmetrizes and checks the trace; the eigenvalue check is a separate
// call so quadrature loops stay cheap.
class DensityOperator {
 public:
  explicit DensityOperator(const ComplexMatrix& m);
  const ComplexMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }
  /// Checks min eigenvalue >= -1e-12; throws NumericalError otherwise.
  void validate() const;

 private:
  ComplexMatrix m_;
};

/// -sum lambda_i log2 lambda_i with 0 log 0 = 0. Logs are base 2 throughout.
double vn_entropy(const DensityOperator& rho);

/// Principal square root of a PSD Hermitian matrix. Eigenvalues below
/// -1e-10 raise; small negatives are clamped to zero.
ComplexMatrix matrix_sqrt(const ComplexMatrix& m);

/// tr (a^{1/2} b a^{1/2})^{1/2} for PSD a, b.
double pairwise_fidelity(const ComplexMatrix& a, const ComplexMatrix& b);

// Kets as plain coefficient vectors.
using Ket = std::vector<cplx>;

Ket ket_kron(const Ket& a, const Ket& b);
cplx inner(const Ket& a, const Ket& b);
ComplexMatrix outer(const Ket& v);                                  // |v><v|
cplx sandwich(const Ket& v, const ComplexMatrix& m, const Ket& w);  // <v|M|w>

// Seeded random fixtures for sampling suites and property tests.
ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng);
ComplexMatrix random_psd(std::size_t dim, std::mt19937_64& rng);    // trace 1
ComplexMatrix random_pure_projector(std::size_t dim, std::mt19937_64& rng);
ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng);

}  // namespace snqi

#endif  // SNQI_QMAT_HPP
