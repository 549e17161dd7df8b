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

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

namespace snqi {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), a_(std::move(entries)) {
  if (a_.size() != dim_ * dim_)
    throw std::invalid_argument("ComplexMatrix: entry count must be dim^2");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix add: dimension mismatch");
  ComplexMatrix r(dim_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix sub: dimension mismatch");
  ComplexMatrix r(dim_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix mul: dimension mismatch");
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      const cplx aik = a_[i * dim_ + k];
      if (aik == cplx(0)) continue;
      for (std::size_t j = 0; j < dim_; ++j) r.a_[i * dim_ + j] += aik * o.a_[k * dim_ + j];
    }
  return r;
}

ComplexMatrix ComplexMatrix::operator*(cplx s) const {
  ComplexMatrix r(dim_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
  return r;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r(i, j) = (*this)(j, i);
  return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix r(dim_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = std::conj(a_[k]);
  return r;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0;
  for (const cplx& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  double m = 0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

ComplexMatrix ComplexMatrix::hermitized(double pre_check_tol) const {
  const double defect = hermiticity_defect();
  if (defect > pre_check_tol)
    throw NumericalError("hermitized: defect " + std::to_string(defect) + " exceeds tolerance");
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      r(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).max_abs(); }

ComplexMatrix pauli_x() { return ComplexMatrix(2, {0, 1, 1, 0}); }
ComplexMatrix pauli_y() { return ComplexMatrix(2, {0, cplx(0, -1), cplx(0, 1), 0}); }
ComplexMatrix pauli_z() { return ComplexMatrix(2, {1, 0, 0, -1}); }
ComplexMatrix ket0_proj() { return ComplexMatrix(2, {1, 0, 0, 0}); }
ComplexMatrix ket1_proj() { return ComplexMatrix(2, {0, 0, 0, 1}); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix r(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0)) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) r(i * db + k, j * db + l) = aij * b(k, l);
    }
  return r;
}

namespace {

std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) s[i - 1] = s[i] * dims[i];
  return s;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t keep,
                            const std::vector<std::size_t>& dims) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  if (total != m.dim() || keep >= dims.size())
    throw std::invalid_argument("partial_trace: dimension list does not match matrix");
  const std::vector<std::size_t> stride = strides_of(dims);
  const std::size_t dk = dims[keep];
  const std::size_t denv = m.dim() / dk;
  ComplexMatrix r(dk);
  // enumerate environment multi-indices as a flat counter
  std::vector<std::size_t> env_slots;
  for (std::size_t s = 0; s < dims.size(); ++s)
    if (s != keep) env_slots.push_back(s);
  for (std::size_t e = 0; e < denv; ++e) {
    std::size_t base = 0, rest = e;
    for (std::size_t t = env_slots.size(); t-- > 0;) {
      const std::size_t s = env_slots[t];
      base += (rest % dims[s]) * stride[s];
      rest /= dims[s];
    }
    for (std::size_t i = 0; i < dk; ++i)
      for (std::size_t j = 0; j < dk; ++j)
        r(i, j) += m(base + i * stride[keep], base + j * stride[keep]);
  }
  return r;
}

ComplexMatrix subsystem_permutation(const std::vector<std::size_t>& perm,
                                    const std::vector<std::size_t>& dims) {
  if (perm.size() != dims.size())
    throw std::invalid_argument("subsystem_permutation: perm/dims size mismatch");
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  const std::vector<std::size_t> stride = strides_of(dims);
  std::vector<std::size_t> tdims(perm.size());
  for (std::size_t t = 0; t < perm.size(); ++t) tdims[t] = dims[perm[t]];
  ComplexMatrix p(total);
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t src = 0; src < total; ++src) {
    std::size_t rest = src;
    for (std::size_t s = 0; s < dims.size(); ++s) {
      idx[s] = rest / stride[s];
      rest %= stride[s];
    }
    std::size_t tgt = 0;
    for (std::size_t t = 0; t < perm.size(); ++t) tgt = tgt * tdims[t] + idx[perm[t]];
    p(tgt, src) = 1.0;
  }
  return p;
}

Spectrum eig_hermitian(const ComplexMatrix& m) {
  const ComplexMatrix h = m.hermitized(1e-10);
  const std::size_t n = h.dim();
  Eigen::MatrixXcd em(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) em(i, j) = h(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em);
  if (solver.info() != Eigen::Success) throw NumericalError("eig_hermitian: solver failed");
  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors = ComplexMatrix(n);
  // Eigen returns ascending order; flip to descending.
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = n - 1 - k;
    s.eigenvalues[k] = solver.eigenvalues()(static_cast<Eigen::Index>(src));
    for (std::size_t i = 0; i < n; ++i)
      s.eigenvectors(i, k) = solver.eigenvectors()(static_cast<Eigen::Index>(i),
                                                   static_cast<Eigen::Index>(src));
  }
  return s;
}

double min_eigenvalue(const ComplexMatrix& m) {
  const Spectrum s = eig_hermitian(m);
  return s.eigenvalues.back();
}

DensityOperator::DensityOperator(const ComplexMatrix& m) : m_(m.hermitized(1e-10)) {
  const double tr = std::abs(m_.trace() - cplx(1.0));
  if (tr > 1e-12)
    throw NumericalError("DensityOperator: trace deviates from 1 by " + std::to_string(tr));
}

void DensityOperator::validate() const {
  if (min_eigenvalue(m_) < -1e-12)
    throw NumericalError("DensityOperator: negative eigenvalue beyond tolerance");
}

double vn_entropy(const DensityOperator& rho) {
  const Spectrum s = eig_hermitian(rho.matrix());
  double h = 0;
  for (double lam : s.eigenvalues) {
    if (lam < -1e-9) throw NumericalError("vn_entropy: negative eigenvalue beyond tolerance");
    if (lam <= 1e-12) continue;  // 0 log 0 = 0
    h -= lam * std::log2(lam);
  }
  return h;
}

ComplexMatrix matrix_sqrt(const ComplexMatrix& m) {
  const Spectrum s = eig_hermitian(m);
  const std::size_t n = m.dim();
  ComplexMatrix r(n);
  for (std::size_t k = 0; k < n; ++k) {
    double lam = s.eigenvalues[k];
    if (lam < -1e-10) throw NumericalError("matrix_sqrt: input not PSD");
    if (lam < 1e-12) lam = 0;  // clamp eigensolver noise around zero
    const double sq = std::sqrt(lam);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        r(i, j) += sq * s.eigenvectors(i, k) * std::conj(s.eigenvectors(j, k));
  }
  return r;
}

double pairwise_fidelity(const ComplexMatrix& a, const ComplexMatrix& b) {
  const ComplexMatrix sa = matrix_sqrt(a);
  const ComplexMatrix inner_m = sa * b * sa;
  return matrix_sqrt(inner_m).trace().real();
}

Ket ket_kron(const Ket& a, const Ket& b) {
  Ket r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
  return r;
}

cplx inner(const Ket& a, const Ket& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: size mismatch");
  cplx s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

ComplexMatrix outer(const Ket& v) {
  ComplexMatrix r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r(i, j) = v[i] * std::conj(v[j]);
  return r;
}

cplx sandwich(const Ket& v, const ComplexMatrix& m, const Ket& w) {
  if (v.size() != m.dim() || w.size() != m.dim())
    throw std::invalid_argument("sandwich: size mismatch");
  cplx s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    cplx row = 0;
    for (std::size_t j = 0; j < w.size(); ++j) row += m(i, j) * w[j];
    s += std::conj(v[i]) * row;
  }
  return s;
}

ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = cplx(g(rng), g(rng));
  return (m + m.adjoint()) * cplx(0.5, 0);
}

ComplexMatrix random_psd(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = cplx(g(rng), g(rng));
  ComplexMatrix p = m * m.adjoint();
  return p * (cplx(1.0, 0) / p.trace());
}

ComplexMatrix random_pure_projector(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Ket v(dim);
  double norm2 = 0;
  for (auto& c : v) {
    c = cplx(g(rng), g(rng));
    norm2 += std::norm(c);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& c : v) c *= inv;
  return outer(v);
}

ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  // Gram-Schmidt on a random complex matrix.
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Ket> cols(dim, Ket(dim));
  for (auto& col : cols)
    for (auto& c : col) c = cplx(g(rng), g(rng));
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t p = 0; p < k; ++p) {
      const cplx ov = inner(cols[p], cols[k]);
      for (std::size_t i = 0; i < dim; ++i) cols[k][i] -= ov * cols[p][i];
    }
    double norm2 = 0;
    for (const auto& c : cols[k]) norm2 += std::norm(c);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : cols[k]) c *= inv;
  }
  ComplexMatrix u(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) u(i, k) = cols[k][i];
  return u;
}

}  // namespace snqi
