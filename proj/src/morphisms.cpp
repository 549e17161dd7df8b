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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "snqi/ensembles.hpp"
#include "snqi/sphere.hpp"

namespace snqi {

namespace {

// Rectangular complex matrix used only for transfer-matrix algebra.
struct RectMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<cplx> a;

  RectMatrix() = default;
  RectMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, cplx(0)) {}
  cplx& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

RectMatrix matmul(const RectMatrix& x, const RectMatrix& y) {
  RectMatrix r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const cplx v = x(i, k);
      if (v == cplx(0)) continue;
      for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
    }
  return r;
}

// Transfer matrix T with vec_row(out) = T vec_row(in):
// T_{(a,b),(i,j)} = C_{(i,a),(j,b)}.
RectMatrix transfer_of(const Superoperator& s) {
  const std::size_t din = s.in_dim(), dout = s.out_dim();
  RectMatrix t(dout * dout, din * din);
  for (std::size_t i = 0; i < din; ++i)
    for (std::size_t j = 0; j < din; ++j)
      for (std::size_t a = 0; a < dout; ++a)
        for (std::size_t b = 0; b < dout; ++b)
          t(a * dout + b, i * din + j) = s.choi()(i * dout + a, j * dout + b);
  return t;
}

Superoperator from_transfer(std::size_t din, std::size_t dout, const RectMatrix& t,
                            std::string label) {
  ComplexMatrix choi(din * dout);
  for (std::size_t i = 0; i < din; ++i)
    for (std::size_t j = 0; j < din; ++j)
      for (std::size_t a = 0; a < dout; ++a)
        for (std::size_t b = 0; b < dout; ++b)
          choi(i * dout + a, j * dout + b) = t(a * dout + b, i * din + j);
  return Superoperator(din, dout, choi, std::move(label));
}

// Interleaving permutation on vec indices: (a, a', b, b') -> (a, b, a', b')
// with slot dims (d1, d1, d2, d2).
RectMatrix vec_interleave(std::size_t d1, std::size_t d2) {
  const std::size_t n = d1 * d1 * d2 * d2;
  RectMatrix p(n, n);
  for (std::size_t a = 0; a < d1; ++a)
    for (std::size_t ap = 0; ap < d1; ++ap)
      for (std::size_t b = 0; b < d2; ++b)
        for (std::size_t bp = 0; bp < d2; ++bp) {
          const std::size_t src = ((a * d1 + ap) * d2 + b) * d2 + bp;
          const std::size_t dst = ((a * d2 + b) * d1 + ap) * d2 + bp;
          p(dst, src) = 1.0;
        }
  return p;
}

RectMatrix rect_kron(const RectMatrix& x, const RectMatrix& y) {
  RectMatrix r(x.rows * y.rows, x.cols * y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) {
      const cplx v = x(i, j);
      if (v == cplx(0)) continue;
      for (std::size_t k = 0; k < y.rows; ++k)
        for (std::size_t l = 0; l < y.cols; ++l)
          r(i * y.rows + k, j * y.cols + l) = v * y(k, l);
    }
  return r;
}

RectMatrix rect_transpose(const RectMatrix& x) {
  RectMatrix r(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
  return r;
}

}  // namespace

Superoperator::Superoperator(std::size_t in_dim, std::size_t out_dim, ComplexMatrix choi,
                             std::string label)
    : in_(in_dim), out_(out_dim), choi_(std::move(choi)), label_(std::move(label)) {
  if (choi_.dim() != in_ * out_)
    throw std::invalid_argument("Superoperator: Choi dimension must be in_dim * out_dim");
}

Superoperator Superoperator::from_action(
    std::size_t in_dim, std::size_t out_dim,
    const std::function<ComplexMatrix(const ComplexMatrix&)>& fn, std::string label) {
  ComplexMatrix choi(in_dim * out_dim);
  for (std::size_t i = 0; i < in_dim; ++i)
    for (std::size_t j = 0; j < in_dim; ++j) {
      ComplexMatrix unit(in_dim);
      unit(i, j) = 1.0;
      const ComplexMatrix img = fn(unit);
      if (img.dim() != out_dim)
        throw std::invalid_argument("from_action: image dimension mismatch");
      for (std::size_t a = 0; a < out_dim; ++a)
        for (std::size_t b = 0; b < out_dim; ++b)
          choi(i * out_dim + a, j * out_dim + b) = img(a, b);
    }
  return Superoperator(in_dim, out_dim, choi, std::move(label));
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& x) const {
  if (x.dim() != in_) throw std::invalid_argument("Superoperator::apply: dimension mismatch");
  ComplexMatrix out(out_);
  for (std::size_t i = 0; i < in_; ++i)
    for (std::size_t j = 0; j < in_; ++j) {
      const cplx xij = x(i, j);
      if (xij == cplx(0)) continue;
      for (std::size_t a = 0; a < out_; ++a)
        for (std::size_t b = 0; b < out_; ++b)
          out(a, b) += choi_(i * out_ + a, j * out_ + b) * xij;
    }
  return out;
}

bool Superoperator::is_unital(double tol) const {
  return max_abs_diff(apply(ComplexMatrix::identity(in_)), ComplexMatrix::identity(out_)) <= tol;
}

Superoperator compose(const Superoperator& f, const Superoperator& g) {
  if (g.out_dim() != f.in_dim()) throw std::invalid_argument("compose: dimension mismatch");
  const RectMatrix t = matmul(transfer_of(f), transfer_of(g));
  return from_transfer(g.in_dim(), f.out_dim(), t, f.label() + " . " + g.label());
}

Superoperator tensor(const Superoperator& a, const Superoperator& b) {
  const RectMatrix ta = transfer_of(a), tb = transfer_of(b);
  const RectMatrix pin = vec_interleave(a.in_dim(), b.in_dim());
  const RectMatrix pout = vec_interleave(a.out_dim(), b.out_dim());
  // vec indices of the joint input arrive interleaved as (i, k, j, l);
  // kron(ta, tb) expects (i, j, k, l).
  const RectMatrix t = matmul(pout, matmul(rect_kron(ta, tb), rect_transpose(pin)));
  return from_transfer(a.in_dim() * b.in_dim(), a.out_dim() * b.out_dim(), t,
                       a.label() + " (x) " + b.label());
}

Superoperator identity_map(std::size_t dim) {
  return Superoperator::from_action(dim, dim, [](const ComplexMatrix& x) { return x; }, "id");
}

Superoperator transpose_map(std::size_t dim) {
  return Superoperator::from_action(
      dim, dim, [](const ComplexMatrix& x) { return x.transpose(); }, "transpose");
}

Superoperator spin_flip_map() {
  return Superoperator::from_action(
      2, 2, [](const ComplexMatrix& x) { return pauli_y() * x.transpose() * pauli_y(); },
      "spin_flip");
}

Superoperator lambda0() {
  return Superoperator::from_action(
      4, 2,
      [](const ComplexMatrix& e) {
        ComplexMatrix t0(2), t1(2);
        for (std::size_t h = 0; h < 2; ++h)
          for (std::size_t g = 0; g < 2; ++g) {
            t0(h, g) = e(2 * h + 0, 2 * g + 0);
            t1(h, g) = e(2 * h + 1, 2 * g + 1);
          }
        return t0 * cplx(0.5, 0) + pauli_y() * t1.transpose() * pauli_y() * cplx(0.5, 0);
      },
      "Lambda_0");
}

Superoperator conj_depolarizer(double delta) {
  if (delta < 0.0 || delta > 1.0) throw std::invalid_argument("conj_depolarizer: delta in [0,1]");
  return Superoperator::from_action(
      2, 2,
      [delta](const ComplexMatrix& e) {
        return e * cplx(1.0 - delta, 0) +
               ComplexMatrix::identity(2) * (cplx(delta / 2.0, 0) * e.trace());
      },
      "D_" + std::to_string(delta));
}

Superoperator lambda_delta(double delta) {
  Superoperator s = compose(conj_depolarizer(delta), lambda0());
  return Superoperator(s.in_dim(), s.out_dim(), s.choi(), "Lambda_" + std::to_string(delta));
}

Superoperator j_morphism() {
  return Superoperator::from_action(
      2, 4,
      [](const ComplexMatrix& e) {
        return kron(e, ket0_proj()) + kron(pauli_y() * e.transpose() * pauli_y(), ket1_proj());
      },
      "J");
}

PositivityReport positivity_report(const Superoperator& s, std::size_t samples,
                                   std::uint64_t seed) {
  PositivityReport rep;
  rep.choi_min_eig = min_eigenvalue(s.choi());
  rep.is_cp = rep.choi_min_eig >= -1e-10;
  rep.positivity_samples = samples;
  rep.min_output_eig = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const ComplexMatrix in = (k % 2 == 0) ? random_pure_projector(s.in_dim(), rng)
                                          : random_psd(s.in_dim(), rng);
    const ComplexMatrix out = s.apply(in).hermitized(1e-10);
    rep.min_output_eig = std::min(rep.min_output_eig, min_eigenvalue(out));
  }
  if (samples == 0) rep.min_output_eig = 0.0;
  return rep;
}

double morphism_identity_residual(double delta, std::size_t n_effects, std::size_t n_nodes,
                                  std::uint64_t seed) {
  const Superoperator lam = lambda_delta(delta);
  std::mt19937_64 rng(seed);
  std::vector<ComplexMatrix> effects;
  for (std::size_t k = 0; k < n_effects; ++k) effects.push_back(random_hermitian(4, rng));
  double worst = 0;
  for (std::size_t k = 0; k < n_nodes; ++k) {
    const Direction n = random_direction(rng);
    const ComplexMatrix tau = tau_n_delta(n, delta).matrix();
    const ComplexMatrix rho = rho_n(n).matrix();
    for (const auto& e : effects) {
      const cplx lhs = (e * tau).trace();
      const cplx rhs = (lam.apply(e) * rho).trace();
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

double j_identity_residual(double delta, std::size_t n_effects, std::size_t n_nodes,
                           std::uint64_t seed) {
  const Superoperator j = j_morphism();
  std::mt19937_64 rng(seed);
  std::vector<ComplexMatrix> effects;
  for (std::size_t k = 0; k < n_effects; ++k) effects.push_back(random_hermitian(2, rng));
  double worst = 0;
  for (std::size_t k = 0; k < n_nodes; ++k) {
    const Direction n = random_direction(rng);
    const ComplexMatrix tau = tau_n_delta(n, delta).matrix();
    const ComplexMatrix rho = rho_n_delta(n, delta).matrix();
    for (const auto& e : effects) {
      const cplx lhs = (j.apply(e) * tau).trace();
      const cplx rhs = (e * rho).trace();
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Classical carriers.

namespace {

// Lawson-Hanson nonnegative least squares: min ||A x - b||, x >= 0.
// Deterministic pivoting; sizes here are tiny. Returns the residual norm.
double nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, Eigen::VectorXd& x) {
  const Eigen::Index n = A.cols();
  x = Eigen::VectorXd::Zero(n);
  std::vector<bool> passive(static_cast<std::size_t>(n), false);
  Eigen::VectorXd w = A.transpose() * (b - A * x);
  const int max_iter = 3 * static_cast<int>(n) + 30;
  for (int outer = 0; outer < max_iter; ++outer) {
    // most-violating free variable
    Eigen::Index t = -1;
    double best = 1e-11;
    for (Eigen::Index i = 0; i < n; ++i)
      if (!passive[static_cast<std::size_t>(i)] && w(i) > best) {
        best = w(i);
        t = i;
      }
    if (t < 0) break;
    passive[static_cast<std::size_t>(t)] = true;
    for (int inner = 0; inner < max_iter; ++inner) {
      std::vector<Eigen::Index> idx;
      for (Eigen::Index i = 0; i < n; ++i)
        if (passive[static_cast<std::size_t>(i)]) idx.push_back(i);
      Eigen::MatrixXd Ap(A.rows(), static_cast<Eigen::Index>(idx.size()));
      for (std::size_t k = 0; k < idx.size(); ++k) Ap.col(static_cast<Eigen::Index>(k)) = A.col(idx[k]);
      Eigen::VectorXd zp = Ap.colPivHouseholderQr().solve(b);
      bool all_pos = true;
      for (Eigen::Index k = 0; k < zp.size(); ++k)
        if (zp(k) <= 1e-12) all_pos = false;
      if (all_pos) {
        x.setZero();
        for (std::size_t k = 0; k < idx.size(); ++k) x(idx[k]) = zp(static_cast<Eigen::Index>(k));
        break;
      }
      // step toward zp until the first passive variable hits zero
      double alpha = 1.0;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        const double zk = zp(static_cast<Eigen::Index>(k));
        if (zk <= 1e-12) {
          const double xk = x(idx[k]);
          const double a = xk / (xk - zk);
          alpha = std::min(alpha, a);
        }
      }
      for (std::size_t k = 0; k < idx.size(); ++k) {
        const Eigen::Index i = idx[k];
        x(i) += alpha * (zp(static_cast<Eigen::Index>(k)) - x(i));
        if (x(i) <= 1e-12) {
          x(i) = 0.0;
          passive[static_cast<std::size_t>(i)] = false;
        }
      }
    }
    w = A.transpose() * (b - A * x);
  }
  return (A * x - b).norm();
}

void check_table(const ConditionalTable& t, const char* name) {
  if (t.empty() || t[0].empty())
    throw std::invalid_argument(std::string(name) + ": empty alphabet");
  const std::size_t nx = t[0].size();
  for (const auto& row : t)
    if (row.size() != nx) throw std::invalid_argument(std::string(name) + ": ragged table");
  for (std::size_t x = 0; x < nx; ++x) {
    double s = 0;
    for (const auto& row : t) {
      if (row[x] < -1e-12) throw std::invalid_argument(std::string(name) + ": negative entry");
      s += row[x];
    }
    if (std::abs(s - 1.0) > 1e-9)
      throw std::invalid_argument(std::string(name) + ": columns must sum to 1");
  }
}

}  // namespace

ClassicalSimulation classical_ensemble_map(const ConditionalTable& tau_probs,
                                           const ConditionalTable& rho_probs) {
  check_table(tau_probs, "tau_probs");
  check_table(rho_probs, "rho_probs");
  if (tau_probs[0].size() != rho_probs[0].size())
    throw std::invalid_argument("classical_ensemble_map: mismatched random-variable alphabets");
  const std::size_t ni = tau_probs.size(), nj = rho_probs.size(), nx = tau_probs[0].size();
  // variables x_{(i,j)} = M(i|j); constraints: simulation (ni*nx) + completeness (nj)
  const std::size_t nvar = ni * nj, ncon = ni * nx + nj;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(ncon),
                                            static_cast<Eigen::Index>(nvar));
  Eigen::VectorXd b = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(ncon));
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t x = 0; x < nx; ++x) {
      const std::size_t row = i * nx + x;
      for (std::size_t j = 0; j < nj; ++j)
        A(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(i * nj + j)) =
            rho_probs[j][x];
      b(static_cast<Eigen::Index>(row)) = tau_probs[i][x];
    }
  for (std::size_t j = 0; j < nj; ++j) {
    const std::size_t row = ni * nx + j;
    for (std::size_t i = 0; i < ni; ++i)
      A(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(i * nj + j)) = 1.0;
    b(static_cast<Eigen::Index>(row)) = 1.0;
  }
  Eigen::VectorXd x;
  const double res = nnls(A, b, x);
  ClassicalSimulation sim;
  sim.residual = res;
  sim.feasible = res <= 1e-9;
  sim.post_processing.assign(ni, std::vector<double>(nj, 0.0));
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = 0; j < nj; ++j)
      sim.post_processing[i][j] = x(static_cast<Eigen::Index>(i * nj + j));
  return sim;
}

bool classical_quantitativity_check(const ClassicalSimulation& sim,
                                    const ConditionalTable& tau_probs,
                                    const ConditionalTable& rho_probs, double tol) {
  if (!sim.feasible) return false;
  const auto& M = sim.post_processing;
  const std::size_t ni = tau_probs.size(), nj = rho_probs.size(), nx = tau_probs[0].size();
  // effect-map validity of M (x) M
  for (std::size_t j1 = 0; j1 < nj; ++j1)
    for (std::size_t j2 = 0; j2 < nj; ++j2) {
      double s = 0;
      for (std::size_t i1 = 0; i1 < ni; ++i1)
        for (std::size_t i2 = 0; i2 < ni; ++i2) {
          const double m = M[i1][j1] * M[i2][j2];
          if (m < -tol) return false;
          s += m;
        }
      if (std::abs(s - 1.0) > 1e-8) return false;
    }
  // doubled statistics, exhaustively over product effects
  for (std::size_t i1 = 0; i1 < ni; ++i1)
    for (std::size_t i2 = 0; i2 < ni; ++i2)
      for (std::size_t x = 0; x < nx; ++x) {
        const double lhs = tau_probs[i1][x] * tau_probs[i2][x];
        double rhs = 0;
        for (std::size_t j1 = 0; j1 < nj; ++j1)
          for (std::size_t j2 = 0; j2 < nj; ++j2)
            rhs += M[i1][j1] * M[i2][j2] * rho_probs[j1][x] * rho_probs[j2][x];
        if (std::abs(lhs - rhs) > tol) return false;
      }
  return true;
}

}  // namespace snqi
