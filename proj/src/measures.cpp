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

#include "snqi/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "snqi/morphisms.hpp"

namespace snqi {

namespace {

const double kLn2 = std::log(2.0);
const double kSqrt3 = std::sqrt(3.0);

double log2_safe(double x) { return std::log(x) / kLn2; }

double plogp_over(double p, double den) {
  // p log2(p/den) with 0 log 0 = 0; tiny negative p from roundoff is clamped.
  if (p <= 0.0) {
    if (p < -1e-12) throw NumericalError("mutual information: negative probability");
    return 0.0;
  }
  return p * std::log(p / den) / kLn2;
}

}  // namespace

MeasureResult averaged_fidelity(const Ensemble& e, const MeasurementStrategy& s,
                                const SphereQuadrature& q) {
  MeasureResult r;
  r.method = Method::Quadrature;
  r.ensemble_label = e.label;
  r.strategy_label = strategy_label(s);
  if (const auto* cov = std::get_if<CovariantStrategy>(&s)) {
    if (cov->povm.seed_effect.dim() != e.dim)
      throw std::invalid_argument("averaged_fidelity: strategy/ensemble dimension mismatch");
    const ComplexMatrix& seed = cov->povm.seed_effect;
    r.value = integrate(q, [&](const Direction& n) {
      const double p = (e.state_fn(n).matrix() * seed).trace().real();
      return p * (1.0 + n.z) / 2.0;
    });
  } else {
    const auto& fin = std::get<FiniteStrategy>(s);
    if (fin.povm.effects.empty() || fin.povm.effects[0].dim() != e.dim)
      throw std::invalid_argument("averaged_fidelity: strategy/ensemble dimension mismatch");
    r.value = integrate(q, [&](const Direction& n) {
      const ComplexMatrix st = e.state_fn(n).matrix();
      double acc = 0;
      for (std::size_t i = 0; i < fin.povm.effects.size(); ++i) {
        const double p = (st * fin.povm.effects[i]).trace().real();
        acc += p * (1.0 + n.dot(fin.guesses[i])) / 2.0;
      }
      return acc;
    });
  }
  return r;
}

MeasureResult fidelity_single_rho_opt() {
  return {2.0 / 3.0, Method::Analytic, {{"r3", 1.0}}, "E_rho", "covariant(r3=1)"};
}

MeasureResult fidelity_single_tau_opt(double delta) {
  if (delta < 0.0 || delta > 1.0)
    throw std::invalid_argument("fidelity_single_tau_opt: delta in [0,1]");
  return {2.0 / 3.0 - delta / 6.0,
          Method::Analytic,
          {{"delta", delta}, {"r3", 1.0}},
          "E_tau",
          "tau_covariant(r3=1)"};
}

MeasureResult fidelity_double_rho(double alpha, double gamma) {
  if (gamma > 1.0 || std::abs(alpha) > gamma / 2.0 + 1.0)
    throw std::invalid_argument("fidelity_double_rho: outside positivity region");
  return {0.5 + alpha / 6.0,
          Method::Analytic,
          {{"alpha", alpha}, {"gamma", gamma}},
          "E_rho^2",
          "covariant2"};
}

MeasureResult fidelity_double_tau_lb(double delta) {
  if (delta < 0.0 || delta > 1.0)
    throw std::invalid_argument("fidelity_double_tau_lb: delta in [0,1]");
  return {(2.0 * kSqrt3 + 15.0) / 24.0 - (2.0 * kSqrt3 + 3.0) / 24.0 * delta,
          Method::Analytic,
          {{"delta", delta}},
          "E_tau^2",
          "tetra_tau_pair"};
}

MeasureResult mutual_information(const Ensemble& e, const MeasurementStrategy& s,
                                 const SphereQuadrature& q) {
  MeasureResult r;
  r.method = Method::Quadrature;
  r.ensemble_label = e.label;
  r.strategy_label = strategy_label(s);
  if (const auto* cov = std::get_if<CovariantStrategy>(&s)) {
    if (cov->povm.seed_effect.dim() != e.dim)
      throw std::invalid_argument("mutual_information: strategy/ensemble dimension mismatch");
    const ComplexMatrix& seed = cov->povm.seed_effect;
    auto density = [&](const Direction& n) {
      return (e.state_fn(n).matrix() * seed).trace().real();
    };
    const double den = integrate(q, density);
    r.value = integrate(q, [&](const Direction& n) { return plogp_over(density(n), den); });
  } else {
    const auto& fin = std::get<FiniteStrategy>(s);
    if (fin.povm.effects.empty() || fin.povm.effects[0].dim() != e.dim)
      throw std::invalid_argument("mutual_information: strategy/ensemble dimension mismatch");
    const std::size_t ny = fin.povm.effects.size();
    const auto& nodes = q.nodes();
    // one state construction per node, densities cached for both passes
    std::vector<double> dens(nodes.size() * ny);
    std::vector<double> p_out(ny, 0.0);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const ComplexMatrix st = e.state_fn(nodes[k].n).matrix();
      for (std::size_t i = 0; i < ny; ++i) {
        const double p = (st * fin.povm.effects[i]).trace().real();
        if (!std::isfinite(p)) throw NumericalError("mutual_information: non-finite density");
        dens[k * ny + i] = p;
        p_out[i] += nodes[k].weight * p;
      }
    }
    double h = 0;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (std::size_t i = 0; i < ny; ++i)
        if (p_out[i] > 0.0) h += nodes[k].weight * plogp_over(dens[k * ny + i], p_out[i]);
    r.value = h;
  }
  if (r.value < -1e-10) throw NumericalError("mutual_information: negative result");
  r.value = std::max(r.value, 0.0);
  return r;
}

double mi_single_closed_form(double r) {
  if (std::abs(r) > 1.0 + 1e-14)
    throw std::invalid_argument("mi_single_closed_form: |r| must be <= 1");
  const double ar = std::min(std::abs(r), 1.0);
  if (ar < 1e-12) return 0.0;
  if (ar > 1.0 - 1e-14) return 1.0 - 1.0 / (2.0 * kLn2);  // one-sided limit
  return ((1 + ar) * (1 + ar) / (4 * ar)) * log2_safe(1 + ar) -
         ((1 - ar) * (1 - ar) / (4 * ar)) * log2_safe(1 - ar) - 1.0 / (2.0 * kLn2);
}

double mi_double_rho_discriminant(double alpha, double gamma) {
  return alpha * alpha + 0.75 * gamma * gamma - 3.0 * gamma;
}

namespace {

// int_{-1}^{1} A(c - r)(c - s) ln|c - r| dc via u = c - r.
double root_log_integral(double A, double r, double s) {
  const double d = r - s;
  auto F = [&](double u) {
    if (u == 0.0) return 0.0;
    const double lu = std::log(std::abs(u));
    return A * u * u * u * (lu / 3.0 - 1.0 / 9.0) + A * d * u * u * (lu / 2.0 - 0.25);
  };
  return F(1.0 - r) - F(-1.0 - r);
}

// int_{-1}^{1} P(c) ln|A c - qv| dc for P = A c^2 + B c + C, where qv = A r_far.
// Stable for small |A| through the log series in (A/qv).
double far_log_integral(double A, double B, double C, double qv) {
  const double ratio = A / qv;
  const double intP = 2.0 * A / 3.0 + 2.0 * C;
  if (std::abs(ratio) <= 0.5) {
    // ln|Ac - qv| = ln|qv| + ln(1 - (A/qv) c)
    double acc = intP * std::log(std::abs(qv));
    double pw = 1.0;
    for (int k = 1; k <= 60; ++k) {
      pw *= ratio;
      // moment of P c^k over [-1,1]
      const double m0 = (k % 2 == 0) ? 2.0 / (k + 1.0) : 0.0;
      const double m1 = ((k + 1) % 2 == 0) ? 2.0 / (k + 2.0) : 0.0;
      const double m2 = ((k + 2) % 2 == 0) ? 2.0 / (k + 3.0) : 0.0;
      const double term = -(pw / k) * (A * m2 + B * m1 + C * m0);
      acc += term;
      if (std::abs(term) < 1e-18) break;
    }
    return acc;
  }
  const double r_far = qv / A;  // O(1) here
  return intP * std::log(std::abs(A)) + root_log_integral(A, r_far, -B / A - r_far);
}

}  // namespace

double mi_double_rho_closed_form(double alpha, double gamma) {
  if (gamma > 1.0 || std::abs(alpha) > gamma / 2.0 + 1.0)
    throw std::invalid_argument("mi_double_rho_closed_form: outside positivity region");
  if (std::abs(gamma) < 1e-9) return mi_single_closed_form(std::min(std::abs(alpha), 1.0));
  const double A = 0.75 * gamma, B = alpha, C = 1.0 - 0.25 * gamma;
  const double D = B * B - 4.0 * A * C;  // equals alpha^2 + 3 gamma^2/4 - 3 gamma
  double integral;                       // int P ln P over [-1, 1]
  if (std::abs(D) <= 1e-9 && std::abs(D) <= 4e-6 * std::abs(A)) {
    // Double root at r0. The squared form A(c - r0)^2 carries the constant
    // B^2/(4A) instead of C; its own integral weights ln|A|, and the
    // constant shift is restored to first order through dI/dC =
    // int (ln P + 1). The second guard keeps this branch away from the
    // tiny-gamma corner where that shift would not be small.
    const double r0 = -B / (2.0 * A);
    const double int_p_sq = 2.0 * A / 3.0 + B * B / (2.0 * A);
    const double base = int_p_sq * std::log(std::abs(A)) + 2.0 * root_log_integral(A, r0, r0);
    auto lprim = [](double u) { return u == 0.0 ? 0.0 : u * (std::log(std::abs(u)) - 1.0); };
    const double int_ln_root = lprim(1.0 - r0) - lprim(-1.0 - r0);
    const double int_ln_p = 2.0 * std::log(std::abs(A)) + 2.0 * int_ln_root;
    integral = base - D / (4.0 * A) * (int_ln_p + 2.0);
  } else if (D < 0.0) {
    // complex roots: generic integration-by-parts formula; stays stable as
    // D -> 0- because the K coefficient scales as D^2
    const double P1 = A + B + C, Pm1 = A - B + C;
    const double Q1 = A / 3.0 + B / 2.0 + C, Qm1 = -A / 3.0 + B / 2.0 - C;
    const double a = B * (D - 2.0 * A * C) / (6.0 * A);
    const double k_coef = -D * D / (12.0 * A * A);  // = b - aB/(2A), exact
    const double poly = 4.0 * A / 9.0 + 8.0 * C / 3.0 - B * B / (3.0 * A);
    const double sq = std::sqrt(-D);
    const double K =
        (2.0 / sq) * (std::atan((2.0 * A + B) / sq) - std::atan((-2.0 * A + B) / sq));
    integral = Q1 * std::log(P1) - Qm1 * std::log(Pm1) - poly -
               (a / (2.0 * A)) * (std::log(P1) - std::log(Pm1)) - k_coef * K;
  } else {
    // distinct real roots outside (-1, 1): near/far split keeps the far
    // root out of the cancellation-prone cubic antiderivative.
    const double sq = std::sqrt(D);
    const double qroot = -(B + std::copysign(sq, B)) / 2.0;
    const double r_near = C / qroot;   // smaller-magnitude root
    const double coef = A * r_near - qroot;  // = A (r_near - r_far)
    auto F = [&](double u) {
      if (u == 0.0) return 0.0;
      const double lu = std::log(std::abs(u));
      return A * u * u * u * (lu / 3.0 - 1.0 / 9.0) + coef * u * u * (lu / 2.0 - 0.25);
    };
    const double t_near = F(1.0 - r_near) - F(-1.0 - r_near);
    integral = t_near + far_log_integral(A, B, C, qroot);
  }
  return std::max(integral / (2.0 * kLn2), 0.0);
}

double mi_double_tau_closed_form(double delta) {
  if (delta < 0.0 || delta > 1.0)
    throw std::invalid_argument("mi_double_tau_closed_form: delta in [0,1)");
  if (delta >= 1.0 - 1e-12)
    throw std::invalid_argument(
        "mi_double_tau_closed_form: delta = 1 divides by q = 0; the limit value is 0");
  const double q = 1.0 - delta;
  const double c1 = (3.0 + 2.0 * kSqrt3) / 24.0 * q * (1.0 + (87.0 - 12.0 * kSqrt3) / (81.0 * q * q));
  const double lp = std::log1p(0.75 * q * q + (3.0 + 2.0 * kSqrt3) / 4.0 * q) / kLn2;
  const double lm = std::log1p(0.75 * q * q - (3.0 + 2.0 * kSqrt3) / 4.0 * q) / kLn2;
  const double t12 = (c1 + 0.5) * lp - (c1 - 0.5) * lm;
  const double t3 = (q * q + (4.0 * kSqrt3 - 41.0) / 9.0) / (4.0 * kLn2);
  const double disc = 51.0 - 12.0 * kSqrt3 - 27.0 * q * q;
  const double sq = std::sqrt(disc);
  const double t4 = std::pow(disc, 1.5) / (972.0 * q * kLn2) *
                    (std::atan((3.0 + 2.0 * kSqrt3 + 9.0 * q) / sq) -
                     std::atan((3.0 + 2.0 * kSqrt3 - 9.0 * q) / sq));
  return t12 + t3 + t4;
}

MeasureResult holevo_chi(const Ensemble& e, const SphereQuadrature& q) {
  if (e.copies != 1) throw std::invalid_argument("holevo_chi: single-copy ensembles only");
  const ComplexMatrix avg = average_state(e, q);
  const double s_avg = vn_entropy(DensityOperator(avg));
  const double avg_s =
      integrate(q, [&](const Direction& n) { return vn_entropy(e.state_fn(n)); });
  MeasureResult r;
  r.value = s_avg - avg_s;
  r.method = Method::Quadrature;
  r.ensemble_label = e.label;
  return r;
}

double chi_rho_closed_form() { return 1.0; }

double chi_tau_closed_form(double delta) {
  if (delta < 0.0 || delta > 1.0) throw std::invalid_argument("chi_tau_closed_form: delta in [0,1]");
  auto xlog2x = [](double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); };
  return 1.0 + xlog2x(1.0 - delta / 2.0) + xlog2x(delta / 2.0);
}

namespace {

// Span dimension of the associative algebra generated by the sampled states,
// by product closure and Gram-Schmidt over vectorized matrices.
int algebra_dimension(const std::vector<ComplexMatrix>& states) {
  std::vector<std::vector<cplx>> basis;
  auto try_add = [&](const ComplexMatrix& m) {
    std::vector<cplx> v(m.entries());
    double norm0 = 0;
    for (const auto& c : v) norm0 += std::norm(c);
    norm0 = std::sqrt(norm0);
    if (norm0 < 1e-14) return false;
    for (const auto& b : basis) {
      cplx ov = 0;
      for (std::size_t k = 0; k < v.size(); ++k) ov += std::conj(b[k]) * v[k];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= ov * b[k];
    }
    double norm = 0;
    for (const auto& c : v) norm += std::norm(c);
    norm = std::sqrt(norm);
    if (norm <= 1e-9 * norm0) return false;
    for (auto& c : v) c /= norm;
    basis.push_back(std::move(v));
    return true;
  };
  std::vector<ComplexMatrix> frontier;
  for (const auto& s : states)
    if (try_add(s)) frontier.push_back(s);
  for (int depth = 0; depth < 8 && !frontier.empty(); ++depth) {
    std::vector<ComplexMatrix> next;
    for (const auto& a : frontier)
      for (const auto& s : states) {
        ComplexMatrix p = a * s;
        if (try_add(p)) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return static_cast<int>(basis.size());
}

std::vector<ComplexMatrix> sampled_states(const Ensemble& e, std::size_t count,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ComplexMatrix> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(e.state_fn(random_direction(rng)).matrix());
  return out;
}

}  // namespace

BlindRate blind_rate(const Ensemble& e) {
  if (e.copies != 1) throw std::invalid_argument("blind_rate: single-copy ensembles only");
  constexpr std::uint64_t kSeed = 777;
  if (e.label == "E_rho")
    return {1.0, algebra_dimension(sampled_states(e, 30, kSeed))};
  if (e.label == "E_tau") {
    const double delta = e.delta.value_or(0.0);
    const double rate = (delta < 1.0) ? 2.0 : 0.0;
    return {rate, algebra_dimension(sampled_states(e, 30, kSeed))};
  }
  throw std::invalid_argument("blind_rate: unknown ensemble family " + e.label);
}

SnqiVerdict snqi_verdict(double delta) {
  if (delta < 0.0 || delta > 1.0) throw std::invalid_argument("snqi_verdict: delta in [0,1]");
  SnqiVerdict v;
  v.delta = delta;
  v.f_single_rho = fidelity_single_rho_opt().value;
  v.f_single_tau = fidelity_single_tau_opt(delta).value;
  v.f_double_rho = fidelity_double_rho(1.5, 1.0).value;
  v.f_double_tau_lb = fidelity_double_tau_lb(delta).value;
  v.cond1 = v.f_single_rho > v.f_single_tau + 1e-12;
  v.cond2 = v.f_double_tau_lb > v.f_double_rho + 1e-12;
  v.cond3_evidence = morphism_identity_residual(delta, 20, 10, 4242);
  return v;
}

namespace {

double golden_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  const double x = (a + b) / 2;
  return x;
}

}  // namespace

OptResult1D optimize_fidelity_single(double delta) {
  auto f = [&](double r3) { return 0.5 + r3 * (1.0 - delta) / 6.0; };
  double best_x = -1.0, best = f(-1.0);
  for (int k = 0; k <= 200; ++k) {
    const double r3 = -1.0 + 0.01 * k;
    const double v = f(r3);
    if (v > best) {
      best = v;
      best_x = r3;
    }
  }
  const double x =
      golden_max(f, std::max(-1.0, best_x - 0.01), std::min(1.0, best_x + 0.01), 1e-7);
  OptResult1D r;
  r.x = (f(x) >= best) ? x : best_x;
  r.value = f(r.x);
  return r;
}

OptResult2D optimize_mi_double_rho() {
  auto h = [](double a, double g) { return mi_double_rho_closed_form(a, g); };
  double best_a = 0, best_g = 0, best = -1;
  double bestn_a = 0, bestn = -1;
  for (int kg = 0; kg <= 300; ++kg) {
    const double g = -2.0 + 0.01 * kg;
    const double amax = g / 2.0 + 1.0;
    if (amax < 0) continue;
    const int ka_max = static_cast<int>(std::floor(amax / 0.01 + 1e-9));
    for (int ka = 0; ka <= ka_max; ++ka) {
      const double a = std::min(0.01 * ka, amax);
      const double v = h(a, g);
      if (v > best) {
        best = v;
        best_a = a;
        best_g = g;
      }
      if (a > 0) {
        const double vn = h(-a, g);
        if (vn > bestn) {
          bestn = vn;
          bestn_a = -a;
        }
      }
    }
  }
  // refine by alternating golden sections, clipped to the region
  double a = best_a, g = best_g;
  for (int sweep = 0; sweep < 6; ++sweep) {
    const double amax = std::min(g, 1.0) / 2.0 + 1.0;
    a = golden_max([&](double x) { return h(std::clamp(x, 0.0, amax), g); },
                   std::max(0.0, a - 0.02), std::min(amax, a + 0.02), 1e-8);
    a = std::clamp(a, 0.0, amax);
    g = golden_max(
        [&](double x) {
          const double gc = std::min(x, 1.0);
          return h(std::min(a, gc / 2.0 + 1.0), gc);
        },
        std::max(-2.0, g - 0.02), std::min(1.0, g + 0.02), 1e-8);
    g = std::min(g, 1.0);
    a = std::min(a, g / 2.0 + 1.0);
  }
  OptResult2D r;
  r.alpha = a;
  r.gamma = g;
  r.value = h(a, g);
  r.twin_alpha = bestn_a;
  r.twin_value = bestn;
  return r;
}

double fidelity_crossover_delta() {
  auto f = [](double d) { return fidelity_double_tau_lb(d).value - 0.75; };
  double lo = 0.0, hi = 0.2;
  for (int it = 0; it < 200; ++it) {
    const double mid = (lo + hi) / 2;
    if (f(mid) > 0)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

double mi_crossover_delta() {
  const double target = mi_double_rho_closed_form(1.5, 1.0);
  auto f = [&](double d) { return mi_double_tau_closed_form(d) - target; };
  double lo = 0.0, hi = 0.2;
  for (int it = 0; it < 200; ++it) {
    const double mid = (lo + hi) / 2;
    if (f(mid) > 0)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace snqi
