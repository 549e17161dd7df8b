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

#ifndef SNQI_MEASURES_HPP
#define SNQI_MEASURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "snqi/ensembles.hpp"
#include "snqi/sphere.hpp"
#include "snqi/strategies.hpp"

namespace snqi {

enum class Method { Analytic, Quadrature, MonteCarlo };

struct MeasureResult {
  double value = 0;
  Method method = Method::Analytic;
  std::vector<std::pair<std::string, double>> params;
  std::string ensemble_label;
  std::string strategy_label;
};

/// Integral of sum_y p(y|n) (1 + n.g_y)/2 dn for the fixed strategy.
/// Covariant strategies use the seed-frame reduction.
MeasureResult averaged_fidelity(const Ensemble& e, const MeasurementStrategy& s,
                                const SphereQuadrature& q);

// Closed forms for the optimal single-copy measurements (r3 = 1).
MeasureResult fidelity_single_rho_opt();
MeasureResult fidelity_single_tau_opt(double delta);

/// 1/2 + alpha/6, the two-copy covariant fidelity (max 3/4 at alpha = 3/2).
MeasureResult fidelity_double_rho(double alpha, double gamma);

/// (2 sqrt3 + 15)/24 - (2 sqrt3 + 3) delta / 24, the tetra-POVM lower bound.
MeasureResult fidelity_double_tau_lb(double delta);

/// Mutual information between the sphere variable and the outcome register,
/// in bits. Zero-probability outcomes contribute 0 log 0 = 0.
MeasureResult mutual_information(const Ensemble& e, const MeasurementStrategy& s,
                                 const SphereQuadrature& q);

/// Single-copy covariant MI as a function of r = (1-delta) r3, r in [-1, 1];
/// the endpoints are one-sided limits, r = 0 gives 0.
double mi_single_closed_form(double r);

/// Two-copy covariant MI on the spin ensemble. Case split on the
/// discriminant D = alpha^2 + (3/4) gamma^2 - 3 gamma of the density.
double mi_double_rho_closed_form(double alpha, double gamma);

double mi_double_rho_discriminant(double alpha, double gamma);

/// Two-copy tetra-POVM MI on the flagged ensemble, delta in [0, 1).
/// delta = 1 raises; the limit value 0 is reported by the sweep directly.
double mi_double_tau_closed_form(double delta);

/// S(average) - average(S) by quadrature, bits. Single-copy ensembles only.
MeasureResult holevo_chi(const Ensemble& e, const SphereQuadrature& q);

double chi_rho_closed_form();                // 1
double chi_tau_closed_form(double delta);    // 1 + (1-d/2)log(1-d/2) + (d/2)log(d/2)

struct BlindRate {
  double rate = 0;
  int algebra_dim = 0;  // span dimension of the algebra generated by sampled states
};

/// Closed-form optimal blind-compression rate for the two carrier families,
/// with the generated-algebra dimension as a structural diagnostic.
BlindRate blind_rate(const Ensemble& e);

struct SnqiVerdict {
  double delta = 0;
  double f_single_rho = 0, f_single_tau = 0, f_double_rho = 0, f_double_tau_lb = 0;
  bool cond1 = false;  // single-copy strict ordering
  bool cond2 = false;  // doubled ordering reversed
  double cond3_evidence = 0;  // max morphism-identity residual at this delta
};

SnqiVerdict snqi_verdict(double delta);

struct OptResult1D {
  double x = 0;
  double value = 0;
};

/// Grid (step 0.01) plus golden-section refinement of the single-copy
/// fidelity over r3 in [-1, 1].
OptResult1D optimize_fidelity_single(double delta);

struct OptResult2D {
  double alpha = 0, gamma = 0;
  double value = 0;
  double twin_alpha = 0;  // the mirrored maximum
  double twin_value = 0;
};

/// Grid (step 0.01) plus refinement of the two-copy MI over the positivity
/// region; reports the positive-alpha maximum and its alpha -> -alpha twin.
OptResult2D optimize_mi_double_rho();

/// Root of f_double_tau_lb(delta) = 3/4 (the fidelity reversal edge).
double fidelity_crossover_delta();

/// Root of mi_double_tau(delta) = mi_double_rho(3/2, 1).
double mi_crossover_delta();

}  // namespace snqi

#endif  // SNQI_MEASURES_HPP
