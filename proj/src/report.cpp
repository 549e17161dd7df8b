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

#include "snqi/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "snqi/measures.hpp"
#include "snqi/morphisms.hpp"

namespace snqi {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

json settings_json(const Settings& s) {
  return json{{"theta_nodes", s.theta_nodes},
              {"phi_nodes", s.phi_nodes},
              {"mc_samples", s.mc_samples},
              {"seed", s.seed}};
}

json wrap(const Settings& s, json payload) {
  return json{{"version", kVersion}, {"settings", settings_json(s)}, {"payload", std::move(payload)}};
}

SphereQuadrature quad(const Settings& s) {
  return SphereQuadrature::gauss_legendre_product(s.theta_nodes, s.phi_nodes);
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

SweepRecord sweep_record(double delta) {
  SweepRecord r;
  r.delta = delta;
  r.f_single_rho = fidelity_single_rho_opt().value;
  r.f_single_tau = fidelity_single_tau_opt(delta).value;
  r.f_double_rho = fidelity_double_rho(1.5, 1.0).value;
  r.f_double_tau_lb = fidelity_double_tau_lb(delta).value;
  r.mi_single_rho = mi_single_closed_form(1.0);
  r.mi_single_tau = mi_single_closed_form(1.0 - delta);
  r.mi_double_rho = mi_double_rho_closed_form(1.5, 1.0);
  r.mi_double_tau = (delta >= 1.0 - 1e-12) ? 0.0 : mi_double_tau_closed_form(delta);
  r.chi_rho = chi_rho_closed_form();
  r.chi_tau = chi_tau_closed_form(delta);
  r.snqi = (r.f_single_rho > r.f_single_tau + 1e-12) &&
           (r.f_double_tau_lb > r.f_double_rho + 1e-12);
  return r;
}

std::vector<SweepRecord> sweep(double delta_min, double delta_max, std::size_t steps) {
  if (!(delta_min >= 0.0 && delta_min < delta_max && delta_max <= 1.0))
    throw std::invalid_argument("sweep: need 0 <= delta_min < delta_max <= 1");
  if (steps < 2) throw std::invalid_argument("sweep: steps >= 2");
  std::vector<SweepRecord> out;
  out.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    const double d =
        delta_min + (delta_max - delta_min) * static_cast<double>(k) / static_cast<double>(steps - 1);
    out.push_back(sweep_record(d));
  }
  return out;
}

namespace {

const char* kSweepHeader =
    "delta,f_single_rho,f_single_tau,f_double_rho,f_double_tau_lb,"
    "mi_single_rho,mi_single_tau,mi_double_rho,mi_double_tau,chi_rho,chi_tau,snqi";

json record_json(const SweepRecord& r) {
  return json{{"delta", r.delta},
              {"f_single_rho", r.f_single_rho},
              {"f_single_tau", r.f_single_tau},
              {"f_double_rho", r.f_double_rho},
              {"f_double_tau_lb", r.f_double_tau_lb},
              {"mi_single_rho", r.mi_single_rho},
              {"mi_single_tau", r.mi_single_tau},
              {"mi_double_rho", r.mi_double_rho},
              {"mi_double_tau", r.mi_double_tau},
              {"chi_rho", r.chi_rho},
              {"chi_tau", r.chi_tau},
              {"snqi", r.snqi}};
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream os;
  os << kSweepHeader << "\n";
  for (const auto& r : records) {
    os << format_double(r.delta) << ',' << format_double(r.f_single_rho) << ','
       << format_double(r.f_single_tau) << ',' << format_double(r.f_double_rho) << ','
       << format_double(r.f_double_tau_lb) << ',' << format_double(r.mi_single_rho) << ','
       << format_double(r.mi_single_tau) << ',' << format_double(r.mi_double_rho) << ','
       << format_double(r.mi_double_tau) << ',' << format_double(r.chi_rho) << ','
       << format_double(r.chi_tau) << ',' << (r.snqi ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string sweep_json(const std::vector<SweepRecord>& records, const Settings& s) {
  json arr = json::array();
  for (const auto& r : records) arr.push_back(record_json(r));
  return wrap(s, std::move(arr)).dump(2) + "\n";
}

std::string table_text(double delta) {
  const SweepRecord r = sweep_record(delta);
  std::ostringstream os;
  char head[32];
  std::snprintf(head, sizeof(head), "%.6g", delta);
  os << "averaged fidelity (delta = " << head << ")\n";
  os << "                          E_rho                 E_tau\n";
  os << "  without copies f        " << format_double(r.f_single_rho) << "   "
     << format_double(r.f_single_tau) << "\n";
  os << "  with a single copy f_x  " << format_double(r.f_double_rho) << "                  "
     << format_double(r.f_double_tau_lb) << " (lower bound)\n";
  return os.str();
}

std::string table_json(double delta, const Settings& s) {
  const SweepRecord r = sweep_record(delta);
  json payload = {{"delta", delta},
                  {"f_single_rho", r.f_single_rho},
                  {"f_single_tau", r.f_single_tau},
                  {"f_double_rho", r.f_double_rho},
                  {"f_double_tau_lb", r.f_double_tau_lb},
                  {"f_double_tau_is_lower_bound", true}};
  return wrap(s, std::move(payload)).dump(2) + "\n";
}

std::string figure_data(const std::string& which, const Settings& s) {
  std::ostringstream os;
  if (which == "fig3") {
    os << "delta,mi_single_rho,mi_single_tau,mi_double_rho,mi_double_tau\n";
    const std::size_t n = 201;
    for (std::size_t k = 0; k < n; ++k) {
      const double d = static_cast<double>(k) / static_cast<double>(n - 1);
      const double mdt = (d >= 1.0 - 1e-12) ? 0.0 : mi_double_tau_closed_form(d);
      os << format_double(d) << ',' << format_double(mi_single_closed_form(1.0)) << ','
         << format_double(mi_single_closed_form(1.0 - d)) << ','
         << format_double(mi_double_rho_closed_form(1.5, 1.0)) << ',' << format_double(mdt)
         << "\n";
    }
  } else if (which == "fig5") {
    os << "r,mi_single\n";
    const std::size_t n = 401;
    for (std::size_t k = 0; k < n; ++k) {
      const double r = -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(n - 1);
      os << format_double(r) << ',' << format_double(mi_single_closed_form(r)) << "\n";
    }
  } else if (which == "fig6") {
    os << "alpha,gamma,mi_double_rho\n";
    for (int kg = 0; kg <= 150; ++kg) {
      const double g = -2.0 + 0.02 * kg;
      const double amax = g / 2.0 + 1.0;
      if (amax < 0) continue;
      const int ka_max = static_cast<int>(std::floor(amax / 0.02 + 1e-9));
      for (int ka = 0; ka <= ka_max; ++ka) {
        const double a = std::min(0.02 * ka, amax);
        os << format_double(a) << ',' << format_double(g) << ','
           << format_double(mi_double_rho_closed_form(a, g)) << "\n";
      }
    }
  } else {
    throw std::invalid_argument("figure_data: which must be fig3|fig5|fig6");
  }
  (void)s;
  return os.str();
}

namespace {

json choi_entry(const std::string& label, double delta, const Superoperator& s) {
  const Spectrum spec = eig_hermitian(s.choi());
  json eigs = json::array();
  for (double e : spec.eigenvalues) eigs.push_back(e);
  return json{{"label", label},
              {"delta", delta},
              {"eigenvalues", eigs},
              {"is_cp", spec.eigenvalues.back() >= -1e-10}};
}

}  // namespace

std::string choi_json(double delta, const Settings& s) {
  json payload = json::array();
  payload.push_back(choi_entry("Lambda_delta", delta, lambda_delta(delta)));
  payload.push_back(choi_entry("Lambda_0", 0.0, lambda0()));
  payload.push_back(choi_entry("J", delta, j_morphism()));
  return wrap(s, std::move(payload)).dump(2) + "\n";
}

namespace {

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string povm_json(const Settings& s) {
  const auto strat = tetra_two_copy_tau_povm();
  const auto& fin = std::get<FiniteStrategy>(strat);
  ComplexMatrix sum(16);
  json effects = json::array();
  for (std::size_t i = 0; i < fin.povm.effects.size(); ++i) {
    const auto& e = fin.povm.effects[i];
    sum = sum + e;
    effects.push_back(json{{"label", fin.povm.labels[i]},
                           {"guess", json::array({fin.guesses[i].x, fin.guesses[i].y,
                                                  fin.guesses[i].z})},
                           {"min_eigenvalue", min_eigenvalue(e)},
                           {"matrix", matrix_json(e)}});
  }
  const double completeness = max_abs_diff(sum, ComplexMatrix::identity(16));
  const auto single = std::get<CovariantStrategy>(single_copy_covariant(1.0));
  const auto pair = std::get<CovariantStrategy>(two_copy_covariant(1.5, 1.0));
  json payload = {{"tetra", {{"effects", effects}, {"completeness_residual", completeness}}},
                  {"covariant_seeds",
                   {{"single_copy_r3_1", matrix_json(single.povm.seed_effect)},
                    {"two_copy_alpha_1.5_gamma_1", matrix_json(pair.povm.seed_effect)}}}};
  return wrap(s, std::move(payload)).dump(2) + "\n";
}

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Verification suites.

namespace {

void add_check(VerifyReport& rep, const std::string& name, double residual, double tolerance) {
  rep.checks.push_back({name, residual, tolerance, residual <= tolerance});
}

void suite_morphisms(VerifyReport& rep, std::uint64_t seed) {
  const double deltas[] = {0.0, 0.03, 0.5, 1.0};
  double worst8 = 0, worstj = 0;
  for (double d : deltas) {
    worst8 = std::max(worst8, morphism_identity_residual(d, 50, 20, seed));
    worstj = std::max(worstj, j_identity_residual(d, 50, 20, seed + 1));
  }
  add_check(rep, "eq8_residual", worst8, 1e-12);
  add_check(rep, "eq_aj_residual", worstj, 1e-12);

  double unital = 0;
  for (double d : deltas) {
    const Superoperator lam = lambda_delta(d);
    unital = std::max(unital, max_abs_diff(lam.apply(ComplexMatrix::identity(4)),
                                           ComplexMatrix::identity(2)));
  }
  unital = std::max(unital, max_abs_diff(j_morphism().apply(ComplexMatrix::identity(2)),
                                         ComplexMatrix::identity(4)));
  add_check(rep, "unitality", unital, 1e-12);

  // Choi minimum eigenvalue tracks (3 delta - 2)/4 for the composed map.
  double spec_res = 0;
  for (double d : {0.0, 0.03, 0.5, 1.0}) {
    const double eig = min_eigenvalue(lambda_delta(d).choi());
    spec_res = std::max(spec_res, std::abs(eig - (3.0 * d - 2.0) / 4.0));
  }
  add_check(rep, "choi_min_eig_formula", spec_res, 1e-12);

  // Non-CP across the reversal window while sampled positivity holds.
  double most_positive = -1e9;
  for (double d : {0.0, 0.03, 0.0575, 0.0718, 0.1, 0.5})
    most_positive = std::max(most_positive, min_eigenvalue(lambda_delta(d).choi()));
  add_check(rep, "choi_negative_window", most_positive, -1e-6);

  const PositivityReport pr = positivity_report(lambda_delta(0.03), 10000, seed + 2);
  add_check(rep, "sampled_positivity", -pr.min_output_eig, 1e-10);

  // J Choi spectrum is {2, 1, 1, 1, 0, 0, 0, -1}.
  const Spectrum js = eig_hermitian(j_morphism().choi());
  const double want[] = {2, 1, 1, 1, 0, 0, 0, -1};
  double jres = 0;
  for (int i = 0; i < 8; ++i) jres = std::max(jres, std::abs(js.eigenvalues[i] - want[i]));
  add_check(rep, "j_choi_spectrum", jres, 1e-12);

  // Doubled-map witness: the antiparallel flag piece maps to a non-PSD output.
  const Superoperator lam2 = tensor(lambda_delta(0.03), lambda_delta(0.03));
  const ComplexMatrix witness = tetra_effect_piece(0, 0, 1);
  const double weig = min_eigenvalue(lam2.apply(witness).hermitized(1e-9));
  add_check(rep, "doubled_witness_negative", weig, -1e-6);
}

void suite_povm(VerifyReport& rep, std::uint64_t seed, const Settings& st) {
  const auto strat = tetra_two_copy_tau_povm();
  const auto& fin = std::get<FiniteStrategy>(strat);
  ComplexMatrix sum(16);
  double worst_eig = 0;
  for (const auto& e : fin.povm.effects) {
    sum = sum + e;
    worst_eig = std::max(worst_eig, -min_eigenvalue(e));
  }
  add_check(rep, "tetra_completeness", max_abs_diff(sum, ComplexMatrix::identity(16)), 1e-10);
  add_check(rep, "tetra_psd", worst_eig, 1e-10);

  // Analytic densities against direct traces at 100 seeded samples.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  const auto ap = parallel_states(Parity::Plus);
  const auto bp = antiparallel_states(Parity::Plus);
  double rp = 0, ra = 0, rt = 0, r1 = 0, r2 = 0;
  for (int k = 0; k < 100; ++k) {
    const Direction n = random_direction(rng);
    const double d = ud(rng);
    const ComplexMatrix rho = rho_n_delta(n, d).matrix();
    const ComplexMatrix rho_flip = rho_n_delta(-n, d).matrix();
    rp = std::max(rp, std::abs(sandwich(ap[0], kron(rho, rho), ap[0]).real() -
                               density_parallel(d, n.z)));
    ra = std::max(ra, std::abs(sandwich(bp[0], kron(rho, rho_flip), bp[0]).real() -
                               density_antiparallel(d, n.z)));
    const ComplexMatrix tt = kron(tau_n_delta(n, d).matrix(), tau_n_delta(n, d).matrix());
    rt = std::max(rt, std::abs((tt * fin.povm.effects[0]).trace().real() -
                               density_tau_pair(d, n.z)));
    const double r3 = 2.0 * ud(rng) - 1.0;
    r1 = std::max(r1, std::abs((rho * (ComplexMatrix::identity(2) + pauli_z() * cplx(r3, 0)))
                                   .trace()
                                   .real() -
                               density_single_copy(r3, d, n.z)));
    const double g = 2.0 * ud(rng) - 1.0;
    const double a = (g / 2.0 + 1.0) * (2.0 * ud(rng) - 1.0);
    const auto cov2 = std::get<CovariantStrategy>(two_copy_covariant(a, g));
    const ComplexMatrix rr = kron(rho_n(n).matrix(), rho_n(n).matrix());
    r2 = std::max(r2, std::abs((rr * cov2.povm.seed_effect).trace().real() -
                               density_two_copy_rho(a, g, n.z)));
  }
  add_check(rep, "density_parallel", rp, 1e-12);
  add_check(rep, "density_antiparallel", ra, 1e-12);
  add_check(rep, "density_tau_pair", rt, 1e-12);
  add_check(rep, "density_single_copy", r1, 1e-12);
  add_check(rep, "density_two_copy_rho", r2, 1e-12);

  // Covariant orbit averages reproduce the identity.
  const SphereQuadrature q = quad(st);
  const auto c1 = std::get<CovariantStrategy>(single_copy_covariant(0.7));
  const auto c2 = std::get<CovariantStrategy>(two_copy_covariant(1.5, 1.0));
  const auto ct = std::get<CovariantStrategy>(tau_single_copy_covariant(1.0));
  add_check(rep, "orbit_average_single",
            max_abs_diff(c1.povm.orbit_average(q), ComplexMatrix::identity(2)), 1e-8);
  add_check(rep, "orbit_average_pair",
            max_abs_diff(c2.povm.orbit_average(q), ComplexMatrix::identity(4)), 1e-8);
  add_check(rep, "orbit_average_tau",
            max_abs_diff(ct.povm.orbit_average(q), ComplexMatrix::identity(4)), 1e-8);

  // Two-copy density normalization over the sphere for sampled (alpha, gamma).
  double norm_res = 0;
  for (int k = 0; k < 5; ++k) {
    const double g = 2.0 * ud(rng) - 1.0;
    const double a = (g / 2.0 + 1.0) * (2.0 * ud(rng) - 1.0);
    const double total =
        integrate(q, [&](const Direction& n) { return density_two_copy_rho(a, g, n.z); });
    norm_res = std::max(norm_res, std::abs(total - 1.0));
  }
  add_check(rep, "two_copy_density_normalized", norm_res, 1e-12);
}

void suite_measures(VerifyReport& rep, std::uint64_t seed, const Settings& st) {
  const SphereQuadrature q = quad(st);
  // Higher theta resolution for logarithmic integrands; the reduced
  // integrands below are azimuth-independent, so few phi nodes suffice.
  const SphereQuadrature qlog = SphereQuadrature::gauss_legendre_product(
      std::max<std::size_t>(st.theta_nodes, 400), 8);

  const double dgrid[] = {0.0, 0.01, 0.03, 0.05, 0.0575, 0.0718, 0.1, 0.15, 0.2,  0.3,
                          0.4, 0.5,  0.6,  0.7,  0.75,   0.8,    0.9, 0.95, 0.99, 1.0};

  const auto tetra = tetra_two_copy_tau_povm();
  const ComplexMatrix& tetra_e0 = std::get<FiniteStrategy>(tetra).povm.effects[0];
  double f_tau_res = 0, f_tau2_res = 0, chi_tau_res = 0, mi_tau_res = 0, mi_tau2_res = 0;
  for (double d : dgrid) {
    const Ensemble etau = ensemble_tau(d);
    f_tau_res = std::max(
        f_tau_res, std::abs(averaged_fidelity(etau, tau_single_copy_covariant(1.0), q).value -
                            fidelity_single_tau_opt(d).value));
    f_tau2_res = std::max(
        f_tau2_res,
        std::abs(averaged_fidelity(two_copies(etau), tetra, q).value -
                 fidelity_double_tau_lb(d).value));
    chi_tau_res =
        std::max(chi_tau_res, std::abs(holevo_chi(etau, q).value - chi_tau_closed_form(d)));
    if (d < 1.0) {
      mi_tau_res = std::max(
          mi_tau_res, std::abs(mutual_information(etau, tau_single_copy_covariant(1.0), qlog).value -
                               mi_single_closed_form(1.0 - d)));
      // 16-dimensional traces with the four-outcome symmetry factored out
      const double mi2 = 4.0 * integrate(qlog, [&](const Direction& n) {
        const ComplexMatrix tt = kron(tau_n_delta(n, d).matrix(), tau_n_delta(n, d).matrix());
        const double p = (tt * tetra_e0).trace().real();
        return p <= 0.0 ? 0.0 : p * std::log2(4.0 * p);
      });
      mi_tau2_res = std::max(mi_tau2_res, std::abs(mi2 - mi_double_tau_closed_form(d)));
    }
  }
  add_check(rep, "f_single_tau_quad_vs_closed", f_tau_res, 1e-8);
  add_check(rep, "f_double_tau_quad_vs_closed", f_tau2_res, 1e-8);
  add_check(rep, "chi_tau_quad_vs_closed", chi_tau_res, 1e-8);
  add_check(rep, "mi_single_tau_quad_vs_closed", mi_tau_res, 1e-7);
  add_check(rep, "mi_double_tau_quad_vs_closed", mi_tau2_res, 1e-7);

  const Ensemble erho = ensemble_rho();
  add_check(rep, "f_single_rho_quad_vs_closed",
            std::abs(averaged_fidelity(erho, single_copy_covariant(1.0), q).value - 2.0 / 3.0),
            1e-8);
  add_check(rep, "chi_rho_quad", std::abs(holevo_chi(erho, q).value - 1.0), 1e-8);
  add_check(rep, "mi_single_rho_quad_vs_closed",
            std::abs(mutual_information(erho, single_copy_covariant(1.0), qlog).value -
                     mi_single_closed_form(1.0)),
            1e-7);

  // General four-outcome path at the default resolution (strictly positive
  // densities, so the periodic phi rule is spectrally accurate).
  for (double d : {0.03, 0.3}) {
    add_check(rep, "mi_double_tau_full_povm_d" + std::to_string(d),
              std::abs(mutual_information(two_copies(ensemble_tau(d)), tetra, q).value -
                       mi_double_tau_closed_form(d)),
              1e-7);
  }

  // Two-copy spin ensemble across the (alpha, gamma) branches.
  const Ensemble erho2 = two_copies(erho);
  const double pts[][2] = {{1.5, 1.0}, {0.5, 0.0},  {0.5, 0.5},  {0.0, 0.8},
                           {1.25, 0.5}, {0.0, -1.0}, {1.2, 0.9},  {0.3, 0.02},
                           {1.0005, 0.001}, {0.0, 1.0}};
  double f2_res = 0, mi2_res = 0;
  for (const auto& p : pts) {
    f2_res = std::max(
        f2_res, std::abs(averaged_fidelity(erho2, two_copy_covariant(p[0], p[1]), q).value -
                         fidelity_double_rho(p[0], p[1]).value));
    mi2_res = std::max(
        mi2_res, std::abs(mutual_information(erho2, two_copy_covariant(p[0], p[1]), qlog).value -
                          mi_double_rho_closed_form(p[0], p[1])));
  }
  add_check(rep, "f_double_rho_quad_vs_closed", f2_res, 1e-8);
  add_check(rep, "mi_double_rho_quad_vs_closed", mi2_res, 1e-7);

  // Branch continuity across D = 0 at gamma = 0.8.
  const double g0 = 0.8, a0 = std::sqrt(3.0 * g0 - 0.75 * g0 * g0);
  add_check(rep, "mi_double_rho_branch_continuity",
            std::abs(mi_double_rho_closed_form(a0 - 1e-6, g0) -
                     mi_double_rho_closed_form(a0 + 1e-6, g0)),
            1e-5);

  add_check(rep, "fidelity_crossover",
            std::abs(fidelity_crossover_delta() - (7.0 - 4.0 * std::sqrt(3.0))), 1e-9);
  add_check(rep, "mi_crossover", std::abs(mi_crossover_delta() - 0.0575), 0.002);

  const OptResult1D o1 = optimize_fidelity_single(0.0);
  add_check(rep, "optimizer_single_r3", std::abs(o1.x - 1.0), 1e-4);
  const OptResult2D o2 = optimize_mi_double_rho();
  add_check(rep, "optimizer_double_alpha", std::abs(o2.alpha - 1.5), 1e-4);
  add_check(rep, "optimizer_double_gamma", std::abs(o2.gamma - 1.0), 1e-4);
  add_check(rep, "optimizer_double_twin", std::abs(o2.twin_alpha + 1.5), 0.01);
  add_check(rep, "optimizer_double_twin_value", std::abs(o2.twin_value - o2.value), 1e-4);

  // Pairwise fidelity equality between the bare and flagged carriers.
  std::mt19937_64 rng(seed);
  double fp_res = 0;
  for (int k = 0; k < 100; ++k) {
    const Direction n = random_direction(rng), m = random_direction(rng);
    const double lhs = pairwise_fidelity(rho_n(n).matrix(), rho_n(m).matrix());
    const double rhs =
        pairwise_fidelity(tau_n_delta(n, 0.0).matrix(), tau_n_delta(m, 0.0).matrix());
    fp_res = std::max(fp_res, std::abs(lhs - rhs));
  }
  add_check(rep, "pairwise_fidelity_equality", fp_res, 1e-10);

  const BlindRate br_rho = blind_rate(ensemble_rho());
  const BlindRate br_tau = blind_rate(ensemble_tau(0.5));
  const BlindRate br_tau1 = blind_rate(ensemble_tau(1.0));
  add_check(rep, "blind_rate_rho", std::abs(br_rho.rate - 1.0) + std::abs(br_rho.algebra_dim - 4),
            1e-12);
  add_check(rep, "blind_rate_tau",
            std::abs(br_tau.rate - 2.0) + std::abs(br_tau.algebra_dim - 8), 1e-12);
  add_check(rep, "blind_rate_tau_delta1",
            std::abs(br_tau1.rate - 0.0) + std::abs(br_tau1.algebra_dim - 1), 1e-12);

  // sNQI verdict flags at the window anchors.
  const SnqiVerdict v0 = snqi_verdict(0.0), v1 = snqi_verdict(0.03), v2 = snqi_verdict(0.1);
  const int flag_errors = (v0.cond1 ? 1 : 0) + (v0.cond2 ? 0 : 1) + (v1.cond1 ? 0 : 1) +
                          (v1.cond2 ? 0 : 1) + (v2.cond1 ? 0 : 1) + (v2.cond2 ? 1 : 0);
  add_check(rep, "snqi_window_flags", flag_errors, 0);

  // Monte-Carlo oracle vs Gauss-Legendre within three standard errors.
  const SphereQuadrature mc = SphereQuadrature::monte_carlo(st.mc_samples, st.seed);
  struct Probe {
    const char* name;
    std::function<double(const Direction&)> f;
    double gl;
  };
  const double d = 0.03;
  std::vector<Probe> probes;
  probes.push_back({"mc_f_single_tau",
                    [d](const Direction& n) {
                      return density_single_copy(1.0, d, n.z) * (1.0 + n.z) / 2.0;
                    },
                    fidelity_single_tau_opt(d).value});
  probes.push_back({"mc_f_double_rho",
                    [](const Direction& n) {
                      return density_two_copy_rho(1.5, 1.0, n.z) * (1.0 + n.z) / 2.0;
                    },
                    fidelity_double_rho(1.5, 1.0).value});
  probes.push_back({"mc_f_double_tau",
                    [d](const Direction& n) {
                      return 4.0 * density_tau_pair(d, n.z) * (1.0 + n.z) / 2.0;
                    },
                    fidelity_double_tau_lb(d).value});
  probes.push_back({"mc_mi_single",
                    [d](const Direction& n) {
                      const double p = density_single_copy(1.0, d, n.z);
                      return p <= 0 ? 0.0 : p * std::log2(p);
                    },
                    mi_single_closed_form(1.0 - d)});
  probes.push_back({"mc_mi_double_tau",
                    [d](const Direction& n) {
                      const double p = density_tau_pair(d, n.z);
                      return p <= 0 ? 0.0 : 4.0 * p * std::log2(4.0 * p);
                    },
                    mi_double_tau_closed_form(d)});
  for (const auto& p : probes) {
    const McEstimate est = integrate_mc(mc, p.f);
    const double scaled = std::abs(est.value - p.gl) / (3.0 * est.std_error);
    add_check(rep, p.name, scaled, 1.0);
  }
}

void suite_classical(VerifyReport& rep, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ud(0.05, 1.0);
  auto random_stochastic = [&](std::size_t rows, std::size_t cols) {
    ConditionalTable t(rows, std::vector<double>(cols, 0.0));
    for (std::size_t x = 0; x < cols; ++x) {
      double s = 0;
      for (std::size_t i = 0; i < rows; ++i) {
        t[i][x] = ud(rng);
        s += t[i][x];
      }
      for (std::size_t i = 0; i < rows; ++i) t[i][x] /= s;
    }
    return t;
  };

  double recover_res = 0, eq11_failures = 0, infeasible_misses = 0;
  for (int rep_k = 0; rep_k < 50; ++rep_k) {
    const std::size_t nj = 2 + rep_k % 3, ni = 2 + (rep_k / 3) % 3, nx = nj + 2;
    const ConditionalTable r = random_stochastic(nj, nx);
    const ConditionalTable chan = random_stochastic(ni, nj);  // M~(i|j)
    ConditionalTable t(ni, std::vector<double>(nx, 0.0));
    for (std::size_t i = 0; i < ni; ++i)
      for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t j = 0; j < nj; ++j) t[i][x] += chan[i][j] * r[j][x];
    const ClassicalSimulation sim = classical_ensemble_map(t, r);
    if (!sim.feasible || !classical_quantitativity_check(sim, t, r)) eq11_failures += 1;
    if (sim.feasible)
      for (std::size_t i = 0; i < ni; ++i)
        for (std::size_t j = 0; j < nj; ++j)
          recover_res = std::max(recover_res, std::abs(sim.post_processing[i][j] - chan[i][j]));
  }
  add_check(rep, "classical_eq11_feasible_pairs", eq11_failures, 0);
  add_check(rep, "classical_channel_recovery", recover_res, 1e-9);

  // identical carriers give the identity post-processing
  const ConditionalTable r0 = random_stochastic(3, 5);
  const ClassicalSimulation ident = classical_ensemble_map(r0, r0);
  double id_res = ident.feasible ? 0.0 : 1.0;
  for (std::size_t i = 0; i < 3 && ident.feasible; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      id_res = std::max(id_res, std::abs(ident.post_processing[i][j] - (i == j ? 1.0 : 0.0)));
  add_check(rep, "classical_identity_case", id_res, 1e-9);

  // a strictly more informative tau than rho admits no simulation
  const ConditionalTable t_sharp = {{1.0, 0.0}, {0.0, 1.0}};
  const ConditionalTable r_flat = {{0.5, 0.5}, {0.5, 0.5}};
  const ClassicalSimulation inf = classical_ensemble_map(t_sharp, r_flat);
  infeasible_misses = inf.feasible ? 1.0 : 0.0;
  add_check(rep, "classical_infeasible_certificate", infeasible_misses, 0);

  // quantum contrast: the doubled morphism maps a PSD effect piece outside PSD
  const Superoperator lam2 = tensor(lambda_delta(0.03), lambda_delta(0.03));
  const ComplexMatrix witness = tetra_effect_piece(0, 0, 1);
  add_check(rep, "doubled_witness_negative", min_eigenvalue(lam2.apply(witness).hermitized(1e-9)),
            -1e-6);
}

}  // namespace

VerifyReport verify_suite(const std::string& suite, std::uint64_t seed, const Settings& s) {
  VerifyReport rep;
  rep.suite = suite;
  rep.seed = seed;
  if (suite == "morphisms" || suite == "all") suite_morphisms(rep, seed);
  if (suite == "povm" || suite == "all") suite_povm(rep, seed, s);
  if (suite == "measures" || suite == "all") suite_measures(rep, seed, s);
  if (suite == "classical" || suite == "all") suite_classical(rep, seed);
  if (rep.checks.empty())
    throw std::invalid_argument("verify_suite: unknown suite " + suite);
  return rep;
}

std::string verify_json(const VerifyReport& r, const Settings& s) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name},
                          {"residual", c.residual},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
  json payload = {{"suite", r.suite}, {"seed", r.seed}, {"checks", checks},
                  {"all_pass", r.all_pass()}};
  return wrap(s, std::move(payload)).dump(2) + "\n";
}

}  // namespace snqi
