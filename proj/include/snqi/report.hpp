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

#ifndef SNQI_REPORT_HPP
#define SNQI_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace snqi {

// Quadrature and sampling settings embedded in every report.
struct Settings {
  std::size_t theta_nodes = 64;
  std::size_t phi_nodes = 64;
  std::size_t mc_samples = 1000000;
  std::uint64_t seed = 20260810ULL;
};

struct SweepRecord {
  double delta = 0;
  double f_single_rho = 0, f_single_tau = 0, f_double_rho = 0, f_double_tau_lb = 0;
  double mi_single_rho = 0, mi_single_tau = 0, mi_double_rho = 0, mi_double_tau = 0;
  double chi_rho = 0, chi_tau = 0;
  bool snqi = false;
};

/// Closed-form record at one grid point; the delta = 1 MI limits are 0.
SweepRecord sweep_record(double delta);

std::vector<SweepRecord> sweep(double delta_min, double delta_max, std::size_t steps);

/// Fixed header, 17-significant-digit floats, one line per record.
std::string sweep_csv(const std::vector<SweepRecord>& records);
std::string sweep_json(const std::vector<SweepRecord>& records, const Settings& s);

/// Rendered Table-like fidelity summary at one delta, plus its JSON payload.
std::string table_text(double delta);
std::string table_json(double delta, const Settings& s);

std::string figure_data(const std::string& which, const Settings& s);  // CSV

std::string choi_json(double delta, const Settings& s);
std::string povm_json(const Settings& s);

struct Check {
  std::string name;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;
  std::uint64_t seed = 0;

  bool all_pass() const;
};

/// suite in {morphisms, povm, measures, classical, all}.
VerifyReport verify_suite(const std::string& suite, std::uint64_t seed, const Settings& s);

std::string verify_json(const VerifyReport& r, const Settings& s);

std::string format_double(double v);  // 17 significant digits

}  // namespace snqi

#endif  // SNQI_REPORT_HPP
