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

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "snqi/report.hpp"

namespace {

int write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return 1;
  }
  f << content;
  return f.good() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin-carrier information toolkit"};
  app.require_subcommand(1);

  snqi::Settings settings;
  app.add_option("--theta-nodes", settings.theta_nodes, "Gauss-Legendre nodes in cos(theta)");
  app.add_option("--phi-nodes", settings.phi_nodes, "uniform azimuth nodes");
  app.add_option("--mc-samples", settings.mc_samples, "Monte-Carlo oracle sample count");
  app.add_option("--seed", settings.seed, "random seed for sampling checks");

  // table
  auto* tbl = app.add_subcommand("table", "fidelity summary at one delta");
  double tbl_delta = 0.0;
  std::string tbl_out;
  tbl->add_option("--delta", tbl_delta, "noise parameter")->required()->check(CLI::Range(0.0, 1.0));
  tbl->add_option("--out", tbl_out, "optional JSON output path");

  // sweep
  auto* sw = app.add_subcommand("sweep", "delta sweep of all measures");
  double sw_min = 0.0, sw_max = 0.1;
  std::size_t sw_steps = 101;
  std::string sw_out, sw_format = "csv";
  sw->add_option("--min", sw_min, "lowest delta")->required();
  sw->add_option("--max", sw_max, "highest delta")->required();
  sw->add_option("--steps", sw_steps, "grid points")->required();
  sw->add_option("--out", sw_out, "output path")->required();
  sw->add_option("--format", sw_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // verify
  auto* vf = app.add_subcommand("verify", "run a verification suite");
  std::string vf_suite = "all", vf_out;
  std::uint64_t vf_seed = 12345;
  vf->add_option("--suite", vf_suite, "morphisms|povm|measures|classical|all")
      ->check(CLI::IsMember({"morphisms", "povm", "measures", "classical", "all"}));
  vf->add_option("--seed", vf_seed, "sampling seed");
  vf->add_option("--out", vf_out, "optional JSON report path");

  // figure
  auto* fg = app.add_subcommand("figure", "emit figure data");
  std::string fg_which, fg_out;
  fg->add_option("--which", fg_which, "fig3|fig5|fig6")
      ->required()
      ->check(CLI::IsMember({"fig3", "fig5", "fig6"}));
  fg->add_option("--out", fg_out, "output path")->required();

  // choi
  auto* ch = app.add_subcommand("choi", "dump Choi spectra as JSON");
  double ch_delta = 0.0;
  ch->add_option("--delta", ch_delta, "noise parameter")->required()->check(CLI::Range(0.0, 1.0));

  // povm
  auto* pv = app.add_subcommand("povm", "dump POVM effects and diagnostics as JSON");
  std::string pv_out;
  pv->add_option("--dump", pv_out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  }

  try {
    if (tbl->parsed()) {
      std::cout << snqi::table_text(tbl_delta);
      if (!tbl_out.empty()) return write_file(tbl_out, snqi::table_json(tbl_delta, settings));
      return 0;
    }
    if (sw->parsed()) {
      const auto records = snqi::sweep(sw_min, sw_max, sw_steps);
      const std::string body =
          sw_format == "csv" ? snqi::sweep_csv(records) : snqi::sweep_json(records, settings);
      return write_file(sw_out, body);
    }
    if (vf->parsed()) {
      const snqi::VerifyReport rep = snqi::verify_suite(vf_suite, vf_seed, settings);
      const std::string body = snqi::verify_json(rep, settings);
      if (!vf_out.empty()) {
        if (int rc = write_file(vf_out, body)) return rc;
      } else {
        std::cout << body;
      }
      for (const auto& c : rep.checks)
        std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << " residual="
                  << snqi::format_double(c.residual) << " tol=" << snqi::format_double(c.tolerance)
                  << "\n";
      return rep.all_pass() ? 0 : 1;
    }
    if (fg->parsed()) return write_file(fg_out, snqi::figure_data(fg_which, settings));
    if (ch->parsed()) {
      std::cout << snqi::choi_json(ch_delta, settings);
      return 0;
    }
    if (pv->parsed()) return write_file(pv_out, snqi::povm_json(settings));
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
