// Copyright 2026 The signapprox Authors
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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "signapprox/cli.hpp"

namespace sa = signapprox;

int main(int argc, char** argv) {
  CLI::App app{"Minimax approximation of sgn on two symmetric intervals"};
  app.require_subcommand(1);

  std::string a_text;
  std::string m_text;
  double B = 0.0;
  double tol = 0.0;
  double h_tau = 0.0;
  long guard = 0;
  int jobs = 1;
  std::string format;
  std::string out;
  bool use_measured_c = false;

  const std::map<std::string, std::string> help = {
      {"solve", "Best odd polynomial of degree 2m+1 for sgn on [-1,-a] u [a,1] (JSON)"},
      {"sweep", "Scaled errors and trend over a grid of (a, m) (JSON, or CSV with --format csv)"},
      {"constant", "The constant c as a boundary integral of the quadrant map (JSON)"},
      {"entire", "Corner abscissa A(B) and the scaled error of the extremal entire function (JSON)"},
      {"levy", "Fixed point a = L_m(a) and its Levy distance (JSON)"},
      {"verify", "Invariant checks over a grid of (a, m); nonzero exit on failure (JSON)"},
      {"plot", "Graph of p_m on [-1.05, 1.05] plus alternants (CSV)"}};

  for (const auto& [name, text] : help) {
    CLI::App* sub = app.add_subcommand(name, text);
    sub->add_option("--a", a_text, "a in (0,1); decimal or p/q, comma-separated for sweep/verify");
    sub->add_option("--m", m_text, "degree index; list '3,5' or range '5:40' for sweep/verify");
    sub->add_option("--B", B, "B >= 1 for entire");
    sub->add_option("--tol", tol, "command tolerance");
    sub->add_option("--guard-bits", guard, "guard bits (default SIGNAPPROX_GUARD_BITS or 64)");
    sub->add_option("--jobs", jobs, "concurrent solver jobs")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", out, "output file (default stdout)");
    sub->add_option("--h-tau", h_tau, "conformal mesh step in tau");
    sub->add_flag("--use-measured-c", use_measured_c, "use the measured constant c in targets");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return sa::kExitUsage;
  }

  sa::RunConfig config;
  try {
    const CLI::App* sub = app.get_subcommands().front();
    config.command = sa::parse_command(sub->get_name());
    if (sub->count("--a") > 0) config.a = sa::parse_a_list(a_text);
    if (sub->count("--m") > 0) config.m = sa::parse_m_list(m_text);
    if (sub->count("--B") > 0) config.B = B;
    if (sub->count("--tol") > 0) config.tol = tol;
    if (sub->count("--h-tau") > 0) config.h_tau = h_tau;
    config.guard_bits = sub->count("--guard-bits") > 0 ? guard : sa::default_guard_bits();
    config.jobs = jobs;
    if (!format.empty()) config.format = format == "csv" ? sa::Format::kCsv : sa::Format::kJson;
    config.output = out;
    config.use_measured_c = use_measured_c;
  } catch (const sa::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return sa::kExitUsage;
  }
  return sa::run(config, std::cout, std::cerr);
}
