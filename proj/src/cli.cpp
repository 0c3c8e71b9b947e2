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

#include "signapprox/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "signapprox/asymptotics.hpp"
#include "signapprox/chebyshev.hpp"
#include "signapprox/conformal.hpp"
#include "signapprox/errors.hpp"
#include "signapprox/extremal.hpp"
#include "signapprox/remez.hpp"
#include "signapprox/serialize.hpp"

namespace signapprox {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kSolveTol = 1e-12;
constexpr double kLevyTol = 1e-6;
constexpr double kMapTol = 1e-12;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view text) {
  text = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Working precision for a solve at (a, m).
Bits working_bits(const std::string& a_text, int m, Bits guard) {
  return precision_for(parse_real_text(a_text, 64), m, guard);
}

Real parse_a(const std::string& text, int m, Bits guard) {
  return parse_real_text(text, working_bits(text, m, guard));
}

double measured_c(const RunConfig& config) {
  MeshSpec mesh;
  if (config.h_tau) mesh.h_tau = *config.h_tau;
  const HalfPlaneMap map = solve_halfplane_map(BoundaryCurve::omega_star(), 1.0, mesh, kMapTol);
  return compute_c(map).richardson;
}

Real constant_for(const RunConfig& config, Bits precision) {
  return config.use_measured_c ? Real(measured_c(config), precision) : default_constant(precision);
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads; results land in
// caller-owned slots so the order is independent of completion order. The
// first failure by index is rethrown.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min(jobs, n));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string run_solve(const RunConfig& config) {
  const int m = config.m.front();
  const Real a = parse_a(config.a.front(), m, config.guard_bits);
  return sign_result_json(solve_sign_poly(a, m, config.tol.value_or(kSolveTol), config.guard_bits));
}

std::string run_plot(const RunConfig& config) {
  const int m = config.m.front();
  const Real a = parse_a(config.a.front(), m, config.guard_bits);
  return plot_csv(solve_sign_poly(a, m, config.tol.value_or(kSolveTol), config.guard_bits));
}

std::string run_sweep(const RunConfig& config) {
  // Jobs ordered by (a, m).
  std::vector<std::pair<std::string, int>> keys;
  std::vector<std::string> as = config.a;
  std::sort(as.begin(), as.end(), [](const std::string& x, const std::string& y) {
    return parse_real_text(x, 256) < parse_real_text(y, 256);
  });
  as.erase(std::unique(as.begin(), as.end(),
                       [](const std::string& x, const std::string& y) {
                         return parse_real_text(x, 256) == parse_real_text(y, 256);
                       }),
           as.end());
  std::vector<int> ms = config.m;
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  for (const auto& a : as) {
    for (int m : ms) keys.emplace_back(a, m);
  }

  std::optional<double> c_measured;
  if (config.use_measured_c) c_measured = measured_c(config);

  std::vector<SweepRow> rows(keys.size());
  const double tol = config.tol.value_or(kSolveTol);
  parallel_for(static_cast<int>(keys.size()), config.jobs, [&](int i) {
    const auto& [a_text, m] = keys[static_cast<std::size_t>(i)];
    const Real a = parse_a(a_text, m, config.guard_bits);
    SweepRow row = make_sweep_row(solve_sign_poly(a, m, tol, config.guard_bits));
    if (c_measured) {
      row.target = weighted_limit(row.a.with_precision(row.L.precision()), Real(*c_measured, row.L.precision()));
      row.gap = (row.scaled - row.target) / row.target;
    }
    rows[static_cast<std::size_t>(i)] = std::move(row);
  });

  if (config.format.value_or(Format::kJson) == Format::kCsv) return sweep_csv(rows);

  std::vector<SweepTrend> trends;
  std::size_t k = 0;
  for (std::size_t ia = 0; ia < as.size(); ++ia) {
    std::vector<std::pair<int, Real>> samples;
    Real target;
    for (std::size_t im = 0; im < ms.size(); ++im, ++k) {
      samples.emplace_back(rows[k].m, rows[k].scaled);
      target = rows[k].target;
    }
    trends.push_back({rows[k - 1].a, make_trend(std::move(samples), target)});
  }
  return sweep_json(rows, trends);
}

std::string run_constant(const RunConfig& config) {
  MeshSpec mesh;
  if (config.h_tau) mesh.h_tau = *config.h_tau;
  const HalfPlaneMap map =
      solve_halfplane_map(BoundaryCurve::omega_star(), 1.0, mesh, config.tol.value_or(kMapTol));
  return constant_json(compute_c(map), map);
}

std::string run_entire(const RunConfig& config) {
  const double B = *config.B;
  const double A = entire_A_of_B(B, config.tol.value_or(kMapTol));
  const Bits P = 128;
  const Real L = 1.0 / cosh(Real(B, P));
  return entire_json(B, A, L, t2_scaled(Real(A, P), L));
}

std::string run_levy(const RunConfig& config) {
  const int m = config.m.front();
  const double tol = config.tol.value_or(kLevyTol);
  LevyFixedPoint fp = levy_fixed_point(m, tol, config.guard_bits);
  LevyReport rep;
  rep.m = m;
  rep.a_star = fp.a_star;
  rep.L_star = fp.L_star;
  const Bits P = fp.a_star.precision();
  rep.scaled = fp.a_star * static_cast<double>(m) / log(Real(static_cast<long>(m), P));
  rep.levy_distance = levy_distance(fp.solution.p, tol / 10.0);
  rep.predictor = predictor_fixed_point(m, constant_for(config, 128));
  rep.tol = tol;
  return levy_json(rep);
}

struct Check {
  std::string a;
  int m = 0;
  std::string name;
  bool passed = false;
  std::string value;
};

std::vector<Check> verify_one(const std::string& a_text, int m, const RunConfig& config) {
  std::vector<Check> checks;
  const double tol = config.tol.value_or(kSolveTol);
  const Real a = parse_a(a_text, m, config.guard_bits);
  const SignPolyResult r = solve_sign_poly(a, m, tol, config.guard_bits);
  const Bits P = r.p.precision();
  auto add = [&](std::string name, bool ok, const Real& value) {
    checks.push_back({a_text, m, std::move(name), ok, value.to_tagged()});
  };

  if (m == 0) {
    const Real exact = (1.0 - a) / (1.0 + a);
    const Real err = abs(r.L - exact) / exact;
    add("closed_form_L0", err <= epsilon_bits(P - 8, P), err);
  }
  if (m <= 4) {
    const SignPolyResult d = solve_sign_direct(a, m, tol, config.guard_bits);
    const Real err = abs(r.L - d.L) / r.L;
    add("oracle_equivalence", err <= 1e-8, err);
  }
  const CriticalReport crit = verify_critical_values(r, 1e-6);
  add("critical_values", crit.alternation_ok && crit.count_on_X == 2 * m + 4,
      Real(static_cast<long>(crit.count_on_X), 64));

  const PhiTransform phi(r);
  Real worst_phi = Real::zero(P);
  Real worst_sup = Real::zero(P);
  Real worst_odd = Real::zero(P);
  const int n = 256;
  for (int i = 0; i <= n; ++i) {
    const Real x = a + (1.0 - a) * (static_cast<double>(i) / n);
    const Real px = r.p(x);
    worst_phi = max(worst_phi, abs(1.0 - r.L * cos(phi(x)) - px));
    worst_sup = max(worst_sup, abs(px - 1.0));
    worst_odd = max(worst_odd, abs(r.p(-x) + px));
  }
  add("phi_roundtrip", worst_phi <= epsilon_bits(P - 24, P), worst_phi);
  add("sup_norm", worst_sup <= r.L * (1.0 + 1e-6), worst_sup / r.L);
  add("odd_symmetry", worst_odd <= epsilon_bits(P - 8, P), worst_odd);
  return checks;
}

std::string run_verify(const RunConfig& config, bool& all_passed) {
  std::vector<std::string> as = config.a;
  if (as.empty()) as = {"0.1", "0.5", "0.9"};
  std::vector<int> ms = config.m;
  if (ms.empty()) ms = {0, 1, 2, 3, 4};
  std::vector<std::pair<std::string, int>> keys;
  for (const auto& a : as) {
    for (int m : ms) keys.emplace_back(a, m);
  }
  std::vector<std::vector<Check>> results(keys.size());
  parallel_for(static_cast<int>(keys.size()), config.jobs, [&](int i) {
    const auto& [a, m] = keys[static_cast<std::size_t>(i)];
    results[static_cast<std::size_t>(i)] = verify_one(a, m, config);
  });
  Json j;
  j["checks"] = Json::array();
  all_passed = true;
  for (const auto& group : results) {
    for (const Check& c : group) {
      all_passed = all_passed && c.passed;
      j["checks"].push_back(
          {{"a", c.a}, {"m", c.m}, {"name", c.name}, {"passed", c.passed}, {"value", c.value}});
    }
  }
  j["passed"] = all_passed;
  return j.dump(2) + "\n";
}

std::string diagnostic(const RunConfig& config, const std::string& kind, const std::string& message,
                       const Json& extra = Json::object()) {
  Json j;
  j["command"] = std::string(command_name(config.command));
  j["error"] = kind;
  j["message"] = message;
  for (const auto& [k, v] : extra.items()) j[k] = v;
  return j.dump() + "\n";
}

}  // namespace

Command parse_command(std::string_view name) {
  static const std::map<std::string_view, Command> table = {
      {"solve", Command::kSolve},   {"sweep", Command::kSweep},   {"constant", Command::kConstant},
      {"entire", Command::kEntire}, {"levy", Command::kLevy},     {"verify", Command::kVerify},
      {"plot", Command::kPlot}};
  const auto it = table.find(name);
  if (it == table.end()) throw UsageError("unknown command '" + std::string(name) + "'");
  return it->second;
}

std::string_view command_name(Command command) {
  switch (command) {
    case Command::kSolve: return "solve";
    case Command::kSweep: return "sweep";
    case Command::kConstant: return "constant";
    case Command::kEntire: return "entire";
    case Command::kLevy: return "levy";
    case Command::kVerify: return "verify";
    case Command::kPlot: return "plot";
  }
  return "unknown";
}

std::vector<int> parse_m_list(std::string_view text) {
  std::vector<int> out;
  for (std::string_view part : split(text, ',')) {
    const std::size_t colon = part.find(':');
    if (colon == std::string_view::npos) {
      out.push_back(parse_int(part));
      continue;
    }
    const int lo = parse_int(part.substr(0, colon));
    const int hi = parse_int(part.substr(colon + 1));
    if (hi < lo) throw UsageError("empty m range '" + std::string(part) + "'");
    for (int m = lo; m <= hi; ++m) out.push_back(m);
  }
  return out;
}

std::vector<std::string> parse_a_list(std::string_view text) {
  std::vector<std::string> out;
  for (std::string_view part : split(text, ',')) {
    parse_real_text(part, 64);
    out.emplace_back(part);
  }
  return out;
}

Real parse_real_text(std::string_view text, Bits precision) {
  text = trim(text);
  try {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Real::from_decimal(text, precision);
    const Real num = Real::from_decimal(trim(text.substr(0, slash)), precision);
    const Real den = Real::from_decimal(trim(text.substr(slash + 1)), precision);
    if (den.is_zero()) throw UsageError("zero denominator in '" + std::string(text) + "'");
    return num / den;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + std::string(text) + "'");
  }
}

Bits default_guard_bits() {
  const char* env = std::getenv("SIGNAPPROX_GUARD_BITS");
  if (env == nullptr || *env == '\0') return 64;
  const int v = parse_int(env);
  if (v < 8) throw UsageError("SIGNAPPROX_GUARD_BITS must be >= 8");
  return v;
}

void validate(const RunConfig& c) {
  const auto need_one_a = [&] {
    if (c.a.size() != 1) throw UsageError(std::string(command_name(c.command)) + " needs exactly one --a");
  };
  const auto need_one_m = [&](int min_m) {
    if (c.m.size() != 1) throw UsageError(std::string(command_name(c.command)) + " needs exactly one --m");
    if (c.m.front() < min_m) {
      throw UsageError(std::string(command_name(c.command)) + " needs --m >= " + std::to_string(min_m));
    }
  };
  for (const auto& a : c.a) {
    const Real v = parse_real_text(a, 64);
    if (!(v > 0.0 && v < 1.0)) throw UsageError("--a must lie in (0, 1), got '" + a + "'");
  }
  for (int m : c.m) {
    if (m < 0) throw UsageError("--m must be nonnegative");
  }
  if (c.tol && !(*c.tol > 0.0)) throw UsageError("--tol must be positive");
  if (c.guard_bits < 8) throw UsageError("--guard-bits must be >= 8");
  if (c.jobs < 1) throw UsageError("--jobs must be >= 1");
  if (c.h_tau && !(*c.h_tau > 0.0)) throw UsageError("--h-tau must be positive");

  const Format fmt = c.format.value_or(c.command == Command::kPlot ? Format::kCsv : Format::kJson);
  if (fmt == Format::kCsv && c.command != Command::kSweep && c.command != Command::kPlot) {
    throw UsageError("--format csv applies to sweep and plot only");
  }
  if (fmt == Format::kJson && c.command == Command::kPlot) throw UsageError("plot emits csv only");

  switch (c.command) {
    case Command::kSolve:
    case Command::kPlot:
      need_one_a();
      need_one_m(0);
      break;
    case Command::kSweep:
      if (c.a.empty() || c.m.empty()) throw UsageError("sweep needs --a and --m");
      break;
    case Command::kConstant:
      break;
    case Command::kEntire:
      if (!c.B) throw UsageError("entire needs --B");
      if (!(*c.B >= 1.0)) throw UsageError("entire needs --B >= 1");
      break;
    case Command::kLevy:
      need_one_m(1);
      break;
    case Command::kVerify:
      break;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string text;
  int status = kExitOk;
  try {
    switch (config.command) {
      case Command::kSolve: text = run_solve(config); break;
      case Command::kSweep: text = run_sweep(config); break;
      case Command::kConstant: text = run_constant(config); break;
      case Command::kEntire: text = run_entire(config); break;
      case Command::kLevy: text = run_levy(config); break;
      case Command::kPlot: text = run_plot(config); break;
      case Command::kVerify: {
        bool ok = true;
        text = run_verify(config, ok);
        if (!ok) {
          status = kExitNumeric;
          err << diagnostic(config, "VerificationFailure", "one or more invariant checks failed");
        }
        break;
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << diagnostic(config, "ConvergenceError", e.what(), {{"last_gap", e.last_gap()}});
    return kExitNumeric;
  } catch (const EvaluationError& e) {
    err << diagnostic(config, "EvaluationError", e.what(), {{"node", e.node()}});
    return kExitNumeric;
  } catch (const RepresentationError& e) {
    err << diagnostic(config, "RepresentationError", e.what(), {{"x", e.x()}});
    return kExitNumeric;
  } catch (const ExchangeError& e) {
    err << diagnostic(config, "ExchangeError", e.what());
    return kExitNumeric;
  } catch (const ResolutionError& e) {
    err << diagnostic(config, "ResolutionError", e.what());
    return kExitNumeric;
  } catch (const DomainError& e) {
    err << diagnostic(config, "DomainError", e.what());
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << diagnostic(config, "InternalError", e.what());
    return kExitNumeric;
  }

  if (config.output.empty()) {
    out << text;
  } else {
    std::ofstream f(config.output, std::ios::binary | std::ios::trunc);
    f << text;
    if (!f) {
      err << diagnostic(config, "IOError", "cannot write " + config.output);
      return kExitNumeric;
    }
  }
  return status;
}

}  // namespace signapprox
