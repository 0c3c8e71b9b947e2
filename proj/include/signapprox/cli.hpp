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

#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "signapprox/real.hpp"

namespace signapprox {

/// Invalid command-line configuration; maps to exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Command { kSolve, kSweep, kConstant, kEntire, kLevy, kVerify, kPlot };
enum class Format { kJson, kCsv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumeric = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::kSolve;
  /// Values of a as decimal or "p/q" text, parsed at the working precision of
  /// each solve. solve/plot take one value, sweep and verify any number.
  std::vector<std::string> a;
  /// Degrees; solve/plot/levy take one value, sweep and verify any number.
  std::vector<int> m;
  std::optional<double> B;
  /// Command tolerance; each command has its own default when unset.
  std::optional<double> tol;
  Bits guard_bits = 64;
  /// Output path; empty writes to the output stream.
  std::string output;
  std::optional<Format> format;
  int jobs = 1;
  /// Replace log(2 pi)/2 by the measured compute_c value in targets and
  /// predictors.
  bool use_measured_c = false;
  /// Mesh step in tau for constant and entire.
  std::optional<double> h_tau;
};

Command parse_command(std::string_view name);
std::string_view command_name(Command command);

/// "5:40" (inclusive range), "3,5,8" or "7".
std::vector<int> parse_m_list(std::string_view text);
/// Comma-separated decimals or fractions: "1/3,0.5".
std::vector<std::string> parse_a_list(std::string_view text);
/// Decimal or "p/q" at the given precision; UsageError on malformed text.
Real parse_real_text(std::string_view text, Bits precision);

/// Guard bits from SIGNAPPROX_GUARD_BITS, else 64; UsageError if malformed.
Bits default_guard_bits();

/// Throws UsageError if required parameters for the command are missing or
/// out of range.
void validate(const RunConfig& config);

/// Runs the command. Output goes to config.output or `out`; on numeric
/// failure a diagnostic JSON object is written to `err`. Returns the exit
/// status: 0 success, 1 numeric failure, 2 usage.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace signapprox
