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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "signapprox/cli.hpp"
#include "signapprox/errors.hpp"
#include "signapprox/serialize.hpp"

namespace sa = signapprox;
namespace fs = std::filesystem;
using sa::Real;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(const sa::RunConfig& config) {
  std::ostringstream out, err;
  const int status = sa::run(config, out, err);
  return {status, out.str(), err.str()};
}

sa::RunConfig config(sa::Command command) {
  sa::RunConfig c;
  c.command = command;
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int shell(const std::string& args, const fs::path& out) {
  const std::string cmd = std::string(SIGNAPPROX_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                          out.string() + ".err";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("signapprox_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(CliParse, Lists) {
  EXPECT_EQ(sa::parse_m_list("5:8"), (std::vector<int>{5, 6, 7, 8}));
  EXPECT_EQ(sa::parse_m_list("3, 1,4"), (std::vector<int>{3, 1, 4}));
  EXPECT_EQ(sa::parse_m_list("1,5:6"), (std::vector<int>{1, 5, 6}));
  EXPECT_THROW(sa::parse_m_list("9:3"), sa::UsageError);
  EXPECT_THROW(sa::parse_m_list("x"), sa::UsageError);
  EXPECT_EQ(sa::parse_a_list("1/3,0.5").size(), 2u);
  EXPECT_THROW(sa::parse_a_list("0.5,abc"), sa::UsageError);
  const Real t = sa::parse_real_text("1/3", 200);
  EXPECT_LE(sa::abs(t * 3.0 - 1.0), sa::epsilon_bits(198, 200));
  EXPECT_THROW(sa::parse_real_text("1/0", 64), sa::UsageError);
  EXPECT_EQ(sa::parse_command("levy"), sa::Command::kLevy);
  EXPECT_THROW(sa::parse_command("bogus"), sa::UsageError);
}

TEST(CliParse, GuardBitsFromEnvironment) {
  ::setenv("SIGNAPPROX_GUARD_BITS", "96", 1);
  EXPECT_EQ(sa::default_guard_bits(), 96);
  ::setenv("SIGNAPPROX_GUARD_BITS", "4", 1);
  EXPECT_THROW(sa::default_guard_bits(), sa::UsageError);
  ::unsetenv("SIGNAPPROX_GUARD_BITS");
  EXPECT_EQ(sa::default_guard_bits(), 64);
}

TEST(CliRun, SolveClosedForm) {
  auto c = config(sa::Command::kSolve);
  c.a = {"0.5"};
  c.m = {0};
  const auto o = run(c);
  ASSERT_EQ(o.status, sa::kExitOk) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  for (const char* key : {"a", "m", "L", "B", "coeffs", "alternants", "dvp_gap"}) EXPECT_TRUE(j.contains(key)) << key;
  const Real L = Real::from_tagged(j["L"].get<std::string>());
  EXPECT_NEAR(L.to_double(), 1.0 / 3.0, 1e-15);
  ASSERT_EQ(j["coeffs"]["coeffs"].size(), 1u);
  EXPECT_NEAR(Real::from_tagged(j["coeffs"]["coeffs"][0].get<std::string>()).to_double(), 4.0 / 3.0, 1e-15);

  const auto back = sa::sign_result_from_json(o.out);
  EXPECT_TRUE(back.L == L);
  EXPECT_EQ(back.m, 0);
  EXPECT_NEAR(back.p(Real(1.0, back.p.precision())).to_double(), 4.0 / 3.0, 1e-15);
}

TEST(CliRun, UsageErrors) {
  auto solve = config(sa::Command::kSolve);
  EXPECT_EQ(run(solve).status, sa::kExitUsage);
  solve.a = {"0.5"};
  EXPECT_EQ(run(solve).status, sa::kExitUsage);
  solve.m = {1};
  solve.a = {"1.5"};
  EXPECT_EQ(run(solve).status, sa::kExitUsage);
  solve.a = {"0.5"};
  solve.format = sa::Format::kCsv;
  EXPECT_EQ(run(solve).status, sa::kExitUsage);

  EXPECT_EQ(run(config(sa::Command::kEntire)).status, sa::kExitUsage);
  auto entire = config(sa::Command::kEntire);
  entire.B = 0.5;
  EXPECT_EQ(run(entire).status, sa::kExitUsage);
  auto levy = config(sa::Command::kLevy);
  levy.m = {0};
  EXPECT_EQ(run(levy).status, sa::kExitUsage);
  auto sweep = config(sa::Command::kSweep);
  sweep.a = {"0.5"};
  EXPECT_EQ(run(sweep).status, sa::kExitUsage);
}

TEST(CliRun, NumericFailureWritesDiagnostic) {
  auto c = config(sa::Command::kConstant);
  c.h_tau = 0.5;
  const auto o = run(c);
  EXPECT_EQ(o.status, sa::kExitNumeric);
  EXPECT_TRUE(o.out.empty());
  const auto j = nlohmann::json::parse(o.err);
  EXPECT_EQ(j["error"], "ResolutionError");
  EXPECT_EQ(j["command"], "constant");
}

TEST(CliRun, SweepOrderedAndJobIndependent) {
  auto c = config(sa::Command::kSweep);
  c.a = {"0.5", "1/3"};
  c.m = {4, 2, 3};
  c.format = sa::Format::kCsv;
  c.jobs = 1;
  const auto serial = run(c);
  ASSERT_EQ(serial.status, sa::kExitOk) << serial.err;
  c.jobs = 3;
  const auto parallel = run(c);
  EXPECT_EQ(serial.out, parallel.out);

  std::istringstream is(serial.out);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "m,a,L,B,scaled,target,gap");
  std::vector<std::string> ms;
  while (std::getline(is, line)) ms.push_back(line.substr(0, line.find(',')));
  EXPECT_EQ(ms, (std::vector<std::string>{"2", "3", "4", "2", "3", "4"}));
  EXPECT_NE(serial.out.find("p="), std::string::npos);
}

TEST(CliRun, SweepJsonHasTrend) {
  auto c = config(sa::Command::kSweep);
  c.a = {"1/3"};
  c.m = sa::parse_m_list("3:8");
  const auto o = run(c);
  ASSERT_EQ(o.status, sa::kExitOk) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  ASSERT_EQ(j["rows"].size(), 6u);
  ASSERT_EQ(j["trends"].size(), 1u);
  EXPECT_EQ(j["trends"][0]["aitken"].size(), 4u);
}

TEST(CliRun, VerifyPasses) {
  auto c = config(sa::Command::kVerify);
  c.a = {"0.3"};
  c.m = {0, 2};
  const auto o = run(c);
  EXPECT_EQ(o.status, sa::kExitOk) << o.err;
  EXPECT_TRUE(nlohmann::json::parse(o.out)["passed"].get<bool>());
}

TEST(CliRun, EntireAndLevy) {
  auto e = config(sa::Command::kEntire);
  e.B = 10.0;
  const auto oe = run(e);
  ASSERT_EQ(oe.status, sa::kExitOk) << oe.err;
  const auto je = nlohmann::json::parse(oe.out);
  EXPECT_NEAR(Real::from_tagged(je["A"].get<std::string>()).to_double(), 8.04, 0.05);

  auto l = config(sa::Command::kLevy);
  l.m = {3};
  const auto ol = run(l);
  ASSERT_EQ(ol.status, sa::kExitOk) << ol.err;
  const auto jl = nlohmann::json::parse(ol.out);
  const double a = Real::from_tagged(jl["a_star"].get<std::string>()).to_double();
  const double h = Real::from_tagged(jl["levy_distance"].get<std::string>()).to_double();
  EXPECT_NEAR(h, a, 2e-6);
}

TEST(CliBinary, ExitCodesAndDeterminism) {
  const fs::path dir = scratch_dir();
  EXPECT_EQ(shell("solve --a 1/3 --m 6", dir / "s1.json"), 0);
  EXPECT_EQ(shell("solve --a 1/3 --m 6", dir / "s2.json"), 0);
  EXPECT_EQ(slurp(dir / "s1.json"), slurp(dir / "s2.json"));
  EXPECT_FALSE(slurp(dir / "s1.json").empty());

  EXPECT_EQ(shell("sweep --a 0.2,0.6 --m 1:5 --format csv --jobs 1", dir / "w1.csv"), 0);
  EXPECT_EQ(shell("sweep --a 0.2,0.6 --m 1:5 --format csv --jobs 4", dir / "w2.csv"), 0);
  EXPECT_EQ(slurp(dir / "w1.csv"), slurp(dir / "w2.csv"));

  EXPECT_EQ(shell("solve --a 0.5 --m 2 --out " + (dir / "o.json").string(), dir / "stdout.txt"), 0);
  EXPECT_TRUE(slurp(dir / "stdout.txt").empty());
  EXPECT_EQ(slurp(dir / "o.json"), slurp(dir / "o.json"));
  EXPECT_NE(slurp(dir / "o.json").find("\"L\""), std::string::npos);

  EXPECT_EQ(shell("solve --a 0.5", dir / "u.txt"), 2);
  EXPECT_EQ(shell("frobnicate", dir / "u2.txt"), 2);
  EXPECT_EQ(shell("plot --a 0.1 --m 4 --format json", dir / "u3.txt"), 2);
  EXPECT_EQ(shell("constant --h-tau 0.5", dir / "n.txt"), 1);
  const auto diag = nlohmann::json::parse(slurp(dir / "n.txt.err"));
  EXPECT_EQ(diag["error"], "ResolutionError");
  fs::remove_all(dir);
}

TEST(CliBinary, GuardBitsEnvironmentChangesPrecision) {
  const fs::path dir = scratch_dir();
  ASSERT_EQ(shell("solve --a 0.5 --m 1", dir / "g64.json"), 0);
  ASSERT_EQ(std::system(("SIGNAPPROX_GUARD_BITS=128 " + std::string(SIGNAPPROX_CLI_PATH) +
                         " solve --a 0.5 --m 1 > " + (dir / "g128.json").string())
                            .c_str()),
            0);
  const auto j64 = nlohmann::json::parse(slurp(dir / "g64.json"));
  const auto j128 = nlohmann::json::parse(slurp(dir / "g128.json"));
  EXPECT_EQ(j128["precision"].get<int>() - j64["precision"].get<int>(), 64);
  fs::remove_all(dir);
}
