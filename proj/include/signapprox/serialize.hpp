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

#include <string>
#include <vector>

#include "signapprox/asymptotics.hpp"
#include "signapprox/conformal.hpp"
#include "signapprox/real.hpp"
#include "signapprox/remez.hpp"

namespace signapprox {

/// Double value tagged at 53 bits: "p=53:<decimal>".
std::string tag_double(double x);

/// {"a","m","L","B","coeffs","alternants","dvp_gap","precision","iterations"};
/// coeffs is the ChebPoly object of q on [a^2, 1].
std::string sign_result_json(const SignPolyResult& result);
/// Inverse of sign_result_json.
SignPolyResult sign_result_from_json(const std::string& text);

struct SweepRow {
  int m = 0;
  Real a;
  Real L;
  Real B;
  Real scaled;
  Real target;
  Real gap;
};

SweepRow make_sweep_row(const SignPolyResult& result);

/// Columns m,a,L,B,scaled,target,gap with tagged values.
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct SweepTrend {
  Real a;
  TrendReport trend;
};

/// {"rows":[...], "trends":[{"a", "target", "last_rel_gap", "monotone_tail",
/// "aitken":[...], "aitken_last", "aitken_rel_gap", "aitken_iterated":[...]}]}
std::string sweep_json(const std::vector<SweepRow>& rows, const std::vector<SweepTrend>& trends);

std::string constant_json(const ConstantReport& report, const HalfPlaneMap& map);

std::string entire_json(double B, double A, const Real& L, const Real& t2);

struct LevyReport {
  int m = 0;
  Real a_star;
  Real L_star;
  Real scaled;
  Real levy_distance;
  Real predictor;
  double tol = 0.0;
};

std::string levy_json(const LevyReport& report);

}  // namespace signapprox
