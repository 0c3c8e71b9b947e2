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
#include <string>
#include <vector>

#include "signapprox/chebyshev.hpp"
#include "signapprox/real.hpp"

namespace signapprox {

/// Minimize sup over [lo, hi] of |w(x) (q(x) - g(x))| over deg q <= degree.
struct ApproxProblem {
  Real lo;
  Real hi;
  RealFunction weight;
  RealFunction target;
  int degree = 0;
  Bits precision = kDefaultBits;
};

/// w = sqrt(x), g = 1/sqrt(x) on [a^2, 1]: the odd sign problem after y = x^2.
ApproxProblem sign_problem(const Real& a, int m, Bits precision);
/// w = 1, g = 1/sqrt(x) on [a^2, 1].
ApproxProblem bernstein_problem(const Real& a, int m, Bits precision);

struct ReferenceSet {
  std::vector<Real> points;
  /// Sign of the residual at each point; strictly alternating.
  std::vector<int> signs;
};

struct MinimaxResult {
  ChebPoly q;
  Real L;
  ReferenceSet reference;
  Real dvp_gap;
  Real grid_max;
  int iterations = 0;
  ApproxProblem problem;
};

struct RemezOptions {
  /// Relative dvp_gap target; 0 converges to the working-precision noise floor.
  double tol = 1e-12;
  int max_iterations = 100;
  /// Grid subdivisions of each reference gap in the extremum search.
  int grid_density = 32;
  /// Warm-start reference (m+2 points in [lo, hi]); Chebyshev points otherwise.
  std::optional<std::vector<Real>> initial_reference;
};

/// Weighted residual w(x) (q(x) - g(x)).
Real weighted_residual(const ApproxProblem& problem, const ChebPoly& q, const Real& x);

MinimaxResult solve_weighted_minimax(const ApproxProblem& problem, const RemezOptions& options = {});

struct SignPolyResult {
  OddPoly p;
  Real L;
  /// Extreme points of p - 1 on [a, 1], increasing.
  std::vector<Real> alternants;
  Real B;
  Real dvp_gap;
  int m = 0;
  Real a;
  int iterations = 0;
};

/// Best odd polynomial of degree 2m+1 for sgn on [-1,-a] u [a,1], computed at
/// precision_for(a, m, guard).
SignPolyResult solve_sign_poly(const Real& a, int m, double tol = 1e-12, Bits guard = 64,
                               const std::optional<std::vector<Real>>& warm_reference = std::nullopt);
SignPolyResult solve_sign_poly(double a, int m, double tol = 1e-12, Bits guard = 64);

/// Independent route: linear program over odd Chebyshev polynomials on a
/// discrete grid of [a, 1], refined by cutting planes at the true extrema.
SignPolyResult solve_sign_direct(const Real& a, int m, double tol = 1e-12, Bits guard = 64);
SignPolyResult solve_sign_direct(double a, int m, double tol = 1e-12, Bits guard = 64);

struct Certificate {
  Real lower;
  Real upper;
  Real gap;
};

/// lower = min |residual| over the reference (0 unless the signs alternate);
/// upper = max |residual| over a grid of grid_factor (m+2) points plus the
/// reference.
Certificate certify(const MinimaxResult& result, int grid_factor = 64);

}  // namespace signapprox
