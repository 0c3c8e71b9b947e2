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

#include <utility>
#include <vector>

#include "signapprox/chebyshev.hpp"
#include "signapprox/real.hpp"
#include "signapprox/remez.hpp"

namespace signapprox {

/// log(2 pi) / 2.
Real default_constant(Bits precision = kDefaultBits);

struct AsymptoticParams {
  Real a;
  int m = 0;
  Real A_m;
  Real sigma;
  Real c;
};

AsymptoticParams asymptotic_params(const Real& a, int m, const Real& c);

/// (m + 1/2) log((1+a)/(1-a)).
Real a_m_of(const Real& a, int m);
/// 2a / ((1 - a^2) log((1+a)/(1-a))).
Real sigma_of(const Real& a);
/// A_m + log(m)/2 + log(2a/(1-a^2))/2 + c; m >= 1.
Real b_m_predict(const Real& a, int m, const Real& c);

/// sqrt(m) ((1+a)/(1-a))^m L, in log space.
Real t1_scaled(const Real& a, int m, const Real& L);
/// (1-a) / sqrt(pi a).
Real t1_target(const Real& a);
/// e^{-c} sqrt(2) (1-a) / sqrt(a); equals t1_target at c = log(2 pi)/2.
Real weighted_limit(const Real& a, const Real& c);

/// sqrt(A) e^A L, in log space.
Real t2_scaled(const Real& A, const Real& L);
/// sqrt(2/pi).
Real t2_target(Bits precision = kDefaultBits);

/// sqrt(m) ((1+a)/(1-a))^m E.
Real bern_scaled(const Real& a, int m, const Real& E);
/// (1 - a^2) a^{-3/2} / (2 sqrt(pi)).
Real bern_target(const Real& a);

/// Aitken delta-squared: out[i] = x[i+2] - (dx)^2 / d2x over consecutive
/// triples. A zero second difference repeats x[i+2].
std::vector<Real> aitken(const std::vector<Real>& x);

struct TrendReport {
  std::vector<std::pair<int, Real>> samples;
  Real target;
  Real last_gap;
  /// Relative gap of the last sample.
  Real last_rel_gap;
  /// Strictly monotone over the final half of the samples.
  bool monotone_tail = false;
  std::vector<Real> aitken;
  Real aitken_last;
  Real aitken_rel_gap;
  /// Aitken applied to its own output until fewer than three values remain
  /// or `depth` passes have been made; last value of each pass.
  std::vector<Real> aitken_iterated;
};

TrendReport make_trend(std::vector<std::pair<int, Real>> samples, const Real& target, int depth = 3);

/// Smallest h in [0, 1] with sup_[h,1] |p - 1| <= h and -1 - h <= p <= 1 + h
/// on [0, h]; bisection to bracket width tol. Suprema are taken over critical
/// points of p and interval ends.
Real levy_distance(const OddPoly& p, double tol);

struct LevyFixedPoint {
  Real a_star;
  Real L_star;
  SignPolyResult solution;
  int solves = 0;
};

/// Bisection in a for L_m(a) = a, starting from [0.05, 0.9] and widening the
/// lower end while L_m(lo) < lo; stops at the first midpoint with
/// |L_m(a) - a| <= tol.
LevyFixedPoint levy_fixed_point(int m, double tol = 1e-6, Bits guard = 64);

/// a with 1/cosh(b_m_predict(a, m, c)) = a.
Real predictor_fixed_point(int m, const Real& c, double tol = 1e-12);

/// log m - log log m + log 4; m >= 3.
Real tri_b(int m, Bits precision = kDefaultBits);

}  // namespace signapprox
