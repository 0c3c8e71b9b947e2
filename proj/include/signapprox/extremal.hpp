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

#include "signapprox/conformal.hpp"
#include "signapprox/real.hpp"
#include "signapprox/remez.hpp"

namespace signapprox {

/// Roots of p' in (a, 1), increasing: sign changes of p' on a cosine-spaced
/// grid of 64 max(m, 1) points, each bisected to full precision.
std::vector<Real> critical_points(const SignPolyResult& result);

/// Continuous branch of phi with p = 1 - L cos(phi) along [a, 1]:
/// phi(a) = 0, phi(1) = pi (m + 1), increasing.
class PhiTransform {
 public:
  explicit PhiTransform(const SignPolyResult& source);

  /// Throws RepresentationError when |(1 - p(x)) / L| exceeds 1 by more
  /// than clamp_tolerance(); DomainError for x outside [a, 1].
  Real operator()(const Real& x) const;

  /// Knots c_0 = a < c_1 < ... < c_m < c_{m+1} = 1 between which the branch
  /// index is constant; branch k uses k pi + arccos for even k and
  /// (k+1) pi - arccos for odd k.
  const std::vector<Real>& branch_log() const { return knots_; }
  const Real& clamp_tolerance() const { return clamp_; }
  const SignPolyResult& source() const { return source_; }

 private:
  SignPolyResult source_;
  std::vector<Real> knots_;
  Real clamp_;
};

Real phi_from_poly(const SignPolyResult& result, const Real& x);

struct CriticalReport {
  std::vector<Real> critical_points;
  std::vector<Real> critical_values;
  bool alternation_ok = false;
  /// Extremes of p - sgn over X(a), both halves, endpoints included.
  int count_on_X = 0;
  /// Points (critical or endpoint) whose value misses 1 +- L.
  std::vector<Real> offending;
};

/// Critical values must be 1 + (-1)^(k-1) L at the k-th critical point and
/// 1 - L at a, each within tol L; exactly m interior critical points.
CriticalReport verify_critical_values(const SignPolyResult& result, double tol);

/// Extremal entire function on the ray x >= A: 1 - L cos(phi(x)) with
/// phi(x) = Im h(i sqrt(x^2 - A^2)), L = 1 / cosh B.
class EntireExtremal {
 public:
  explicit EntireExtremal(double B, const MeshSpec& mesh = {});

  double A() const { return solution_.A; }
  double L() const { return L_; }
  double B() const { return solution_.B; }
  /// Throws DomainError for x < A.
  double phi(double x) const;
  double operator()(double x) const;

 private:
  EntireSolution solution_;
  double L_;
};

double entire_extremal_boundary(double B, double x);

/// Plot rows x,p,kind over [-1.05, 1.05] at `samples` points (kind=curve)
/// followed by the alternants on both halves (kind=alternant).
std::string plot_csv(const SignPolyResult& result, int samples = 2000);

}  // namespace signapprox
