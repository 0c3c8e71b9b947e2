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

#include <functional>
#include <string>
#include <vector>

#include "signapprox/real.hpp"

namespace signapprox {

enum class Extrapolation { kForbid, kAllow };

/// Polynomial sum c_k T_k(s) where s maps [lo, hi] affinely onto [-1, 1].
class ChebPoly {
 public:
  ChebPoly(Real lo, Real hi, std::vector<Real> coeffs);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  const std::vector<Real>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Bits precision() const;

  /// Clenshaw evaluation. Outside [lo, hi] throws DomainError unless
  /// extrapolation is allowed.
  Real operator()(const Real& x, Extrapolation mode = Extrapolation::kForbid) const;
  ChebPoly derivative() const;

  /// {"interval":[lo,hi],"coeffs":[...]} with precision-tagged numbers.
  std::string to_json() const;
  static ChebPoly from_json(const std::string& text);

 private:
  Real lo_;
  Real hi_;
  std::vector<Real> coeffs_;
};

using RealFunction = std::function<Real(const Real&)>;

/// Degree-n interpolant at the n+1 first-kind Chebyshev nodes of [lo, hi].
/// Throws EvaluationError carrying the node if f is non-finite there.
ChebPoly cheb_interpolate(const RealFunction& f, const Real& lo, const Real& hi, int n);

/// First-kind Chebyshev nodes of [lo, hi], increasing, n+1 of them.
std::vector<Real> chebyshev_nodes(const Real& lo, const Real& hi, int n);
/// Chebyshev extreme (Lobatto) points of [lo, hi], increasing, n+1 of them.
std::vector<Real> chebyshev_lobatto(const Real& lo, const Real& hi, int n);

/// p(x) = x q(x^2), q living on [a^2, 1].
class OddPoly {
 public:
  OddPoly(ChebPoly base, Real a);

  const ChebPoly& base() const { return base_; }
  const Real& a() const { return a_; }
  int degree() const { return 2 * base_.degree() + 1; }
  Bits precision() const { return base_.precision(); }

  /// Defined for all real x; q is extended outside [a^2, 1] by its polynomial.
  Real operator()(const Real& x) const;
  /// p'(x) = q(x^2) + 2 x^2 q'(x^2).
  Real derivative(const Real& x) const;

 private:
  ChebPoly base_;
  ChebPoly dbase_;
  Real a_;
};

/// Checks that q lives on [a^2, 1] and wraps it as an odd polynomial.
OddPoly odd_lift(const ChebPoly& q, const Real& a);

/// Working precision for L_m(a): guard + ceil((2m+2) log2((1+a)/(1-a))).
Bits precision_for(const Real& a, int m, Bits guard = 64);
Bits precision_for(double a, int m, Bits guard = 64);

}  // namespace signapprox
