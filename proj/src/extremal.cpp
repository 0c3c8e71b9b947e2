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

#include "signapprox/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "signapprox/errors.hpp"

namespace signapprox {

std::vector<Real> critical_points(const SignPolyResult& r) {
  const OddPoly& p = r.p;
  const Bits P = p.precision();
  const Real a = r.a.with_precision(P);
  const int n = 64 * std::max(r.m, 1);
  const auto grid = chebyshev_lobatto(a, Real::one(P), n);
  std::vector<Real> roots;
  Real fl = p.derivative(grid[0]);
  for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
    Real fr = p.derivative(grid[j + 1]);
    if (fl.sign() != 0 && fr.sign() != 0 && fl.sign() != fr.sign()) {
      Real lo = grid[j];
      Real hi = grid[j + 1];
      Real flo = fl;
      for (int it = 0; it < P + 8; ++it) {
        Real mid = (lo + hi) / 2.0;
        if (mid <= lo || mid >= hi) break;
        Real fm = p.derivative(mid);
        if (fm.sign() == 0) {
          lo = mid;
          hi = mid;
          break;
        }
        if (fm.sign() == flo.sign()) {
          lo = std::move(mid);
          flo = std::move(fm);
        } else {
          hi = std::move(mid);
        }
      }
      roots.push_back((lo + hi) / 2.0);
    } else if (fr.sign() == 0 && j + 2 < grid.size()) {
      roots.push_back(grid[j + 1]);
    }
    fl = std::move(fr);
  }
  return roots;
}

PhiTransform::PhiTransform(const SignPolyResult& source) : source_(source) {
  const Bits P = source_.p.precision();
  if (!(source_.L > 0.0)) throw RepresentationError("PhiTransform: L must be positive", 0.0);
  knots_.push_back(source_.a.with_precision(P));
  for (Real& c : critical_points(source_)) knots_.push_back(std::move(c));
  knots_.push_back(Real::one(P));
  // Noise at the working precision, relative to L, plus the equioscillation
  // spread the solver stopped at.
  clamp_ = epsilon_bits(P - 16, P) / source_.L + source_.dvp_gap * 2.0;
}

Real PhiTransform::operator()(const Real& x) const {
  const Bits P = source_.p.precision();
  if (x < knots_.front() || x > knots_.back()) {
    throw DomainError("phi: x=" + x.to_decimal(17) + " outside [a, 1]");
  }
  Real v = (1.0 - source_.p(x)) / source_.L;
  if (abs(v) > 1.0 + clamp_) {
    throw RepresentationError("phi: |(1 - p(x))/L| = " + abs(v).to_decimal(17) +
                                  " exceeds 1 beyond tolerance",
                              x.to_double());
  }
  if (v > 1.0) v = Real::one(P);
  if (v < -1.0) v = -Real::one(P);
  // Branch k holds on [c_k, c_{k+1}].
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
  long k = static_cast<long>(it - knots_.begin()) - 1;
  k = std::clamp(k, 0L, static_cast<long>(knots_.size()) - 2);
  const Real pi = Real::pi(P);
  const Real ac = acos(v);
  return k % 2 == 0 ? pi * static_cast<double>(k) + ac : pi * static_cast<double>(k + 1) - ac;
}

Real phi_from_poly(const SignPolyResult& result, const Real& x) { return PhiTransform(result)(x); }

CriticalReport verify_critical_values(const SignPolyResult& r, double tol) {
  CriticalReport rep;
  const Bits P = r.p.precision();
  const Real L = r.L;
  const Real slack = L * tol;
  rep.critical_points = critical_points(r);
  bool ok = static_cast<int>(rep.critical_points.size()) == r.m;

  auto check = [&](const Real& x, const Real& expected) {
    const Real v = r.p(x);
    if (abs(v - expected) > slack) {
      ok = false;
      rep.offending.push_back(x);
    }
    return v;
  };
  const Real a = r.a.with_precision(P);
  check(a, 1.0 - L);
  for (std::size_t k = 0; k < rep.critical_points.size(); ++k) {
    const Real expected = k % 2 == 0 ? 1.0 + L : 1.0 - L;
    rep.critical_values.push_back(check(rep.critical_points[k], expected));
  }
  const std::size_t n_int = rep.critical_points.size();
  check(Real::one(P), n_int % 2 == 0 ? 1.0 + L : 1.0 - L);
  rep.alternation_ok = ok;
  rep.count_on_X = 2 * (static_cast<int>(n_int) + 2);
  return rep;
}

EntireExtremal::EntireExtremal(double B, const MeshSpec& mesh)
    : solution_(solve_entire(B, mesh)), L_(1.0 / std::cosh(B)) {}

double EntireExtremal::phi(double x) const {
  const double A = solution_.A;
  if (x < A) throw DomainError("entire extremal: x below A");
  const double y = std::sqrt((x - A) * (x + A));
  if (y == 0.0) return 0.0;
  return eval_map(solution_.map, Complex(0.0, y)).imag();
}

double EntireExtremal::operator()(double x) const { return 1.0 - L_ * std::cos(phi(x)); }

double entire_extremal_boundary(double B, double x) { return EntireExtremal(B)(x); }

std::string plot_csv(const SignPolyResult& r, int samples) {
  std::ostringstream os;
  os << "x,p,kind\n";
  char buf[128];
  const Bits P = r.p.precision();
  for (int i = 0; i < samples; ++i) {
    const Real x = Real(-1.05, P) + Real(2.1, P) * (static_cast<double>(i) / (samples - 1));
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,curve\n", x.to_double(), r.p(x).to_double());
    os << buf;
  }
  std::vector<Real> alt;
  for (auto it = r.alternants.rbegin(); it != r.alternants.rend(); ++it) alt.push_back(-*it);
  for (const Real& y : r.alternants) alt.push_back(y);
  for (const Real& x : alt) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,alternant\n", x.to_double(), r.p(x).to_double());
    os << buf;
  }
  return os.str();
}

}  // namespace signapprox
