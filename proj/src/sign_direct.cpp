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

// Sign approximation as a discrete linear program over odd polynomials on
// [a, 1], independent of the weighted one-interval reduction.

#include <algorithm>

#include "signapprox/errors.hpp"
#include "signapprox/linear_program.hpp"
#include "signapprox/remez.hpp"

namespace signapprox {

namespace {

constexpr int kMaxCuts = 40;

// p(y) = sum_k b_k T_{2k+1}(y) on [-1, 1].
ChebPoly odd_series(const std::vector<Real>& b, Bits P) {
  std::vector<Real> c(2 * b.size(), Real::zero(P));
  for (std::size_t k = 0; k < b.size(); ++k) c[2 * k + 1] = b[k];
  return ChebPoly(Real(-1.0, P), Real::one(P), std::move(c));
}

// Local extrema of p - 1 on [a, 1]: endpoints plus roots of p', isolated by
// sign changes on `grid` and bisected to full precision.
std::vector<Real> extrema(const ChebPoly& p, const ChebPoly& dp, const std::vector<Real>& grid) {
  std::vector<Real> out{grid.front()};
  for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
    Real l = grid[j];
    Real r = grid[j + 1];
    Real fl = dp(l);
    const Real fr = dp(r);
    if (fl.sign() == 0 || fl.sign() == fr.sign()) continue;
    const Bits P = p.precision();
    for (int it = 0; it < P + 8; ++it) {
      Real mid = (l + r) / 2.0;
      if (mid <= l || mid >= r) break;
      Real fm = dp(mid);
      if (fm.sign() == fl.sign()) {
        l = std::move(mid);
        fl = std::move(fm);
      } else {
        r = std::move(mid);
      }
    }
    out.push_back((l + r) / 2.0);
  }
  out.push_back(grid.back());
  return out;
}

}  // namespace

SignPolyResult solve_sign_direct(const Real& a, int m, double tol, Bits guard) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("solve_sign_direct: a outside (0,1)");
  if (m < 0) throw DomainError("solve_sign_direct: negative m");
  const Bits P = precision_for(a, m, guard);
  const Real ap = a.with_precision(P);
  const int n_grid = 200 * (m + 2);

  // Cosine-spaced grid on [a, 1]; it also serves as the root-isolation grid.
  std::vector<Real> grid = chebyshev_lobatto(ap, Real::one(P), n_grid - 1);
  const std::vector<Real> scan = grid;

  const std::size_t rows = static_cast<std::size_t>(m + 2);
  ChebPoly p(Real(-1.0, P), Real::one(P), {Real::zero(P)});
  Real level = Real::zero(P);
  Real true_max = Real::zero(P);
  std::vector<Real> ext;
  for (int cut = 0; cut <= kMaxCuts; ++cut) {
    // Dual of min t s.t. |A b - 1| <= t on the grid:
    // max sum (v - u) s.t. A^T (u - v) = 0, sum (u + v) = 1, u, v >= 0.
    LinearProgram lp;
    lp.rhs.assign(rows, Real::zero(P));
    lp.rhs.back() = Real::one(P);
    for (int sgn : {1, -1}) {
      for (const Real& y : grid) {
        std::vector<Real> col;
        col.reserve(rows);
        Real t0 = Real::one(P);
        Real t1 = y;
        const Real two_y = y * 2.0;
        for (int j = 1; j <= 2 * m + 1; ++j) {
          if (j % 2 == 1) col.push_back(sgn * t1);
          Real t2 = two_y * t1 - t0;
          t0 = std::move(t1);
          t1 = std::move(t2);
        }
        col.push_back(Real::one(P));
        lp.columns.push_back(std::move(col));
        lp.cost.push_back(Real(-static_cast<double>(sgn), P));
      }
    }
    const LpSolution sol = solve_lp(lp, P);
    std::vector<Real> b;
    for (std::size_t k = 0; k + 1 < rows; ++k) b.push_back(-sol.y[k]);
    level = sol.y.back();
    p = odd_series(b, P);
    const ChebPoly dp = p.derivative();
    ext = extrema(p, dp, scan);
    true_max = Real::zero(P);
    for (const Real& y : ext) true_max = max(true_max, abs(p(y) - 1.0));
    if (true_max.is_zero() || (true_max - level) / true_max <= Real(tol, P)) break;
    if (cut == kMaxCuts) {
      throw ConvergenceError("solve_sign_direct: cutting planes did not close the gap",
                             ((true_max - level) / true_max).to_double());
    }
    for (const Real& y : ext) grid.push_back(y);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  }

  // q(s) = p(sqrt s) / sqrt s is a degree-m polynomial on [a^2, 1].
  const ChebPoly q = cheb_interpolate(
      [&](const Real& s) {
        const Real y = sqrt(s);
        return p(y) / y;
      },
      ap * ap, Real::one(P), m);

  // Keep the m+2 largest alternating extrema, in order.
  std::vector<Real> alt;
  {
    std::vector<std::pair<Real, Real>> c;
    for (const Real& y : ext) c.push_back({y, p(y) - 1.0});
    while (c.size() > rows) {
      std::size_t k = 0;
      for (std::size_t i = 1; i < c.size(); ++i) {
        if (abs(c[i].second) < abs(c[k].second)) k = i;
      }
      c.erase(c.begin() + static_cast<long>(k));
    }
    for (auto& e : c) alt.push_back(e.first);
  }
  SignPolyResult out{odd_lift(q, ap), true_max, std::move(alt), Real::zero(P), Real::zero(P), m, ap, 0};
  if (!(true_max < 1.0)) throw DomainError("solve_sign_direct: L >= 1");
  out.B = acosh(1.0 / true_max);
  out.dvp_gap = true_max.is_zero() ? Real::zero(P) : (true_max - level) / true_max;
  return out;
}

SignPolyResult solve_sign_direct(double a, int m, double tol, Bits guard) {
  return solve_sign_direct(Real(a, 64), m, tol, guard);
}

}  // namespace signapprox
