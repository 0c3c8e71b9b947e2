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

#include "signapprox/remez.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "signapprox/errors.hpp"

namespace signapprox {

namespace {

struct Extremum {
  Real x;
  Real e;
};

// Solves A z = b in place by Gaussian elimination with partial pivoting.
std::vector<Real> gauss_solve(std::vector<std::vector<Real>> A, std::vector<Real> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (abs(A[r][col]) > abs(A[piv][col])) piv = r;
    }
    if (A[piv][col].is_zero()) throw ExchangeError("Remez: singular reference system");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (A[r][col].is_zero()) continue;
      const Real f = A[r][col] / A[col][col];
      for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Real> z(n, Real::zero(b[0].precision()));
  for (std::size_t i = n; i-- > 0;) {
    Real s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= A[i][c] * z[c];
    z[i] = s / A[i][i];
  }
  return z;
}

// Levelled solution on a reference: q and the signed level E.
std::pair<ChebPoly, Real> level_on(const ApproxProblem& pr, const std::vector<Real>& ref) {
  const int m = pr.degree;
  const std::size_t n = static_cast<std::size_t>(m + 2);
  const Bits P = pr.precision;
  for (std::size_t i = 1; i < n; ++i) {
    if (!(ref[i - 1] < ref[i])) {
      throw ExchangeError("Remez: reference points coincide or are out of order near x=" +
                          ref[i].to_decimal(20));
    }
  }
  std::vector<std::vector<Real>> A(n, std::vector<Real>(n, Real::zero(P)));
  std::vector<Real> b;
  b.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Real s = ((ref[i] * 2.0 - pr.lo) - pr.hi) / (pr.hi - pr.lo);
    Real t0 = Real::one(P);
    Real t1 = s;
    A[i][0] = t0;
    if (m >= 1) A[i][1] = t1;
    for (int k = 2; k <= m; ++k) {
      Real t2 = s * t1 * 2.0 - t0;
      t0 = std::move(t1);
      t1 = std::move(t2);
      A[i][k] = t1;
    }
    const Real w = pr.weight(ref[i]);
    A[i][n - 1] = (i % 2 == 0 ? -1.0 : 1.0) / w;
    b.push_back(pr.target(ref[i]));
  }
  std::vector<Real> z = gauss_solve(std::move(A), std::move(b));
  Real E = z.back();
  z.pop_back();
  return {ChebPoly(pr.lo, pr.hi, std::move(z)), std::move(E)};
}

// Golden-section maximization of |e| on [l, r].
Extremum golden_max(const ApproxProblem& pr, const ChebPoly& q, Real l, Real r, const Real& xtol) {
  const Bits P = pr.precision;
  const Real g = (sqrt(Real(5.0, P)) - 1.0) / 2.0;
  Real x1 = r - g * (r - l);
  Real x2 = l + g * (r - l);
  Real f1 = abs(weighted_residual(pr, q, x1));
  Real f2 = abs(weighted_residual(pr, q, x2));
  while (r - l > xtol) {
    if (f1 < f2) {
      l = std::move(x1);
      x1 = x2;
      f1 = f2;
      x2 = l + g * (r - l);
      f2 = abs(weighted_residual(pr, q, x2));
    } else {
      r = std::move(x2);
      x2 = x1;
      f2 = f1;
      x1 = r - g * (r - l);
      f1 = abs(weighted_residual(pr, q, x1));
    }
  }
  Real x = f1 < f2 ? x2 : x1;
  Real e = weighted_residual(pr, q, x);
  return {std::move(x), std::move(e)};
}

std::vector<Real> search_grid(const ApproxProblem& pr, const std::vector<Real>& ref, int density) {
  std::vector<Real> knots;
  knots.reserve(ref.size() + 2);
  if (ref.front() > pr.lo) knots.push_back(pr.lo);
  for (const Real& r : ref) knots.push_back(r);
  if (ref.back() < pr.hi) knots.push_back(pr.hi);
  std::vector<Real> grid;
  grid.reserve(knots.size() * static_cast<std::size_t>(density));
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const Real step = (knots[i + 1] - knots[i]) / static_cast<double>(density);
    grid.push_back(knots[i]);
    for (int k = 1; k < density; ++k) grid.push_back(knots[i] + step * static_cast<double>(k));
  }
  grid.push_back(knots.back());
  return grid;
}

// One extremum of |e| per maximal run of constant sign on the grid.
std::vector<Extremum> locate_extrema(const ApproxProblem& pr, const ChebPoly& q,
                                     const std::vector<Real>& grid, const Real& xtol) {
  std::vector<Real> e;
  e.reserve(grid.size());
  for (const Real& x : grid) e.push_back(weighted_residual(pr, q, x));
  std::vector<Extremum> out;
  std::size_t start = 0;
  int run_sign = 0;
  auto close_run = [&](std::size_t begin, std::size_t end) {
    std::size_t best = begin;
    for (std::size_t j = begin; j < end; ++j) {
      if (abs(e[j]) > abs(e[best])) best = j;
    }
    if (best == 0 || best + 1 == grid.size()) {
      out.push_back({grid[best], e[best]});
      return;
    }
    Extremum ex = golden_max(pr, q, grid[best - 1], grid[best + 1], xtol);
    if (abs(ex.e) < abs(e[best]) || ex.e.sign() != e[best].sign()) ex = {grid[best], e[best]};
    out.push_back(std::move(ex));
  };
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const int s = e[j].sign();
    if (s == 0) continue;
    if (run_sign == 0) {
      run_sign = s;
      start = j;
    } else if (s != run_sign) {
      close_run(start, j);
      run_sign = s;
      start = j;
    }
  }
  if (run_sign != 0) close_run(start, grid.size());
  return out;
}

// Drops candidates until m+2 remain, keeping alternation and the largest values.
void trim(std::vector<Extremum>& c, std::size_t want) {
  while (c.size() > want) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < c.size(); ++i) {
      if (abs(c[i].e) < abs(c[k].e)) k = i;
    }
    const std::size_t last = c.size() - 1;
    if (k == 0 || k == last) {
      c.erase(c.begin() + static_cast<long>(k));
    } else if (c.size() - want == 1) {
      c.erase(abs(c.front().e) < abs(c.back().e) ? c.begin() : c.end() - 1);
    } else {
      const std::size_t nb = abs(c[k - 1].e) < abs(c[k + 1].e) ? k - 1 : k + 1;
      c.erase(c.begin() + static_cast<long>(std::max(k, nb)));
      c.erase(c.begin() + static_cast<long>(std::min(k, nb)));
    }
  }
}

}  // namespace

ApproxProblem sign_problem(const Real& a, int m, Bits precision) {
  const Real ap = a.with_precision(precision);
  ApproxProblem pr{ap * ap, Real::one(precision),
                   [](const Real& x) { return sqrt(x); },
                   [](const Real& x) { return 1.0 / sqrt(x); }, m, precision};
  return pr;
}

ApproxProblem bernstein_problem(const Real& a, int m, Bits precision) {
  const Real ap = a.with_precision(precision);
  ApproxProblem pr{ap * ap, Real::one(precision),
                   [](const Real& x) { return Real::one(x.precision()); },
                   [](const Real& x) { return 1.0 / sqrt(x); }, m, precision};
  return pr;
}

Real weighted_residual(const ApproxProblem& problem, const ChebPoly& q, const Real& x) {
  return problem.weight(x) * (q(x, Extrapolation::kAllow) - problem.target(x));
}

MinimaxResult solve_weighted_minimax(const ApproxProblem& problem, const RemezOptions& options) {
  const int m = problem.degree;
  if (m < 0) throw DomainError("Remez: negative degree");
  if (!(problem.lo < problem.hi)) throw DomainError("Remez: empty interval");
  const Bits P = problem.precision;
  const std::size_t want = static_cast<std::size_t>(m + 2);

  std::vector<Real> ref;
  if (options.initial_reference && options.initial_reference->size() == want) {
    ref = *options.initial_reference;
  } else {
    ref = chebyshev_lobatto(problem.lo, problem.hi, m + 1);
  }
  for (Real& r : ref) r = r.with_precision(P);

  const Real width = problem.hi - problem.lo;
  const Real xtol = Real(std::max(options.tol, std::ldexp(1.0, -static_cast<int>(P / 2))), P) *
                    width / static_cast<double>(m + 2);
  const Real noise = epsilon_bits(P - 16, P);

  Real last_gap(1.0, P);
  for (int it = 1; it <= options.max_iterations; ++it) {
    auto [q, E] = level_on(problem, ref);
    Real scale = Real::zero(P);
    for (const Real& x : ref) scale = max(scale, abs(problem.weight(x) * problem.target(x)));
    if (scale.is_zero()) scale = Real::one(P);

    const auto grid = search_grid(problem, ref, options.grid_density);
    std::vector<Extremum> cand = locate_extrema(problem, q, grid, xtol);

    Real grid_max = Real::zero(P);
    for (const Extremum& c : cand) grid_max = max(grid_max, abs(c.e));

    if (grid_max <= noise * scale) {
      // Target lies in the approximating class up to rounding.
      ReferenceSet rs{ref, {}};
      for (std::size_t i = 0; i < ref.size(); ++i) rs.signs.push_back(i % 2 == 0 ? 1 : -1);
      return {std::move(q), Real::zero(P), std::move(rs), Real::zero(P), grid_max, it, problem};
    }
    if (cand.size() < want) {
      std::ostringstream os;
      os << "Remez: residual has " << cand.size() << " sign runs, need " << want;
      throw ExchangeError(os.str());
    }
    trim(cand, want);

    Real lo_mag = abs(cand.front().e);
    Real hi_mag = lo_mag;
    for (const Extremum& c : cand) {
      lo_mag = min(lo_mag, abs(c.e));
      hi_mag = max(hi_mag, abs(c.e));
    }
    Real gap = (hi_mag - lo_mag) / hi_mag;
    const Real floor_gap = noise * scale / hi_mag;
    last_gap = gap;

    ref.clear();
    ReferenceSet rs;
    for (const Extremum& c : cand) {
      ref.push_back(c.x);
      rs.points.push_back(c.x);
      rs.signs.push_back(c.e.sign());
    }
    if (gap <= options.tol || gap <= floor_gap) {
      return {std::move(q), abs(E), std::move(rs), std::move(gap), std::move(grid_max), it, problem};
    }
  }
  throw ConvergenceError("Remez: no convergence after " + std::to_string(options.max_iterations) +
                             " iterations, dvp_gap=" + last_gap.to_decimal(6),
                         last_gap.to_double());
}

namespace {

SignPolyResult to_sign_result(const Real& a, int m, MinimaxResult res) {
  const Bits P = res.q.precision();
  SignPolyResult out{odd_lift(res.q, a.with_precision(P)), res.L, {}, Real::zero(P), res.dvp_gap,
                     m, a.with_precision(P), res.iterations};
  for (const Real& x : res.reference.points) out.alternants.push_back(sqrt(x));
  if (!(res.L < 1.0)) throw DomainError("solve_sign_poly: L >= 1");
  out.B = res.L.is_zero() ? Real::zero(P) : acosh(1.0 / res.L);
  return out;
}

}  // namespace

SignPolyResult solve_sign_poly(const Real& a, int m, double tol, Bits guard,
                               const std::optional<std::vector<Real>>& warm_reference) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("solve_sign_poly: a outside (0,1)");
  if (m < 0) throw DomainError("solve_sign_poly: negative m");
  const Bits P = precision_for(a, m, guard);
  const Real ap = a.with_precision(P);
  if (1.0 - ap * ap < ldexp(Real(1.0, P), -static_cast<long>(P / 2))) {
    throw DomainError("solve_sign_poly: [a^2, 1] below resolution for a=" + a.to_decimal(20));
  }
  ApproxProblem pr = sign_problem(ap, m, P);
  RemezOptions opt;
  opt.tol = tol;
  if (warm_reference && warm_reference->size() == static_cast<std::size_t>(m + 2)) {
    // Warm start from alternants on some [a_old, 1]: map affinely to [a, 1].
    const Real y0 = warm_reference->front().with_precision(P);
    const Real span = 1.0 - y0;
    std::vector<Real> ref;
    for (std::size_t i = 0; i < warm_reference->size(); ++i) {
      Real y = ap + ((*warm_reference)[i].with_precision(P) - y0) * (1.0 - ap) / span;
      if (i == 0) y = ap;
      if (i + 1 == warm_reference->size()) y = Real::one(P);
      ref.push_back(y * y);
    }
    opt.initial_reference = std::move(ref);
  }
  return to_sign_result(ap, m, solve_weighted_minimax(pr, opt));
}

SignPolyResult solve_sign_poly(double a, int m, double tol, Bits guard) {
  return solve_sign_poly(Real(a, 64), m, tol, guard);
}

Certificate certify(const MinimaxResult& result, int grid_factor) {
  const ApproxProblem& pr = result.problem;
  const Bits P = pr.precision;
  Real lower = Real::zero(P);
  bool alternating = !result.reference.points.empty();
  int prev = 0;
  for (std::size_t i = 0; i < result.reference.points.size(); ++i) {
    const Real e = weighted_residual(pr, result.q, result.reference.points[i]);
    const int s = e.sign();
    if (s == 0 || (i > 0 && s == prev)) alternating = false;
    prev = s;
    lower = i == 0 ? abs(e) : min(lower, abs(e));
  }
  if (!alternating) lower = Real::zero(P);
  Real upper = Real::zero(P);
  const int n = std::max(1, grid_factor) * (pr.degree + 2);
  for (int i = 0; i <= n; ++i) {
    const Real x = pr.lo + (pr.hi - pr.lo) * (static_cast<double>(i) / n);
    upper = max(upper, abs(weighted_residual(pr, result.q, x)));
  }
  for (const Real& x : result.reference.points) {
    upper = max(upper, abs(weighted_residual(pr, result.q, x)));
  }
  Real gap = upper - lower;
  return {std::move(lower), std::move(upper), std::move(gap)};
}

}  // namespace signapprox
