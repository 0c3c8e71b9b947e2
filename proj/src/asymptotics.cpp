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

#include "signapprox/asymptotics.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "signapprox/errors.hpp"

namespace signapprox {

namespace {

void check_a(const Real& a, const char* who) {
  if (!(a > 0.0 && a < 1.0)) {
    throw DomainError(std::string(who) + ": a=" + a.to_decimal(17) + " outside (0,1)");
  }
}

// log((1+a)/(1-a)) = 2 atanh(a), accurate for small a.
Real log_ratio(const Real& a) { return atanh(a) * 2.0; }

// Critical points of p on (0, 1].
std::vector<Real> all_critical_points(const OddPoly& p) {
  const Bits P = p.precision();
  const int n = 64 * std::max(p.base().degree(), 1) + 64;
  const auto grid = chebyshev_lobatto(Real::zero(P), Real::one(P), n);
  std::vector<Real> out;
  Real fl = p.derivative(grid[0]);
  for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
    Real fr = p.derivative(grid[j + 1]);
    if (fl.sign() * fr.sign() < 0) {
      Real lo = grid[j];
      Real hi = grid[j + 1];
      Real flo = fl;
      for (int it = 0; it < P + 8; ++it) {
        Real mid = (lo + hi) / 2.0;
        if (mid <= lo || mid >= hi) break;
        Real fm = p.derivative(mid);
        if (fm.sign() == flo.sign()) {
          lo = std::move(mid);
          flo = std::move(fm);
        } else {
          hi = std::move(mid);
        }
      }
      out.push_back((lo + hi) / 2.0);
    }
    fl = std::move(fr);
  }
  return out;
}

}  // namespace

Real default_constant(Bits precision) { return log(Real::pi(precision) * 2.0) / 2.0; }

AsymptoticParams asymptotic_params(const Real& a, int m, const Real& c) {
  return {a, m, a_m_of(a, m), sigma_of(a), c};
}

Real a_m_of(const Real& a, int m) {
  check_a(a, "a_m_of");
  if (m < 0) throw DomainError("a_m_of: negative m");
  return log_ratio(a) * (m + 0.5);
}

Real sigma_of(const Real& a) {
  check_a(a, "sigma_of");
  return a * 2.0 / ((1.0 - a * a) * log_ratio(a));
}

Real b_m_predict(const Real& a, int m, const Real& c) {
  check_a(a, "b_m_predict");
  if (m < 1) throw DomainError("b_m_predict: m must be >= 1 (log m)");
  const Bits P = std::max(a.precision(), c.precision());
  const Real ap = a.with_precision(P);
  return a_m_of(ap, m) + log(Real(static_cast<long>(m), P)) / 2.0 +
         log(ap * 2.0 / (1.0 - ap * ap)) / 2.0 + c;
}

Real t1_scaled(const Real& a, int m, const Real& L) {
  check_a(a, "t1_scaled");
  const Bits P = std::max(a.precision(), L.precision());
  if (m == 0) return Real::zero(P);
  if (!(L > 0.0)) throw DomainError("t1_scaled: L must be positive");
  const Real ap = a.with_precision(P);
  return exp(log(Real(static_cast<long>(m), P)) / 2.0 + log_ratio(ap) * static_cast<double>(m) +
             log(L.with_precision(P)));
}

Real t1_target(const Real& a) {
  check_a(a, "t1_target");
  return (1.0 - a) / sqrt(Real::pi(a.precision()) * a);
}

Real weighted_limit(const Real& a, const Real& c) {
  check_a(a, "weighted_limit");
  const Bits P = std::max(a.precision(), c.precision());
  return exp(-c.with_precision(P)) * sqrt(Real(2.0, P)) * (1.0 - a) / sqrt(a.with_precision(P));
}

Real t2_scaled(const Real& A, const Real& L) {
  if (!(A > 0.0) || !(L > 0.0)) throw DomainError("t2_scaled: A and L must be positive");
  const Bits P = std::max(A.precision(), L.precision());
  const Real Ap = A.with_precision(P);
  return exp(log(Ap) / 2.0 + Ap + log(L.with_precision(P)));
}

Real t2_target(Bits precision) { return sqrt(Real(2.0, precision) / Real::pi(precision)); }

Real bern_scaled(const Real& a, int m, const Real& E) {
  check_a(a, "bern_scaled");
  return t1_scaled(a, m, E);
}

Real bern_target(const Real& a) {
  check_a(a, "bern_target");
  return (1.0 - a * a) / (sqrt(a) * a) / (sqrt(Real::pi(a.precision())) * 2.0);
}

std::vector<Real> aitken(const std::vector<Real>& x) {
  std::vector<Real> out;
  for (std::size_t i = 0; i + 2 < x.size(); ++i) {
    const Real d1 = x[i + 1] - x[i];
    const Real d2 = x[i + 2] - x[i + 1];
    const Real dd = d2 - d1;
    out.push_back(dd.is_zero() ? x[i + 2] : x[i + 2] - d2 * d2 / dd);
  }
  return out;
}

TrendReport make_trend(std::vector<std::pair<int, Real>> samples, const Real& target, int depth) {
  TrendReport r;
  r.samples = std::move(samples);
  r.target = target;
  if (r.samples.empty()) throw DomainError("make_trend: no samples");
  const Real& last = r.samples.back().second;
  r.last_gap = abs(last - target);
  r.last_rel_gap = r.last_gap / abs(target);
  std::vector<Real> v;
  for (const auto& s : r.samples) v.push_back(s.second);
  const std::size_t half = v.size() / 2;
  int dir = 0;
  bool mono = v.size() >= 2;
  for (std::size_t i = half; i + 1 < v.size(); ++i) {
    const int s = (v[i + 1] - v[i]).sign();
    if (s == 0 || (dir != 0 && s != dir)) mono = false;
    dir = s;
  }
  r.monotone_tail = mono;
  r.aitken = aitken(v);
  r.aitken_last = r.aitken.empty() ? last : r.aitken.back();
  r.aitken_rel_gap = abs(r.aitken_last - target) / abs(target);
  std::vector<Real> w = r.aitken;
  for (int k = 0; k < depth && !w.empty(); ++k) {
    r.aitken_iterated.push_back(w.back());
    w = aitken(w);
  }
  return r;
}

Real levy_distance(const OddPoly& p, double tol) {
  const Bits P = p.precision();
  const auto crit = all_critical_points(p);
  const Real one = Real::one(P);
  auto feasible = [&](const Real& h) {
    Real sup_outer = max(abs(p(h) - 1.0), abs(p(one) - 1.0));
    Real hi_inner = max(p(Real::zero(P)), p(h));
    Real lo_inner = min(p(Real::zero(P)), p(h));
    for (const Real& c : crit) {
      const Real v = p(c);
      if (c >= h) {
        sup_outer = max(sup_outer, abs(v - 1.0));
      } else {
        hi_inner = max(hi_inner, v);
        lo_inner = min(lo_inner, v);
      }
    }
    return sup_outer <= h && hi_inner <= 1.0 + h && lo_inner >= -1.0 - h;
  };
  Real lo = Real::zero(P);
  Real hi = Real::one(P);
  if (!feasible(hi)) return hi;
  if (feasible(lo)) return lo;
  const Real width(tol, P);
  while (hi - lo > width) {
    Real mid = (lo + hi) / 2.0;
    if (mid <= lo || mid >= hi) break;
    (feasible(mid) ? hi : lo) = std::move(mid);
  }
  return hi;
}

LevyFixedPoint levy_fixed_point(int m, double tol, Bits guard) {
  if (m < 1) throw DomainError("levy_fixed_point: m must be >= 1");
  int solves = 0;
  std::optional<std::vector<Real>> warm;
  auto solve = [&](const Real& a) {
    ++solves;
    // A reference carried over a large step in a can lose alternation;
    // fall back to the cold start.
    try {
      SignPolyResult s = solve_sign_poly(a, m, 1e-12, guard, warm);
      warm = s.alternants;
      return s;
    } catch (const ExchangeError&) {
    } catch (const ConvergenceError&) {
    }
    SignPolyResult s = solve_sign_poly(a, m, 1e-12, guard, std::nullopt);
    warm = s.alternants;
    return s;
  };
  Real lo(0.05, 64);
  Real hi(0.9, 64);
  SignPolyResult s_hi = solve(hi);
  if (!(s_hi.L < hi)) throw DomainError("levy_fixed_point: L_m(0.9) >= 0.9");
  SignPolyResult s_lo = solve(lo);
  while (!(s_lo.L > lo)) {
    hi = lo;
    lo = lo / 2.0;
    if (lo < 1e-12) throw DomainError("levy_fixed_point: no sign change above 1e-12");
    s_lo = solve(lo);
  }
  // Stop once the residual |L_m(a) - a| is within tol at the midpoint.
  while (true) {
    Real mid = (lo + hi) / 2.0;
    SignPolyResult s = solve(mid);
    const Real residual = s.L - mid;
    if (abs(residual) <= tol || hi - lo <= 1e-15) {
      Real L = s.L;
      return {std::move(mid), std::move(L), std::move(s), solves};
    }
    if (residual > 0.0) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
}

Real predictor_fixed_point(int m, const Real& c, double tol) {
  if (m < 1) throw DomainError("predictor_fixed_point: m must be >= 1");
  const Bits P = std::max<Bits>(c.precision(), 64);
  auto g = [&](const Real& a) { return 1.0 / cosh(b_m_predict(a, m, c)) - a; };
  Real lo(1e-9, P);
  Real hi(0.9, P);
  if (!(g(lo) > 0.0) || !(g(hi) < 0.0)) throw DomainError("predictor_fixed_point: no bracket");
  while (hi - lo > tol) {
    Real mid = (lo + hi) / 2.0;
    (g(mid) > 0.0 ? lo : hi) = std::move(mid);
  }
  return (lo + hi) / 2.0;
}

Real tri_b(int m, Bits precision) {
  if (m < 3) throw DomainError("tri_b: m must be >= 3");
  const Real lm = log(Real(static_cast<long>(m), precision));
  return lm - log(lm) + log(Real(4.0, precision));
}

}  // namespace signapprox
