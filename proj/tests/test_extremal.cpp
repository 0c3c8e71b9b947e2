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

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "signapprox/errors.hpp"
#include "signapprox/extremal.hpp"
#include "signapprox/remez.hpp"

namespace sa = signapprox;
using sa::Real;

namespace {

sa::SignPolyResult perturbed(const sa::SignPolyResult& r, std::size_t k, double rel) {
  sa::SignPolyResult out = r;
  std::vector<Real> c = r.p.base().coeffs();
  c[k] = c[k] * (1.0 + rel);
  out.p = sa::odd_lift(sa::ChebPoly(r.p.base().lo(), r.p.base().hi(), c), r.a.with_precision(r.p.precision()));
  return out;
}

}  // namespace

TEST(Phi, EndpointsAndClosedForm) {
  for (int m : {0, 2, 5}) {
    const auto r = sa::solve_sign_poly(0.3, m);
    const sa::Bits P = r.p.precision();
    const sa::PhiTransform phi(r);
    EXPECT_LE(sa::abs(phi(r.a.with_precision(P))), sa::epsilon_bits(P / 2 - 8, P));
    EXPECT_LE(sa::abs(phi(Real::one(P)) - Real::pi(P) * static_cast<double>(m + 1)), sa::epsilon_bits(P / 2 - 8, P));
  }
  const auto r0 = sa::solve_sign_poly(0.5, 0);
  const Real v = sa::phi_from_poly(r0, Real(0.75, r0.p.precision()));
  EXPECT_LE(sa::abs(v - Real::pi(v.precision()) / 2.0), sa::epsilon_bits(v.precision() - 16, v.precision()));
}

TEST(Phi, RoundTripAndMonotone) {
  const auto r = sa::solve_sign_poly(0.2, 6);
  const sa::Bits P = r.p.precision();
  const sa::PhiTransform phi(r);
  const Real a = r.a.with_precision(P);
  Real prev = Real(-1.0, P);
  for (int i = 0; i < 200; ++i) {
    const Real x = a + (1.0 - a) * (i / 199.0);
    const Real f = phi(x);
    EXPECT_LE(sa::abs(1.0 - r.L * sa::cos(f) - r.p(x)), sa::epsilon_bits(P - 24, P)) << i;
    EXPECT_GT(f, prev) << i;
    prev = f;
  }
  EXPECT_EQ(phi.branch_log().size(), 8u);
}

TEST(Phi, OriginMatchesB) {
  const auto r = sa::solve_sign_poly(0.4, 3);
  const sa::Bits P = r.p.precision();
  EXPECT_TRUE(r.p(Real::zero(P)).is_zero());
  EXPECT_LE(sa::abs(1.0 / r.L - sa::cosh(r.B)) * r.L, sa::epsilon_bits(P - 16, P));
}

TEST(Phi, RejectsNonExtremalAndOutOfRange) {
  const auto r = sa::solve_sign_poly(0.3, 3);
  const sa::Bits P = r.p.precision();
  const Real a = r.a.with_precision(P);
  const sa::PhiTransform bad(perturbed(r, 0, 1e-3));
  int violations = 0;
  for (int i = 0; i <= 200; ++i) {
    try {
      bad(a + (1.0 - a) * (i / 200.0));
    } catch (const sa::RepresentationError& e) {
      ++violations;
      EXPECT_GE(e.x(), a.to_double());
    }
  }
  EXPECT_GT(violations, 0);
  const sa::PhiTransform phi(r);
  EXPECT_THROW(phi(Real(0.1, r.p.precision())), sa::DomainError);
}

TEST(CriticalValues, Examples) {
  const auto r0 = sa::solve_sign_poly(0.5, 0);
  const auto c0 = sa::verify_critical_values(r0, 1e-9);
  EXPECT_TRUE(c0.alternation_ok);
  EXPECT_TRUE(c0.critical_points.empty());
  EXPECT_EQ(c0.count_on_X, 4);

  const auto r4 = sa::solve_sign_poly(0.1, 4);
  const auto c4 = sa::verify_critical_values(r4, 1e-9);
  EXPECT_TRUE(c4.alternation_ok);
  EXPECT_EQ(c4.critical_points.size(), 4u);
  EXPECT_EQ(c4.count_on_X, 12);
}

TEST(CriticalValues, PassOnSolverOutput) {
  for (double a : {0.1, 0.35, 0.6, 0.85}) {
    for (int m = 0; m <= 8; ++m) {
      const auto r = sa::solve_sign_poly(a, m);
      const auto c = sa::verify_critical_values(r, 1e3 * 1e-12);
      EXPECT_TRUE(c.alternation_ok) << "a=" << a << " m=" << m;
      EXPECT_EQ(c.count_on_X, 2 * m + 4) << "a=" << a << " m=" << m;
      EXPECT_TRUE(c.offending.empty());
    }
  }
}

TEST(CriticalValues, FailOnPerturbation) {
  const auto r = sa::solve_sign_poly(0.2, 5);
  for (std::size_t k = 0; k < r.p.base().coeffs().size(); ++k) {
    const auto c = sa::verify_critical_values(perturbed(r, k, 1e-4), 1e-9);
    EXPECT_FALSE(c.alternation_ok) << k;
    EXPECT_FALSE(c.offending.empty()) << k;
  }
}

TEST(EntireExtremal, BoundaryValues) {
  const sa::EntireExtremal f(6.0);
  const double L = f.L();
  EXPECT_NEAR(L, 1.0 / std::cosh(6.0), 1e-18);
  EXPECT_NEAR(f(f.A()), 1.0 - L, 1e-15);
  EXPECT_DOUBLE_EQ(sa::entire_extremal_boundary(6.0, f.A()), f(f.A()));
  double sup = 0.0, top = -1.0;
  for (int i = 0; i <= 5000; ++i) {
    const double x = f.A() + 50.0 * i / 5000.0;
    sup = std::max(sup, std::abs(f(x) - 1.0));
    top = std::max(top, f(x) - 1.0);
  }
  EXPECT_LE(sup, L * (1.0 + 1e-12));
  EXPECT_GE(top, L * (1.0 - 1e-3));
  EXPECT_THROW(f(f.A() - 0.1), sa::DomainError);
}

TEST(EntireExtremal, FirstCriticalPointIsMaximum) {
  const sa::EntireExtremal f(6.0);
  // phi increases from 0 at A; locate phi = pi.
  double lo = f.A(), hi = f.A() + 1.0;
  while (f.phi(hi) < std::acos(-1.0)) hi += 1.0;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f.phi(mid) < std::acos(-1.0) ? lo : hi) = mid;
  }
  EXPECT_NEAR(f(lo), 1.0 + f.L(), 1e-9 * f.L());
  const double h = 1e-3;
  EXPECT_LE(f(lo - h), f(lo));
  EXPECT_LE(f(lo + h), f(lo));
}

TEST(PlotCsv, FigureOneData) {
  const auto r = sa::solve_sign_poly(0.1, 4);
  const std::string csv = sa::plot_csv(r);
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "x,p,kind");
  int curve = 0, alt = 0;
  double first_x = 0.0, last_x = 0.0;
  while (std::getline(is, line)) {
    if (line.ends_with(",curve")) {
      const double x = std::stod(line.substr(0, line.find(',')));
      if (curve == 0) first_x = x;
      last_x = x;
      ++curve;
    } else if (line.ends_with(",alternant")) {
      ++alt;
    }
  }
  EXPECT_EQ(curve, 2000);
  EXPECT_EQ(alt, 12);
  EXPECT_DOUBLE_EQ(first_x, -1.05);
  EXPECT_NEAR(last_x, 1.05, 1e-15);
}
