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
#include <random>

#include <gtest/gtest.h>

#include "signapprox/chebyshev.hpp"
#include "signapprox/errors.hpp"
#include "signapprox/real.hpp"

namespace sa = signapprox;
using sa::Real;

namespace {

Real rel_err(const Real& x, const Real& y) { return sa::abs(x - y) / sa::abs(y); }

}  // namespace

TEST(Real, BinaryOpsTakeMaxPrecision) {
  const Real x(1.0, 80);
  const Real y(3.0, 200);
  EXPECT_EQ((x / y).precision(), 200);
  EXPECT_EQ((y - x).precision(), 200);
  EXPECT_EQ((x * 2.0).precision(), 80);
}

TEST(Real, TaggedRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-30.0, 30.0);
  for (sa::Bits p : {53L, 64L, 113L, 300L, 1000L}) {
    for (int i = 0; i < 50; ++i) {
      const Real x = sa::exp(Real(u(rng), p)) / Real(3.0, p);
      const std::string s = x.to_tagged();
      ASSERT_EQ(s.rfind("p=" + std::to_string(p) + ":", 0), 0u) << s;
      const Real y = Real::from_tagged(s);
      EXPECT_EQ(y.precision(), p);
      EXPECT_LE(rel_err(y, x), sa::epsilon_bits(p - 1, p)) << s;
    }
  }
}

TEST(Real, MalformedTagIsDomainError) {
  EXPECT_THROW(Real::from_tagged("3.5"), sa::DomainError);
  EXPECT_THROW(Real::from_tagged("p=x:3.5"), sa::DomainError);
  EXPECT_THROW(Real::from_decimal("abc", 64), sa::DomainError);
}

TEST(Real, ElementaryDomains) {
  EXPECT_THROW(sa::sqrt(Real(-1.0)), sa::DomainError);
  EXPECT_THROW(sa::log(Real(0.0)), sa::DomainError);
  EXPECT_THROW(sa::acosh(Real(0.5)), sa::DomainError);
  EXPECT_THROW(sa::atanh(Real(1.0)), sa::DomainError);
}

TEST(Real, AcosClampsOnlyWithinNoise) {
  const sa::Bits p = 128;
  const Real one = Real::one(p);
  EXPECT_TRUE(sa::acos(one + sa::epsilon_bits(p - 8, p)).is_zero());
  EXPECT_LE(sa::abs(sa::acos(-one - sa::epsilon_bits(p - 8, p)) - Real::pi(p)), sa::epsilon_bits(p - 2, p));
  EXPECT_THROW(sa::acos(one + sa::epsilon_bits(p - 32, p)), sa::DomainError);
  EXPECT_THROW(sa::acos(Real(1.5, p)), sa::DomainError);
}

TEST(Real, ClosedFormValues) {
  const sa::Bits p = 200;
  // arccosh 3 = log(3 + sqrt 8).
  const Real three(3.0, p);
  EXPECT_LE(rel_err(sa::acosh(three), sa::log(three + sa::sqrt(Real(8.0, p)))), sa::epsilon_bits(p - 4, p));
  EXPECT_LE(rel_err(sa::cosh(sa::acosh(three)), three), sa::epsilon_bits(p - 4, p));
}

TEST(PrecisionFor, Examples) {
  EXPECT_EQ(sa::precision_for(Real(1.0, 256) / 3.0, 0, 64), 66);
  EXPECT_EQ(sa::precision_for(1e-12, 10, 64), 65);
  EXPECT_EQ(sa::precision_for(0.9, 5, 64), 115);
}

TEST(PrecisionFor, MonotoneInEachArgument) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ua(1e-6, 0.999);
  std::uniform_int_distribution<int> um(0, 500);
  for (int i = 0; i < 500; ++i) {
    double a1 = ua(rng), a2 = ua(rng);
    int m1 = um(rng), m2 = um(rng);
    if (a1 > a2) std::swap(a1, a2);
    if (m1 > m2) std::swap(m1, m2);
    EXPECT_LE(sa::precision_for(a1, m1, 64), sa::precision_for(a2, m1, 64));
    EXPECT_LE(sa::precision_for(a1, m1, 64), sa::precision_for(a1, m2, 64));
    EXPECT_GE(sa::precision_for(a1, m1, 64),
              64 + static_cast<long>(std::ceil((2.0 * m1 + 2.0) * std::log2((1 + a1) / (1 - a1)) - 1e-9)));
  }
}

TEST(PrecisionFor, RejectsOutsideUnitInterval) {
  EXPECT_THROW(sa::precision_for(0.0, 3), sa::DomainError);
  EXPECT_THROW(sa::precision_for(1.0, 3), sa::DomainError);
}

TEST(ChebEval, Examples) {
  const Real lo(-1.0), hi(1.0);
  const sa::ChebPoly t2(lo, hi, {Real(0.0), Real(0.0), Real(1.0)});
  EXPECT_EQ(t2(Real(0.5)), -0.5);
  const sa::ChebPoly seven(lo, hi, {Real(7.0)});
  for (double x : {-1.0, -0.3, 0.0, 0.77, 1.0}) EXPECT_EQ(seven(Real(x)), 7.0);
  const sa::ChebPoly t3(lo, hi, {Real(0.0), Real(0.0), Real(0.0), Real(1.0)});
  EXPECT_EQ(t3(Real(1.0)), 1.0);
}

TEST(ChebEval, ExtrapolationIsOptIn) {
  const sa::ChebPoly t1(Real(0.0), Real(1.0), {Real(0.0), Real(1.0)});
  EXPECT_THROW(t1(Real(1.5)), sa::DomainError);
  // T_1 on [0,1] is 2x - 1.
  EXPECT_EQ(t1(Real(1.5), sa::Extrapolation::kAllow), 2.0);
}

TEST(ChebEval, DegreeTrimsTrailingZeros) {
  const sa::ChebPoly p(Real(-1.0), Real(1.0), {Real(2.0), Real(1.0), Real(0.0), Real(0.0)});
  EXPECT_EQ(p.degree(), 1);
  const sa::ChebPoly z(Real(-1.0), Real(1.0), {Real(0.0), Real(0.0)});
  EXPECT_EQ(z.degree(), 0);
}

TEST(ChebInterpolate, Examples) {
  const Real lo(-1.0), hi(1.0);
  const auto p1 = sa::cheb_interpolate([](const Real& x) { return x; }, lo, hi, 1);
  ASSERT_EQ(p1.coeffs().size(), 2u);
  EXPECT_LE(sa::abs(p1.coeffs()[0]), sa::epsilon_bits(60, 64));
  EXPECT_LE(sa::abs(p1.coeffs()[1] - 1.0), sa::epsilon_bits(60, 64));

  const auto p2 = sa::cheb_interpolate([](const Real& x) { return x * x * 2.0 - 1.0; }, lo, hi, 2);
  ASSERT_EQ(p2.coeffs().size(), 3u);
  EXPECT_LE(sa::abs(p2.coeffs()[0]), sa::epsilon_bits(60, 64));
  EXPECT_LE(sa::abs(p2.coeffs()[1]), sa::epsilon_bits(60, 64));
  EXPECT_LE(sa::abs(p2.coeffs()[2] - 1.0), sa::epsilon_bits(60, 64));
}

TEST(ChebInterpolate, InverseSqrtOnQuarterInterval) {
  const sa::Bits p = 128;
  auto f = [](const Real& x) { return 1.0 / sa::sqrt(x); };
  const Real lo(0.25, p), hi(1.0, p);
  const auto q = sa::cheb_interpolate(f, lo, hi, 8);
  for (const Real& x : sa::chebyshev_nodes(lo, hi, 8)) {
    EXPECT_LE(sa::abs(q(x) - f(x)) / sa::abs(f(x)), sa::epsilon_bits(p - 16, p));
  }
  Real worst = Real::zero(p);
  for (int i = 0; i < 2000; ++i) {
    const Real x = lo + (hi - lo) * ((i + 0.5) / 2000.0);
    worst = sa::max(worst, sa::abs(q(x) - f(x)));
  }
  EXPECT_LT(worst, 1e-4);
}

TEST(ChebInterpolate, NonFiniteNodeCarriesNode) {
  try {
    sa::cheb_interpolate([](const Real& x) { return 1.0 / (x - x); }, Real(0.0), Real(1.0), 3);
    FAIL() << "expected EvaluationError";
  } catch (const sa::EvaluationError& e) {
    EXPECT_GT(e.node(), 0.0);
    EXPECT_LT(e.node(), 1.0);
  }
}

TEST(ChebPoly, JsonRoundTrip) {
  const sa::Bits p = 150;
  const sa::ChebPoly q(Real(0.01, p), Real(1.0, p), {Real(1.0, p) / 3.0, -Real::pi(p), Real(2.5, p)});
  const std::string s = q.to_json();
  EXPECT_NE(s.find("\"interval\""), std::string::npos);
  EXPECT_NE(s.find("p=150:"), std::string::npos);
  const sa::ChebPoly r = sa::ChebPoly::from_json(s);
  ASSERT_EQ(r.coeffs().size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(r.coeffs()[k] == q.coeffs()[k]);
  EXPECT_TRUE(r.lo() == q.lo());
  EXPECT_THROW(sa::ChebPoly::from_json("{\"coeffs\":[]}"), sa::DomainError);
}

TEST(OddLift, Examples) {
  const sa::Bits p = 96;
  const Real a(0.5, p);
  const Real a2 = a * a;
  const auto one = sa::odd_lift(sa::ChebPoly(a2, Real::one(p), {Real::one(p)}), a);
  for (double x : {0.0, 0.3, -0.7, 1.0}) EXPECT_EQ(one(Real(x, p)), x);
  const auto p43 = sa::odd_lift(sa::ChebPoly(a2, Real::one(p), {Real(4.0, p) / 3.0}), a);
  EXPECT_EQ(p43.degree(), 1);
  EXPECT_LE(sa::abs(p43(a) - Real(2.0, p) / 3.0), sa::epsilon_bits(p - 4, p));
  EXPECT_LE(sa::abs(p43(Real::one(p)) - Real(4.0, p) / 3.0), sa::epsilon_bits(p - 4, p));
  EXPECT_TRUE(p43(Real::zero(p)).is_zero());
}

TEST(OddLift, IntervalMismatchIsDomainError) {
  const sa::ChebPoly q(Real(0.2), Real(1.0), {Real(1.0)});
  EXPECT_THROW(sa::odd_lift(q, Real(0.5)), sa::DomainError);
}

TEST(OddPoly, OddSymmetryOnRandomPoints) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const sa::Bits p = 113;
  const Real a(0.2, p);
  std::vector<Real> c;
  for (int k = 0; k < 12; ++k) c.push_back(Real(u(rng) - 0.5, p));
  const auto odd = sa::odd_lift(sa::ChebPoly(a * a, Real::one(p), c), a);
  EXPECT_EQ(odd.degree(), 23);
  for (int i = 0; i < 1000; ++i) {
    const Real x(u(rng), p);
    EXPECT_LE(sa::abs(odd(-x) + odd(x)), sa::epsilon_bits(p - 8, p));
  }
}

TEST(OddPoly, DerivativeMatchesDifferenceQuotient) {
  const sa::Bits p = 200;
  const Real a(0.3, p);
  const auto odd = sa::odd_lift(sa::ChebPoly(a * a, Real::one(p), {Real(1.0, p), Real(-0.5, p), Real(0.25, p)}), a);
  const Real x(0.6, p);
  const Real h = sa::epsilon_bits(60, p);
  const Real fd = (odd(x + h) - odd(x - h)) / (h * 2.0);
  EXPECT_LE(sa::abs(fd - odd.derivative(x)), 1e-30);
}
