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

#include "signapprox/asymptotics.hpp"
#include "signapprox/errors.hpp"

namespace sa = signapprox;
using sa::Real;

namespace {

constexpr sa::Bits kP = 128;

Real R(double x) { return Real(x, kP); }
Real third() { return Real::one(kP) / 3.0; }

}  // namespace

TEST(AmOf, Examples) {
  EXPECT_NEAR(sa::a_m_of(third(), 10).to_double(), 10.5 * std::log(2.0), 1e-14);
  EXPECT_NEAR(sa::a_m_of(third(), 10).to_double(), 7.27805, 1e-5);
  EXPECT_NEAR(sa::a_m_of(R(0.5), 0).to_double(), 0.54931, 1e-5);
  EXPECT_LT(sa::a_m_of(R(1e-12), 50).to_double(), 1e-9);
  EXPECT_THROW(sa::a_m_of(R(1.0), 3), sa::DomainError);
  EXPECT_LT(sa::a_m_of(R(0.3), 4), sa::a_m_of(R(0.3), 5));
  EXPECT_LT(sa::a_m_of(R(0.3), 4), sa::a_m_of(R(0.4), 4));
}

TEST(SigmaOf, Examples) {
  EXPECT_NEAR(sa::sigma_of(third()).to_double(), 1.08202, 1e-5);
  EXPECT_NEAR(sa::sigma_of(R(0.5)).to_double(), 1.0 / (0.75 * std::log(3.0)), 1e-14);
  EXPECT_NEAR(sa::sigma_of(R(1e-6)).to_double(), 1.0, 1e-11);
  EXPECT_THROW(sa::sigma_of(R(0.0)), sa::DomainError);
}

TEST(BmPredict, Examples) {
  EXPECT_NEAR(sa::b_m_predict(third(), 16, R(0.918939)).to_double(), 13.5984, 1e-4);
  EXPECT_THROW(sa::b_m_predict(third(), 0, R(0.9)), sa::DomainError);
  const Real c = sa::default_constant(kP);
  for (int m : {1, 7, 30}) {
    const Real a = R(0.6);
    const Real d = sa::b_m_predict(a, m + 1, c) - sa::b_m_predict(a, m, c);
    const Real expect = sa::log((1.0 + a) / (1.0 - a)) + sa::log(R(m + 1.0) / R(m)) / 2.0;
    EXPECT_LE(sa::abs(d - expect), sa::epsilon_bits(kP - 12, kP));
  }
}

TEST(BmPredict, ExpFormReproducesWeightedLimit) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ua(0.05, 0.95);
  std::uniform_int_distribution<int> um(1, 200);
  const Real c = sa::default_constant(kP);
  for (int i = 0; i < 5; ++i) {
    const Real a = R(ua(rng));
    const int m = um(rng);
    const Real L = sa::exp(-sa::b_m_predict(a, m, c)) * 2.0;
    const Real lhs = sa::t1_scaled(a, m, L);
    EXPECT_LE(sa::abs(lhs - sa::weighted_limit(a, c)) / lhs, sa::epsilon_bits(kP - 16, kP));
  }
}

TEST(T1, Targets) {
  EXPECT_NEAR(sa::t1_target(third()).to_double(), 0.651470, 1e-6);
  EXPECT_NEAR(sa::t1_target(R(0.5)).to_double(), 0.398942, 1e-6);
  EXPECT_TRUE(sa::t1_scaled(R(0.4), 0, R(0.3)).is_zero());
  EXPECT_LE(sa::abs(sa::weighted_limit(third(), sa::default_constant(kP)) - sa::t1_target(third())),
            sa::epsilon_bits(kP - 8, kP));
}

TEST(T1, LogSpaceAvoidsOverflow) {
  // ((1+a)/(1-a))^m = 19^5000 overflows double by far.
  const Real L = sa::exp(R(-5000.0) * sa::log(R(19.0)));
  const Real s = sa::t1_scaled(R(0.9), 5000, L);
  EXPECT_NEAR(s.to_double(), std::sqrt(5000.0), 1e-9);
}

TEST(T2, TargetsAndIdentity) {
  EXPECT_NEAR(sa::t2_target().to_double(), 0.7978845608, 1e-10);
  EXPECT_NEAR(sa::t2_scaled(R(1.0), R(1.0)).to_double(), std::exp(1.0), 1e-15);
  for (double A : {2.0, 9.0, 40.0}) {
    const Real Ar = R(A);
    const Real B = Ar + sa::log(Ar) / 2.0 + sa::default_constant(kP);
    const Real t2 = sa::t2_scaled(Ar, sa::exp(-B) * 2.0);
    EXPECT_LE(sa::abs(t2 - sa::t2_target(kP)), sa::epsilon_bits(kP - 12, kP));
  }
  EXPECT_THROW(sa::t2_scaled(R(-1.0), R(1.0)), sa::DomainError);
}

TEST(Bernstein, Targets) {
  EXPECT_NEAR(sa::bern_target(R(0.9)).to_double(), 0.06278, 1e-5);
  EXPECT_LT(sa::bern_target(R(1.0 - 1e-12)).to_double(), 1e-11);
  EXPECT_THROW(sa::bern_target(R(1.5)), sa::DomainError);
  // The weight sqrt(x) at x = a^2 contributes a; the ratio is 2a/(1+a).
  for (double a : {0.2, 0.5, 0.8}) {
    const Real ar = R(a);
    const Real ratio = sa::t1_target(ar) / sa::bern_target(ar);
    EXPECT_LE(sa::abs(ratio - ar * 2.0 / (1.0 + ar)), sa::epsilon_bits(kP - 8, kP));
  }
}

TEST(TriB, Examples) {
  EXPECT_NEAR(sa::tri_b(100).to_double(), 4.46428, 1e-5);
  const double L = 2.0 * std::exp(-sa::tri_b(100).to_double());
  EXPECT_NEAR(L, std::log(100.0) / 200.0, 5e-5);
  EXPECT_TRUE(sa::tri_b(3).is_finite());
  EXPECT_THROW(sa::tri_b(2), sa::DomainError);
}

TEST(Aitken, GeometricSequenceIsExact) {
  std::vector<Real> x;
  for (int n = 0; n < 6; ++n) x.push_back(1.0 + sa::pow(R(0.5), n) * 3.0);
  for (const Real& v : sa::aitken(x)) EXPECT_LE(sa::abs(v - 1.0), sa::epsilon_bits(kP - 8, kP));
  EXPECT_EQ(sa::aitken(x).size(), 4u);
}

TEST(Trend, Bookkeeping) {
  std::vector<std::pair<int, Real>> s;
  for (int n = 1; n <= 8; ++n) s.emplace_back(n, 2.0 - 1.0 / R(n * 1.0));
  const auto t = sa::make_trend(s, R(2.0));
  EXPECT_LE(sa::abs(t.last_gap - R(1.0 / 8.0)), sa::epsilon_bits(kP - 4, kP));
  EXPECT_TRUE(t.monotone_tail);
  EXPECT_LT(t.aitken_rel_gap, t.last_rel_gap);
  EXPECT_EQ(t.aitken_iterated.size(), 3u);

  s[6].second = R(3.0);
  EXPECT_FALSE(sa::make_trend(s, R(2.0)).monotone_tail);
  EXPECT_THROW(sa::make_trend({}, R(1.0)), sa::DomainError);
}

TEST(Levy, ClosedForms) {
  const Real one = Real::one(kP);
  // p(x) = x: sup over [h,1] of |x - 1| is 1 - h, so h = 1/2.
  const sa::OddPoly identity(sa::ChebPoly(R(0.01), one, {one}), R(0.1));
  EXPECT_NEAR(sa::levy_distance(identity, 1e-12).to_double(), 0.5, 2e-12);
  // p(x) = x (3 - x^2) / 2 on q(y) = (3 - y)/2 over [0.01, 1]: 1 - p(h) = h
  // gives h^3 - 5h + 2 = 0, h = sqrt 2 - 1.
  const Real lo = R(0.01);
  const auto q = sa::cheb_interpolate([](const Real& y) { return (3.0 - y) / 2.0; }, lo, one, 1);
  const sa::OddPoly smooth(q, R(0.1));
  EXPECT_NEAR(sa::levy_distance(smooth, 1e-12).to_double(), std::sqrt(2.0) - 1.0, 2e-12);
}

TEST(Levy, StableUnderRefinedBisection) {
  const auto r = sa::solve_sign_poly(0.08, 10);
  const double tol = 1e-6;
  const Real h1 = sa::levy_distance(r.p, tol);
  const Real h2 = sa::levy_distance(r.p, tol / 10.0);
  EXPECT_LE(sa::abs(h1 - h2).to_double(), tol / 10.0 + tol);
}

TEST(LevyFixedPoint, DegreeOne) {
  const double tol = 1e-6;
  const auto fp = sa::levy_fixed_point(1, tol);
  EXPECT_GT(fp.a_star, 0.05);
  EXPECT_LT(fp.a_star, 0.9);
  EXPECT_LE(sa::abs(fp.L_star - fp.a_star).to_double(), tol);
  EXPECT_NEAR(sa::levy_distance(fp.solution.p, tol / 10.0).to_double(), fp.a_star.to_double(), 2.0 * tol);
  EXPECT_THROW(sa::levy_fixed_point(0), sa::DomainError);
}

TEST(LevyFixedPoint, DecreasesInM) {
  Real prev = R(1.0);
  for (int m = 1; m <= 20; ++m) {
    const Real a = sa::levy_fixed_point(m, 1e-7).a_star;
    EXPECT_LT(a, prev) << m;
    prev = a;
  }
}

TEST(PredictorFixedPoint, SolvesItsEquation) {
  const Real c = sa::default_constant(kP);
  for (int m : {10, 100}) {
    const Real a = sa::predictor_fixed_point(m, c);
    EXPECT_LE(sa::abs(1.0 / sa::cosh(sa::b_m_predict(a, m, c)) - a).to_double(), 1e-11);
  }
}
