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

#include "signapprox/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <utility>

#include "signapprox/errors.hpp"

namespace signapprox {

ChebPoly::ChebPoly(Real lo, Real hi, std::vector<Real> coeffs)
    : lo_(std::move(lo)), hi_(std::move(hi)), coeffs_(std::move(coeffs)) {
  if (!(lo_ < hi_)) {
    throw DomainError("ChebPoly: empty interval [" + lo_.to_decimal(12) + ", " +
                      hi_.to_decimal(12) + "]");
  }
  if (coeffs_.empty()) coeffs_.push_back(Real::zero(lo_.precision()));
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Bits ChebPoly::precision() const {
  Bits p = std::max(lo_.precision(), hi_.precision());
  for (const Real& c : coeffs_) p = std::max(p, c.precision());
  return p;
}

Real ChebPoly::operator()(const Real& x, Extrapolation mode) const {
  if (mode == Extrapolation::kForbid && (x < lo_ || x > hi_)) {
    throw DomainError("ChebPoly: x=" + x.to_decimal(17) + " outside [" + lo_.to_decimal(17) +
                      ", " + hi_.to_decimal(17) + "]");
  }
  const Bits p = std::max(precision(), x.precision());
  const Real s = ((x * 2.0 - lo_) - hi_) / (hi_ - lo_);
  const Real two_s = s * 2.0;
  Real b1 = Real::zero(p);
  Real b2 = Real::zero(p);
  for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
    Real b0 = two_s * b1 - b2 + coeffs_[k];
    b2 = std::move(b1);
    b1 = std::move(b0);
  }
  return s * b1 - b2 + coeffs_[0];
}

ChebPoly ChebPoly::derivative() const {
  const int n = degree();
  const Bits p = precision();
  if (n == 0) return ChebPoly(lo_, hi_, {Real::zero(p)});
  // d_{k-1} = d_{k+1} + 2k c_k, then the chain-rule factor 2/(hi-lo).
  std::vector<Real> d(static_cast<std::size_t>(n + 1), Real::zero(p));
  for (int k = n; k >= 1; --k) {
    d[k - 1] = (k + 1 <= n ? d[k + 1] : Real::zero(p)) + coeffs_[k] * (2.0 * k);
  }
  d[0] /= 2.0;
  d.pop_back();
  const Real scale = Real(2.0, p) / (hi_ - lo_);
  for (Real& v : d) v *= scale;
  return ChebPoly(lo_, hi_, std::move(d));
}

std::string ChebPoly::to_json() const {
  nlohmann::ordered_json j;
  j["interval"] = {lo_.to_tagged(), hi_.to_tagged()};
  auto& c = j["coeffs"] = nlohmann::ordered_json::array();
  for (const Real& v : coeffs_) c.push_back(v.to_tagged());
  return j.dump();
}

ChebPoly ChebPoly::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("ChebPoly JSON: ") + e.what());
  }
  if (!j.contains("interval") || !j.contains("coeffs") || j["interval"].size() != 2) {
    throw DomainError("ChebPoly JSON: need interval[2] and coeffs");
  }
  std::vector<Real> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(Real::from_tagged(c.get<std::string>()));
  return ChebPoly(Real::from_tagged(j["interval"][0].get<std::string>()),
                  Real::from_tagged(j["interval"][1].get<std::string>()), std::move(coeffs));
}

std::vector<Real> chebyshev_nodes(const Real& lo, const Real& hi, int n) {
  const Bits p = std::max(lo.precision(), hi.precision());
  const Real pi = Real::pi(p);
  const Real mid = (lo + hi) / 2.0;
  const Real half = (hi - lo) / 2.0;
  std::vector<Real> nodes;
  nodes.reserve(static_cast<std::size_t>(n + 1));
  for (int j = n; j >= 0; --j) {
    nodes.push_back(mid + half * cos(pi * (j + 0.5) / static_cast<double>(n + 1)));
  }
  return nodes;
}

std::vector<Real> chebyshev_lobatto(const Real& lo, const Real& hi, int n) {
  const Bits p = std::max(lo.precision(), hi.precision());
  std::vector<Real> pts;
  if (n == 0) {
    pts.push_back((lo + hi) / 2.0);
    return pts;
  }
  const Real pi = Real::pi(p);
  const Real mid = (lo + hi) / 2.0;
  const Real half = (hi - lo) / 2.0;
  pts.reserve(static_cast<std::size_t>(n + 1));
  pts.push_back(lo);
  for (int j = n - 1; j >= 1; --j) {
    pts.push_back(mid + half * cos(pi * static_cast<double>(j) / static_cast<double>(n)));
  }
  pts.push_back(hi);
  return pts;
}

ChebPoly cheb_interpolate(const RealFunction& f, const Real& lo, const Real& hi, int n) {
  if (n < 0) throw DomainError("cheb_interpolate: negative degree");
  const Bits p = std::max(lo.precision(), hi.precision());
  const Real pi = Real::pi(p);
  const int count = n + 1;
  // Node j (increasing order) sits at angle theta_j = pi (count - j - 1/2) / count.
  std::vector<Real> theta;
  std::vector<Real> values;
  const auto nodes = chebyshev_nodes(lo, hi, n);
  for (int j = 0; j < count; ++j) {
    Real v = f(nodes[j]);
    if (!v.is_finite()) {
      throw EvaluationError("cheb_interpolate: non-finite value at node " + nodes[j].to_decimal(17),
                            nodes[j].to_double());
    }
    values.push_back(std::move(v));
    theta.push_back(pi * (count - j - 0.5) / static_cast<double>(count));
  }
  std::vector<Real> coeffs;
  coeffs.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    Real sum = Real::zero(p);
    for (int j = 0; j < count; ++j) sum += values[j] * cos(theta[j] * static_cast<double>(k));
    sum *= 2.0;
    sum /= count;
    if (k == 0) sum /= 2.0;
    coeffs.push_back(std::move(sum));
  }
  return ChebPoly(lo, hi, std::move(coeffs));
}

OddPoly::OddPoly(ChebPoly base, Real a)
    : base_(std::move(base)), dbase_(base_.derivative()), a_(std::move(a)) {}

Real OddPoly::operator()(const Real& x) const {
  return x * base_(x * x, Extrapolation::kAllow);
}

Real OddPoly::derivative(const Real& x) const {
  const Real y = x * x;
  return base_(y, Extrapolation::kAllow) + y * dbase_(y, Extrapolation::kAllow) * 2.0;
}

OddPoly odd_lift(const ChebPoly& q, const Real& a) {
  const Bits p = std::max(q.precision(), a.precision());
  const Real a2 = a.with_precision(p) * a.with_precision(p);
  const Real slack = epsilon_bits(p - 8, p);
  if (abs(q.lo() - a2) > slack || abs(q.hi() - 1.0) > slack) {
    throw DomainError("odd_lift: base interval [" + q.lo().to_decimal(17) + ", " +
                      q.hi().to_decimal(17) + "] is not [a^2, 1] for a=" + a.to_decimal(17));
  }
  return OddPoly(q, a);
}

Bits precision_for(double a, int m, Bits guard) {
  if (!(a > 0.0 && a < 1.0)) {
    throw DomainError("precision_for: a=" + std::to_string(a) + " outside (0,1)");
  }
  if (m < 0) throw DomainError("precision_for: negative m");
  const double k = 2.0 * m + 2.0;
  // A value that is an integer up to rounding must not gain an extra bit.
  const double v = k * std::log2((1.0 + a) / (1.0 - a)) - 1e-12 * k;
  return guard + static_cast<Bits>(std::max(0.0, std::ceil(v)));
}

Bits precision_for(const Real& a, int m, Bits guard) {
  if (!(a > 0.0 && a < 1.0)) {
    throw DomainError("precision_for: a=" + a.to_decimal(17) + " outside (0,1)");
  }
  return precision_for(a.to_double(), m, guard);
}

}  // namespace signapprox
