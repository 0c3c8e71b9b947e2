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

#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace signapprox {

/// Binary precision of a Real, in bits.
using Bits = long;

inline constexpr Bits kDefaultBits = 64;

/// Arbitrary-precision real number backed by MPFR.
///
/// Every value carries its own precision. Binary operations produce a result
/// at the larger of the two operand precisions; operations with a `double`
/// operand keep the precision of the Real operand. All rounding is to nearest.
class Real {
 public:
  Real() : Real(0.0, kDefaultBits) {}
  explicit Real(double value, Bits precision = kDefaultBits);
  Real(long value, Bits precision);
  Real(int value, Bits precision) : Real(static_cast<long>(value), precision) {}

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Parses a plain decimal literal ("0.25", "-1e-30") at the given precision.
  static Real from_decimal(std::string_view text, Bits precision);
  /// Parses the tagged form produced by `to_tagged`: "p=<bits>:<decimal>".
  static Real from_tagged(std::string_view text);

  static Real pi(Bits precision);
  static Real zero(Bits precision) { return Real(0.0, precision); }
  static Real one(Bits precision) { return Real(1.0, precision); }

  Bits precision() const { return mpfr_get_prec(value_); }
  /// Copy rounded to `precision` bits.
  Real with_precision(Bits precision) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }
  /// Scientific decimal with `digits` significant digits (0 = enough to
  /// round-trip at this precision).
  std::string to_decimal(int digits = 0) const;
  /// "p=<bits>:<decimal>" with enough digits to round-trip.
  std::string to_tagged() const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  long exponent() const { return mpfr_get_exp(value_); }

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator+=(double rhs);
  Real& operator-=(double rhs);
  Real& operator*=(double rhs);
  Real& operator/=(double rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(const Real& a, double b);
  friend Real operator-(const Real& a, double b);
  friend Real operator*(const Real& a, double b);
  friend Real operator/(const Real& a, double b);
  friend Real operator+(double a, const Real& b);
  friend Real operator-(double a, const Real& b);
  friend Real operator*(double a, const Real& b);
  friend Real operator/(double a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, double b) { return mpfr_cmp_d(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, double b);

  /// Raw MPFR handle for the elementary-function layer.
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get_mutable() { return value_; }

 private:
  struct Uninitialized {};
  explicit Real(Uninitialized) {}
  /// Initialized at `precision` with unspecified value; caller must set it.
  static Real blank(Bits precision);
  friend Real blank_real(Bits precision);

  mpfr_t value_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real log2(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real cosh(const Real& x);
Real sinh(const Real& x);
Real tanh(const Real& x);
Real atanh(const Real& x);
Real acosh(const Real& x);
Real atan(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real ceil(const Real& x);
/// x * 2^e, exact.
Real ldexp(const Real& x, long e);
const Real& min(const Real& a, const Real& b);
const Real& max(const Real& a, const Real& b);

/// arccos with a guarded clamp: inputs within 2^(16-p) beyond [-1, 1] are
/// clamped, anything further out throws DomainError.
Real acos(const Real& x);

/// 2^(-bits) at the given precision.
Real epsilon_bits(long bits, Bits precision);

}  // namespace signapprox
