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

#include "signapprox/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <ostream>
#include <string>

#include "signapprox/errors.hpp"

namespace signapprox {

namespace {

Bits checked(Bits precision) {
  if (precision < MPFR_PREC_MIN || precision > 1 << 20) {
    throw DomainError("Real: precision out of range: " + std::to_string(precision));
  }
  return precision;
}

// Enough decimal digits that parsing back at `bits` reproduces the value.
int round_trip_digits(Bits bits) {
  return static_cast<int>(std::ceil(static_cast<double>(bits) * 0.30102999566398120)) + 2;
}

}  // namespace

Real blank_real(Bits precision) { return Real::blank(precision); }

Real Real::blank(Bits precision) {
  Real r{Uninitialized{}};
  mpfr_init2(r.value_, checked(precision));
  return r;
}

Real::Real(double value, Bits precision) {
  mpfr_init2(value_, checked(precision));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(long value, Bits precision) {
  mpfr_init2(value_, checked(precision));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  std::memcpy(value_, other.value_, sizeof(mpfr_t));
  other.value_->_mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (value_->_mpfr_d == nullptr) {
    mpfr_init2(value_, other.precision());
  } else if (precision() != other.precision()) {
    mpfr_set_prec(value_, other.precision());
  }
  mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() {
  if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
}

Real Real::from_decimal(std::string_view text, Bits precision) {
  Real r = blank(precision);
  std::string s(text);
  if (mpfr_set_str(r.value_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("Real: not a decimal literal: '" + s + "'");
  }
  return r;
}

Real Real::from_tagged(std::string_view text) {
  const auto colon = text.find(':');
  if (text.substr(0, 2) != "p=" || colon == std::string_view::npos) {
    throw DomainError("Real: expected 'p=<bits>:<decimal>', got '" + std::string(text) + "'");
  }
  const std::string bits_text(text.substr(2, colon - 2));
  Bits bits = 0;
  try {
    std::size_t used = 0;
    bits = std::stol(bits_text, &used);
    if (used != bits_text.size()) throw std::invalid_argument(bits_text);
  } catch (const std::exception&) {
    throw DomainError("Real: bad precision tag '" + bits_text + "'");
  }
  return from_decimal(text.substr(colon + 1), bits);
}

Real Real::pi(Bits precision) {
  Real r = blank(precision);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::with_precision(Bits precision) const {
  Real r = blank(precision);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string Real::to_decimal(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  if (digits <= 0) digits = round_trip_digits(precision());
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), value_, MPFR_RNDN);
  std::string mantissa(raw);
  mpfr_free_str(raw);
  std::string out;
  if (mantissa.front() == '-') {
    out.push_back('-');
    mantissa.erase(0, 1);
  }
  // Trailing zeros carry no information and would make output depend on the
  // digit budget only.
  while (mantissa.size() > 1 && mantissa.back() == '0') mantissa.pop_back();
  out.push_back(mantissa.front());
  if (mantissa.size() > 1) {
    out.push_back('.');
    out.append(mantissa, 1, std::string::npos);
  }
  const long e = static_cast<long>(exp10) - 1;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

std::string Real::to_tagged() const {
  return "p=" + std::to_string(precision()) + ":" + to_decimal();
}

Real Real::operator-() const {
  Real r = blank(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

#define SIGNAPPROX_COMPOUND(op, fn, fn_d)                      \
  Real& Real::operator op(const Real& rhs) {                   \
    if (rhs.precision() > precision()) {                       \
      mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);     \
    }                                                          \
    fn(value_, value_, rhs.value_, MPFR_RNDN);                 \
    return *this;                                              \
  }                                                            \
  Real& Real::operator op(double rhs) {                        \
    fn_d(value_, value_, rhs, MPFR_RNDN);                      \
    return *this;                                              \
  }

SIGNAPPROX_COMPOUND(+=, mpfr_add, mpfr_add_d)
SIGNAPPROX_COMPOUND(-=, mpfr_sub, mpfr_sub_d)
SIGNAPPROX_COMPOUND(*=, mpfr_mul, mpfr_mul_d)
SIGNAPPROX_COMPOUND(/=, mpfr_div, mpfr_div_d)
#undef SIGNAPPROX_COMPOUND

#define SIGNAPPROX_BINARY(op, fn, fn_rd, fn_dr)                              \
  Real operator op(const Real& a, const Real& b) {                           \
    Real r = Real::blank(std::max(a.precision(), b.precision()));            \
    fn(r.value_, a.value_, b.value_, MPFR_RNDN);                             \
    return r;                                                                \
  }                                                                          \
  Real operator op(const Real& a, double b) {                                \
    Real r = Real::blank(a.precision());                                     \
    fn_rd(r.value_, a.value_, b, MPFR_RNDN);                                 \
    return r;                                                                \
  }                                                                          \
  Real operator op(double a, const Real& b) {                                \
    Real r = Real::blank(b.precision());                                     \
    fn_dr(r.value_, a, b.value_, MPFR_RNDN);                                 \
    return r;                                                                \
  }

namespace {
int add_dr(mpfr_ptr r, double a, mpfr_srcptr b, mpfr_rnd_t rnd) { return mpfr_add_d(r, b, a, rnd); }
int mul_dr(mpfr_ptr r, double a, mpfr_srcptr b, mpfr_rnd_t rnd) { return mpfr_mul_d(r, b, a, rnd); }
}  // namespace

SIGNAPPROX_BINARY(+, mpfr_add, mpfr_add_d, add_dr)
SIGNAPPROX_BINARY(-, mpfr_sub, mpfr_sub_d, mpfr_d_sub)
SIGNAPPROX_BINARY(*, mpfr_mul, mpfr_mul_d, mul_dr)
SIGNAPPROX_BINARY(/, mpfr_div, mpfr_div_d, mpfr_d_div)
#undef SIGNAPPROX_BINARY

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, double b) {
  if (mpfr_nan_p(a.value_) || std::isnan(b)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_decimal(); }

#define SIGNAPPROX_UNARY(name, fn)                 \
  Real name(const Real& x) {                       \
    Real r = blank_real(x.precision());            \
    fn(r.get_mutable(), x.get(), MPFR_RNDN);       \
    return r;                                      \
  }

SIGNAPPROX_UNARY(abs, mpfr_abs)
SIGNAPPROX_UNARY(exp, mpfr_exp)
SIGNAPPROX_UNARY(expm1, mpfr_expm1)
SIGNAPPROX_UNARY(cos, mpfr_cos)
SIGNAPPROX_UNARY(sin, mpfr_sin)
SIGNAPPROX_UNARY(cosh, mpfr_cosh)
SIGNAPPROX_UNARY(sinh, mpfr_sinh)
SIGNAPPROX_UNARY(tanh, mpfr_tanh)
SIGNAPPROX_UNARY(atan, mpfr_atan)
#undef SIGNAPPROX_UNARY

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("sqrt of negative number " + x.to_decimal(12));
  Real r = blank_real(x.precision());
  mpfr_sqrt(r.get_mutable(), x.get(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("log of non-positive number " + x.to_decimal(12));
  Real r = blank_real(x.precision());
  mpfr_log(r.get_mutable(), x.get(), MPFR_RNDN);
  return r;
}

Real log1p(const Real& x) {
  if (x <= -1.0) throw DomainError("log1p argument <= -1: " + x.to_decimal(12));
  Real r = blank_real(x.precision());
  mpfr_log1p(r.get_mutable(), x.get(), MPFR_RNDN);
  return r;
}

Real log2(const Real& x) {
  if (x.sign() <= 0) throw DomainError("log2 of non-positive number " + x.to_decimal(12));
  Real r = blank_real(x.precision());
  mpfr_log2(r.get_mutable(), x.get(), MPFR_RNDN);
  return r;
}

Real atanh(const Real& x) {
  if (!(abs(x) < 1.0)) throw DomainError("atanh argument outside (-1,1): " + x.to_decimal(12));
  Real r = blank_real(x.precision());
  mpfr_atanh(r.get_mutable(), x.get(), MPFR_RNDN);
  return r;
}

Real acosh(const Real& x) {
  if (x < 1.0) throw DomainError("acosh argument below 1: " + x.to_decimal(12));
  Real r = blank_real(x.precision());
  mpfr_acosh(r.get_mutable(), x.get(), MPFR_RNDN);
  return r;
}

Real acos(const Real& x) {
  const Bits p = x.precision();
  const Real slack = epsilon_bits(p - 16, p);
  Real arg = x;
  if (x > 1.0) {
    if (x - 1.0 > slack) throw DomainError("acos argument above 1: " + x.to_decimal(20));
    arg = Real::one(p);
  } else if (x < -1.0) {
    if (-1.0 - x > slack) throw DomainError("acos argument below -1: " + x.to_decimal(20));
    arg = -Real::one(p);
  }
  Real r = blank_real(p);
  mpfr_acos(r.get_mutable(), arg.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r = blank_real(std::max(x.precision(), y.precision()));
  mpfr_pow(r.get_mutable(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r = blank_real(x.precision());
  mpfr_pow_si(r.get_mutable(), x.get(), n, MPFR_RNDN);
  return r;
}

Real floor(const Real& x) {
  Real r = blank_real(x.precision());
  mpfr_floor(r.get_mutable(), x.get());
  return r;
}

Real ceil(const Real& x) {
  Real r = blank_real(x.precision());
  mpfr_ceil(r.get_mutable(), x.get());
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r = blank_real(x.precision());
  mpfr_mul_2si(r.get_mutable(), x.get(), e, MPFR_RNDN);
  return r;
}

const Real& min(const Real& a, const Real& b) { return b < a ? b : a; }
const Real& max(const Real& a, const Real& b) { return a < b ? b : a; }

Real epsilon_bits(long bits, Bits precision) { return ldexp(Real::one(precision), -bits); }

}  // namespace signapprox
