// Copyright 2026 The holder-bounds Authors
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

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "holder/numerics/rational.hpp"

namespace holder {

/// Working precision, in mantissa bits.
using Bits = mpfr_prec_t;

inline constexpr Bits kDefaultPrecision = 256;
inline constexpr Bits kMinPrecision = 32;

/**
 * A binary floating-point number of configurable precision backed by MPFR.
 *
 * Every value carries its own precision. The result of a binary operation
 * has the larger of the two operand precisions and is correctly rounded
 * (round-to-nearest-even), so arithmetic never drops below the precision
 * the inputs were created with.
 */
class Real {
 public:
  Real() : Real(0, kDefaultPrecision) {}

  explicit Real(Bits prec) {
    mpfr_init2(value_, clamp(prec));
    mpfr_set_zero(value_, 1);
  }

  template <std::integral I>
  Real(I v, Bits prec = kDefaultPrecision) {  // NOLINT(google-explicit-constructor)
    mpfr_init2(value_, clamp(prec));
    if constexpr (std::is_signed_v<I>)
      mpfr_set_si(value_, static_cast<long>(v), MPFR_RNDN);
    else
      mpfr_set_ui(value_, static_cast<unsigned long>(v), MPFR_RNDN);
  }

  explicit Real(double v, Bits prec = kDefaultPrecision) {
    mpfr_init2(value_, clamp(prec));
    mpfr_set_d(value_, v, MPFR_RNDN);
  }

  explicit Real(const BigInt& v, Bits prec = kDefaultPrecision) {
    mpfr_init2(value_, clamp(prec));
    mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN);
  }

  explicit Real(const BigRational& v, Bits prec = kDefaultPrecision) {
    mpfr_init2(value_, clamp(prec));
    mpfr_set_q(value_, v.get_mpq_t(), MPFR_RNDN);
  }

  Real(const Real& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }

  Real(Real&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
  }

  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(value_, other.precision());
      mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }

  ~Real() { mpfr_clear(value_); }

  /// Parses a decimal ("1.25", "-3e-4") or C99 hexadecimal ("0x1.8p+1")
  /// literal, plus "inf"/"nan". Correctly rounded to `prec` bits.
  static Real parse(std::string_view text, Bits prec = kDefaultPrecision) {
    std::string s(text);
    Real r(prec);
    char* end = nullptr;
    mpfr_strtofr(r.value_, s.c_str(), &end, 0, MPFR_RNDN);
    if (s.empty() || end != s.c_str() + s.size())
      throw std::invalid_argument("not a number: '" + s + "'");
    return r;
  }

  static Real infinity(Bits prec = kDefaultPrecision) {
    Real r(prec);
    mpfr_set_inf(r.value_, 1);
    return r;
  }

  /// 2^exp, exactly.
  static Real power_of_two(long exp, Bits prec = kDefaultPrecision) {
    Real r(1, prec);
    mpfr_mul_2si(r.value_, r.value_, exp, MPFR_RNDN);
    return r;
  }

  Bits precision() const { return mpfr_get_prec(value_); }

  /// Copy rounded to a new precision.
  Real with_precision(Bits prec) const {
    Real r(prec);
    mpfr_set(r.value_, value_, MPFR_RNDN);
    return r;
  }

  /// Copy rounded toward +infinity; used for error bounds.
  Real rounded_up(Bits prec) const {
    Real r(prec);
    mpfr_set(r.value_, value_, MPFR_RNDU);
    return r;
  }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Exact conversion. Requires a finite value.
  BigRational to_rational() const {
    if (!is_finite()) throw std::domain_error("to_rational: non-finite value");
    BigRational q;
    mpfr_get_q(q.get_mpq_t(), value_);
    return q;
  }

  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_inf() const { return mpfr_inf_p(value_) != 0; }
  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  /// Binary exponent e such that |x| = m·2^e with m in [1/2, 1).
  long exponent2() const { return mpfr_get_exp(value_); }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real operator-() const {
    Real r(precision());
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& b) { return assign_binary(mpfr_add, b); }
  Real& operator-=(const Real& b) { return assign_binary(mpfr_sub, b); }
  Real& operator*=(const Real& b) { return assign_binary(mpfr_mul, b); }
  Real& operator/=(const Real& b) { return assign_binary(mpfr_div, b); }

  friend Real operator+(const Real& a, const Real& b) { return binary(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return binary(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return binary(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return binary(mpfr_div, a, b); }

  template <typename T>
    requires std::integral<T> || std::floating_point<T>
  friend Real operator+(const Real& a, T b) { return a + lift(b, a); }
  template <typename T>
    requires std::integral<T> || std::floating_point<T>
  friend Real operator+(T a, const Real& b) { return lift(a, b) + b; }
  template <typename T>
    requires std::integral<T> || std::floating_point<T>
  friend Real operator-(const Real& a, T b) { return a - lift(b, a); }
  template <typename T>
    requires std::integral<T> || std::floating_point<T>
  friend Real operator-(T a, const Real& b) { return lift(a, b) - b; }
  template <typename T>
    requires std::integral<T> || std::floating_point<T>
  friend Real operator*(const Real& a, T b) { return a * lift(b, a); }
  template <typename T>
    requires std::integral<T> || std::floating_point<T>
  friend Real operator*(T a, const Real& b) { return lift(a, b) * b; }
  template <typename T>
    requires std::integral<T> || std::floating_point<T>
  friend Real operator/(const Real& a, T b) { return a / lift(b, a); }
  template <typename T>
    requires std::integral<T> || std::floating_point<T>
  friend Real operator/(T a, const Real& b) { return lift(a, b) / b; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.value_, b.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  template <typename T>
    requires std::integral<T> || std::floating_point<T>
  friend bool operator==(const Real& a, T b) { return a == lift(b, a); }
  template <typename T>
    requires std::integral<T> || std::floating_point<T>
  friend std::partial_ordering operator<=>(const Real& a, T b) { return a <=> lift(b, a); }

  // Unary functions; results keep the argument's precision.
  friend Real sqrt(const Real& x) { return unary(mpfr_sqrt, x); }
  friend Real exp(const Real& x) { return unary(mpfr_exp, x); }
  friend Real log(const Real& x) { return unary(mpfr_log, x); }
  friend Real sin(const Real& x) { return unary(mpfr_sin, x); }
  friend Real cos(const Real& x) { return unary(mpfr_cos, x); }
  friend Real atan(const Real& x) { return unary(mpfr_atan, x); }
  friend Real abs(const Real& x) { return unary(mpfr_abs, x); }

  friend Real floor(const Real& x) {
    Real r(x.precision());
    mpfr_floor(r.value_, x.value_);
    return r;
  }

  friend Real pow(const Real& base, const Real& e) { return binary(mpfr_pow, base, e); }

  /// base^e for an exact rational exponent; the exponent is rounded to the
  /// base's precision only when it is not an integer.
  friend Real pow(const Real& base, const BigRational& e) {
    if (e.get_den() == 1 && e.get_num().fits_slong_p()) {
      Real r(base.precision());
      mpfr_pow_si(r.value_, base.value_, e.get_num().get_si(), MPFR_RNDN);
      return r;
    }
    return pow(base, Real(e, base.precision()));
  }

  template <std::integral I>
  friend Real pow(const Real& base, I e) {
    Real r(base.precision());
    mpfr_pow_si(r.value_, base.value_, static_cast<long>(e), MPFR_RNDN);
    return r;
  }

  /// x·2^e, exact.
  friend Real ldexp(const Real& x, long e) {
    Real r(x.precision());
    mpfr_mul_2si(r.value_, x.value_, e, MPFR_RNDN);
    return r;
  }

  friend Real max(const Real& a, const Real& b) { return binary(mpfr_max, a, b); }
  friend Real min(const Real& a, const Real& b) { return binary(mpfr_min, a, b); }

  /// Decimal rendering with `digits` significant digits, rounded to nearest
  /// with ties to even. Positional for moderate magnitudes, otherwise
  /// d.ddd…e±XX.
  std::string to_string(int digits = 15) const {
    if (is_nan()) return "nan";
    if (is_inf()) return sign() > 0 ? "inf" : "-inf";
    if (is_zero()) return digits > 1 ? "0." + std::string(static_cast<size_t>(digits - 1), '0') : "0";
    digits = std::max(digits, 1);
    mpfr_exp_t dec_exp = 0;
    std::unique_ptr<char, void (*)(char*)> raw(
        mpfr_get_str(nullptr, &dec_exp, 10, static_cast<size_t>(digits), value_, MPFR_RNDN), mpfr_free_str);
    std::string mant(raw.get());
    std::string sign_str;
    if (mant.front() == '-') {
      sign_str = "-";
      mant.erase(0, 1);
    }
    // value = 0.mant × 10^dec_exp
    std::string out;
    if (dec_exp > digits + 6 || dec_exp < -5) {
      out = mant.substr(0, 1);
      if (mant.size() > 1) out += "." + mant.substr(1);
      long e10 = static_cast<long>(dec_exp) - 1;
      out += (e10 < 0 ? "e-" : "e+") + std::to_string(std::labs(e10));
    } else if (dec_exp <= 0) {
      out = "0." + std::string(static_cast<size_t>(-dec_exp), '0') + mant;
    } else if (dec_exp >= static_cast<mpfr_exp_t>(mant.size())) {
      out = mant + std::string(static_cast<size_t>(dec_exp) - mant.size(), '0');
    } else {
      out = mant.substr(0, static_cast<size_t>(dec_exp)) + "." + mant.substr(static_cast<size_t>(dec_exp));
    }
    return sign_str + out;
  }

  /// Exact hexadecimal floating-point rendering ("0x1.8p+1").
  std::string to_hex() const {
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, "%Ra", value_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(); }

 private:
  using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

  static Bits clamp(Bits prec) { return std::max<Bits>(prec, MPFR_PREC_MIN); }

  template <typename T>
  static Real lift(T v, const Real& like) {
    if constexpr (std::integral<T>)
      return Real(v, like.precision());
    else
      return Real(static_cast<double>(v), like.precision());
  }

  static Real binary(BinaryFn fn, const Real& a, const Real& b) {
    Real r(std::max(a.precision(), b.precision()));
    fn(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
  }

  static Real unary(UnaryFn fn, const Real& x) {
    Real r(x.precision());
    fn(r.value_, x.value_, MPFR_RNDN);
    return r;
  }

  Real& assign_binary(BinaryFn fn, const Real& b) {
    if (b.precision() > precision()) mpfr_prec_round(value_, b.precision(), MPFR_RNDN);
    fn(value_, value_, b.value_, MPFR_RNDN);
    return *this;
  }

  mpfr_t value_;
};

/// Unit roundoff 2^(1-prec).
inline Real unit_roundoff(Bits prec) { return Real::power_of_two(1 - static_cast<long>(prec), 64); }

/**
 * A value with a rigorous (or, for quadrature, estimated) absolute error:
 * the true value lies in [estimate - error_bound, estimate + error_bound].
 */
struct EnclosedValue {
  Real estimate;
  Real error_bound;

  Real lower() const { return estimate - error_bound; }
  Real upper() const { return estimate + error_bound; }

  bool contains(const Real& x) const { return lower() <= x && x <= upper(); }

  /// Whether two enclosures overlap.
  bool overlaps(const EnclosedValue& other) const {
    return lower() <= other.upper() && other.lower() <= upper();
  }
};

}  // namespace holder
