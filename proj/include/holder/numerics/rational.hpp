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

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace holder {

/// Arbitrary-size integer.
using BigInt = mpz_class;

/// Arbitrary-size rational, always kept in lowest terms with a positive
/// denominator (gmpxx canonicalizes on every arithmetic operation).
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const BigRational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

/**
 * Parses an exact rational from "n", "n/d", or a finite decimal such as
 * "-1.25" or "2.5e-3". Decimals are converted exactly (1.1 -> 11/10).
 */
inline BigRational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigRational num = parse_rational(std::string_view(s).substr(0, slash));
    BigRational den = parse_rational(std::string_view(s).substr(slash + 1));
    if (den == 0) throw bad();
    return num / den;
  }

  size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';

  std::string digits;
  long scale = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw bad();

  long exp10 = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw bad();
    std::string tail = s.substr(i + 1);
    if (tail.empty()) throw bad();
    size_t used = 0;
    try {
      exp10 = std::stol(tail, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != tail.size()) throw bad();
  }

  BigInt num(digits, 10);
  if (negative) num = -num;
  long shift = exp10 - scale;
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  return shift >= 0 ? BigRational(num * ten_pow) : make_rational(num, ten_pow);
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigRational pow(const BigRational& base, unsigned long e) {
  return make_rational(pow(BigInt(base.get_num()), e), pow(BigInt(base.get_den()), e));
}

}  // namespace holder
