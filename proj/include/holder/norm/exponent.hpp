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

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "holder/numerics/rational.hpp"

namespace holder {

/// An exponent p in [1, inf]; exact when finite.
class Exponent {
 public:
  Exponent(const BigRational& value) : finite_(value) {  // NOLINT(google-explicit-constructor)
    finite_->canonicalize();
    if (*finite_ < 1) throw std::invalid_argument("exponent must be >= 1, got " + holder::to_string(*finite_));
  }
  Exponent(long value) : Exponent(BigRational(value)) {}  // NOLINT(google-explicit-constructor)

  static Exponent infinity() { return Exponent(); }

  /// Accepts "inf", "infinity", "∞" or any form parse_rational understands.
  static Exponent parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "Inf" || text == "∞") return infinity();
    return Exponent(parse_rational(text));
  }

  bool is_infinite() const { return !finite_.has_value(); }
  bool is_finite() const { return finite_.has_value(); }

  const BigRational& value() const {
    if (!finite_) throw std::logic_error("value() of an infinite exponent");
    return *finite_;
  }

  /// 1/p, with 1/inf = 0.
  BigRational reciprocal() const { return finite_ ? BigRational(1) / *finite_ : BigRational(0); }

  /// q with 1/p + 1/q = 1.
  Exponent conjugate() const {
    if (!finite_) return Exponent(1);
    if (*finite_ == 1) return infinity();
    return Exponent(*finite_ / (*finite_ - 1));
  }

  std::string to_string() const { return finite_ ? holder::to_string(*finite_) : "inf"; }

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.finite_ == b.finite_; }
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    if (a.is_infinite()) return std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    int c = cmp(*a.finite_, *b.finite_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Exponent() = default;

  std::optional<BigRational> finite_;
};

}  // namespace holder
