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

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holder/norm_core.hpp"
#include "holder/numerics.hpp"

namespace holder {

/**
 * Exact value coefficient * pi^pi_power * sqrt(radicand).
 *
 * Canonical form: coefficient > 0 and the radicand is a squarefree positive
 * integer (stored as a rational with denominator 1), so sqrt(c/d) is
 * rationalized to sqrt(c*d)/d. Two radicals are equal iff their canonical
 * fields are equal.
 */
class CanonicalRadical {
 public:
  static CanonicalRadical make(const BigRational& coefficient, int pi_power, const BigRational& radicand) {
    if (coefficient <= 0) throw std::invalid_argument("radical coefficient must be positive");
    if (radicand <= 0) throw std::invalid_argument("radicand must be positive");
    if (pi_power < 0) throw std::invalid_argument("pi power must be >= 0");

    // sqrt(P/Q) = sqrt(P*Q)/Q, then pull square factors out of P*Q.
    BigInt product = radicand.get_num() * radicand.get_den();
    auto [outside, inside] = split_square(product);
    CanonicalRadical r;
    r.coefficient_ = coefficient * BigRational(outside) / BigRational(radicand.get_den());
    r.coefficient_.canonicalize();
    r.pi_power_ = pi_power;
    r.radicand_ = BigRational(inside);
    return r;
  }

  const BigRational& coefficient() const { return coefficient_; }
  int pi_power() const { return pi_power_; }
  const BigRational& radicand() const { return radicand_; }

  Real evaluate(Bits prec = kDefaultPrecision) const {
    const Bits work = prec + 16;
    Real v = Real(coefficient_, work) * pow(pi_value(work), pi_power_) * sqrt(Real(radicand_, work));
    return v.with_precision(prec);
  }

  /// UTF-8 rendering such as "π^3·√15/90".
  std::string to_string() const {
    std::string s;
    const BigInt& num = coefficient_.get_num();
    bool has_factor = false;
    if (num != 1 || (pi_power_ == 0 && radicand_ == 1)) {
      s += num.get_str();
      has_factor = true;
    }
    if (pi_power_ > 0) {
      if (has_factor) s += "·";
      s += pi_power_ == 1 ? "π" : "π^" + std::to_string(pi_power_);
      has_factor = true;
    }
    if (radicand_ != 1) {
      if (has_factor) s += "·";
      s += "√" + radicand_.get_num().get_str();
    }
    if (coefficient_.get_den() != 1) s += "/" + coefficient_.get_den().get_str();
    return s;
  }

  friend bool operator==(const CanonicalRadical& a, const CanonicalRadical& b) {
    return a.coefficient_ == b.coefficient_ && a.pi_power_ == b.pi_power_ && a.radicand_ == b.radicand_;
  }

  /// Largest s with s^2 | n, and n / s^2. Trial division to 10^6; any
  /// remaining cofactor must be 1, prime, a perfect square, or a product of
  /// two primes above the trial bound.
  static std::pair<BigInt, BigInt> split_square(BigInt n) {
    if (n <= 0) throw std::invalid_argument("split_square: n must be positive");
    BigInt outside = 1;
    BigInt inside = 1;
    constexpr unsigned long kTrialLimit = 1000000;
    for (unsigned long d = 2; d <= kTrialLimit; d += (d == 2 ? 1 : 2)) {
      if (n.fits_ulong_p() && d > n.get_ui() / d) break;
      int e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        ++e;
      }
      if (e == 0) continue;
      for (int i = 0; i < e / 2; ++i) outside *= d;
      if (e % 2 == 1) inside *= d;
    }
    if (n == 1) return {outside, inside};
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      BigInt root;
      mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
      auto [o, i] = split_square(root);
      if (i != 1) throw std::runtime_error("split_square: cannot factor cofactor " + n.get_str());
      return {outside * root, inside};
    }
    BigInt limit_cubed = BigInt(kTrialLimit) * kTrialLimit * kTrialLimit;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0 || n < limit_cubed) return {outside, inside * n};
    throw std::runtime_error("split_square: cannot certify squarefree cofactor " + n.get_str());
  }

 private:
  BigRational coefficient_ = 1;
  int pi_power_ = 0;
  BigRational radicand_ = 1;
};

inline void require_positive_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

/// zeta(2k+1) <= sqrt(zeta(2k) zeta(2k+2)), from the exact even closed forms.
inline Real odd_zeta_bound(int k, Bits prec = kDefaultPrecision) {
  require_positive_k(k);
  const Bits work = prec + 16;
  BigRational q = zeta_even_closed_form(2 * k) * zeta_even_closed_form(2 * k + 2);
  Real v = pow(pi_value(work), 2 * k + 1) * sqrt(Real(q, work));
  return v.with_precision(prec);
}

/// The same bound as an exact radical.
inline CanonicalRadical odd_zeta_closed_form(int k) {
  require_positive_k(k);
  return CanonicalRadical::make(BigRational(1), 2 * k + 1,
                                zeta_even_closed_form(2 * k) * zeta_even_closed_form(2 * k + 2));
}

/**
 * The same bound through the interpolation engine: f = {1/n^2},
 * ||f||_k = zeta(2k)^(1/k), ||f||_{k+1} = zeta(2k+2)^(1/(k+1)), s = k + 1/2.
 */
inline Real odd_zeta_bound_via_norms(int k, Bits prec = kDefaultPrecision) {
  require_positive_k(k);
  const Bits work = prec + 16;
  const Real pi = pi_value(work);
  Real zeta_lo = Real(zeta_even_closed_form(2 * k), work) * pow(pi, 2 * k);
  Real zeta_hi = Real(zeta_even_closed_form(2 * k + 2), work) * pow(pi, 2 * k + 2);
  Real norm_l = pow(zeta_lo, Real(BigRational(1, k), work));
  Real norm_m = pow(zeta_hi, Real(BigRational(1, k + 1), work));
  Real v = bound_from_norms(norm_l, norm_m, Exponent(k), Exponent(BigRational(2 * k + 1, 2)), Exponent(k + 1));
  return v.with_precision(prec);
}

struct ZetaTableRow {
  int odd_index = 0;
  EnclosedValue zeta_value;
  Real bound_numeric;
  CanonicalRadical bound_closed;
  Real ratio;
  /// |bound_numeric - bound_closed.evaluate()| within 2^(-prec/2).
  bool closed_form_consistent = false;
};

inline ZetaTableRow zeta_table_row(int k, Bits prec = kDefaultPrecision) {
  require_positive_k(k);
  ZetaTableRow row;
  row.odd_index = 2 * k + 1;
  row.zeta_value = zeta_reference(Real(2 * k + 1, prec), prec);
  row.bound_numeric = odd_zeta_bound(k, prec);
  row.bound_closed = odd_zeta_closed_form(k);
  row.ratio = row.bound_numeric / row.zeta_value.estimate;
  Real diff = abs(row.bound_closed.evaluate(prec) - row.bound_numeric);
  row.closed_form_consistent = diff <= relative_tolerance(prec) * row.bound_numeric;
  return row;
}

inline std::vector<ZetaTableRow> zeta_table(int k_max, Bits prec = kDefaultPrecision) {
  if (k_max < 1) throw std::invalid_argument("zeta_table: k_max must be >= 1");
  std::vector<ZetaTableRow> rows;
  rows.reserve(static_cast<size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) rows.push_back(zeta_table_row(k, prec));
  return rows;
}

struct OddBoundVerification {
  BoundReport report;
  Real engine_rhs;
  /// |engine_rhs - rhs| / rhs
  Real engine_relative_gap;
  bool engine_agrees = false;
};

/// zeta(2k+1) against its bound, with the closed-form path cross-checked
/// against the interpolation engine.
inline OddBoundVerification verify_odd_bound_chain(int k, Bits prec = kDefaultPrecision) {
  require_positive_k(k);
  EnclosedValue zeta = zeta_reference(Real(2 * k + 1, prec), prec);
  Real rhs = odd_zeta_bound(k, prec);
  OddBoundVerification v;
  v.engine_rhs = odd_zeta_bound_via_norms(k, prec);
  v.engine_relative_gap = abs(v.engine_rhs - rhs) / rhs;
  v.engine_agrees = v.engine_relative_gap <= relative_tolerance(prec);
  v.report = make_report(zeta.estimate, rhs, prec);
  return v;
}

/**
 * Closed forms as printed in the published table of odd zeta bounds
 * (odd index 3..11), kept to flag where an exact computation disagrees.
 * The odd-index-11 entry prints pi^11 sqrt(691) / (5 sqrt(273)), which is
 * off by a factor of 93555 from its own numeric column.
 */
struct PublishedZetaRow {
  int odd_index;
  const char* zeta_value;
  const char* bound_value;
  const char* closed_form_text;
  CanonicalRadical closed_form;
};

inline const std::vector<PublishedZetaRow>& published_zeta_rows() {
  static const std::vector<PublishedZetaRow> rows = {
      {3, "1.20205690315959", "1.33429770234112", "π^3/(6√15)",
       CanonicalRadical::make(BigRational(1, 6), 3, BigRational(1, 15))},
      {5, "1.03692775514336", "1.04933027814916", "π^5/(45√42)",
       CanonicalRadical::make(BigRational(1, 45), 5, BigRational(1, 42))},
      {7, "1.00834927738192", "1.01068844458798", "π^7/(945√10)",
       CanonicalRadical::make(BigRational(1, 945), 7, BigRational(1, 10))},
      {9, "1.00200839282608", "1.00253478072475", "π^9/(2835√110)",
       CanonicalRadical::make(BigRational(1, 2835), 9, BigRational(1, 110))},
      {11, "1.00049418860411", "1.00062026085458", "π^11·√691/(5√273)",
       CanonicalRadical::make(BigRational(1, 5), 11, BigRational(691, 273))},
  };
  return rows;
}

inline const PublishedZetaRow* published_row(int odd_index) {
  for (const PublishedZetaRow& r : published_zeta_rows())
    if (r.odd_index == odd_index) return &r;
  return nullptr;
}

/// Whether a computed row's closed form differs from the published one.
inline bool differs_from_published(const ZetaTableRow& row) {
  const PublishedZetaRow* p = published_row(row.odd_index);
  return p != nullptr && !(p->closed_form == row.bound_closed);
}

}  // namespace holder
