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

#include <stdexcept>
#include <string>
#include <vector>

#include "holder/norm/bound_report.hpp"
#include "holder/norm/exponent.hpp"
#include "holder/norm/weighted_sequence.hpp"
#include "holder/numerics/real.hpp"

namespace holder {

/// p-th power sum: sum_i w_i v_i^p for finite p.
inline Real power_sum(const WeightedSequence& f, const BigRational& p) {
  Real acc(f.precision());
  const Real pr(p, f.precision());
  for (const Atom& a : f.atoms()) {
    if (a.value.is_zero()) continue;
    acc += a.weight * (p == 1 ? a.value : pow(a.value, pr));
  }
  return acc;
}

/// (sum_i w_i v_i^p)^(1/p) for finite p; max_i v_i at p = inf (weights
/// ignored). Zero for an empty sequence.
inline Real p_norm(const WeightedSequence& f, const Exponent& p) {
  if (p.is_infinite()) return f.max_value();
  Real s = power_sum(f, p.value());
  if (p.value() == 1) return s;
  return pow(s, Real(p.reciprocal(), f.precision()));
}

/**
 * Hölder's inequality on a weighted counting measure:
 * ||fg||_1 <= ||f||_p ||g||_q with 1/p + 1/q = 1.
 */
inline BoundReport holder_check(const WeightedSequence& f, const WeightedSequence& g, const Exponent& p) {
  if (!f.same_measure(g)) throw std::invalid_argument("holder_check: f and g must share length and weights");
  const Bits prec = std::max(f.precision(), g.precision());
  Real lhs = power_sum(f.pointwise_product(g), BigRational(1));
  Real rhs = p_norm(f, p) * p_norm(g, p.conjugate());
  return make_report(std::move(lhs), std::move(rhs), prec);
}

/**
 * Exponents of the interpolation split |f|^s = |f|^alpha |f|^beta.
 *
 * Hölder with (p, q) is applied to the two factors so that alpha*p = l and
 * beta*q = m, which gives ||f||_s^s <= ||f||_l^exp_l * ||f||_m^exp_m with
 * exp_l = alpha and exp_m = beta. For m = inf, p = 1 and exp_m is the power
 * of ||f||_inf.
 */
struct InterpolationSplit {
  Exponent p;
  Exponent q;
  BigRational alpha;
  BigRational beta;
  BigRational exp_l;
  BigRational exp_m;
};

enum class Endpoints {
  kOpen,    ///< l < s < m, as in the theorem
  kClosed,  ///< l <= s <= m; diagnostic use only
};

inline InterpolationSplit interpolation_exponents(const Exponent& l, const Exponent& s, const Exponent& m,
                                                  Endpoints endpoints = Endpoints::kOpen) {
  if (l.is_infinite() || s.is_infinite()) throw std::invalid_argument("interpolation: l and s must be finite");
  bool ordered = endpoints == Endpoints::kOpen ? (l < s && s < m) : (l <= s && s <= m && l < m);
  if (!ordered)
    throw std::invalid_argument("interpolation: need l < s < m, got l=" + l.to_string() + " s=" + s.to_string() +
                                " m=" + m.to_string());

  const BigRational& lv = l.value();
  const BigRational& sv = s.value();
  if (m.is_infinite()) {
    BigRational beta = sv - lv;
    return {Exponent(1), Exponent::infinity(), lv, beta, lv, beta};
  }
  const BigRational& mv = m.value();
  // p = (m-l)/(m-s), q = (m-l)/(s-l); a zero denominator is the infinite exponent.
  Exponent p = sv == mv ? Exponent::infinity() : Exponent(BigRational((mv - lv) / (mv - sv)));
  Exponent q = sv == lv ? Exponent::infinity() : Exponent(BigRational((mv - lv) / (sv - lv)));
  BigRational alpha = lv * p.reciprocal();
  BigRational beta = mv * q.reciprocal();
  BigRational exp_l = lv * (mv - sv) / (mv - lv);
  BigRational exp_m = mv * (sv - lv) / (mv - lv);
  return {p, q, alpha, beta, exp_l, exp_m};
}

/// norm_l^exp_l * norm_m^exp_m for the split of (l, s, m).
inline Real bound_from_norms(const Real& norm_l, const Real& norm_m, const Exponent& l, const Exponent& s,
                             const Exponent& m, Endpoints endpoints = Endpoints::kOpen) {
  if (norm_l < 0 || norm_m < 0) throw std::invalid_argument("bound_from_norms: norms must be >= 0");
  InterpolationSplit split = interpolation_exponents(l, s, m, endpoints);
  return pow(norm_l, split.exp_l) * pow(norm_m, split.exp_m);
}

namespace detail {

/// ln of each nonzero value, shared by the three power sums of one bound.
struct LogTable {
  explicit LogTable(const WeightedSequence& f) : seq(f) {
    logs.reserve(f.size());
    for (const Atom& a : f.atoms()) logs.push_back(a.value.is_zero() ? Real(0, f.precision()) : log(a.value));
  }

  Real power_sum(const BigRational& p) const {
    const Real pr(p, seq.precision());
    Real acc(seq.precision());
    for (size_t i = 0; i < logs.size(); ++i) {
      const Atom& a = seq.atoms()[i];
      if (a.value.is_zero()) continue;
      acc += a.weight * (p == 1 ? a.value : exp(pr * logs[i]));
    }
    return acc;
  }

  const WeightedSequence& seq;
  std::vector<Real> logs;
};

}  // namespace detail

/**
 * The convex Hölder bound
 *   ||f||_s^s <= ||f||_l^(l(m-s)/(m-l)) * ||f||_m^(m(s-l)/(m-l)),
 * and for m = inf, ||f||_s^s <= ||f||_l^l * ||f||_inf^(s-l).
 * lhs is ||f||_s^s; rhs is the product of powered norms.
 */
inline BoundReport convex_holder_bound(const WeightedSequence& f, const Exponent& l, const Exponent& s,
                                       const Exponent& m, Endpoints endpoints = Endpoints::kOpen) {
  InterpolationSplit split = interpolation_exponents(l, s, m, endpoints);
  const Bits prec = f.precision();
  detail::LogTable table(f);

  Real lhs = table.power_sum(s.value());
  // ||f||_l^exp_l = (sum w v^l)^(exp_l / l)
  Real rhs = pow(table.power_sum(l.value()), Real(BigRational(split.exp_l / l.value()), prec));
  if (m.is_infinite())
    rhs *= pow(f.max_value(), Real(split.exp_m, prec));
  else
    rhs *= pow(table.power_sum(m.value()), Real(BigRational(split.exp_m / m.value()), prec));
  return make_report(std::move(lhs), std::move(rhs), prec);
}

}  // namespace holder
