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

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holder/norm_core.hpp"
#include "holder/numerics.hpp"

namespace holder {

/// l = floor(y), m = l + 1. For integer y, l = y (the equality case).
struct FloorBracket {
  Real y;
  long l = 0;
  long m = 0;

  bool is_integer() const { return y.is_integer(); }
};

inline FloorBracket floor_bracket(const Real& y) {
  Real fl = floor(y);
  long l = static_cast<long>(fl.to_double());
  return {y, l, l + 1};
}

struct IntegralBound {
  BoundReport report;
  EnclosedValue integral_s;  ///< int f^s
  EnclosedValue integral_l;  ///< int f^l
  EnclosedValue integral_m;  ///< int f^m
};

namespace detail {

inline Real clamp_nonnegative(const Real& v) {
  if (v.sign() >= 0) return v;
  // sin(pi/2 + tiny) style rounding can dip just below zero.
  if (abs(v) <= Real::power_of_two(-static_cast<long>(v.precision()) / 2, 64)) return Real(0, v.precision());
  throw std::domain_error("integrand must be nonnegative, got " + v.to_string());
}

inline RealFunction powered(const RealFunction& f, const BigRational& e) {
  if (e == 1) return [f](const Real& x) { return clamp_nonnegative(f(x)); };
  return [f, e](const Real& x) {
    Real v = clamp_nonnegative(f(x));
    return v.is_zero() ? v : pow(v, e);
  };
}

}  // namespace detail

/**
 * The convex Hölder bound for Lebesgue measure on [a, b]:
 * int f^s <= (int f^l)^((m-s)/(m-l)) * (int f^m)^((s-l)/(m-l)).
 * With l = 1, m = 2 this is (int f)^(2-s) (int f^2)^(s-1).
 */
inline IntegralBound lp_integral_bound(const RealFunction& f, const Real& a, const Real& b, const BigRational& s,
                                       const Real& tol, const Exponent& l = Exponent(1),
                                       const Exponent& m = Exponent(2), const QuadratureOptions& opts = {}) {
  if (m.is_infinite()) throw std::invalid_argument("lp_integral_bound: m must be finite");
  const Exponent se(s);
  InterpolationSplit split = interpolation_exponents(l, se, m);
  const Bits prec = opts.precision;

  IntegralBound out;
  out.integral_s = integrate(detail::powered(f, s), a, b, tol, opts);
  out.integral_l = integrate(detail::powered(f, l.value()), a, b, tol, opts);
  out.integral_m = integrate(detail::powered(f, m.value()), a, b, tol, opts);

  const Real el(BigRational(split.exp_l / l.value()), prec);
  const Real em(BigRational(split.exp_m / m.value()), prec);
  Real rhs = pow(out.integral_l.estimate, el) * pow(out.integral_m.estimate, em);

  // First-order propagation of the quadrature errors into rhs.
  Real rel_rhs(prec);
  if (!out.integral_l.estimate.is_zero()) rel_rhs += el * out.integral_l.error_bound / out.integral_l.estimate;
  if (!out.integral_m.estimate.is_zero()) rel_rhs += em * out.integral_m.error_bound / out.integral_m.estimate;
  Real tolerance = out.integral_s.error_bound + 2 * rel_rhs * abs(rhs) +
                   relative_tolerance(prec) * max(abs(rhs), abs(out.integral_s.estimate));
  out.report = make_report(out.integral_s.estimate, std::move(rhs), tolerance.rounded_up(64));
  return out;
}

/// lp_integral_bound for sin on [0, pi/2] at each s in (1, 2).
inline std::vector<IntegralBound> sin_power_table(const std::vector<BigRational>& s_grid, const Real& tol,
                                                  const QuadratureOptions& opts = {}) {
  std::vector<IntegralBound> out;
  out.reserve(s_grid.size());
  const Real zero(0, opts.precision);
  const Real half_pi = pi_value(opts.precision) / 2;
  for (const BigRational& s : s_grid) {
    if (s <= 1 || s >= 2) throw std::invalid_argument("sin_power_table: s must lie in (1, 2)");
    out.push_back(lp_integral_bound([](const Real& x) { return sin(x); }, zero, half_pi, s, tol, Exponent(1),
                                    Exponent(2), opts));
  }
  return out;
}

/// Gamma(y+1) <= l! (l+1)^(y-l) with l = floor(y); equal to y! at integers.
inline std::pair<FloorBracket, Real> gamma_upper_bound(const Real& y, Bits prec = kDefaultPrecision) {
  if (!(y.is_finite() && y > 1)) throw std::invalid_argument("gamma_upper_bound: requires y > 1");
  FloorBracket br = floor_bracket(y);
  const Real fact(factorial(static_cast<unsigned long>(br.l)), prec + 16);
  if (br.is_integer()) return {br, fact.with_precision(prec)};
  Real frac = y.with_precision(prec + 16) - br.l;
  Real v = fact * pow(Real(br.l + 1, prec + 16), frac);
  return {br, v.with_precision(prec)};
}

/**
 * B(x+1, y+1) <= l! m! (l+1)^(x-l) (m+1)^(y-m) / (l+m)!
 * with l = floor(x) >= 1, m = floor(y) >= 1.
 */
inline Real beta_upper_bound(const Real& x, const Real& y, Bits prec = kDefaultPrecision) {
  if (!(x.is_finite() && y.is_finite() && x >= 1 && y >= 1))
    throw std::invalid_argument("beta_upper_bound: requires floor(x), floor(y) >= 1");
  const Bits work = prec + 16;
  FloorBracket bx = floor_bracket(x);
  FloorBracket by = floor_bracket(y);
  Real v = Real(BigRational(factorial(static_cast<unsigned long>(bx.l)) * factorial(static_cast<unsigned long>(by.l)),
                            factorial(static_cast<unsigned long>(bx.l + by.l))),
                work);
  v *= pow(Real(bx.l + 1, work), x.with_precision(work) - bx.l);
  v *= pow(Real(by.l + 1, work), y.with_precision(work) - by.l);
  return v.with_precision(prec);
}

/// B(a, b) = Gamma(a) Gamma(b) / Gamma(a+b) from gamma_reference.
inline EnclosedValue beta_reference(const Real& a, const Real& b, Bits prec = kDefaultPrecision) {
  EnclosedValue ga = gamma_reference(a, prec);
  EnclosedValue gb = gamma_reference(b, prec);
  EnclosedValue gab = gamma_reference(a + b, prec);
  Real value = ga.estimate * gb.estimate / gab.estimate;
  Real rel = ga.error_bound / ga.estimate + gb.error_bound / gb.estimate + gab.error_bound / gab.estimate;
  Real err = abs(value) * (2 * rel + 8 * unit_roundoff(prec));
  return {value, err.rounded_up(64)};
}

/// Nonnegative test integrands by name: sin, x, x2, exp-neg.
inline RealFunction named_integrand(const std::string& name) {
  if (name == "sin") return [](const Real& x) { return sin(x); };
  if (name == "x") return [](const Real& x) { return x; };
  if (name == "x2") return [](const Real& x) { return x * x; };
  if (name == "exp-neg") return [](const Real& x) { return exp(-x); };
  throw std::invalid_argument("unknown integrand '" + name + "' (expected sin, x, x2, exp-neg)");
}

}  // namespace holder
