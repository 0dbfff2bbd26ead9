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

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "holder/numerics/real.hpp"

namespace holder {

using RealFunction = std::function<Real(const Real&)>;

/// Adaptive quadrature gave up before reaching the requested tolerance.
/// Carries the best enclosure found.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, EnclosedValue best)
      : std::runtime_error(what), best_(std::move(best)) {}

  const EnclosedValue& best() const { return best_; }

 private:
  EnclosedValue best_;
};

struct QuadratureOptions {
  Bits precision = 128;
  int max_depth = 48;
  int min_depth = 4;
  /// Multiplier applied to the interval-halving error estimate.
  double safety = 4.0;
};

namespace detail {

struct SimpsonState {
  const RealFunction& f;
  const QuadratureOptions& opts;
  Real sum;
  Real error;
  bool exhausted = false;
  long evaluations = 0;
};

inline Real simpson(const Real& a, const Real& b, const Real& fa, const Real& fm, const Real& fb) {
  return (b - a) / 6 * (fa + 4 * fm + fb);
}

inline void adaptive_simpson(SimpsonState& st, const Real& a, const Real& b, const Real& fa, const Real& fm,
                             const Real& fb, const Real& whole, const Real& tol, int depth) {
  Real m = (a + b) / 2;
  Real lm = (a + m) / 2;
  Real rm = (m + b) / 2;
  Real flm = st.f(lm);
  Real frm = st.f(rm);
  st.evaluations += 2;
  Real left = simpson(a, m, fa, flm, fm);
  Real right = simpson(m, b, fm, frm, fb);
  Real halves = left + right;
  Real delta = halves - whole;
  Real estimate = abs(delta) / 15 * st.opts.safety;

  bool deep_enough = depth >= st.opts.min_depth;
  if ((deep_enough && estimate <= tol) || depth >= st.opts.max_depth) {
    if (!(estimate <= tol)) st.exhausted = true;
    st.sum += halves + delta / 15;
    st.error += estimate;
    return;
  }
  Real half_tol = tol / 2;
  adaptive_simpson(st, a, m, fa, flm, fm, left, half_tol, depth + 1);
  adaptive_simpson(st, m, b, fm, frm, fb, right, half_tol, depth + 1);
}

}  // namespace detail

/**
 * Adaptive Simpson quadrature of f over [a, b].
 *
 * A panel is accepted once safety * |S(halves) - S(whole)| / 15 falls below
 * its share of `tol`; the accepted panels' estimates are summed into
 * error_bound. Throws QuadratureError when a panel hits max_depth first.
 */
inline EnclosedValue integrate(const RealFunction& f, const Real& a, const Real& b, const Real& tol,
                               const QuadratureOptions& opts = {}) {
  if (!(tol > 0)) throw std::invalid_argument("integrate: tolerance must be positive");
  if (!(a.is_finite() && b.is_finite())) throw std::invalid_argument("integrate: endpoints must be finite");
  if (a == b) return {Real(0, opts.precision), Real(0, 64)};
  if (b < a) {
    EnclosedValue r = integrate(f, b, a, tol, opts);
    r.estimate = -r.estimate;
    return r;
  }

  const Real lo = a.with_precision(opts.precision);
  const Real hi = b.with_precision(opts.precision);
  // Leave room in the tolerance for accumulated rounding.
  const Real tol_w = tol.with_precision(opts.precision) * 0.9;
  detail::SimpsonState st{f, opts, Real(opts.precision), Real(opts.precision)};
  Real fa = f(lo);
  Real fb = f(hi);
  Real fm = f((lo + hi) / 2);
  Real whole = detail::simpson(lo, hi, fa, fm, fb);
  detail::adaptive_simpson(st, lo, hi, fa, fm, fb, whole, tol_w, 0);

  Real rounding = abs(st.sum) * Real(st.evaluations + 8, 64) * unit_roundoff(opts.precision);
  EnclosedValue out{st.sum, (st.error + rounding).rounded_up(64)};
  if (st.exhausted || out.error_bound > tol)
    throw QuadratureError("integrate: no convergence within max depth " + std::to_string(opts.max_depth), out);
  return out;
}

}  // namespace holder
