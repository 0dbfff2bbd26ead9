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

#include <utility>

#include "holder/numerics/real.hpp"

namespace holder {

/// Outcome of checking lhs <= rhs numerically. holds <=> lhs <= rhs + tolerance.
struct BoundReport {
  Real lhs;
  Real rhs;
  Real margin;
  Real tolerance;
  bool holds = false;

  /// Relative margin (rhs - lhs) / |rhs|; zero when rhs is zero.
  Real relative_margin() const { return rhs.is_zero() ? Real(0, margin.precision()) : margin / abs(rhs); }
};

/// 2^(-prec/2), the default relative verification tolerance.
inline Real relative_tolerance(Bits prec) { return Real::power_of_two(-static_cast<long>(prec / 2), 64); }

inline BoundReport make_report(Real lhs, Real rhs, Real tolerance) {
  BoundReport r;
  r.margin = rhs - lhs;
  r.holds = lhs <= rhs + tolerance;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.tolerance = std::move(tolerance);
  return r;
}

/// Report with tolerance relative_tolerance(prec) * max(|lhs|, |rhs|).
inline BoundReport make_report(Real lhs, Real rhs, Bits prec) {
  Real tol = relative_tolerance(prec) * max(abs(lhs), abs(rhs));
  return make_report(std::move(lhs), std::move(rhs), std::move(tol));
}

}  // namespace holder
