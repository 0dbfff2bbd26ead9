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

#include "holder/numerics/bernoulli.hpp"
#include "holder/numerics/real.hpp"

namespace holder {

/**
 * Enclosure of the Riemann zeta function for real s > 1.
 *
 * zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
 *           + sum_{j=1}^{J} B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^(-s-2j+1) + R,
 *
 * and for real s the remainder satisfies |R| <= |T_{J+1}|, the first
 * omitted correction term. N starts near 0.12*prec (the size at which the
 * asymptotic corrections can reach 2^-prec) and doubles whenever the
 * correction terms stop shrinking before the target is met.
 */
inline EnclosedValue zeta_reference(const Real& s, Bits prec = kDefaultPrecision) {
  if (prec < kMinPrecision) throw std::invalid_argument("zeta_reference: precision below 32 bits");
  if (!(s.is_finite() && s > 1.0 + 1e-6)) throw std::invalid_argument("zeta_reference: requires s > 1 + 1e-6");

  constexpr int kMaxTerms = 70;
  const Bits work = prec + 32;
  const Real sw = s.with_precision(work);
  const Real target = Real::power_of_two(-static_cast<long>(prec) - 8, work);

  long n_terms = std::max(10L, static_cast<long>(std::ceil(0.12 * static_cast<double>(prec))) + 8);
  for (;;) {
    Real sum(work);
    for (long n = 1; n < n_terms; ++n) sum += exp(-sw * log(Real(n, work)));

    const Real big_n(n_terms, work);
    const Real n_pow = exp((1 - sw) * log(big_n));  // N^(1-s)
    sum += n_pow / (sw - 1);
    sum += n_pow / (2 * big_n);

    // T_j = B_{2j}/(2j)! * rising(s, 2j-1) * N^(1-s) * N^(-2j)
    const Real inv_n2 = 1 / (big_n * big_n);
    Real rising = sw;          // s(s+1)...(s+2j-2)
    Real n_factor = n_pow * inv_n2;  // N^(1-s-2j)
    Real previous = Real::infinity(work);
    bool converged = false;
    Real remainder(work);
    for (int j = 1; j <= kMaxTerms + 1; ++j) {
      const Real coef(bernoulli(2 * j) / BigRational(factorial(static_cast<unsigned long>(2 * j))), work);
      Real term = coef * rising * n_factor;
      Real mag = abs(term);
      if (mag < target) {
        remainder = mag;
        converged = true;
        break;
      }
      if (mag > previous || j > kMaxTerms) break;
      sum += term;
      previous = mag;
      rising *= (sw + (2 * j - 1)) * (sw + 2 * j);
      n_factor *= inv_n2;
    }
    if (!converged) {
      n_terms *= 2;
      continue;
    }

    // Rounding: every step is correctly rounded at `work` bits.
    Real rounding = sum * Real::power_of_two(-static_cast<long>(work) + 2, work) * Real(n_terms + 2 * kMaxTerms, work);
    EnclosedValue out{sum.with_precision(prec), (remainder + rounding).rounded_up(64)};
    out.error_bound += abs(out.estimate.with_precision(work) - sum).rounded_up(64);
    return out;
  }
}

}  // namespace holder
