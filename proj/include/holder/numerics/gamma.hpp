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
#include "holder/numerics/constants.hpp"
#include "holder/numerics/real.hpp"

namespace holder {

/**
 * Enclosure of Gamma(x) for real x > 0.
 *
 * The argument is shifted up to z = x + M large enough for Stirling's series
 *   ln Gamma(z) = (z - 1/2) ln z - z + ln(2 pi)/2 + sum_j B_2j / (2j (2j-1) z^(2j-1)) + R
 * to reach the target, then Gamma(x) = exp(ln Gamma(z)) / (x (x+1) ... (x+M-1)).
 * For real z > 0 the remainder is bounded by the first omitted term.
 */
inline EnclosedValue gamma_reference(const Real& x, Bits prec = kDefaultPrecision) {
  if (prec < kMinPrecision) throw std::invalid_argument("gamma_reference: precision below 32 bits");
  if (!(x.is_finite() && x > 0)) throw std::invalid_argument("gamma_reference: requires x > 0");

  constexpr int kMaxTerms = 70;
  const Bits work = prec + 32;
  const Real target = Real::power_of_two(-static_cast<long>(prec) - 8, work);
  const double z_min = std::ceil(0.12 * static_cast<double>(prec)) + 10.0;

  Real z = x.with_precision(work);
  Real shift_product(1, work);
  long shifts = 0;
  while (z < z_min) {
    shift_product *= z;
    z += 1;
    ++shifts;
  }

  const Real log_z = log(z);
  Real lg = (z - 0.5) * log_z - z + log(2 * pi_value(work)) / 2;
  const Real inv_z2 = 1 / (z * z);
  Real z_pow = 1 / z;  // z^-(2j-1)
  Real remainder(work);
  bool converged = false;
  Real previous = Real::infinity(work);
  for (int j = 1; j <= kMaxTerms + 1; ++j) {
    const Real coef(bernoulli(2 * j) / BigRational((2 * j) * (2 * j - 1)), work);
    Real term = coef * z_pow;
    Real mag = abs(term);
    if (mag < target) {
      remainder = mag;
      converged = true;
      break;
    }
    if (mag > previous || j > kMaxTerms) break;
    lg += term;
    previous = mag;
    z_pow *= inv_z2;
  }
  // z_min is chosen so the series always reaches the target before diverging.
  if (!converged) throw std::logic_error("gamma_reference: Stirling series did not converge");

  Real value = exp(lg) / shift_product;
  const Real ulp = Real::power_of_two(1 - static_cast<long>(work), work);
  Real rel = 2 * remainder + Real(shifts + kMaxTerms + 16, work) * (1 + abs(lg)) * ulp;
  EnclosedValue out{value.with_precision(prec), Real(0, 64)};
  out.error_bound = (abs(value) * rel + abs(out.estimate.with_precision(work) - value)).rounded_up(64);
  return out;
}

}  // namespace holder
