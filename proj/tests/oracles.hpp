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

// Independent reference computations used only by the tests. None of these
// share code paths with the routines they check.

#include <cmath>
#include <vector>

#include "holder/numerics.hpp"

namespace holder::oracle {

/// pi = 16 atan(1/5) - 4 atan(1/239), with both series summed until the
/// next term is below 2^-(prec+8); the alternating tails are bounded by it.
inline EnclosedValue machin_pi(Bits prec) {
  const Bits work = prec + 32;
  const Real eps = Real::power_of_two(-static_cast<long>(prec) - 8, work);
  auto arctan_inv = [&](long x, Real& tail) {
    Real sum(work);
    Real power = Real(1, work) / x;  // x^-(2k+1)
    const Real inv_x2 = Real(1, work) / (x * x);
    for (long k = 0;; ++k) {
      Real term = power / (2 * k + 1);
      if (term < eps) {
        tail = term;
        break;
      }
      sum += (k % 2 == 0) ? term : -term;
      power *= inv_x2;
    }
    return sum;
  };
  Real t5(work), t239(work);
  Real pi = 16 * arctan_inv(5, t5) - 4 * arctan_inv(239, t239);
  Real err = 16 * t5 + 4 * t239 + Real::power_of_two(-static_cast<long>(work) + 8, work);
  return {pi, err};
}

/// Bernoulli numbers by the Akiyama–Tanigawa algorithm. It yields the
/// B_1 = +1/2 convention; the sign of B_1 is flipped to match the library.
inline std::vector<BigRational> akiyama_tanigawa(int n_max) {
  std::vector<BigRational> out;
  std::vector<BigRational> a(static_cast<size_t>(n_max) + 1);
  for (int m = 0; m <= n_max; ++m) {
    a[static_cast<size_t>(m)] = BigRational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      a[static_cast<size_t>(j - 1)] = j * (a[static_cast<size_t>(j - 1)] - a[static_cast<size_t>(j)]);
      a[static_cast<size_t>(j - 1)].canonicalize();
    }
    out.push_back(a[0]);
  }
  if (n_max >= 1) out[1] = -out[1];
  return out;
}

/// Gamma(x) = int_0^T t^(x-1) e^-t dt + tail, T = max(80, 4x+40), with
/// tail <= T^a e^-T / (1 - a/T), a = x - 1 < T.
inline EnclosedValue gamma_by_quadrature(double x, double tol = 1e-13) {
  const Bits prec = 128;
  const double t_max = std::max(80.0, 4 * x + 40);
  // t = u^2 gives 2 u^(2x-1) exp(-u^2), smooth at 0 for x >= 1.
  const Real a(2 * x - 1, prec);
  RealFunction integrand = [a](const Real& u) {
    if (u.is_zero()) return Real(0, u.precision());
    return 2 * exp(a * log(u) - u * u);
  };
  EnclosedValue body =
      integrate(integrand, Real(0, prec), sqrt(Real(t_max, prec)), Real(tol, prec), {prec, 60, 4, 4.0});
  const Real tt(t_max, prec);
  const Real b(x - 1, prec);
  Real tail = exp(b * log(tt) - tt) / (1 - b / tt);
  return {body.estimate + tail / 2, body.error_bound + tail / 2};
}

}  // namespace holder::oracle
