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
#include <stdexcept>
#include <vector>

#include "holder/norm_core.hpp"
#include "holder/numerics.hpp"

namespace holder {

/// Row s of the Stirling numbers of the second kind, S(s, 0..s).
inline std::vector<BigInt> stirling2_row(unsigned s) {
  std::vector<BigInt> row{1};
  for (unsigned n = 1; n <= s; ++n) {
    std::vector<BigInt> next(n + 1, 0);
    for (unsigned j = 1; j <= n; ++j) {
      next[j] = (j < row.size() ? BigInt(j * row[j]) : BigInt(0)) + row[j - 1];
    }
    row = std::move(next);
  }
  return row;
}

/**
 * sum_{k=0}^N C(N,k) k^s for integer s >= 0 (with 0^0 = 1), via
 * k^s = sum_j S(s,j) k(k-1)...(k-j+1), which gives
 * sum_j S(s,j) N!/(N-j)! 2^(N-j).
 */
inline BigInt binomial_moment_exact(unsigned long n, unsigned s) {
  if (n < 1) throw std::invalid_argument("binomial_moment_exact: N must be >= 1");
  std::vector<BigInt> stirling = stirling2_row(s);
  BigInt total = 0;
  BigInt falling = 1;  // N!/(N-j)!
  for (unsigned j = 0; j <= s && j <= n; ++j) {
    if (j > 0) falling *= n - (j - 1);
    total += stirling[j] * falling * pow(BigInt(2), n - j);
  }
  return total;
}

inline void require_unit_interval_moment(const BigRational& s) {
  if (s < 1 || s > 2) throw std::invalid_argument("binomial bound needs 1 <= s <= 2, got " + to_string(s));
}

/**
 * Exponents (e_N, e_{N+N^2}, e_2) of the bound
 * N^(2-s) (N+N^2)^(s-1) 2^(N-s); each is affine in s.
 */
inline std::array<BigRational, 3> binomial_bound_exponents(unsigned long n, const BigRational& s) {
  return {BigRational(2 - s), BigRational(s - 1), BigRational(BigRational(BigInt(n)) - s)};
}

/**
 * N^(2-s) (N+N^2)^(s-1) 2^(N-s), the interpolation of the s=1 and s=2
 * identities sum C(N,k) k = N 2^(N-1) and sum C(N,k) k^2 = 2^(N-2)(N+N^2).
 * Exact at s = 1 and s = 2.
 */
inline Real binomial_moment_bound(unsigned long n, const BigRational& s, Bits prec = kDefaultPrecision) {
  if (n < 1) throw std::invalid_argument("binomial_moment_bound: N must be >= 1");
  require_unit_interval_moment(s);
  const BigInt big_n(n);
  const BigInt n_plus_n2 = big_n + big_n * big_n;
  if (s == 1) return ldexp(Real(big_n, prec), static_cast<long>(n) - 1);
  if (s == 2) return ldexp(Real(n_plus_n2, prec), static_cast<long>(n) - 2);

  const Bits work = prec + 32;
  const Real sr(s, work);
  // 2^(N-s) = 2^(N-2) * 2^(2-s), with the integer part applied exactly.
  Real v = pow(Real(big_n, work), 2 - sr) * pow(Real(n_plus_n2, work), sr - 1) * pow(Real(2, work), 2 - sr);
  v = ldexp(v, static_cast<long>(n) - 2);
  return v.with_precision(prec);
}

/// Direct summation of sum_{k=0}^N C(N,k) k^s with exact binomials; 0^s = 0
/// for s > 0 and 1 for s = 0.
inline Real binomial_moment_brute(unsigned long n, const Real& s, Bits prec = kDefaultPrecision) {
  constexpr unsigned long kMaxN = 10000;
  if (n > kMaxN) throw std::invalid_argument("binomial_moment_brute: N above 10^4");
  if (!(s >= 0)) throw std::invalid_argument("binomial_moment_brute: s must be >= 0");
  const Bits work = prec + 32;
  const Real sw = s.with_precision(work);
  Real total(work);
  if (s.is_zero()) total += 1;
  BigInt c = 1;
  for (unsigned long k = 1; k <= n; ++k) {
    c = c * (n - k + 1) / k;
    total += Real(c, work) * (k == 1 ? Real(1, work) : exp(sw * log(Real(k, work))));
  }
  return total.with_precision(prec);
}

/// Values k with weights C(N,k), k = 0..N: the measure whose 1- and 2-norms
/// give the two identities.
inline WeightedSequence binomial_measure(unsigned long n, Bits prec = kDefaultPrecision) {
  WeightedSequence f(prec);
  BigInt c = 1;
  for (unsigned long k = 0; k <= n; ++k) {
    if (k > 0) c = c * (n - k + 1) / k;
    f.push_back(Real(k, prec), Real(c, prec));
  }
  return f;
}

}  // namespace holder
