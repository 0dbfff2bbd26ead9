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
#include <vector>

#include "holder/numerics/rational.hpp"

namespace holder {

/**
 * Bernoulli numbers B_0..B_{n_max} from the recurrence
 * sum_{j=0}^{n} C(n+1, j) B_j = 0, which fixes B_1 = -1/2.
 */
inline std::vector<BigRational> bernoulli_numbers(int n_max) {
  if (n_max < 0 || n_max % 2 != 0) throw std::invalid_argument("bernoulli_numbers: n_max must be even and >= 0");
  std::vector<BigRational> b;
  b.reserve(static_cast<size_t>(n_max) + 1);
  b.emplace_back(1);
  for (int n = 1; n <= n_max; ++n) {
    if (n >= 3 && n % 2 == 1) {
      b.emplace_back(0);
      continue;
    }
    BigRational acc = 0;
    for (int j = 0; j < n; ++j) {
      if (b[static_cast<size_t>(j)] == 0) continue;
      acc += BigRational(binomial(static_cast<unsigned long>(n + 1), static_cast<unsigned long>(j))) *
             b[static_cast<size_t>(j)];
    }
    b.push_back(-acc / (n + 1));
  }
  return b;
}

namespace detail {

inline constexpr int kBernoulliCacheSize = 160;

/// Read-only table shared by the series evaluators; built once.
inline const std::vector<BigRational>& bernoulli_cache() {
  static const std::vector<BigRational> table = bernoulli_numbers(kBernoulliCacheSize);
  return table;
}

}  // namespace detail

/// B_n for even n up to the cache size, or computed on demand beyond it.
inline BigRational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  if (n <= detail::kBernoulliCacheSize) return detail::bernoulli_cache()[static_cast<size_t>(n)];
  return bernoulli_numbers(n % 2 == 0 ? n : n + 1)[static_cast<size_t>(n)];
}

/**
 * Exact q with zeta(2k) = q * pi^(2k):
 * q = (-1)^(k+1) B_{2k} 2^(2k) / (2 (2k)!).
 */
inline BigRational zeta_even_closed_form(int two_k) {
  if (two_k < 2 || two_k % 2 != 0) throw std::invalid_argument("zeta_even_closed_form: argument must be even and >= 2");
  int k = two_k / 2;
  BigRational q = bernoulli(two_k) * BigRational(pow(BigInt(2), static_cast<unsigned long>(two_k))) /
                  BigRational(2 * factorial(static_cast<unsigned long>(two_k)));
  if (k % 2 == 0) q = -q;
  q.canonicalize();
  return q;
}

}  // namespace holder
