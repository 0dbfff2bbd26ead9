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
#include <gtest/gtest.h>

#include "holder/combinatorial_bounds.hpp"

namespace holder {
namespace {

Real ref(const char* s) { return Real::parse(s, 256); }

BigInt naive_moment(unsigned long n, unsigned s) {
  BigInt total = 0;
  for (unsigned long k = 0; k <= n; ++k) total += binomial(n, k) * pow(BigInt(k), s);
  return total;
}

TEST(Stirling, SmallRows) {
  std::vector<BigInt> r4 = stirling2_row(4);
  ASSERT_EQ(r4.size(), 5u);
  EXPECT_EQ(r4[0], 0);
  EXPECT_EQ(r4[1], 1);
  EXPECT_EQ(r4[2], 7);
  EXPECT_EQ(r4[3], 6);
  EXPECT_EQ(r4[4], 1);
  EXPECT_EQ(stirling2_row(0)[0], 1);
}

TEST(BinomialMoment, ExactMatchesNaiveSum) {
  for (unsigned long n : {1ul, 2ul, 7ul, 30ul})
    for (unsigned s = 0; s <= 6; ++s) EXPECT_EQ(binomial_moment_exact(n, s), naive_moment(n, s)) << n << "," << s;
}

TEST(BinomialMoment, ClassicalIdentities) {
  for (unsigned long n = 1; n <= 60; ++n) {
    EXPECT_EQ(binomial_moment_exact(n, 1), BigInt(n) * pow(BigInt(2), n - 1));
    EXPECT_EQ(binomial_moment_exact(n, 2) * 4, BigInt(n + n * n) * pow(BigInt(2), n));
  }
}

TEST(BinomialBound, WorkedExample) {
  // N = 10, s = 3/2: sqrt(10) sqrt(110) 2^(17/2).
  Real bound = binomial_moment_bound(10, BigRational(3, 2));
  EXPECT_TRUE(abs(bound - ref("12007.464345147979660")) < 1e-14);
  Real brute = binomial_moment_brute(10, Real(1.5));
  EXPECT_TRUE(abs(brute - ref("11886.907881699482126")) < 1e-14);
  EXPECT_TRUE(brute < bound);
}

TEST(BinomialBound, QuarterPowerExample) {
  Real bound = binomial_moment_bound(20, BigRational(5, 4));
  Real brute = binomial_moment_brute(20, Real(1.25));
  EXPECT_TRUE(abs(bound - ref("18875446.689417177200")) < 1e-10);
  EXPECT_TRUE(abs(brute - ref("18794821.850081990452")) < 1e-10);
}

TEST(BinomialBound, ExactAtEndpoints) {
  for (unsigned long n = 1; n <= 200; ++n) {
    EXPECT_EQ(binomial_moment_bound(n, BigRational(1)).to_rational(), BigRational(binomial_moment_exact(n, 1))) << n;
    EXPECT_EQ(binomial_moment_bound(n, BigRational(2)).to_rational(), BigRational(binomial_moment_exact(n, 2))) << n;
  }
}

TEST(BinomialBound, ExponentsAreAffineInS) {
  for (unsigned long n : {3ul, 50ul}) {
    auto e1 = binomial_bound_exponents(n, BigRational(1));
    auto e2 = binomial_bound_exponents(n, BigRational(2));
    for (int i = 1; i < 10; ++i) {
      BigRational t = make_rational(i, 10);
      auto et = binomial_bound_exponents(n, BigRational(1 + t));
      for (size_t j = 0; j < 3; ++j) EXPECT_EQ(et[j], (1 - t) * e1[j] + t * e2[j]);
    }
  }
}

TEST(BinomialBound, AgreesWithGeneralEngine) {
  for (unsigned long n : {5ul, 40ul}) {
    WeightedSequence mu = binomial_measure(n);
    for (BigRational s : {BigRational(11, 10), BigRational(3, 2), BigRational(19, 10)}) {
      BoundReport r = convex_holder_bound(mu, Exponent(1), Exponent(s), Exponent(2));
      Real bound = binomial_moment_bound(n, s);
      EXPECT_TRUE(abs(r.rhs - bound) <= Real::power_of_two(-200, 64) * bound) << n;
      EXPECT_TRUE(abs(r.lhs - binomial_moment_brute(n, Real(s, 256))) <= Real::power_of_two(-200, 64) * bound);
    }
  }
}

TEST(BinomialBound, BruteForceNeverExceeds) {
  for (unsigned long n = 1; n <= 120; n += 7)
    for (int i = 0; i <= 10; ++i) {
      BigRational s = make_rational(10 + i, 10);
      Real brute = binomial_moment_brute(n, Real(s, 256));
      Real bound = binomial_moment_bound(n, s);
      EXPECT_TRUE(make_report(brute, bound, 256).holds) << n << " " << to_string(s);
    }
}

TEST(BinomialBound, RejectsOutOfRange) {
  EXPECT_THROW(binomial_moment_bound(10, BigRational(5, 2)), std::invalid_argument);
  EXPECT_THROW(binomial_moment_bound(0, BigRational(3, 2)), std::invalid_argument);
  EXPECT_THROW(binomial_moment_brute(10001, Real(1.5)), std::invalid_argument);
  EXPECT_THROW(binomial_moment_brute(10, Real(-1)), std::invalid_argument);
}

}  // namespace
}  // namespace holder
