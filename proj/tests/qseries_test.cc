// Copyright 2026 The orbicount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orbicount/qseries.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

namespace orbicount {
namespace {

std::vector<Rational> Ints(std::initializer_list<int> values) {
  std::vector<Rational> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

QSeries RandomSeries(std::mt19937& rng, int trunc) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<Rational> c;
  for (int d = 0; d <= trunc; ++d) c.emplace_back(num(rng), den(rng));
  return QSeries(std::move(c));
}

// Schoolbook Cauchy product written independently of operator*.
Rational ConvolutionCoefficient(const QSeries& a, const QSeries& b, int n) {
  Rational sum = 0;
  for (int i = 0; i <= n; ++i) sum += a.Coefficient(i) * b.Coefficient(n - i);
  return sum;
}

TEST(QSeriesTest, FSeriesCoefficient) {
  EXPECT_EQ(FSeries(6).Coefficient(6), 12);
  EXPECT_EQ(FSeries(6).Coefficient(0), Rational(-1, 24));
}

TEST(QSeriesTest, CoefficientBeyondTruncationThrows) {
  EXPECT_THROW(FSeries(6).Coefficient(7), std::out_of_range);
  EXPECT_THROW(FSeries(6).Coefficient(-1), std::out_of_range);
  EXPECT_THROW(QSeries(-1), std::invalid_argument);
}

TEST(QSeriesTest, MultiplyByZero) {
  std::mt19937 rng(1);
  const QSeries x = RandomSeries(rng, 10);
  EXPECT_EQ(x * QSeries(10), QSeries(10));
}

TEST(QSeriesTest, SquareOfF) {
  const QSeries sq = FSeries(4) * FSeries(4);
  // (-1/24 + q + 3q^2 + ...)^2: q^1 -> 2(-1/24)(1), q^2 -> 2(-1/24)(3) + 1.
  EXPECT_EQ(sq.Coefficient(1), Rational(-1, 12));
  EXPECT_EQ(sq.Coefficient(2), Rational(3, 4));
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(sq.Coefficient(n), ConvolutionCoefficient(FSeries(4), FSeries(4), n));
  }
}

TEST(QSeriesTest, TruncationIsMinimumOfOperands) {
  EXPECT_EQ((FSeries(5) + FSeries(9)).trunc(), 5);
  EXPECT_EQ((FSeries(9) - FSeries(5)).trunc(), 5);
  EXPECT_EQ((FSeries(3) * FSeries(9)).trunc(), 3);
  EXPECT_EQ((FSeries(9) * Rational(3)).trunc(), 9);
}

TEST(QSeriesTest, SubstitutePower) {
  const QSeries s = FSeries(4).SubstitutePower(4);
  EXPECT_EQ(s.trunc(), 4);
  EXPECT_EQ(s.Coefficient(4), 1);
  for (int d = 1; d <= 3; ++d) EXPECT_EQ(s.Coefficient(d), 0);
  const QSeries wide = FSeries(16).SubstitutePower(4);
  EXPECT_EQ(wide.Coefficient(16), 7);
  EXPECT_EQ(wide.Coefficient(12), 4);
  EXPECT_EQ(wide.Coefficient(13), 0);
  EXPECT_THROW(FSeries(4).SubstitutePower(0), std::invalid_argument);
}

TEST(QSeriesTest, NegateVariable) {
  EXPECT_EQ(QSeries::Constant(1, 5).NegateVariable(), QSeries::Constant(1, 5));
  EXPECT_EQ(FSeries(3).NegateVariable().Coefficient(3), -4);
  EXPECT_EQ(FSeries(3).NegateVariable().Coefficient(2), 3);
}

TEST(QSeriesTest, FSeriesMatchesPublishedExpansion) {
  const QSeries f = FSeries(17);
  const std::vector<int> expected = {1,  3,  4,  7,  6,  12, 8,  15, 13,
                                     18, 12, 28, 14, 24, 24, 31, 18};
  for (int d = 1; d <= 17; ++d) EXPECT_EQ(f.Coefficient(d), expected[d - 1]) << d;
}

TEST(QSeriesTest, DivisorSeriesByParity) {
  EXPECT_EQ(DivisorSeriesOdd(2).Coefficient(2), 0);
  EXPECT_EQ(DivisorSeriesEven(4), QSeries(Ints({0, 0, 3, 0, 7})));
  EXPECT_EQ(DivisorSeries(4), QSeries(Ints({0, 1, 3, 4, 7})));
}

TEST(QSeriesTest, F0F1F2SmallCases) {
  EXPECT_EQ(F1Series(4), QSeries({Rational(-1, 24), 0, 0, 0, 1}));
  EXPECT_EQ(F0Series(5), QSeries(Ints({0, 1, 0, 4, 0, 6})));
  EXPECT_EQ(F2Series(4).Coefficient(0), 0);
}

TEST(QSeriesIdentityTest, F0IsOddDivisorSeries) {
  for (int n = 0; n <= 200; n += (n < 20 ? 1 : 30)) {
    ASSERT_EQ(F0Series(n), DivisorSeriesOdd(n)) << n;
  }
  EXPECT_EQ(F0Series(200), DivisorSeriesOdd(200));
}

TEST(QSeriesIdentityTest, F2IsEvenMinusQuarticDivisorSeries) {
  for (int n : {0, 1, 4, 7, 16, 50, 200}) {
    ASSERT_EQ(F2Series(n), DivisorSeriesEven(n) - DivisorSeries(n).SubstitutePower(4))
        << n;
  }
}

TEST(QSeriesIdentityTest, FIsSumOfPieces) {
  for (int n : {0, 3, 12, 100}) {
    EXPECT_EQ(FSeries(n), F0Series(n) + F1Series(n) + F2Series(n));
  }
}

TEST(QSeriesRingTest, RingLawsOnRandomSeries) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> trunc(0, 50);
  for (int trial = 0; trial < 40; ++trial) {
    const QSeries a = RandomSeries(rng, trunc(rng));
    const QSeries b = RandomSeries(rng, trunc(rng));
    const QSeries c = RandomSeries(rng, trunc(rng));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    const int n = std::min(a.trunc(), b.trunc());
    ASSERT_EQ((a * b).Coefficient(n), ConvolutionCoefficient(a, b, n));
  }
}

TEST(QSeriesTest, PrettyString) {
  EXPECT_EQ(ToString(FSeries(3)), "-1/24 + q + 3 q^2 + 4 q^3 + O(q^4)");
  EXPECT_EQ(ToString(FSeries(3).NegateVariable()),
            "-1/24 - q + 3 q^2 - 4 q^3 + O(q^4)");
  EXPECT_EQ(ToString(QSeries(2)), "0 + O(q^3)");
}

}  // namespace
}  // namespace orbicount
