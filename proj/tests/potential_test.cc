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

#include "orbicount/potential.h"

#include <stdexcept>

#include "gtest/gtest.h"

namespace orbicount {
namespace {

Monomial M(int e0, int e1, int e2, int e3, int e4) { return {{e0, e1, e2, e3, e4}}; }

TEST(AssemblePotentialTest, Examples) {
  const Potential p = AssemblePotential(8);
  EXPECT_EQ(p.log_term(), Rational(1, 2));
  EXPECT_EQ(p.SeriesOf(M(0, 1, 1, 1, 1)).Coefficient(1), 1);
  EXPECT_EQ(p.SeriesOf(M(0, 4, 0, 0, 0)).Coefficient(0), Rational(-1, 96));
  // (1/4!)(4!/(2!2!)) <D1,D1,D2,D2>_{0,4,2} = (1/4) * 2.
  EXPECT_EQ(p.SeriesOf(M(0, 2, 2, 0, 0)).Coefficient(2), Rational(1, 2));
  EXPECT_EQ(p.SeriesOf(M(1, 0, 0, 2, 0)), QSeries::Constant(Rational(1, 4), 8));
}

TEST(AssemblePotentialTest, RejectsEmptyTruncation) {
  EXPECT_THROW(AssemblePotential(0), std::invalid_argument);
  EXPECT_THROW(StReferencePotential(0), std::invalid_argument);
}

TEST(StReferencePotentialTest, Examples) {
  constexpr int kN = 12;
  const Potential p = StReferencePotential(kN);
  EXPECT_EQ(p.SeriesOf(M(0, 1, 1, 1, 1)), F0Series(kN));
  EXPECT_EQ(p.SeriesOf(M(0, 4, 0, 0, 0)), F1Series(kN) * Rational(1, 4));
  EXPECT_EQ(p.SeriesOf(M(0, 2, 2, 0, 0)), F2Series(kN) * Rational(1, 6));
}

TEST(ComparePotentialsTest, AssembledMatchesReference) {
  for (int n : {1, 2, 4, 5, 16, 50, 100}) {
    EXPECT_TRUE(ComparePotentials(AssemblePotential(n), StReferencePotential(n)).empty())
        << "n=" << n;
  }
  EXPECT_EQ(AssemblePotential(30), StReferencePotential(30));
}

TEST(ComparePotentialsTest, SelfComparisonIsEmpty) {
  const Potential p = AssemblePotential(10);
  EXPECT_TRUE(ComparePotentials(p, p).empty());
}

TEST(ComparePotentialsTest, PerturbedCoefficientGivesOneEntry) {
  const Potential p = AssemblePotential(10);
  Potential q = p;
  QSeries bump(10);
  bump.SetCoefficient(6, 1);
  q.AddTerm(M(0, 2, 0, 2, 0), bump);
  const auto diff = ComparePotentials(p, q);
  ASSERT_EQ(diff.size(), 1u);
  EXPECT_EQ(diff[0].monomial, M(0, 2, 0, 2, 0));
  EXPECT_EQ(diff[0].degree, 6);
  EXPECT_EQ(diff[0].rhs - diff[0].lhs, 1);
}

TEST(ComparePotentialsTest, MissingMonomialAndLogTerm) {
  Potential a(3), b(3);
  a.set_log_term(Rational(1, 2));
  b.AddTerm(M(0, 3, 1, 0, 0), QSeries({0, 0, Rational(5, 2), 0}));
  const auto diff = ComparePotentials(a, b);
  ASSERT_EQ(diff.size(), 2u);
  EXPECT_FALSE(diff[0].degree.has_value());
  EXPECT_EQ(diff[0].lhs, Rational(1, 2));
  EXPECT_EQ(diff[1].degree, 2);
  EXPECT_EQ(diff[1].lhs, 0);
  EXPECT_EQ(diff[1].rhs, Rational(5, 2));
}

TEST(ComparePotentialsTest, TruncationMismatchThrows) {
  EXPECT_THROW(ComparePotentials(AssemblePotential(3), AssemblePotential(4)),
               std::invalid_argument);
}

TEST(PotentialTest, AddTermKeepsSparseForm) {
  Potential p(2);
  const QSeries s({1, 2, 3});
  p.AddTerm(M(0, 1, 1, 1, 1), s);
  p.AddTerm(M(0, 1, 1, 1, 1), -s);
  EXPECT_TRUE(p.terms().empty());
  p.AddTerm(M(0, 1, 1, 1, 1), QSeries(2));
  EXPECT_TRUE(p.terms().empty());
  EXPECT_THROW(p.AddTerm(M(0, 1, 1, 1, 1), QSeries(3)), std::invalid_argument);
}

TEST(PotentialPropertyTest, SymmetricUnderRelabelling) {
  constexpr int kN = 40;
  const Potential p = AssemblePotential(kN);
  for (int i = 1; i <= 4; ++i) {
    Monomial quartic, cubic;
    quartic.exponents[i] = 4;
    cubic.exponents[0] = 1;
    cubic.exponents[i] = 2;
    EXPECT_EQ(p.SeriesOf(quartic), p.SeriesOf(M(0, 4, 0, 0, 0)));
    EXPECT_EQ(p.SeriesOf(cubic), p.SeriesOf(M(1, 2, 0, 0, 0)));
    for (int j = i + 1; j <= 4; ++j) {
      Monomial mixed;
      mixed.exponents[i] = 2;
      mixed.exponents[j] = 2;
      EXPECT_EQ(p.SeriesOf(mixed), p.SeriesOf(M(0, 2, 2, 0, 0)));
    }
  }
}

TEST(PotentialPropertyTest, OnlyExpectedMonomialsAppear) {
  const Potential p = AssemblePotential(40);
  EXPECT_TRUE(p.SeriesOf(M(0, 3, 1, 0, 0)).IsZero());
  EXPECT_TRUE(p.SeriesOf(M(0, 2, 1, 1, 0)).IsZero());
  // 4 cubic t0 t_i^2, one t1 t2 t3 t4, 4 quartic t_i^4, 6 mixed t_i^2 t_j^2.
  EXPECT_EQ(p.terms().size(), 15u);
  for (const auto& [m, s] : p.terms()) {
    EXPECT_TRUE(m.TotalDegree() == 3 || m.TotalDegree() == 4) << m.ToString();
  }
}

TEST(PrettyPrintTest, Layout) {
  const std::string text = PrettyPrint(AssemblePotential(2));
  EXPECT_EQ(text,
            "F = 1/2 t0^2 log q\n"
            "  + (t0 t1^2 + t0 t2^2 + t0 t3^2 + t0 t4^2) * (1/4 + O(q^3))\n"
            "  + (t1 t2 t3 t4) * (q + O(q^3))\n"
            "  + (t1^4 + t2^4 + t3^4 + t4^4) * (-1/96 + O(q^3))\n"
            "  + (t1^2 t2^2 + t1^2 t3^2 + t1^2 t4^2 + t2^2 t3^2 + t2^2 t4^2 + "
            "t3^2 t4^2) * (1/2 q^2 + O(q^3))\n");
}

}  // namespace
}  // namespace orbicount
