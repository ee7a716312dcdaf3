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

#include "orbicount/orbi.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

namespace orbicount {
namespace {

constexpr OrbiPoint X1 = OrbiPoint::kX1;
constexpr OrbiPoint X2 = OrbiPoint::kX2;
constexpr OrbiPoint X3 = OrbiPoint::kX3;
constexpr OrbiPoint X4 = OrbiPoint::kX4;

HnfLattice L(std::int64_t h, std::int64_t m, std::int64_t g) { return {h, m, g}; }

// Test-side oracle: cone point of twice-coordinates (re, im) read from the
// arrangement table, and a direct count over (h, m, g, tau).
int ConePoint(std::int64_t re2, std::int64_t im2) {
  static constexpr int kTable[2][2] = {{1, 4}, {2, 3}};  // [re][im]
  return kTable[re2 % 2][im2 % 2];
}

std::int64_t BruteCorrelatorX1First(const std::array<int, 4>& ins,
                                    std::int64_t d) {
  std::int64_t count = 0;
  for (std::int64_t h = 1; h <= d; ++h) {
    if (d % h != 0) continue;
    const std::int64_t g = d / h;
    for (std::int64_t m = 0; m < h; ++m) {
      // Images of y2, y3, y4.
      const std::array<int, 3> y = {ConePoint(h, 0), ConePoint(h + m, g),
                                    ConePoint(m, g)};
      std::array<int, 3> tau = {0, 1, 2};
      do {
        if (y[tau[0]] == ins[1] && y[tau[1]] == ins[2] && y[tau[2]] == ins[3]) {
          ++count;
        }
      } while (std::next_permutation(tau.begin(), tau.end()));
    }
  }
  return count;
}

Rational Coeff(const QSeries& s, int d) { return s.Coefficient(d); }

TEST(ClassifyImagesTest, ParityCases) {
  EXPECT_EQ(ClassifyImages(L(1, 0, 1)), (ImageTriple{X2, X3, X4}));
  EXPECT_EQ(ClassifyImages(L(2, 0, 2)), (ImageTriple{X1, X1, X1}));
  EXPECT_EQ(ClassifyImages(L(2, 1, 2)), (ImageTriple{X1, X2, X2}));
  EXPECT_EQ(ClassifyImages(L(3, 1, 1)), (ImageTriple{X2, X4, X3}));
}

TEST(OrbiPointTest, CosetsRoundTrip) {
  for (auto p : kAllOrbiPoints) {
    const HalfCoset c = CosetOf(p);
    EXPECT_EQ(PointOfCoset(c.re, c.im), p);
    EXPECT_EQ(OrbiPointFromIndex(Index(p)), p);
  }
  EXPECT_THROW(OrbiPointFromIndex(0), std::invalid_argument);
  EXPECT_THROW(OrbiPointFromIndex(5), std::invalid_argument);
}

TEST(TranslateTest, Examples) {
  EXPECT_EQ(Translate(HalfPeriod::kHalf, X1), X2);
  EXPECT_EQ(Translate(HalfPeriod::kHalfPlus, X2), X4);
  EXPECT_EQ(Translate(HalfPeriod::kHalfI, X4), X1);
}

TEST(TranslateTest, KleinFourGroup) {
  const std::array<HalfPeriod, 3> all = {HalfPeriod::kHalf, HalfPeriod::kHalfPlus,
                                         HalfPeriod::kHalfI};
  for (auto c : all) {
    for (auto p : kAllOrbiPoints) {
      EXPECT_EQ(Translate(c, Translate(c, p)), p);
      EXPECT_NE(Translate(c, p), p);
    }
  }
  for (auto p : kAllOrbiPoints) {
    EXPECT_EQ(Translate(HalfPeriod::kHalf, Translate(HalfPeriod::kHalfPlus, p)),
              Translate(HalfPeriod::kHalfI, p));
  }
  for (auto p : {X2, X3, X4}) EXPECT_EQ(Translate(TranslationToX1(p), p), X1);
  EXPECT_THROW(TranslationToX1(X1), std::invalid_argument);
}

TEST(MarkingPermutationTest, SixDistinctPermutations) {
  const auto perms = AllMarkingPermutations();
  ASSERT_EQ(perms.size(), 6u);
  for (std::size_t i = 0; i < perms.size(); ++i) {
    auto sorted = perms[i].tau;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, (std::array<int, 3>{2, 3, 4}));
    for (std::size_t j = 0; j < i; ++j) EXPECT_NE(perms[i], perms[j]);
  }
}

TEST(CorrelatorTest, Examples) {
  EXPECT_EQ(Correlator({X1, X2, X3, X4}, 3), 4);
  EXPECT_EQ(Correlator({X1, X1, X1, X1}, 4), 6);
  EXPECT_EQ(Correlator({X1, X1, X4, X4}, 2), 2);
  EXPECT_EQ(Correlator({X1, X2, X3, X4}, 2), 0);
  EXPECT_EQ(Correlator({X1, X1, X2, X3}, 2), 0);
}

TEST(CorrelatorTest, RejectsDegreeZero) {
  EXPECT_THROW(Correlator({X1, X2, X3, X4}, 0), std::invalid_argument);
  EXPECT_THROW(CorrelatorSeries({X1, X2, X3, X4}, 0), std::invalid_argument);
  EXPECT_THROW(TotalCountSeries(0), std::invalid_argument);
}

TEST(CorrelatorTest, MatchesDirectCount) {
  for (std::int64_t d = 1; d <= 24; ++d) {
    for (const auto& ins : AllInsertionTuples()) {
      if (ins[0] != X1) continue;
      const std::array<int, 4> raw = {Index(ins[0]), Index(ins[1]), Index(ins[2]),
                                      Index(ins[3])};
      ASSERT_EQ(Correlator(ins, d), BruteCorrelatorX1First(raw, d)) << "d=" << d;
    }
  }
}

TEST(CorrelatorSeriesTest, Examples) {
  const QSeries s = CorrelatorSeries({X1, X2, X3, X4}, 5);
  EXPECT_EQ(s, QSeries({0, 1, 0, 4, 0, 6}));

  const QSeries quartic = CorrelatorSeries({X2, X2, X2, X2}, 4);
  EXPECT_EQ(quartic, QSeries({0, 0, 0, 0, 6}));

  EXPECT_EQ(CorrelatorSeries({X2, X2, X3, X3}, 2), QSeries({0, 0, 2}));
}

TEST(TotalCountSeriesTest, Examples) {
  EXPECT_EQ(TotalCountSeries(1), QSeries({0, 6}));
  EXPECT_EQ(TotalCountSeries(2), QSeries({0, 6, 18}));
  EXPECT_EQ(Coeff(TotalCountSeries(6), 6), 72);
}

TEST(CorrelatorPropertyTest, PermutationSymmetry) {
  for (std::int64_t d = 1; d <= 30; ++d) {
    for (const auto& ins : AllInsertionTuples()) {
      const std::int64_t base = Correlator(ins, d);
      std::array<int, 4> slots = {0, 1, 2, 3};
      while (std::next_permutation(slots.begin(), slots.end())) {
        const InsertionTuple permuted = {ins[slots[0]], ins[slots[1]],
                                         ins[slots[2]], ins[slots[3]]};
        ASSERT_EQ(Correlator(permuted, d), base) << "d=" << d;
      }
    }
  }
}

TEST(CorrelatorPropertyTest, TranslationCovariance) {
  for (std::int64_t d = 1; d <= 30; ++d) {
    for (const auto& ins : AllInsertionTuples()) {
      const std::int64_t base = Correlator(ins, d);
      for (auto c : {HalfPeriod::kHalf, HalfPeriod::kHalfPlus, HalfPeriod::kHalfI}) {
        InsertionTuple moved = ins;
        for (auto& p : moved) p = Translate(c, p);
        ASSERT_EQ(Correlator(moved, d), base);
      }
    }
  }
}

enum class Shape { kAllDistinct, kAllEqual, kTwoPairs, kOther };

Shape ShapeOf(const InsertionTuple& ins) {
  std::array<int, 5> mult{};
  for (auto p : ins) ++mult[Index(p)];
  std::vector<int> pattern;
  for (int m : mult)
    if (m > 0) pattern.push_back(m);
  std::sort(pattern.begin(), pattern.end());
  if (pattern == std::vector<int>{1, 1, 1, 1}) return Shape::kAllDistinct;
  if (pattern == std::vector<int>{4}) return Shape::kAllEqual;
  if (pattern == std::vector<int>{2, 2}) return Shape::kTwoPairs;
  return Shape::kOther;
}

TEST(CorrelatorPropertyTest, SupportFollowsParity) {
  for (std::int64_t d = 1; d <= 40; ++d) {
    for (const auto& ins : AllInsertionTuples()) {
      const std::int64_t c = Correlator(ins, d);
      if (c == 0) continue;
      const Shape shape = ShapeOf(ins);
      if (d % 2 == 1) {
        ASSERT_EQ(shape, Shape::kAllDistinct) << "d=" << d;
      } else {
        ASSERT_TRUE(shape == Shape::kAllEqual || shape == Shape::kTwoPairs);
      }
    }
  }
}

TEST(CorrelatorPropertyTest, ClosedForms) {
  constexpr int kN = 100;
  const QSeries odd = DivisorSeriesOdd(kN);
  const QSeries quartic = DivisorSeries(kN).SubstitutePower(4) * Rational(6);
  const QSeries pairs =
      (DivisorSeriesEven(kN) - DivisorSeries(kN).SubstitutePower(4)) *
      Rational(2, 3);
  EXPECT_EQ(CorrelatorSeries({X1, X2, X3, X4}, kN), odd);
  for (auto i : kAllOrbiPoints) {
    EXPECT_EQ(CorrelatorSeries({i, i, i, i}, kN), quartic);
    for (auto j : kAllOrbiPoints) {
      if (i == j) continue;
      EXPECT_EQ(CorrelatorSeries({i, i, j, j}, kN), pairs)
          << Index(i) << "," << Index(j);
    }
  }
}

TEST(CorrelatorPropertyTest, PartitionIdentity) {
  const QSeries total = TotalCountSeries(100);
  for (std::int64_t d = 1; d <= 100; ++d) {
    const auto images = ImagesOfDegree(d);
    std::int64_t sum = 0;
    for (const auto& ins : AllInsertionTuples()) {
      if (ins[0] == X1) sum += CountMarkedMaps(ins, images);
    }
    ASSERT_EQ(Rational(sum), total.Coefficient(static_cast<int>(d)));
    ASSERT_EQ(Rational(sum), Rational(6 * Sigma1(d)));
  }
}

TEST(NormalizeInsertionsTest, BringsX1First) {
  EXPECT_EQ(NormalizeInsertions({X2, X1, X3, X4}), (InsertionTuple{X1, X2, X3, X4}));
  EXPECT_EQ(NormalizeInsertions({X2, X2, X3, X3}), (InsertionTuple{X1, X1, X4, X4}));
  EXPECT_EQ(NormalizeInsertions({X1, X3, X3, X1}), (InsertionTuple{X1, X3, X3, X1}));
  EXPECT_THROW(CountMarkedMaps({X2, X2, X2, X2}, ImagesOfDegree(4)),
               std::invalid_argument);
}

}  // namespace
}  // namespace orbicount
