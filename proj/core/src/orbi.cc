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

#include <stdexcept>
#include <string>
#include <utility>

namespace orbicount {

namespace {

constexpr std::array<MarkingPermutation, 6> kMarkingPermutations = {{
    {{2, 3, 4}},
    {{2, 4, 3}},
    {{3, 2, 4}},
    {{3, 4, 2}},
    {{4, 2, 3}},
    {{4, 3, 2}},
}};

int Parity(const Integer& n) { return static_cast<int>(n & 1); }

}  // namespace

HalfCoset CosetOf(OrbiPoint p) {
  switch (p) {
    case OrbiPoint::kX1: return {0, 0};
    case OrbiPoint::kX2: return {1, 0};
    case OrbiPoint::kX3: return {1, 1};
    case OrbiPoint::kX4: return {0, 1};
  }
  throw std::logic_error("invalid OrbiPoint");
}

OrbiPoint PointOfCoset(int re, int im) {
  const bool odd_re = (re % 2) != 0;
  const bool odd_im = (im % 2) != 0;
  if (odd_re) return odd_im ? OrbiPoint::kX3 : OrbiPoint::kX2;
  return odd_im ? OrbiPoint::kX4 : OrbiPoint::kX1;
}

int Index(OrbiPoint p) { return static_cast<int>(p); }

OrbiPoint OrbiPointFromIndex(int index) {
  if (index < 1 || index > 4) {
    throw std::invalid_argument("orbifold point index must be 1..4, got " +
                                std::to_string(index));
  }
  return static_cast<OrbiPoint>(index);
}

OrbiPoint Translate(HalfPeriod c, OrbiPoint p) {
  HalfCoset shift{};
  switch (c) {
    case HalfPeriod::kHalf: shift = {1, 0}; break;
    case HalfPeriod::kHalfPlus: shift = {1, 1}; break;
    case HalfPeriod::kHalfI: shift = {0, 1}; break;
  }
  const HalfCoset at = CosetOf(p);
  return PointOfCoset(at.re + shift.re, at.im + shift.im);
}

HalfPeriod TranslationToX1(OrbiPoint p) {
  switch (p) {
    case OrbiPoint::kX2: return HalfPeriod::kHalf;
    case OrbiPoint::kX3: return HalfPeriod::kHalfPlus;
    case OrbiPoint::kX4: return HalfPeriod::kHalfI;
    case OrbiPoint::kX1: break;
  }
  throw std::invalid_argument("X1 is fixed by no nontrivial translation");
}

std::span<const MarkingPermutation> AllMarkingPermutations() {
  return kMarkingPermutations;
}

ImageTriple ClassifyImages(const HnfLattice& lattice) {
  // 2*y2 = (h, 0), 2*y3 = (h + m, g), 2*y4 = (m, g); the cone point is read
  // off from the parities.
  const int h = Parity(lattice.h);
  const int m = Parity(lattice.m);
  const int g = Parity(lattice.g);
  return {PointOfCoset(h, 0), PointOfCoset(h + m, g), PointOfCoset(m, g)};
}

std::vector<ImageTriple> ImagesOfDegree(std::int64_t d) {
  const auto lattices = EnumerateSublattices(d);
  std::vector<ImageTriple> out;
  out.reserve(lattices.size());
  for (const auto& l : lattices) out.push_back(ClassifyImages(l));
  return out;
}

InsertionTuple NormalizeInsertions(const InsertionTuple& ins) {
  InsertionTuple out = ins;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k] == OrbiPoint::kX1) {
      std::swap(out[0], out[k]);
      return out;
    }
  }
  const HalfPeriod c = TranslationToX1(out[0]);
  for (auto& p : out) p = Translate(c, p);
  return out;
}

std::int64_t CountMarkedMaps(const InsertionTuple& ins,
                             std::span<const ImageTriple> images,
                             std::span<const MarkingPermutation> perms) {
  if (ins[0] != OrbiPoint::kX1) {
    throw std::invalid_argument("first insertion must be X1");
  }
  std::int64_t count = 0;
  for (const auto& image : images) {
    for (const auto& perm : perms) {
      bool match = true;
      for (int k = 0; k < 3 && match; ++k) {
        match = image[perm.tau[k] - 2] == ins[k + 1];
      }
      if (match) ++count;
    }
  }
  return count;
}

std::int64_t Correlator(const InsertionTuple& ins, std::int64_t d,
                        std::span<const MarkingPermutation> perms) {
  if (d < 1) {
    throw std::invalid_argument(
        "correlators are counted for degree >= 1, got " + std::to_string(d));
  }
  const auto images = ImagesOfDegree(d);
  return CountMarkedMaps(NormalizeInsertions(ins), images, perms);
}

QSeries CorrelatorSeries(const InsertionTuple& ins, int n) {
  if (n < 1) {
    throw std::invalid_argument("series truncation must be >= 1, got " +
                                std::to_string(n));
  }
  const InsertionTuple normalized = NormalizeInsertions(ins);
  QSeries out(n);
  for (int d = 1; d <= n; ++d) {
    const auto images = ImagesOfDegree(d);
    out.SetCoefficient(d, Rational(CountMarkedMaps(normalized, images)));
  }
  return out;
}

QSeries TotalCountSeries(int n) {
  if (n < 1) {
    throw std::invalid_argument("series truncation must be >= 1, got " +
                                std::to_string(n));
  }
  QSeries out(n);
  for (int d = 1; d <= n; ++d) {
    const auto lattices = EnumerateSublattices(d);
    const auto pairs = static_cast<std::int64_t>(lattices.size()) *
                       static_cast<std::int64_t>(kMarkingPermutations.size());
    out.SetCoefficient(d, Rational(pairs));
  }
  return out;
}

std::vector<InsertionTuple> AllInsertionTuples() {
  std::vector<InsertionTuple> out;
  out.reserve(256);
  for (auto a : kAllOrbiPoints)
    for (auto b : kAllOrbiPoints)
      for (auto c : kAllOrbiPoints)
        for (auto d : kAllOrbiPoints) out.push_back({a, b, c, d});
  return out;
}

}  // namespace orbicount
