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

#ifndef ORBICOUNT_ORBI_H_
#define ORBICOUNT_ORBI_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "orbicount/lattice.h"
#include "orbicount/qseries.h"

namespace orbicount {

// The four Z/2 cone points of the pillowcase E_0 / {+-1}, E_0 = C / (Z + Z i).
// Each is the image of a half-period coset:
//   X1 <- 0,  X2 <- 1/2,  X3 <- (1 + i)/2,  X4 <- i/2   (mod Z + Z i).
enum class OrbiPoint : std::uint8_t { kX1 = 1, kX2 = 2, kX3 = 3, kX4 = 4 };

inline constexpr std::array<OrbiPoint, 4> kAllOrbiPoints = {
    OrbiPoint::kX1, OrbiPoint::kX2, OrbiPoint::kX3, OrbiPoint::kX4};

// Coordinates of twice the coset representative, each 0 or 1.
struct HalfCoset {
  int re;
  int im;

  friend bool operator==(const HalfCoset&, const HalfCoset&) = default;
};

HalfCoset CosetOf(OrbiPoint p);
// Reads re and im modulo 2.
OrbiPoint PointOfCoset(int re, int im);

int Index(OrbiPoint p);
// Throws std::invalid_argument unless 1 <= index <= 4.
OrbiPoint OrbiPointFromIndex(int index);

// Translations by the nonzero half periods act on the cone points as the
// three double transpositions (Klein four-group):
//   kHalf     (+1/2)       : (X1 X2)(X3 X4)
//   kHalfPlus (+(1+i)/2)   : (X1 X3)(X2 X4)
//   kHalfI    (+i/2)       : (X1 X4)(X2 X3)
enum class HalfPeriod { kHalf, kHalfPlus, kHalfI };

OrbiPoint Translate(HalfPeriod c, OrbiPoint p);
// The unique half-period translation sending `p` to X1. Throws
// std::invalid_argument when p is already X1.
HalfPeriod TranslationToX1(OrbiPoint p);

// Insertions at the marked points z1..z4 of a 4-point correlator.
using InsertionTuple = std::array<OrbiPoint, 4>;
// Images u(y2), u(y3), u(y4) of the domain cone points; u(y1) = X1.
using ImageTriple = std::array<OrbiPoint, 3>;

// Placement of the marked points z2, z3, z4 on the domain cone points:
// (z2, z3, z4) = (y_tau(2), y_tau(3), y_tau(4)). z1 = y1 always.
struct MarkingPermutation {
  std::array<int, 3> tau;  // tau(2), tau(3), tau(4), a permutation of {2,3,4}

  friend bool operator==(const MarkingPermutation&,
                         const MarkingPermutation&) = default;
};

// The six elements of S_3 on {2, 3, 4}, identity first.
std::span<const MarkingPermutation> AllMarkingPermutations();

// Images of y2 = w1/2, y3 = (w1 + w2)/2, y4 = w2/2 under the map whose
// linear lift is the identity, for w1 = (h, 0), w2 = (m, g).
ImageTriple ClassifyImages(const HnfLattice& lattice);

// Image triples of every lattice of EnumerateSublattices(d), same order.
std::vector<ImageTriple> ImagesOfDegree(std::int64_t d);

// Rewrites `ins` so that its first entry is X1 without changing the
// correlator: if X1 occurs, swap its first occurrence into slot 0;
// otherwise apply the half-period translation taking ins[0] to X1.
InsertionTuple NormalizeInsertions(const InsertionTuple& ins);

// Number of pairs (lattice, tau) with u(z_k) = ins[k-1] for k = 2..4, for a
// tuple whose first entry is X1. `images` is one entry per lattice.
std::int64_t CountMarkedMaps(const InsertionTuple& ins,
                             std::span<const ImageTriple> images,
                             std::span<const MarkingPermutation> perms =
                                 AllMarkingPermutations());

// Genus-0, 4-point, degree-d correlator <D_i, D_j, D_k, D_l>, counted by
// enumerating index-d sublattices and marking permutations. Symmetric in
// its insertions. Throws std::invalid_argument if d < 1.
std::int64_t Correlator(const InsertionTuple& ins, std::int64_t d,
                        std::span<const MarkingPermutation> perms =
                            AllMarkingPermutations());

// sum_{d=1..n} Correlator(ins, d) q^d, known through q^n.
QSeries CorrelatorSeries(const InsertionTuple& ins, int n);

// sum_{d=1..n} #{(lattice, tau)} q^d = 6 sum sigma1(d) q^d.
QSeries TotalCountSeries(int n);

// All 256 ordered insertion tuples, lexicographic in point index.
std::vector<InsertionTuple> AllInsertionTuples();

}  // namespace orbicount

#endif  // ORBICOUNT_ORBI_H_
