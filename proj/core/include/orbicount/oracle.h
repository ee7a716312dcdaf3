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

#ifndef ORBICOUNT_ORACLE_H_
#define ORBICOUNT_ORACLE_H_

// Brute-force verifiers for the counting results. Nothing here calls the
// reduction or classification routines it checks: orbit normal forms,
// divisor sums, coset classification and the closed forms are recomputed
// on separate code paths, in plain 64-bit arithmetic where the ranges allow.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbicount::oracle {

// Matrix enumeration in Sl2OrbitCount visits (2d+1)^4 candidates.
inline constexpr std::int64_t kMaxOrbitDegree = 12;
// Branching enumeration visits 4^4 marked-point assignments times
// ((d+1)/2)^4 lift exponents times a product of four partition counts.
inline constexpr std::int64_t kMaxBranchingDegree = 9;

// Deliberate defects, one per verification suite, used to show that each
// suite can fail.
enum class Fault {
  kNone,
  kSwapX3X4,             // exchange X3 and X4 in the literal parity table
  kDropTransposition34,  // omit the marking permutation tau = (3 4)
  kPerturbCoefficient,   // add 1 to one computed coefficient
  kRelaxRiemannHurwitz,  // use Euler characteristic 0 instead of 2
};

struct Counterexample {
  std::string check;
  std::int64_t degree = 0;
  std::string detail;
};

struct CheckResult {
  bool passed = true;
  std::optional<Counterexample> counterexample;
  std::int64_t items_checked = 0;
  // Distinct parity cases met by ImageTableCheck; zero elsewhere.
  int cases_seen = 0;
};

// sum of divisors by trial division over 1..d.
std::int64_t BruteDivisorSum(std::int64_t d);

// Number of SL(2,Z)-orbits (right action, i.e. column operations) on integer
// matrices [[alpha, gamma], [beta, delta]] with determinant d and entries in
// [-d, d]. Orbits are separated by a normal form reached through the moves
// col2 -= k col1 and (col1, col2) -> (col2, -col1).
// Throws std::out_of_range unless 1 <= d <= kMaxOrbitDegree.
std::int64_t Sl2OrbitCount(std::int64_t d);

// Same matrices, grouped instead by the set of lattice points modulo d
// (a sublattice of index d contains d Z^2, so this set determines it).
std::int64_t ResidueClassCount(std::int64_t d);

// Checks Sl2OrbitCount = ResidueClassCount = BruteDivisorSum =
// |EnumerateSublattices| for d <= min(dmax, kMaxOrbitDegree).
CheckResult OrbitCountCheck(std::int64_t dmax, Fault fault = Fault::kNone);

// One row of the parity table: (g, h, m) mod 2 -> (u(y2), u(y3), u(y4)),
// images given as cone-point indices 1..4.
struct InsertTypeCase {
  std::array<int, 3> ghm;
  std::array<int, 3> images;
  const char* label;
};
using InsertTypeTable = std::array<InsertTypeCase, 8>;

// Cases (i)-(viii) as listed in the classification of orbi-insertions.
InsertTypeTable LiteralInsertTypeTable();

// For every lattice of index d <= dmax, locates y2, y3, y4 with exact
// rational coordinates, reduces them modulo Z + Z i and compares the cone
// point against ClassifyImages and against `table`.
CheckResult ImageTableCheck(std::int64_t dmax, const InsertTypeTable& table);
CheckResult ImageTableCheck(std::int64_t dmax, Fault fault = Fault::kNone);

// Candidate ramification profile of a degree-d map between pillowcases.
// Marked point i (1..4 by position) goes to cone point assignment[i] (0..3),
// with local model z -> z^(2 a[i] + 1). fibers[w] lists the half
// ramification indices e of the unmarked preimages of cone point w.
struct BranchingData {
  std::array<int, 4> assignment{};
  std::array<int, 4> a{};
  std::array<std::vector<int>, 4> fibers;

  // d = sum_{I(j) = w} (2 a_j + 1) + 2 sum_j e^w_j for every w.
  bool SatisfiesFiberEquation(int d) const;
  // euler_characteristic <= 2d - (sum 2 a_i + sum (2 e - 1)).
  bool SatisfiesRiemannHurwitz(int d, int euler_characteristic = 2) const;
  bool IsUnramified() const;
};

// All branching data of degree d satisfying both constraints.
// Throws std::out_of_range unless 1 <= d <= kMaxBranchingDegree.
std::vector<BranchingData> EnumerateBranchingData(int d,
                                                  int euler_characteristic = 2);

// Passes iff every solution for degree d is unramified.
CheckResult RhUniquenessCheck(int d, Fault fault = Fault::kNone);

// Compares the enumerated correlator of all 256 insertion tuples with the
// closed forms (odd divisor sums, 6 sigma1(d/4), and
// 2/3 (sigma1(d) - sigma1(d/4)) for even d) for every d <= dmax.
CheckResult CorrelatorCrosscheck(std::int64_t dmax, Fault fault = Fault::kNone);

// TotalCountSeries against 6 sigma1(d), against 6 (f(q) + 1/24), and
// against the sum of correlators over tuples starting with X1.
CheckResult LumpSumCheck(std::int64_t dmax, Fault fault = Fault::kNone);

}  // namespace orbicount::oracle

#endif  // ORBICOUNT_ORACLE_H_
