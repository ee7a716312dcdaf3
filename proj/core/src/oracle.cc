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

#include "orbicount/oracle.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "orbicount/lattice.h"
#include "orbicount/numeric.h"
#include "orbicount/orbi.h"
#include "orbicount/qseries.h"

namespace orbicount::oracle {

namespace {

std::int64_t FloorDiv64(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

CheckResult Fail(std::string check, std::int64_t degree, std::string detail,
                 std::int64_t items) {
  CheckResult r;
  r.passed = false;
  r.counterexample = Counterexample{std::move(check), degree, std::move(detail)};
  r.items_checked = items;
  return r;
}

struct Matrix {
  std::int64_t alpha, beta, gamma, delta;  // columns (alpha, beta), (gamma, delta)
};

template <typename Visit>
void ForEachMatrixOfDet(std::int64_t d, Visit visit) {
  for (std::int64_t alpha = -d; alpha <= d; ++alpha)
    for (std::int64_t beta = -d; beta <= d; ++beta)
      for (std::int64_t gamma = -d; gamma <= d; ++gamma)
        for (std::int64_t delta = -d; delta <= d; ++delta)
          if (alpha * delta - beta * gamma == d) {
            visit(Matrix{alpha, beta, gamma, delta});
          }
}

std::array<std::int64_t, 3> OrbitNormalForm(Matrix x) {
  // Euclid on the bottom row until beta = 0.
  while (x.beta != 0) {
    const std::int64_t k = FloorDiv64(x.delta, x.beta);
    x.gamma -= k * x.alpha;
    x.delta -= k * x.beta;
    x = Matrix{x.gamma, x.delta, -x.alpha, -x.beta};
  }
  if (x.alpha < 0) {
    // Two column swaps: multiplication by -I.
    x = Matrix{-x.alpha, -x.beta, -x.gamma, -x.delta};
  }
  const std::int64_t k = FloorDiv64(x.gamma, x.alpha);
  x.gamma -= k * x.alpha;
  x.delta -= k * x.beta;
  return {x.alpha, x.gamma, x.delta};
}

void CheckOrbitDegree(std::int64_t d) {
  if (d < 1 || d > kMaxOrbitDegree) {
    throw std::out_of_range("exhaustive orbit count covers 1.." +
                            std::to_string(kMaxOrbitDegree) + ", got " +
                            std::to_string(d));
  }
}

std::string ImagesString(const std::array<int, 3>& images) {
  std::ostringstream out;
  out << "(x" << images[0] << ",x" << images[1] << ",x" << images[2] << ")";
  return out.str();
}

}  // namespace

std::int64_t BruteDivisorSum(std::int64_t d) {
  std::int64_t sum = 0;
  for (std::int64_t k = 1; k <= d; ++k) {
    if (d % k == 0) sum += k;
  }
  return sum;
}

std::int64_t Sl2OrbitCount(std::int64_t d) {
  CheckOrbitDegree(d);
  std::set<std::array<std::int64_t, 3>> forms;
  ForEachMatrixOfDet(d, [&](const Matrix& x) { forms.insert(OrbitNormalForm(x)); });
  return static_cast<std::int64_t>(forms.size());
}

std::int64_t ResidueClassCount(std::int64_t d) {
  CheckOrbitDegree(d);
  std::set<std::vector<bool>> classes;
  ForEachMatrixOfDet(d, [&](const Matrix& x) {
    std::vector<bool> hit(static_cast<std::size_t>(d * d), false);
    for (std::int64_t a = 0; a < d; ++a) {
      for (std::int64_t b = 0; b < d; ++b) {
        const std::int64_t re = ((a * x.alpha + b * x.gamma) % d + d) % d;
        const std::int64_t im = ((a * x.beta + b * x.delta) % d + d) % d;
        hit[static_cast<std::size_t>(re * d + im)] = true;
      }
    }
    classes.insert(std::move(hit));
  });
  return static_cast<std::int64_t>(classes.size());
}

CheckResult OrbitCountCheck(std::int64_t dmax, Fault fault) {
  CheckResult result;
  const std::int64_t top = std::min(dmax, kMaxOrbitDegree);
  for (std::int64_t d = 1; d <= top; ++d) {
    const std::int64_t orbits = Sl2OrbitCount(d);
    const std::int64_t residues = ResidueClassCount(d);
    std::int64_t sigma = BruteDivisorSum(d);
    if (fault == Fault::kPerturbCoefficient && d == 1) sigma += 1;
    const auto enumerated =
        static_cast<std::int64_t>(EnumerateSublattices(d).size());
    ++result.items_checked;
    if (orbits != sigma || residues != sigma || enumerated != sigma) {
      std::ostringstream detail;
      detail << "sl2_orbits=" << orbits << " residue_classes=" << residues
             << " sigma1=" << sigma << " enumerated=" << enumerated;
      return Fail("oracle", d, detail.str(), result.items_checked);
    }
  }
  return result;
}

InsertTypeTable LiteralInsertTypeTable() {
  return {{
      {{0, 0, 0}, {1, 1, 1}, "i"},
      {{0, 0, 1}, {1, 2, 2}, "ii"},
      {{0, 1, 0}, {2, 2, 1}, "iii"},
      {{0, 1, 1}, {2, 1, 2}, "iv"},
      {{1, 0, 0}, {1, 4, 4}, "v"},
      {{1, 0, 1}, {1, 3, 3}, "vi"},
      {{1, 1, 0}, {2, 3, 4}, "vii"},
      {{1, 1, 1}, {2, 4, 3}, "viii"},
  }};
}

CheckResult ImageTableCheck(std::int64_t dmax, const InsertTypeTable& table) {
  // Preimages of the cone points: x1 <- 0, x2 <- 1/2, x3 <- (1+i)/2,
  // x4 <- i/2, as exact points of [0,1)^2.
  const std::array<std::pair<Rational, Rational>, 4> arrangement = {{
      {Rational(0), Rational(0)},
      {Rational(1, 2), Rational(0)},
      {Rational(1, 2), Rational(1, 2)},
      {Rational(0), Rational(1, 2)},
  }};
  const auto reduce = [](const Rational& c) {
    const Integer floor = FloorDiv(boost::multiprecision::numerator(c),
                                   boost::multiprecision::denominator(c));
    return c - Rational(floor);
  };
  const auto locate = [&](const Rational& re, const Rational& im) {
    const std::pair<Rational, Rational> p{reduce(re), reduce(im)};
    for (int i = 0; i < 4; ++i) {
      if (arrangement[i] == p) return i + 1;
    }
    return 0;
  };

  CheckResult result;
  std::set<std::string> seen;
  for (std::int64_t d = 1; d <= dmax; ++d) {
    for (const auto& lattice : EnumerateSublattices(d)) {
      ++result.items_checked;
      const Rational h(lattice.h), m(lattice.m), g(lattice.g);
      const std::array<int, 3> direct = {
          locate(h / 2, Rational(0)),
          locate((h + m) / 2, g / 2),
          locate(m / 2, g / 2),
      };
      const ImageTriple classified = ClassifyImages(lattice);
      const std::array<int, 3> from_module = {
          Index(classified[0]), Index(classified[1]), Index(classified[2])};

      const std::array<int, 3> ghm = {
          static_cast<int>(lattice.g % 2), static_cast<int>(lattice.h % 2),
          static_cast<int>(lattice.m % 2)};
      const auto row = std::find_if(table.begin(), table.end(),
                                    [&](const InsertTypeCase& c) { return c.ghm == ghm; });
      const bool odd_case = ghm[0] == 1 && ghm[1] == 1;
      std::ostringstream detail;
      detail << "lattice (h=" << lattice.h << ",m=" << lattice.m
             << ",g=" << lattice.g << "): direct=" << ImagesString(direct)
             << " classify_images=" << ImagesString(from_module);
      if (row == table.end()) {
        detail << " no table row";
        return Fail("parity", d, detail.str(), result.items_checked);
      }
      detail << " table(" << row->label << ")=" << ImagesString(row->images);
      if (direct != from_module || direct != row->images ||
          odd_case != (d % 2 == 1)) {
        return Fail("parity", d, detail.str(), result.items_checked);
      }
      seen.insert(row->label);
    }
  }
  result.cases_seen = static_cast<int>(seen.size());
  return result;
}

CheckResult ImageTableCheck(std::int64_t dmax, Fault fault) {
  InsertTypeTable table = LiteralInsertTypeTable();
  if (fault == Fault::kSwapX3X4) {
    for (auto& row : table) {
      for (int& p : row.images) {
        if (p == 3) {
          p = 4;
        } else if (p == 4) {
          p = 3;
        }
      }
    }
  }
  return ImageTableCheck(dmax, table);
}

bool BranchingData::SatisfiesFiberEquation(int d) const {
  for (int w = 0; w < 4; ++w) {
    int total = 0;
    for (int j = 0; j < 4; ++j) {
      if (assignment[j] == w) total += 2 * a[j] + 1;
    }
    for (int e : fibers[w]) total += 2 * e;
    if (total != d) return false;
  }
  return true;
}

bool BranchingData::SatisfiesRiemannHurwitz(int d,
                                            int euler_characteristic) const {
  int ramification = 0;
  for (int ai : a) ramification += 2 * ai;
  for (const auto& fiber : fibers) {
    for (int e : fiber) ramification += 2 * e - 1;
  }
  return euler_characteristic <= 2 * d - ramification;
}

bool BranchingData::IsUnramified() const {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; }) &&
         std::all_of(fibers.begin(), fibers.end(), [](const auto& fiber) {
           return std::all_of(fiber.begin(), fiber.end(),
                              [](int e) { return e == 1; });
         });
}

namespace {

// Partitions of n into positive parts, each as a nonincreasing list.
void Partitions(int n, int largest, std::vector<int>& prefix,
                std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int k = std::min(n, largest); k >= 1; --k) {
    prefix.push_back(k);
    Partitions(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> PartitionsOf(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  Partitions(n, n, prefix, out);
  return out;
}

std::string Describe(const BranchingData& b) {
  std::ostringstream out;
  out << "I=(";
  for (int j = 0; j < 4; ++j) out << (j ? "," : "") << b.assignment[j] + 1;
  out << ") a=(";
  for (int j = 0; j < 4; ++j) out << (j ? "," : "") << b.a[j];
  out << ") e=[";
  for (int w = 0; w < 4; ++w) {
    out << (w ? "," : "") << "{";
    for (std::size_t k = 0; k < b.fibers[w].size(); ++k) {
      out << (k ? "," : "") << b.fibers[w][k];
    }
    out << "}";
  }
  out << "]";
  return out.str();
}

}  // namespace

std::vector<BranchingData> EnumerateBranchingData(int d,
                                                  int euler_characteristic) {
  if (d < 1 || d > kMaxBranchingDegree) {
    throw std::out_of_range("exhaustive branching enumeration covers 1.." +
                            std::to_string(kMaxBranchingDegree) + ", got " +
                            std::to_string(d));
  }
  const int max_a = (d - 1) / 2;
  std::vector<std::vector<std::vector<int>>> partitions(
      static_cast<std::size_t>(d / 2) + 1);
  for (int n = 0; n <= d / 2; ++n) partitions[n] = PartitionsOf(n);

  std::vector<BranchingData> out;
  BranchingData b;
  for (int code = 0; code < 256; ++code) {
    for (int j = 0; j < 4; ++j) b.assignment[j] = (code >> (2 * j)) & 3;
    const int a_states = max_a + 1;
    const int a_count = a_states * a_states * a_states * a_states;
    for (int a_code = 0; a_code < a_count; ++a_code) {
      int rest = a_code;
      for (int j = 0; j < 4; ++j) {
        b.a[j] = rest % a_states;
        rest /= a_states;
      }
      std::array<int, 4> residual = {d, d, d, d};
      for (int j = 0; j < 4; ++j) residual[b.assignment[j]] -= 2 * b.a[j] + 1;
      if (std::any_of(residual.begin(), residual.end(),
                      [](int r) { return r < 0 || r % 2 != 0; })) {
        continue;
      }
      const auto& p0 = partitions[residual[0] / 2];
      const auto& p1 = partitions[residual[1] / 2];
      const auto& p2 = partitions[residual[2] / 2];
      const auto& p3 = partitions[residual[3] / 2];
      for (const auto& e0 : p0)
        for (const auto& e1 : p1)
          for (const auto& e2 : p2)
            for (const auto& e3 : p3) {
              b.fibers = {e0, e1, e2, e3};
              if (b.SatisfiesRiemannHurwitz(d, euler_characteristic)) {
                out.push_back(b);
              }
            }
    }
  }
  return out;
}

CheckResult RhUniquenessCheck(int d, Fault fault) {
  const int chi = fault == Fault::kRelaxRiemannHurwitz ? 0 : 2;
  const auto solutions = EnumerateBranchingData(d, chi);
  CheckResult result;
  for (const auto& b : solutions) {
    ++result.items_checked;
    if (!b.SatisfiesFiberEquation(d) || !b.IsUnramified()) {
      return Fail("rh", d, "ramified solution " + Describe(b),
                  result.items_checked);
    }
  }
  return result;
}

namespace {

// Closed-form correlator by insertion multiset.
Rational ExpectedCorrelator(const std::array<int, 4>& ins, std::int64_t d) {
  std::array<int, 5> mult{};
  for (int p : ins) ++mult[p];
  std::vector<int> pattern;
  for (int i = 1; i <= 4; ++i) {
    if (mult[i] > 0) pattern.push_back(mult[i]);
  }
  std::sort(pattern.begin(), pattern.end());
  const auto sigma_quarter = [&] {
    return d % 4 == 0 ? BruteDivisorSum(d / 4) : std::int64_t{0};
  };
  if (pattern == std::vector<int>{1, 1, 1, 1}) {
    return Rational(d % 2 == 1 ? BruteDivisorSum(d) : 0);
  }
  if (pattern == std::vector<int>{4}) return Rational(6 * sigma_quarter());
  if (pattern == std::vector<int>{2, 2}) {
    const std::int64_t even = d % 2 == 0 ? BruteDivisorSum(d) : 0;
    return Rational(2, 3) * Rational(even - sigma_quarter());
  }
  return Rational(0);
}

}  // namespace

CheckResult CorrelatorCrosscheck(std::int64_t dmax, Fault fault) {
  std::vector<MarkingPermutation> perms(AllMarkingPermutations().begin(),
                                        AllMarkingPermutations().end());
  if (fault == Fault::kDropTransposition34) {
    std::erase(perms, MarkingPermutation{{2, 4, 3}});
  }
  const auto tuples = AllInsertionTuples();
  CheckResult result;
  for (std::int64_t d = 1; d <= dmax; ++d) {
    const auto images = ImagesOfDegree(d);
    for (const auto& ins : tuples) {
      ++result.items_checked;
      const std::int64_t got =
          CountMarkedMaps(NormalizeInsertions(ins), images, perms);
      const std::array<int, 4> raw = {Index(ins[0]), Index(ins[1]),
                                      Index(ins[2]), Index(ins[3])};
      const Rational want = ExpectedCorrelator(raw, d);
      if (Rational(got) != want) {
        std::ostringstream detail;
        detail << "insertions (" << raw[0] << "," << raw[1] << "," << raw[2]
               << "," << raw[3] << "): enumerated=" << got
               << " closed_form=" << ToString(want);
        return Fail("closedform", d, detail.str(), result.items_checked);
      }
    }
  }
  return result;
}

CheckResult LumpSumCheck(std::int64_t dmax, Fault fault) {
  CheckResult result;
  if (dmax < 1) return result;
  const int n = static_cast<int>(dmax);
  QSeries total = TotalCountSeries(n);
  if (fault == Fault::kPerturbCoefficient) {
    total.SetCoefficient(1, total.Coefficient(1) + 1);
  }
  const QSeries six_f = (FSeries(n) + QSeries::Constant(Rational(1, 24), n)) *
                        Rational(6);
  std::vector<InsertionTuple> first_x1;
  for (const auto& ins : AllInsertionTuples()) {
    if (ins[0] == OrbiPoint::kX1) first_x1.push_back(ins);
  }
  for (int d = 1; d <= n; ++d) {
    ++result.items_checked;
    const auto images = ImagesOfDegree(d);
    std::int64_t partition_sum = 0;
    for (const auto& ins : first_x1) partition_sum += CountMarkedMaps(ins, images);
    const Rational got = total.Coefficient(d);
    const Rational brute(6 * BruteDivisorSum(d));
    if (got != brute || got != six_f.Coefficient(d) ||
        got != Rational(partition_sum)) {
      std::ostringstream detail;
      detail << "total_count=" << ToString(got) << " six_sigma1=" << ToString(brute)
             << " six_f=" << ToString(six_f.Coefficient(d))
             << " correlator_sum=" << partition_sum;
      return Fail("lumpsum", d, detail.str(), result.items_checked);
    }
  }
  return result;
}

}  // namespace orbicount::oracle
