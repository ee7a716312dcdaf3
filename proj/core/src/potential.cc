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

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>

#include "orbicount/orbi.h"

namespace orbicount {

int Monomial::TotalDegree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

std::string Monomial::ToString() const {
  std::string out;
  for (int i = 0; i < 5; ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += "t" + std::to_string(i);
    if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

void Potential::AddTerm(const Monomial& m, const QSeries& series) {
  if (series.trunc() != trunc_) {
    throw std::invalid_argument("term truncation " +
                                std::to_string(series.trunc()) +
                                " does not match potential truncation " +
                                std::to_string(trunc_));
  }
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!series.IsZero()) terms_.emplace(m, series);
    return;
  }
  it->second += series;
  if (it->second.IsZero()) terms_.erase(it);
}

QSeries Potential::SeriesOf(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QSeries(trunc_) : it->second;
}

namespace {

Rational Factorial(int k) {
  Rational r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

Monomial MonomialOf(std::span<const OrbiPoint> twisted, int unit_power) {
  Monomial m;
  m.exponents[0] = unit_power;
  for (auto p : twisted) ++m.exponents[Index(p)];
  return m;
}

// 1/k! times the number of orderings of k insertions with the given
// multiplicities.
Rational SymmetryWeight(std::span<const int> multiplicities) {
  const int k = std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
  Rational orderings = Factorial(k);
  for (int e : multiplicities) orderings /= Factorial(e);
  return orderings / Factorial(k);
}

Rational SymmetryWeight(const Monomial& m) {
  return SymmetryWeight(m.exponents);
}

void CheckTruncation(int n) {
  if (n < 1) {
    throw std::invalid_argument("potential truncation must be >= 1, got " +
                                std::to_string(n));
  }
}

}  // namespace

Potential AssemblePotential(int n) {
  CheckTruncation(n);
  Potential f(n);

  // <1, 1, [pt]>: two unit insertions and one point class, which the
  // divisor axiom turns into log q.
  const std::array<int, 2> unit_unit_point = {2, 1};
  f.set_log_term(SymmetryWeight(unit_unit_point) * kUnitUnitPoint);

  for (auto p : kAllOrbiPoints) {
    const std::array<OrbiPoint, 2> pair = {p, p};
    const Monomial m = MonomialOf(pair, 1);
    f.AddTerm(m, QSeries::Constant(SymmetryWeight(m) * kUnitTwistedTwisted, n));
  }

  std::vector<std::vector<ImageTriple>> images(static_cast<std::size_t>(n) + 1);
  for (int d = 1; d <= n; ++d) images[d] = ImagesOfDegree(d);

  // One representative insertion tuple per multiset, i.e. nondecreasing.
  for (const auto& ins : AllInsertionTuples()) {
    if (!std::is_sorted(ins.begin(), ins.end())) continue;
    const InsertionTuple normalized = NormalizeInsertions(ins);
    QSeries series(n);
    for (int d = 1; d <= n; ++d) {
      series.SetCoefficient(d, Rational(CountMarkedMaps(normalized, images[d])));
    }
    if (ins[0] == ins[3]) {
      series.SetCoefficient(0, kConstantQuarticBracket);
    }
    const Monomial m = MonomialOf(ins, 0);
    f.AddTerm(m, series * SymmetryWeight(m));
  }
  return f;
}

Potential StReferencePotential(int n) {
  CheckTruncation(n);
  Potential f(n);
  f.set_log_term(Rational(1, 2));

  const QSeries f0 = F0Series(n);
  const QSeries f1 = F1Series(n);
  const QSeries f2 = F2Series(n);
  for (int i = 1; i <= 4; ++i) {
    Monomial cubic;
    cubic.exponents[0] = 1;
    cubic.exponents[i] = 2;
    f.AddTerm(cubic, QSeries::Constant(Rational(1, 4), n));

    Monomial quartic;
    quartic.exponents[i] = 4;
    f.AddTerm(quartic, f1 * Rational(1, 4));

    for (int j = i + 1; j <= 4; ++j) {
      Monomial mixed;
      mixed.exponents[i] = 2;
      mixed.exponents[j] = 2;
      f.AddTerm(mixed, f2 * Rational(1, 6));
    }
  }
  f.AddTerm(Monomial{{0, 1, 1, 1, 1}}, f0);
  return f;
}

std::vector<PotentialDiffEntry> ComparePotentials(const Potential& a,
                                                  const Potential& b) {
  if (a.trunc() != b.trunc()) {
    throw std::invalid_argument("cannot compare potentials truncated at q^" +
                                std::to_string(a.trunc()) + " and q^" +
                                std::to_string(b.trunc()));
  }
  std::vector<PotentialDiffEntry> diff;
  if (a.log_term() != b.log_term()) {
    diff.push_back({Monomial{{2, 0, 0, 0, 0}}, std::nullopt, a.log_term(),
                    b.log_term()});
  }
  std::set<Monomial> monomials;
  for (const auto& [m, s] : a.terms()) monomials.insert(m);
  for (const auto& [m, s] : b.terms()) monomials.insert(m);
  for (const auto& m : monomials) {
    const QSeries lhs = a.SeriesOf(m);
    const QSeries rhs = b.SeriesOf(m);
    for (int d = 0; d <= a.trunc(); ++d) {
      if (lhs.Coefficient(d) != rhs.Coefficient(d)) {
        diff.push_back({m, d, lhs.Coefficient(d), rhs.Coefficient(d)});
      }
    }
  }
  return diff;
}

namespace {

// Layout order: unit-class terms, then t1 t2 t3 t4, then t_i^4, then the
// rest.
int GroupRank(const Monomial& m) {
  if (m.exponents[0] > 0) return 0;
  const auto distinct = std::count_if(m.exponents.begin() + 1,
                                      m.exponents.end(),
                                      [](int e) { return e > 0; });
  if (distinct == 4) return 1;
  if (distinct == 1) return 2;
  return 3;
}

}  // namespace

std::string PrettyPrint(const Potential& p) {
  struct Group {
    std::vector<Monomial> monomials;
    const QSeries* series;
  };
  std::vector<Group> groups;
  for (const auto& [m, s] : p.terms()) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
      return *g.series == s && GroupRank(g.monomials.front()) == GroupRank(m);
    });
    if (it == groups.end()) {
      groups.push_back({{m}, &s});
    } else {
      it->monomials.push_back(m);
    }
  }
  // Within a group, t1 before t2 before ... as in the usual layout.
  for (auto& g : groups) {
    std::sort(g.monomials.begin(), g.monomials.end(), std::greater<>());
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const Group& x, const Group& y) {
                     return GroupRank(x.monomials.front()) <
                            GroupRank(y.monomials.front());
                   });

  std::string out = "F = ";
  bool first = true;
  if (p.log_term() != 0) {
    out += ToString(p.log_term()) + " t0^2 log q";
    first = false;
  }
  for (const auto& g : groups) {
    out += first ? "" : "\n  + ";
    first = false;
    out += "(";
    for (std::size_t i = 0; i < g.monomials.size(); ++i) {
      if (i > 0) out += " + ";
      out += g.monomials[i].ToString();
    }
    out += ") * (" + ToString(*g.series) + ")";
  }
  if (first) out += "0";
  return out + "\n";
}

}  // namespace orbicount
