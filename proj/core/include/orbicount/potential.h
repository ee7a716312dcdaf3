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

#ifndef ORBICOUNT_POTENTIAL_H_
#define ORBICOUNT_POTENTIAL_H_

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbicount/numeric.h"
#include "orbicount/qseries.h"

namespace orbicount {

// t0^e0 t1^e1 t2^e2 t3^e3 t4^e4. t0 pairs with the unit class, t1..t4 with
// the twisted-sector classes at X1..X4.
struct Monomial {
  std::array<int, 5> exponents{};

  int TotalDegree() const;
  std::string ToString() const;  // e.g. "t0 t1^2"

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Genus-0 potential
//   F = log_term * t0^2 log q + sum_monomial series(q) * monomial.
// Monomials whose series is identically zero are never stored. log q is kept
// symbolic; only its rational coefficient is carried.
class Potential {
 public:
  explicit Potential(int trunc) : trunc_(trunc) {}

  int trunc() const { return trunc_; }
  const Rational& log_term() const { return log_term_; }
  const std::map<Monomial, QSeries>& terms() const { return terms_; }

  void set_log_term(Rational r) { log_term_ = std::move(r); }

  // Adds `series` to the coefficient of `m`. Throws std::invalid_argument if
  // the truncations differ.
  void AddTerm(const Monomial& m, const QSeries& series);

  // Series attached to `m`; the zero series if `m` is absent.
  QSeries SeriesOf(const Monomial& m) const;

  friend bool operator==(const Potential&, const Potential&) = default;

 private:
  int trunc_;
  Rational log_term_{0};
  std::map<Monomial, QSeries> terms_;
};

// Degree-0 data that enter the potential as given constants.
// <1, 1, [pt]>_{0,3,0}: structure constant of the cup product.
inline const Rational kUnitUnitPoint{1};
// <1, D_j, D_j>_{0,3,0} = D_j cup D_j paired with the point class.
inline const Rational kUnitTwistedTwisted{1, 2};
// Constant-map contribution inside the 1/4!-scaled t_j^4 bracket.
inline const Rational kConstantQuarticBracket{-1, 4};

// Builds F from enumerated correlators plus the constant-map terms above.
// Throws std::invalid_argument if n < 1.
Potential AssemblePotential(int n);

// Builds F from the closed forms f0, f1, f2 of the q-series module.
Potential StReferencePotential(int n);

struct PotentialDiffEntry {
  Monomial monomial;
  std::optional<int> degree;  // nullopt for the t0^2 log q coefficient
  Rational lhs;
  Rational rhs;
};

// Every coefficient where `a` and `b` disagree, in monomial then degree
// order. Throws std::invalid_argument when the truncations differ.
std::vector<PotentialDiffEntry> ComparePotentials(const Potential& a,
                                                  const Potential& b);

// Multi-line rendering that groups monomials sharing a series, e.g.
//   F = 1/2 t0^2 log q
//     + (t0 t1^2 + t0 t2^2 + t0 t3^2 + t0 t4^2) * (1/4 + O(q^3))
std::string PrettyPrint(const Potential& p);

}  // namespace orbicount

#endif  // ORBICOUNT_POTENTIAL_H_
