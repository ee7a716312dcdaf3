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

#ifndef ORBICOUNT_LATTICE_H_
#define ORBICOUNT_LATTICE_H_

#include <compare>
#include <cstdint>
#include <vector>

#include "orbicount/numeric.h"

namespace orbicount {

// Integer point of the standard lattice Z + Z*i, as (real, imaginary).
struct Vec2 {
  Integer x;
  Integer y;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

// An ordered basis {v1, v2} of a sublattice, in coordinates with respect to
// {1, i}. Positively oriented bases have Det(b) > 0.
struct Basis2 {
  Vec2 v1;
  Vec2 v2;

  friend bool operator==(const Basis2&, const Basis2&) = default;
};

// Canonical (Hermite normal form) description of a finite-index sublattice:
// the lattice spanned by w1 = (h, 0) and w2 = (m, g) with h, g > 0 and
// 0 <= m < h. Distinct triples are distinct sublattices; the index is h*g.
struct HnfLattice {
  Integer h;
  Integer m;
  Integer g;

  Integer Index() const { return h * g; }
  Basis2 CanonicalBasis() const { return {{h, 0}, {m, g}}; }

  friend bool operator==(const HnfLattice&, const HnfLattice&) = default;
  friend std::strong_ordering operator<=>(const HnfLattice& a,
                                          const HnfLattice& b);
};

// Largest degree accepted by the command-line front end unless overridden.
inline constexpr std::int64_t kDefaultDegreeCap = 10000;

// alpha*delta - beta*gamma for v1 = (alpha, beta), v2 = (gamma, delta).
Integer Det(const Basis2& b);

// Returns the unique HnfLattice spanning the same sublattice as `b`.
// Throws std::invalid_argument if Det(b) <= 0.
HnfLattice HnfReduce(const Basis2& b);

// True iff both bases span the same sublattice. Throws like HnfReduce.
bool SameSublattice(const Basis2& a, const Basis2& b);

// All index-d sublattices, ordered lexicographically by (h, m). The result
// has Sigma1(d) entries. Throws std::invalid_argument if d < 1.
std::vector<HnfLattice> EnumerateSublattices(std::int64_t d);

// Sum of the positive divisors of d. Throws std::invalid_argument if d < 1.
Integer Sigma1(std::int64_t d);

// Extended Euclid: returns g = gcd(a, b) >= 0 together with x, y such that
// a*x + b*y = g. For b != 0 the coefficient x satisfies |x| <= |b/g|.
struct Bezout {
  Integer gcd;
  Integer x;
  Integer y;
};
Bezout ExtendedGcd(const Integer& a, const Integer& b);

}  // namespace orbicount

#endif  // ORBICOUNT_LATTICE_H_
