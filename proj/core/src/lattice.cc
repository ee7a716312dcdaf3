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

#include "orbicount/lattice.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace orbicount {

std::strong_ordering operator<=>(const HnfLattice& a, const HnfLattice& b) {
  if (a.h != b.h) return a.h < b.h ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  if (a.m != b.m) return a.m < b.m ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  if (a.g != b.g) return a.g < b.g ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer Det(const Basis2& b) {
  return b.v1.x * b.v2.y - b.v1.y * b.v2.x;
}

Bezout ExtendedGcd(const Integer& a, const Integer& b) {
  // Invariant: old_r = a*old_s + b*old_t, r = a*s + b*t.
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

HnfLattice HnfReduce(const Basis2& b) {
  const Integer d = Det(b);
  if (d <= 0) {
    throw std::invalid_argument("basis is not positively oriented (det = " +
                                d.str() + ")");
  }
  const Integer& alpha = b.v1.x;
  const Integer& beta = b.v1.y;
  const Integer& gamma = b.v2.x;
  const Integer& delta = b.v2.y;

  // g = gcd(beta, delta) > 0 since det != 0. With beta'x + delta'y = 1 the
  // matrix [[delta', x], [-beta', y]] is unimodular, and the new basis is
  //   w1 = delta' v1 - beta' v2 = (h, 0),
  //   w2 = x v1 + y v2          = (alpha x + gamma y, g).
  const Bezout bz = ExtendedGcd(beta, delta);
  const Integer& g = bz.gcd;
  const Integer beta_r = beta / g;
  const Integer delta_r = delta / g;
  const Integer h = delta_r * alpha - beta_r * gamma;
  const Integer shear = alpha * bz.x + gamma * bz.y;

  // Lambda^m_{h,g} = Lambda^{m+h}_{h,g}, so m is only defined modulo h.
  return {h, FloorMod(shear, h), g};
}

bool SameSublattice(const Basis2& a, const Basis2& b) {
  return HnfReduce(a) == HnfReduce(b);
}

std::vector<HnfLattice> EnumerateSublattices(std::int64_t d) {
  if (d < 1) {
    throw std::invalid_argument("sublattice index must be >= 1, got " +
                                std::to_string(d));
  }
  std::vector<HnfLattice> out;
  for (std::int64_t h = 1; h <= d; ++h) {
    if (d % h != 0) continue;
    const std::int64_t g = d / h;
    for (std::int64_t m = 0; m < h; ++m) out.push_back({h, m, g});
  }
  return out;
}

Integer Sigma1(std::int64_t d) {
  if (d < 1) {
    throw std::invalid_argument("divisor sum needs d >= 1, got " +
                                std::to_string(d));
  }
  Integer sum = 0;
  for (std::int64_t k = 1; k * k <= d; ++k) {
    if (d % k != 0) continue;
    sum += k;
    if (k != d / k) sum += d / k;
  }
  return sum;
}

}  // namespace orbicount
