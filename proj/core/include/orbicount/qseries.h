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

#ifndef ORBICOUNT_QSERIES_H_
#define ORBICOUNT_QSERIES_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orbicount/numeric.h"

namespace orbicount {

// A power series in q truncated after q^trunc, with exact rational
// coefficients c_0..c_trunc. Binary operations truncate to the smaller
// operand; nothing ever extends the known range. Reading a coefficient past
// the truncation throws instead of returning zero.
class QSeries {
 public:
  // The zero series known through q^trunc.
  explicit QSeries(int trunc);
  // Takes ownership of c_0..c_n; trunc = n. Throws if `coeffs` is empty.
  explicit QSeries(std::vector<Rational> coeffs);

  static QSeries Constant(const Rational& c, int trunc);

  int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  // Throws std::out_of_range if d < 0 or d > trunc().
  const Rational& Coefficient(int d) const;
  void SetCoefficient(int d, Rational value);

  bool IsZero() const;

  // Drops everything above q^n. Throws if n > trunc().
  QSeries Truncated(int n) const;

  // q -> q^k. The result keeps this series' truncation, consuming source
  // coefficients up to floor(trunc / k). Throws if k < 1.
  QSeries SubstitutePower(int k) const;
  // q -> -q.
  QSeries NegateVariable() const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const Rational& r);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator-(QSeries a) { return a *= Rational(-1); }
  friend QSeries operator*(QSeries a, const Rational& r) { return a *= r; }
  friend QSeries operator*(const Rational& r, QSeries a) { return a *= r; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// Human-readable rendering, e.g. "-1/24 + q + 3 q^2 + O(q^3)".
std::string ToString(const QSeries& s);

// -1/24 + sum_{d=1..N} sigma1(d) q^d.
QSeries FSeries(int n);
// sum_{d=1..N} sigma1(d) q^d, and its restrictions to odd and even d.
QSeries DivisorSeries(int n);
QSeries DivisorSeriesOdd(int n);
QSeries DivisorSeriesEven(int n);

// The quasi-modular pieces of the potential, built from FSeries through
// their defining identities:
//   f0(q) = (f(q) - f(-q)) / 2,  f1(q) = f(q^4),  f2 = f - f0 - f1.
QSeries F0Series(int n);
QSeries F1Series(int n);
QSeries F2Series(int n);

}  // namespace orbicount

#endif  // ORBICOUNT_QSERIES_H_
