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

#include "orbicount/qseries.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "orbicount/lattice.h"

namespace orbicount {

QSeries::QSeries(int trunc) {
  if (trunc < 0) {
    throw std::invalid_argument("truncation must be >= 0, got " +
                                std::to_string(trunc));
  }
  coeffs_.assign(static_cast<std::size_t>(trunc) + 1, Rational(0));
}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("a series needs at least the constant term");
  }
}

QSeries QSeries::Constant(const Rational& c, int trunc) {
  QSeries s(trunc);
  s.coeffs_[0] = c;
  return s;
}

const Rational& QSeries::Coefficient(int d) const {
  if (d < 0 || d > trunc()) {
    throw std::out_of_range("coefficient q^" + std::to_string(d) +
                            " is beyond truncation " + std::to_string(trunc()));
  }
  return coeffs_[static_cast<std::size_t>(d)];
}

void QSeries::SetCoefficient(int d, Rational value) {
  if (d < 0 || d > trunc()) {
    throw std::out_of_range("coefficient q^" + std::to_string(d) +
                            " is beyond truncation " + std::to_string(trunc()));
  }
  coeffs_[static_cast<std::size_t>(d)] = std::move(value);
}

bool QSeries::IsZero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

QSeries QSeries::Truncated(int n) const {
  if (n < 0 || n > trunc()) {
    throw std::out_of_range("cannot truncate a series known through q^" +
                            std::to_string(trunc()) + " to q^" +
                            std::to_string(n));
  }
  return QSeries(std::vector<Rational>(coeffs_.begin(),
                                       coeffs_.begin() + n + 1));
}

QSeries QSeries::SubstitutePower(int k) const {
  if (k < 1) {
    throw std::invalid_argument("substitution power must be >= 1, got " +
                                std::to_string(k));
  }
  QSeries out(trunc());
  for (int d = 0; d * k <= trunc(); ++d) {
    out.coeffs_[static_cast<std::size_t>(d * k)] = coeffs_[d];
  }
  return out;
}

QSeries QSeries::NegateVariable() const {
  QSeries out = *this;
  for (std::size_t d = 1; d < out.coeffs_.size(); d += 2) {
    out.coeffs_[d] = -out.coeffs_[d];
  }
  return out;
}

QSeries& QSeries::operator+=(const QSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] += other.coeffs_[d];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] -= other.coeffs_[d];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.trunc(), b.trunc());
  QSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

std::string ToString(const QSeries& s) {
  std::string out;
  for (int d = 0; d <= s.trunc(); ++d) {
    const Rational& c = s.Coefficient(d);
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = magnitude == 1 && d > 0;
    if (!unit) out += ToString(magnitude);
    if (d > 0) {
      if (!unit) out += " ";
      out += "q";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  if (out.empty()) out = "0";
  out += " + O(q^" + std::to_string(s.trunc() + 1) + ")";
  return out;
}

namespace {

enum class Parity { kAll, kOdd, kEven };

QSeries DivisorSum(int n, Parity parity) {
  QSeries out(n);
  for (int d = 1; d <= n; ++d) {
    if (parity == Parity::kOdd && d % 2 == 0) continue;
    if (parity == Parity::kEven && d % 2 == 1) continue;
    out.SetCoefficient(d, Rational(Sigma1(d)));
  }
  return out;
}

}  // namespace

QSeries FSeries(int n) {
  QSeries f = DivisorSum(n, Parity::kAll);
  f.SetCoefficient(0, Rational(-1, 24));
  return f;
}

QSeries DivisorSeries(int n) { return DivisorSum(n, Parity::kAll); }
QSeries DivisorSeriesOdd(int n) { return DivisorSum(n, Parity::kOdd); }
QSeries DivisorSeriesEven(int n) { return DivisorSum(n, Parity::kEven); }

QSeries F0Series(int n) {
  const QSeries f = FSeries(n);
  return (f - f.NegateVariable()) * Rational(1, 2);
}

QSeries F1Series(int n) { return FSeries(n).SubstitutePower(4); }

QSeries F2Series(int n) { return FSeries(n) - F0Series(n) - F1Series(n); }

}  // namespace orbicount
