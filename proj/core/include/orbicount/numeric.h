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

#ifndef ORBICOUNT_NUMERIC_H_
#define ORBICOUNT_NUMERIC_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbicount {

// Arbitrary-precision integers and exact rationals. cpp_rational keeps its
// value reduced with a positive denominator after every operation.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& r);

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or a
// zero denominator.
Rational ParseRational(std::string_view text);

// Mathematical floor division and modulus (result has the divisor's sign).
Integer FloorDiv(const Integer& a, const Integer& b);
Integer FloorMod(const Integer& a, const Integer& b);

}  // namespace orbicount

#endif  // ORBICOUNT_NUMERIC_H_
