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

#ifndef ORBICOUNT_SERIALIZE_H_
#define ORBICOUNT_SERIALIZE_H_

// JSON and CSV encodings. Rationals are always written as "p/q" strings
// (or "p" for integers) so no consumer ever sees a float.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbicount/lattice.h"
#include "orbicount/oracle.h"
#include "orbicount/orbi.h"
#include "orbicount/potential.h"
#include "orbicount/qseries.h"

namespace orbicount {

using Json = nlohmann::json;

// {"h": int, "m": int, "g": int, "d": int}
Json ToJson(const HnfLattice& lattice);
// Throws std::invalid_argument when d != h*g or fields are missing.
HnfLattice HnfLatticeFromJson(const Json& j);

// {"trunc": N, "coeffs": ["p/q", ...]}
Json ToJson(const QSeries& series);
QSeries QSeriesFromJson(const Json& j);

// One correlator value: {"insertions": [i,j,k,l], "degree": d, "count": n}.
struct CorrelatorRecord {
  InsertionTuple insertions;
  std::int64_t degree = 0;
  std::int64_t count = 0;

  friend bool operator==(const CorrelatorRecord&,
                         const CorrelatorRecord&) = default;
};
Json ToJson(const CorrelatorRecord& record);
CorrelatorRecord CorrelatorRecordFromJson(const Json& j);

// {"trunc": N, "log_term": "1/2",
//  "terms": [{"monomial": [e0..e4], "series": {...}}, ...]}
Json ToJson(const Potential& potential);
Potential PotentialFromJson(const Json& j);

// {"monomial": [...], "degree": d or null, "lhs": "p/q", "rhs": "p/q"}
Json ToJson(const PotentialDiffEntry& entry);

// {"check": ..., "degree": d, "detail": ...}
Json ToJson(const oracle::Counterexample& counterexample);

// CSV with a header row.
std::string SublatticesCsv(std::span<const HnfLattice> lattices);  // h,m,g,d
std::string SeriesCsv(const QSeries& series);  // degree,coefficient
std::string PotentialCsv(const Potential& p);  // monomial,degree,coefficient

}  // namespace orbicount

#endif  // ORBICOUNT_SERIALIZE_H_
