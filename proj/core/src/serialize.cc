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

#include "orbicount/serialize.h"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace orbicount {

namespace {

Json IntegerToJson(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(n);
  }
  return n.str();
}

Integer IntegerFromJson(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const Rational r = ParseRational(j.get<std::string>());
    if (boost::multiprecision::denominator(r) != 1) {
      throw std::invalid_argument("expected an integer, got " + ToString(r));
    }
    return boost::multiprecision::numerator(r);
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing JSON field \"") + key +
                                "\"");
  }
  return j.at(key);
}

Json MonomialToJson(const Monomial& m) {
  Json out = Json::array();
  for (int e : m.exponents) out.push_back(e);
  return out;
}

Monomial MonomialFromJson(const Json& j) {
  if (!j.is_array() || j.size() != 5) {
    throw std::invalid_argument("monomial must be an array of 5 exponents");
  }
  Monomial m;
  for (std::size_t i = 0; i < 5; ++i) m.exponents[i] = j[i].get<int>();
  return m;
}

}  // namespace

Json ToJson(const HnfLattice& lattice) {
  return Json{{"h", IntegerToJson(lattice.h)},
              {"m", IntegerToJson(lattice.m)},
              {"g", IntegerToJson(lattice.g)},
              {"d", IntegerToJson(lattice.Index())}};
}

HnfLattice HnfLatticeFromJson(const Json& j) {
  HnfLattice l{IntegerFromJson(Field(j, "h")), IntegerFromJson(Field(j, "m")),
               IntegerFromJson(Field(j, "g"))};
  if (j.contains("d") && IntegerFromJson(j.at("d")) != l.Index()) {
    throw std::invalid_argument("inconsistent sublattice record: d != h*g");
  }
  if (l.h <= 0 || l.g <= 0 || l.m < 0 || l.m >= l.h) {
    throw std::invalid_argument("sublattice record is not in normal form");
  }
  return l;
}

Json ToJson(const QSeries& series) {
  Json coeffs = Json::array();
  for (const auto& c : series.coeffs()) coeffs.push_back(ToString(c));
  return Json{{"trunc", series.trunc()}, {"coeffs", std::move(coeffs)}};
}

QSeries QSeriesFromJson(const Json& j) {
  const int trunc = Field(j, "trunc").get<int>();
  const Json& coeffs = Field(j, "coeffs");
  if (!coeffs.is_array() ||
      coeffs.size() != static_cast<std::size_t>(trunc) + 1) {
    throw std::invalid_argument("series needs trunc + 1 coefficients");
  }
  std::vector<Rational> values;
  values.reserve(coeffs.size());
  for (const auto& c : coeffs) values.push_back(ParseRational(c.get<std::string>()));
  return QSeries(std::move(values));
}

Json ToJson(const CorrelatorRecord& record) {
  Json ins = Json::array();
  for (auto p : record.insertions) ins.push_back(Index(p));
  return Json{{"insertions", std::move(ins)},
              {"degree", record.degree},
              {"count", record.count}};
}

CorrelatorRecord CorrelatorRecordFromJson(const Json& j) {
  const Json& ins = Field(j, "insertions");
  if (!ins.is_array() || ins.size() != 4) {
    throw std::invalid_argument("insertions must list four points");
  }
  CorrelatorRecord r;
  for (std::size_t k = 0; k < 4; ++k) {
    r.insertions[k] = OrbiPointFromIndex(ins[k].get<int>());
  }
  r.degree = Field(j, "degree").get<std::int64_t>();
  r.count = Field(j, "count").get<std::int64_t>();
  return r;
}

Json ToJson(const Potential& potential) {
  Json terms = Json::array();
  for (const auto& [m, s] : potential.terms()) {
    terms.push_back(Json{{"monomial", MonomialToJson(m)}, {"series", ToJson(s)}});
  }
  return Json{{"trunc", potential.trunc()},
              {"log_term", ToString(potential.log_term())},
              {"terms", std::move(terms)}};
}

Potential PotentialFromJson(const Json& j) {
  Potential p(Field(j, "trunc").get<int>());
  p.set_log_term(ParseRational(Field(j, "log_term").get<std::string>()));
  for (const auto& t : Field(j, "terms")) {
    p.AddTerm(MonomialFromJson(Field(t, "monomial")),
              QSeriesFromJson(Field(t, "series")));
  }
  return p;
}

Json ToJson(const PotentialDiffEntry& entry) {
  return Json{{"monomial", MonomialToJson(entry.monomial)},
              {"degree", entry.degree ? Json(*entry.degree) : Json(nullptr)},
              {"lhs", ToString(entry.lhs)},
              {"rhs", ToString(entry.rhs)}};
}

Json ToJson(const oracle::Counterexample& counterexample) {
  return Json{{"check", counterexample.check},
              {"degree", counterexample.degree},
              {"detail", counterexample.detail}};
}

std::string SublatticesCsv(std::span<const HnfLattice> lattices) {
  std::ostringstream out;
  out << "h,m,g,d\n";
  for (const auto& l : lattices) {
    out << l.h << ',' << l.m << ',' << l.g << ',' << l.Index() << '\n';
  }
  return out.str();
}

std::string SeriesCsv(const QSeries& series) {
  std::ostringstream out;
  out << "degree,coefficient\n";
  for (int d = 0; d <= series.trunc(); ++d) {
    out << d << ',' << ToString(series.Coefficient(d)) << '\n';
  }
  return out.str();
}

std::string PotentialCsv(const Potential& p) {
  std::ostringstream out;
  out << "monomial,degree,coefficient\n";
  out << "t0^2 log q,," << ToString(p.log_term()) << '\n';
  for (const auto& [m, s] : p.terms()) {
    for (int d = 0; d <= s.trunc(); ++d) {
      if (s.Coefficient(d) == 0) continue;
      out << m.ToString() << ',' << d << ',' << ToString(s.Coefficient(d))
          << '\n';
    }
  }
  return out.str();
}

}  // namespace orbicount
