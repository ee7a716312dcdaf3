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

#include "cli.h"

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "orbicount/lattice.h"
#include "orbicount/oracle.h"
#include "orbicount/orbi.h"
#include "orbicount/potential.h"
#include "orbicount/qseries.h"
#include "orbicount/serialize.h"

namespace orbicount::cli {

namespace {

enum class Format { kPretty, kJson, kCsv };

// Thrown for argument values CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string format = "pretty";
  std::int64_t degree_cap = kDefaultDegreeCap;
};

Format ParseFormat(const std::string& name) {
  if (name == "pretty") return Format::kPretty;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw UsageError("unknown format '" + name + "' (json, csv, pretty)");
}

void CheckDegree(std::int64_t d, std::int64_t min, std::int64_t cap,
                 const char* flag) {
  if (d < min) {
    throw UsageError(std::string(flag) + " must be >= " + std::to_string(min) +
                     ", got " + std::to_string(d));
  }
  if (d > cap) {
    throw UsageError(std::string(flag) + " " + std::to_string(d) +
                     " exceeds --degree-cap " + std::to_string(cap));
  }
}

bool ColorEnabled() {
  const char* env = std::getenv("CLI_COLOR");
  if (env == nullptr) return false;
  const std::string_view v(env);
  return v == "1" || v == "always" || v == "true";
}

std::string Paint(const std::string& text, bool ok, Format format) {
  if (format != Format::kPretty || !ColorEnabled()) return text;
  return (ok ? "\x1b[32m" : "\x1b[31m") + text + "\x1b[0m";
}

InsertionTuple ParseInsertions(const std::string& text) {
  InsertionTuple ins{};
  std::size_t count = 0;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (count == 4) throw UsageError("--insertions takes exactly four indices");
    if (item.size() != 1 || item[0] < '1' || item[0] > '4') {
      throw UsageError("insertion '" + item + "' is not one of 1, 2, 3, 4");
    }
    ins[count++] = OrbiPointFromIndex(item[0] - '0');
  }
  if (count != 4 || text.empty() || text.back() == ',') {
    throw UsageError("--insertions takes exactly four indices, e.g. 1,2,3,4");
  }
  return ins;
}

const std::map<std::string, std::function<QSeries(int)>>& SeriesTable() {
  static const auto* table =
      new std::map<std::string, std::function<QSeries(int)>>{
          {"f", FSeries},
          {"f0", F0Series},
          {"f1", F1Series},
          {"f2", F2Series},
          {"Dodd", DivisorSeriesOdd},
          {"Deven", DivisorSeriesEven},
          {"D4", [](int n) { return DivisorSeries(n).SubstitutePower(4); }},
      };
  return *table;
}

std::string InsertionLabel(const InsertionTuple& ins) {
  std::string out = "<";
  for (std::size_t k = 0; k < ins.size(); ++k) {
    if (k > 0) out += ",";
    out += "D" + std::to_string(Index(ins[k]));
  }
  return out + ">";
}

int CmdSublattices(std::int64_t degree, const CommonOptions& opts,
                   std::ostream& out) {
  const Format format = ParseFormat(opts.format);
  CheckDegree(degree, 1, opts.degree_cap, "--degree");
  const auto lattices = EnumerateSublattices(degree);
  const Integer sigma = Sigma1(degree);
  switch (format) {
    case Format::kJson: {
      Json list = Json::array();
      for (const auto& l : lattices) list.push_back(ToJson(l));
      out << Json{{"degree", degree},
                  {"count", lattices.size()},
                  {"sigma1", sigma.str()},
                  {"sublattices", std::move(list)}}
                 .dump()
          << '\n';
      break;
    }
    case Format::kCsv:
      out << SublatticesCsv(lattices) << "# count=" << lattices.size()
          << " sigma1=" << sigma << '\n';
      break;
    case Format::kPretty:
      for (const auto& l : lattices) {
        out << "h=" << l.h << " m=" << l.m << " g=" << l.g
            << " d=" << l.Index() << '\n';
      }
      out << "count=" << lattices.size() << " sigma1=" << sigma << '\n';
      break;
  }
  return kExitOk;
}

int CmdSeries(const std::string& which, std::int64_t max_degree,
              const CommonOptions& opts, std::ostream& out) {
  const Format format = ParseFormat(opts.format);
  const auto& table = SeriesTable();
  const auto it = table.find(which);
  if (it == table.end()) {
    throw UsageError("unknown series '" + which +
                     "' (f, f0, f1, f2, Dodd, Deven, D4)");
  }
  CheckDegree(max_degree, 0, opts.degree_cap, "--max-degree");
  const QSeries series = it->second(static_cast<int>(max_degree));
  switch (format) {
    case Format::kJson: out << ToJson(series).dump() << '\n'; break;
    case Format::kCsv: out << SeriesCsv(series); break;
    case Format::kPretty:
      out << which << "(q) = " << ToString(series) << '\n';
      break;
  }
  return kExitOk;
}

int CmdCorrelators(const std::string& insertions, std::int64_t max_degree,
                   const CommonOptions& opts, std::ostream& out) {
  const Format format = ParseFormat(opts.format);
  const InsertionTuple ins = ParseInsertions(insertions);
  CheckDegree(max_degree, 1, opts.degree_cap, "--max-degree");
  const QSeries series = CorrelatorSeries(ins, static_cast<int>(max_degree));
  std::vector<CorrelatorRecord> records;
  for (int d = 1; d <= series.trunc(); ++d) {
    records.push_back({ins, d,
                       static_cast<std::int64_t>(
                           boost::multiprecision::numerator(series.Coefficient(d)))});
  }
  switch (format) {
    case Format::kJson: {
      Json list = Json::array();
      for (const auto& r : records) list.push_back(ToJson(r));
      out << Json{{"records", std::move(list)}, {"series", ToJson(series)}}.dump()
          << '\n';
      break;
    }
    case Format::kCsv:
      out << "degree,count\n";
      for (const auto& r : records) out << r.degree << ',' << r.count << '\n';
      break;
    case Format::kPretty:
      out << InsertionLabel(ins) << " = " << ToString(series) << '\n';
      break;
  }
  return kExitOk;
}

int CmdPotential(std::int64_t max_degree, bool compare_st,
                 const CommonOptions& opts, std::ostream& out) {
  const Format format = ParseFormat(opts.format);
  CheckDegree(max_degree, 1, opts.degree_cap, "--max-degree");
  const int n = static_cast<int>(max_degree);
  const Potential assembled = AssemblePotential(n);
  if (!compare_st) {
    switch (format) {
      case Format::kJson: out << ToJson(assembled).dump() << '\n'; break;
      case Format::kCsv: out << PotentialCsv(assembled); break;
      case Format::kPretty: out << PrettyPrint(assembled); break;
    }
    return kExitOk;
  }

  const auto diff = ComparePotentials(assembled, StReferencePotential(n));
  const bool match = diff.empty();
  switch (format) {
    case Format::kJson: {
      Json list = Json::array();
      for (const auto& e : diff) list.push_back(ToJson(e));
      out << Json{{"match", match}, {"max_degree", n}, {"diff", std::move(list)}}
                 .dump()
          << '\n';
      break;
    }
    case Format::kCsv:
      out << "monomial,degree,assembled,reference\n";
      for (const auto& e : diff) {
        out << e.monomial.ToString() << ','
            << (e.degree ? std::to_string(*e.degree) : "log") << ','
            << ToString(e.lhs) << ',' << ToString(e.rhs) << '\n';
      }
      break;
    case Format::kPretty:
      if (match) {
        out << Paint("MATCH", true, format) << '\n';
      } else {
        out << Paint("MISMATCH", false, format) << " (" << diff.size()
            << " coefficients)\n";
        for (const auto& e : diff) {
          out << "  " << e.monomial.ToString() << " q^"
              << (e.degree ? std::to_string(*e.degree) : "log") << ": "
              << ToString(e.lhs) << " != " << ToString(e.rhs) << '\n';
        }
      }
      break;
  }
  return match ? kExitOk : kExitVerificationFailed;
}

struct SuiteOutcome {
  std::string suite;
  std::int64_t max_degree = 0;
  oracle::CheckResult result;
};

SuiteOutcome RunSuite(const std::string& suite, std::int64_t dmax,
                      bool inject_fault) {
  using oracle::Fault;
  const auto pick = [&](Fault f) { return inject_fault ? f : Fault::kNone; };
  if (suite == "oracle") {
    const std::int64_t top = std::min(dmax, oracle::kMaxOrbitDegree);
    return {suite, top,
            oracle::OrbitCountCheck(top, pick(Fault::kPerturbCoefficient))};
  }
  if (suite == "parity") {
    return {suite, dmax, oracle::ImageTableCheck(dmax, pick(Fault::kSwapX3X4))};
  }
  if (suite == "rh") {
    const std::int64_t top = std::min(dmax, oracle::kMaxBranchingDegree);
    oracle::CheckResult total;
    for (int d = 1; d <= top; ++d) {
      auto r = oracle::RhUniquenessCheck(d, pick(Fault::kRelaxRiemannHurwitz));
      total.items_checked += r.items_checked;
      if (!r.passed) {
        r.items_checked = total.items_checked;
        return {suite, top, r};
      }
    }
    return {suite, top, total};
  }
  if (suite == "lumpsum") {
    return {suite, dmax,
            oracle::LumpSumCheck(dmax, pick(Fault::kPerturbCoefficient))};
  }
  if (suite == "closedform") {
    return {suite, dmax,
            oracle::CorrelatorCrosscheck(dmax, pick(Fault::kDropTransposition34))};
  }
  throw UsageError("unknown suite '" + suite +
                   "' (oracle, parity, rh, lumpsum, closedform, all)");
}

int CmdVerify(const std::string& suite, std::int64_t max_degree,
              bool inject_fault, const CommonOptions& opts, std::ostream& out) {
  const Format format = ParseFormat(opts.format);
  CheckDegree(max_degree, 1, opts.degree_cap, "--max-degree");
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = {"oracle", "parity", "rh", "lumpsum", "closedform"};
  } else {
    suites = {suite};
  }
  std::vector<SuiteOutcome> outcomes;
  for (const auto& s : suites) outcomes.push_back(RunSuite(s, max_degree, inject_fault));

  bool all_passed = true;
  Json results = Json::array();
  if (format == Format::kCsv) out << "suite,max_degree,passed,items_checked\n";
  for (const auto& o : outcomes) {
    all_passed = all_passed && o.result.passed;
    const Json counterexample = o.result.counterexample
                                    ? ToJson(*o.result.counterexample)
                                    : Json(nullptr);
    switch (format) {
      case Format::kJson:
        results.push_back(Json{{"suite", o.suite},
                               {"max_degree", o.max_degree},
                               {"passed", o.result.passed},
                               {"items_checked", o.result.items_checked},
                               {"counterexample", counterexample}});
        break;
      case Format::kCsv:
        out << o.suite << ',' << o.max_degree << ','
            << (o.result.passed ? "true" : "false") << ','
            << o.result.items_checked << '\n';
        if (!o.result.passed) out << "# counterexample " << counterexample.dump() << '\n';
        break;
      case Format::kPretty:
        out << o.suite << " (d <= " << o.max_degree << ", "
            << o.result.items_checked << " checked): "
            << Paint(o.result.passed ? "PASS" : "FAIL", o.result.passed, format)
            << '\n';
        if (!o.result.passed) out << counterexample.dump() << '\n';
        break;
    }
  }
  if (format == Format::kJson) {
    out << Json{{"suite", suite},
                {"max_degree", max_degree},
                {"passed", all_passed},
                {"results", std::move(results)}}
               .dump()
        << '\n';
  }
  return all_passed ? kExitOk : kExitVerificationFailed;
}

void AddCommonOptions(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format: json, csv or pretty")
      ->capture_default_str();
  cmd->add_option("--degree-cap", opts.degree_cap,
                  "Largest degree accepted by this invocation")
      ->capture_default_str();
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Counts holomorphic orbi-spheres in the pillowcase orbifold "
               "via sublattices of Z[i]",
               "orbicount"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::int64_t degree = 0;
  std::int64_t max_degree = 20;
  std::string which;
  std::string insertions;
  std::string suite;
  bool compare_st = false;
  bool inject_fault = false;

  auto* sublattices = app.add_subcommand("sublattices", "List index-D sublattices");
  sublattices->add_option("--degree", degree, "Sublattice index D")->required();
  AddCommonOptions(sublattices, opts);

  auto* series = app.add_subcommand("series", "Print a q-series");
  series->add_option("--which", which, "f, f0, f1, f2, Dodd, Deven or D4")
      ->required();
  series->add_option("--max-degree", max_degree, "Truncation order")
      ->capture_default_str();
  AddCommonOptions(series, opts);

  auto* correlators =
      app.add_subcommand("correlators", "Four-point correlator series");
  correlators->add_option("--insertions", insertions, "Cone points, e.g. 1,2,3,4")
      ->required();
  correlators->add_option("--max-degree", max_degree, "Truncation order")
      ->capture_default_str();
  AddCommonOptions(correlators, opts);

  auto* potential = app.add_subcommand("potential", "Genus-0 potential");
  potential->add_option("--max-degree", max_degree, "Truncation order")
      ->capture_default_str();
  potential->add_flag("--compare-st", compare_st,
                      "Diff against the closed-form potential");
  AddCommonOptions(potential, opts);

  auto* verify = app.add_subcommand("verify", "Run brute-force verification");
  verify->add_option("--suite", suite,
                     "oracle, parity, rh, lumpsum, closedform or all")
      ->required();
  verify->add_option("--max-degree", max_degree, "Largest degree checked")
      ->capture_default_str();
  verify->add_flag("--inject-fault", inject_fault,
                   "Apply each suite's designated defect; the suite must fail");
  AddCommonOptions(verify, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*sublattices) return CmdSublattices(degree, opts, out);
    if (*series) return CmdSeries(which, max_degree, opts, out);
    if (*correlators) return CmdCorrelators(insertions, max_degree, opts, out);
    if (*potential) return CmdPotential(max_degree, compare_st, opts, out);
    if (*verify) return CmdVerify(suite, max_degree, inject_fault, opts, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace orbicount::cli
