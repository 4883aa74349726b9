// Copyright 2026 The robustnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command line front end: design, transient, compare and export-lp.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "robustnet/algorithms.hpp"
#include "robustnet/design_model.hpp"
#include "robustnet/instance_io.hpp"
#include "robustnet/lp/lp_format.hpp"
#include "robustnet/operation.hpp"
#include "robustnet/report.hpp"

namespace {

using namespace robustnet;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitTimeLimit = 4;

void WriteOut(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string Number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void PrintSummary(std::ostream& os, const DesignResult& r) {
  const Design& d = r.design;
  os << "algorithm: " << AlgorithmName(r.algorithm) << "\n"
     << "status: " << lp::ToString(r.status) << "\n"
     << "scenarios: " << r.scenarios.size() << "\n"
     << "tails: " << d.total_tails() << "\n"
     << "regens: " << d.total_regens_reported() << " (raw "
     << d.total_regens_raw() << ")\n"
     << "ports: " << d.total_ports() << "\n"
     << "total cost: " << Number(d.total_cost_reported) << "\n";
  int optimal = 0;
  for (lp::SolveStatus s : r.solve_statuses) optimal += s == lp::SolveStatus::kOptimal;
  os << "solves: " << r.solve_statuses.size() << " (" << optimal
     << " optimal)\n";
}

struct Common {
  std::string input;
  std::string out;
  double time_limit = lp::kInfinity;
};

int CmdDesign(const Common& c, const std::string& algorithm, bool no_failure_only) {
  const Instance in = LoadInstance(c.input);
  DesignOptions options;
  options.time_limit_seconds = c.time_limit;
  if (no_failure_only) options.scenarios = {FailureScenario::NoFailure()};
  const DesignResult r = RunDesign(ParseAlgorithm(algorithm), in.topology,
                                   in.demands, in.costs, options);
  const std::string doc = DesignToJson(in.topology, in.demands, r);
  if (!c.out.empty()) WriteOut(c.out, doc);
  PrintSummary(std::cout, r);
  return kExitOk;
}

int CmdTransient(const Common& c, const std::string& design_path,
                 bool max_concurrent) {
  const Instance in = LoadInstance(c.input);
  const DesignDocument doc = ParseDesignDocument(
      in.topology, in.demands, ReadFile(design_path), design_path);
  const OperationPlan& base = doc.NoFailurePlan();
  TransientOptions options;
  options.max_concurrent = max_concurrent;
  options.time_limit_seconds = c.time_limit;
  std::vector<TransientReport> reports;
  for (const FailureScenario& f : EnumerateFailures(in.topology)) {
    reports.push_back(EvaluateTransient(in.topology, in.demands, base, f, options));
  }
  const std::string csv = TransientCsv(in.topology, reports);
  std::vector<double> fractions;
  for (const TransientReport& r : reports) fractions.push_back(r.fraction);
  std::sort(fractions.begin(), fractions.end());
  const size_t n = fractions.size();
  const double median = n % 2 ? fractions[n / 2]
                              : 0.5 * (fractions[n / 2 - 1] + fractions[n / 2]);
  std::ostream& summary = c.out.empty() ? std::cerr : std::cout;
  if (!c.out.empty()) WriteOut(c.out, csv);
  else std::cout << csv;
  summary << "scenarios: " << n << "\n"
          << "min fraction: " << Number(fractions.front()) << "\n"
          << "median fraction: " << Number(median) << "\n";
  return kExitOk;
}

int CmdCompare(const Common& c) {
  const Instance in = LoadInstance(c.input);
  const size_t num_scenarios = EnumerateFailures(in.topology).size();
  std::vector<DesignResult> results;
  for (Algorithm a : {Algorithm::kOptimal, Algorithm::kSimple,
                      Algorithm::kGreedy, Algorithm::kLegacy}) {
    DesignOptions options;
    // The joint solve gets the budget all per-scenario solves share.
    options.time_limit_seconds = a == Algorithm::kOptimal
                                     ? c.time_limit * num_scenarios
                                     : c.time_limit;
    results.push_back(RunDesign(a, in.topology, in.demands, in.costs, options));
  }
  std::ostringstream table;
  table << std::left << std::setw(10) << "algorithm" << std::setw(10) << "status"
        << std::right << std::setw(7) << "tails" << std::setw(8) << "regens"
        << std::setw(7) << "ports" << std::setw(12) << "total" << std::setw(10)
        << "seconds" << "\n";
  for (const DesignResult& r : results) {
    table << std::left << std::setw(10) << AlgorithmName(r.algorithm)
          << std::setw(10) << lp::ToString(r.status) << std::right
          << std::setw(7) << r.design.total_tails() << std::setw(8)
          << r.design.total_regens_reported() << std::setw(7)
          << r.design.total_ports() << std::setw(12)
          << Number(r.design.total_cost_reported) << std::setw(10)
          << std::fixed << std::setprecision(3) << r.seconds
          << std::defaultfloat << "\n";
  }
  const std::string csv = CompareCsv(results);
  std::cout << table.str();
  if (c.out.empty()) {
    std::cout << "\n" << csv;
  } else {
    WriteOut(c.out, csv);
  }
  return kExitOk;
}

int CmdExportLp(const Common& c) {
  const Instance in = LoadInstance(c.input);
  const DesignModel dm = BuildDesignModel(
      in.topology, in.demands, EnumerateFailures(in.topology), in.costs);
  WriteOut(c.out, lp::ToLpFormat(dm.model));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust IP/optical backbone design"};
  app.require_subcommand(1);

  Common common;
  std::string algorithm = "optimal";
  bool no_failure_only = false;
  auto* design = app.add_subcommand("design", "Place tails, regens and ports");
  design->add_option("input", common.input, "Instance JSON")->required();
  design->add_option("--algorithm", algorithm, "optimal, simple, greedy or legacy")
      ->check(CLI::IsMember({"optimal", "simple", "greedy", "legacy"}));
  design->add_option("--time-limit", common.time_limit,
                     "Seconds (joint solve, or each per-scenario solve)");
  design->add_option("--out", common.out, "Design document path");
  design->add_flag("--no-failure-only", no_failure_only,
                   "Protect against the no-failure scenario only");

  std::string design_path;
  bool max_concurrent = false;
  auto* transient = app.add_subcommand(
      "transient", "Routing-only recovery on the no-failure links");
  transient->add_option("input", common.input, "Instance JSON")->required();
  transient->add_option("design", design_path, "Design document")->required();
  transient->add_option("--out", common.out, "CSV path");
  transient->add_option("--time-limit", common.time_limit, "Seconds per scenario");
  transient->add_flag("--max-concurrent", max_concurrent,
                      "Maximize the common delivered fraction");

  auto* compare = app.add_subcommand("compare", "Run all four algorithms");
  compare->add_option("input", common.input, "Instance JSON")->required();
  compare->add_option("--time-limit", common.time_limit,
                      "Seconds per scenario solve");
  compare->add_option("--out", common.out, "CSV path");

  auto* export_lp = app.add_subcommand("export-lp", "Write the design model in LP format");
  export_lp->add_option("input", common.input, "Instance JSON")->required();
  export_lp->add_option("--out", common.out, "LP file path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*design) return CmdDesign(common, algorithm, no_failure_only);
    if (*transient) return CmdTransient(common, design_path, max_concurrent);
    if (*compare) return CmdCompare(common);
    if (*export_lp) return CmdExportLp(common);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const TimeLimitError& e) {
    std::cerr << "time limit: " << e.what() << "\n";
    return kExitTimeLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
