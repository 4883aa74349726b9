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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "robustnet/algorithms.hpp"
#include "robustnet/design_model.hpp"
#include "robustnet/lp/solver.hpp"
#include "robustnet/operation.hpp"
#include "robustnet/verify.hpp"
#include "test_util.hpp"

namespace robustnet {
namespace {

constexpr Algorithm kAlgorithms[] = {Algorithm::kOptimal, Algorithm::kSimple,
                                     Algorithm::kGreedy, Algorithm::kLegacy};
const char* const kFixtures[] = {"toy2x5", "grid3x3"};

class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void Require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string Fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

struct Fixtures {
  std::map<std::string, Instance> instances;
  std::map<std::string, std::map<Algorithm, DesignResult>> results;
};

Fixtures& Shared() {
  static Fixtures f = [] {
    Fixtures f;
    for (const char* name : kFixtures) {
      f.instances.emplace(name, testing::Fixture(name));
      const Instance& in = f.instances.at(name);
      for (Algorithm a : kAlgorithms) {
        f.results[name].emplace(a, RunDesign(a, in.topology, in.demands, in.costs));
      }
    }
    return f;
  }();
  return f;
}

std::string ToyDesign() {
  const Instance in = testing::Fixture("toy2x5");
  const DesignResult all = DesignOptimal(in.topology, in.demands, in.costs);
  const Design& d = all.design;
  Require(d.total_tails() == 4 && d.total_regens_reported() == 2 &&
              d.total_cost_reported == 6.0,
          "all scenarios: " + std::to_string(d.total_tails()) + " tails + " +
              std::to_string(d.total_regens_reported()) + " regens");
  Require(all.status == lp::SolveStatus::kOptimal, "joint solve not proven optimal");
  Require(all.seconds < 60.0, "runtime " + Fmt(all.seconds) + " s");
  DesignOptions nf;
  nf.scenarios = {FailureScenario::NoFailure()};
  const Design n = DesignOptimal(in.topology, in.demands, in.costs, nf).design;
  Require(n.total_tails() == 2 && n.total_regens_reported() == 1,
          "no-failure only: " + std::to_string(n.total_tails()) + " tails + " +
              std::to_string(n.total_regens_reported()) + " regens");
  return "4 tails + 2 regens = 6 in " + Fmt(all.seconds) +
         " s; no-failure only 2 tails + 1 regen";
}

std::string OracleEquivalence() {
  const Instance toy = testing::Fixture("toy2x5");
  const auto scenarios = EnumerateFailures(toy.topology);
  const auto oracle =
      verify::OracleDesignSearch(toy.topology, toy.demands, toy.costs, scenarios, 2);
  const double opt =
      DesignOptimal(toy.topology, toy.demands, toy.costs).design.total_cost_reported;
  Require(oracle.feasible && oracle.cost == opt,
          "toy2x5 oracle " + Fmt(oracle.cost) + " vs optimal " + Fmt(opt));

  int matched = 0, infeasible = 0, seeds = 0;
  for (unsigned seed = 0; matched < 20 && seed < 400; ++seed, ++seeds) {
    const auto m = testing::RandomMicro(seed);
    const Instance in = testing::BuildMicro(m);
    const auto fs = EnumerateFailures(in.topology);
    const auto o = verify::OracleDesignSearch(in.topology, in.demands, in.costs, fs, m.cap);
    DesignOptions opt_options;
    opt_options.design_cap = m.cap;
    opt_options.time_limit_seconds = 120;
    if (!o.feasible) {
      bool ilp_infeasible = false;
      try {
        DesignOptimal(in.topology, in.demands, in.costs, opt_options);
      } catch (const InfeasibleError&) {
        ilp_infeasible = true;
      }
      Require(ilp_infeasible, "seed " + std::to_string(seed) +
                                  ": oracle infeasible, optimal found a design");
      ++infeasible;
      continue;
    }
    const DesignResult r = DesignOptimal(in.topology, in.demands, in.costs, opt_options);
    if (r.status != lp::SolveStatus::kOptimal) continue;
    Require(r.design.total_cost_reported == o.cost,
            "seed " + std::to_string(seed) + ": oracle " + Fmt(o.cost) + " vs optimal " +
                Fmt(r.design.total_cost_reported));
    ++matched;
  }
  Require(matched >= 20, "only " + std::to_string(matched) + " feasible micro matches");
  return "toy2x5 6 = 6; " + std::to_string(matched) + " micro costs and " +
         std::to_string(infeasible) + " infeasibility verdicts agree over " +
         std::to_string(seeds) + " seeds";
}

std::string Operability() {
  Fixtures& f = Shared();
  int plans = 0;
  for (const char* name : kFixtures) {
    const Instance& in = f.instances.at(name);
    for (Algorithm a : kAlgorithms) {
      const DesignResult& r = f.results.at(name).at(a);
      for (const FailureScenario& s : EnumerateFailures(in.topology)) {
        const std::string where = std::string(name) + " " +
                                  std::string(AlgorithmName(a)) + " " +
                                  ScenarioName(in.topology, s);
        OperationPlan plan;
        try {
          plan = Operate(in.topology, in.demands, in.costs, r.design, s);
        } catch (const std::exception& e) {
          throw Failure(where + ": " + e.what());
        }
        const auto errors = verify::CheckPlan(in.topology, in.demands, r.design, plan);
        Require(errors.empty(), where + ": " + (errors.empty() ? "" : errors.front()));
        ++plans;
      }
      for (const OperationPlan& plan : r.plans) {
        const auto errors = verify::CheckPlan(in.topology, in.demands, r.design, plan);
        Require(errors.empty(), std::string(name) + " " + std::string(AlgorithmName(a)) +
                                    " reported plan: " +
                                    (errors.empty() ? "" : errors.front()));
      }
    }
  }
  return std::to_string(plans) + " operate() plans feasible with usage and " +
         "conservation checks at 1e-6";
}

std::string RegenPhysics() {
  Fixtures& f = Shared();
  int chains = 0;
  double longest = 0.0;
  for (const char* name : kFixtures) {
    const Instance& in = f.instances.at(name);
    const Topology& t = in.topology;
    for (Algorithm a : kAlgorithms) {
      const DesignResult& r = f.results.at(name).at(a);
      std::vector<OperationPlan> plans = r.plans;
      for (const FailureScenario& s : EnumerateFailures(t)) {
        plans.push_back(Operate(t, in.demands, in.costs, r.design, s));
      }
      for (const OperationPlan& plan : plans) {
        for (const PlanLink& link : plan.links) {
          for (const RegenChain& c : link.chains) {
            Require(verify::CheckRegenFeasiblePath(t, plan.scenario, c.path, c.regens),
                    std::string(name) + ": chain fails regen spacing");
            const auto walk = ExpandLinkPath(t, plan.scenario, link.a, link.b, c.regens);
            // Leg lengths between consecutive stops along the walk.
            std::vector<int> stops = c.regens;
            stops.push_back(t.router(link.b).home);
            double leg = 0.0;
            size_t next = 0;
            for (size_t i = 1; i < walk.size(); ++i) {
              leg += t.span(t.FindSpan(walk[i - 1], walk[i])).miles;
              if (next < stops.size() && walk[i] == stops[next]) {
                Require(leg <= t.regen_dist() + 1e-9,
                        std::string(name) + ": leg of " + Fmt(leg) + " miles");
                longest = std::max(longest, leg);
                leg = 0.0;
                ++next;
              }
            }
            Require(next == stops.size(), std::string(name) + ": walk skips a regen");
            ++chains;
          }
        }
      }
    }
  }
  return std::to_string(chains) + " chains checked, longest leg " + Fmt(longest) +
         " miles";
}

std::string Ordering() {
  Fixtures& f = Shared();
  std::string detail;
  for (const char* name : kFixtures) {
    const auto& r = f.results.at(name);
    const double opt = r.at(Algorithm::kOptimal).design.total_cost_reported;
    const double greedy = r.at(Algorithm::kGreedy).design.total_cost_reported;
    const double simple = r.at(Algorithm::kSimple).design.total_cost_reported;
    Require(opt <= greedy && opt <= simple,
            std::string(name) + ": optimal " + Fmt(opt) + ", greedy " + Fmt(greedy) +
                ", simple " + Fmt(simple));
    detail += std::string(name) + " " + Fmt(opt) + " <= " + Fmt(greedy) + ", " +
              Fmt(simple) + "; ";
  }
  const Instance& toy = f.instances.at("toy2x5");
  const auto all = EnumerateFailures(toy.topology);
  std::mt19937 rng(7);
  int chains = 0;
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<FailureScenario> order = all;
    if (trial > 0) std::shuffle(order.begin(), order.end(), rng);
    double prev = 0.0;
    DesignOptions options;
    for (const FailureScenario& s : order) {
      options.scenarios.push_back(s);
      const double cost = DesignOptimal(toy.topology, toy.demands, toy.costs, options)
                              .design.total_cost_reported;
      Require(cost >= prev, "nested subsets: cost fell from " + Fmt(prev) + " to " +
                                Fmt(cost));
      prev = cost;
    }
    ++chains;
  }
  return detail + std::to_string(chains) + " nested chains monotone";
}

std::string GridAndTransient() {
  Fixtures& f = Shared();
  const auto& g = f.results.at("grid3x3");
  const Design& opt = g.at(Algorithm::kOptimal).design;
  const Design& legacy = g.at(Algorithm::kLegacy).design;
  Require(opt.total_cost_reported < legacy.total_cost_reported,
          "grid3x3 optimal " + Fmt(opt.total_cost_reported) + " vs legacy " +
              Fmt(legacy.total_cost_reported));
  const int regen_gap = legacy.total_regens_reported() - opt.total_regens_reported();
  const int tail_gap = legacy.total_tails() - opt.total_tails();
  Require(regen_gap > tail_gap, "regen gap " + std::to_string(regen_gap) +
                                    " vs tail gap " + std::to_string(tail_gap));
  int reports = 0;
  double lowest = 1.0;
  for (const char* name : kFixtures) {
    const Instance& in = f.instances.at(name);
    for (Algorithm a : kAlgorithms) {
      const OperationPlan& base = f.results.at(name).at(a).plans.front();
      Require(base.scenario == FailureScenario::NoFailure(), "first plan not NoFailure");
      for (const FailureScenario& s : EnumerateFailures(in.topology)) {
        const TransientReport r = EvaluateTransient(in.topology, in.demands, base, s);
        Require(r.fraction >= 0.0 && r.fraction <= 1.0,
                "fraction " + Fmt(r.fraction) + " out of range");
        if (s == FailureScenario::NoFailure()) {
          Require(r.fraction == 1.0, std::string(name) + " NoFailure fraction " +
                                         Fmt(r.fraction));
        }
        lowest = std::min(lowest, r.fraction);
        ++reports;
      }
    }
  }
  return "grid3x3 optimal " + Fmt(opt.total_cost_reported) + " < legacy " +
         Fmt(legacy.total_cost_reported) + ", regen gap " + std::to_string(regen_gap) +
         " > tail gap " + std::to_string(tail_gap) + "; " + std::to_string(reports) +
         " transient fractions in [0, 1], lowest " + Fmt(lowest);
}

std::string SolverContract() {
  std::mt19937 rng(99);
  int solved = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 12;
    const lp::LinearModel m = testing::RandomIntegerModel(rng, n);
    const double expected = testing::BruteForce(m);
    const lp::SolveResult r = lp::Solve(m);
    if (!std::isfinite(expected)) {
      Require(r.status == lp::SolveStatus::kInfeasible,
              "trial " + std::to_string(trial) + ": brute force infeasible");
      continue;
    }
    Require(r.status == lp::SolveStatus::kOptimal &&
                std::abs(r.objective_value - expected) <= 1e-6,
            "trial " + std::to_string(trial) + ": " + Fmt(r.objective_value) +
                " vs brute force " + Fmt(expected));
    Require(lp::ValidateSolution(m, r.values).empty(),
            "trial " + std::to_string(trial) + ": invalid solution");
    ++solved;
  }
  int models = 0;
  for (const char* name : kFixtures) {
    const Instance in = testing::Fixture(name);
    const auto all = EnumerateFailures(in.topology);
    std::vector<std::vector<FailureScenario>> sets = {all};
    for (const FailureScenario& s : all) sets.push_back({s});
    for (const auto& set : sets) {
      const DesignModel dm = BuildDesignModel(in.topology, in.demands, set, in.costs);
      const lp::SolveResult r = lp::Solve(dm.model);
      Require(r.has_solution(), std::string(name) + ": design model unsolved");
      const auto errors = lp::ValidateSolution(dm.model, r.values);
      Require(errors.empty(), std::string(name) + ": " +
                                  (errors.empty() ? "" : errors.front().name));
      ++models;
    }
    const Design design =
        DesignOptimal(in.topology, in.demands, in.costs).design;
    BuildOptions op;
    op.prior = AsPrior(design);
    op.operation_mode = true;
    for (const FailureScenario& s : all) {
      const DesignModel dm = BuildDesignModel(in.topology, in.demands, {s}, in.costs, op);
      const lp::SolveResult r = lp::Solve(dm.model);
      Require(r.has_solution() && lp::ValidateSolution(dm.model, r.values).empty(),
              std::string(name) + ": operation model " + ScenarioName(in.topology, s));
      ++models;
    }
  }
  return std::to_string(solved) + " feasible random models match brute force; " +
         std::to_string(models) + " fixture model solutions validate clean";
}

}  // namespace
}  // namespace robustnet

int main() {
  using robustnet::Failure;
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"toy2x5 optimal design", robustnet::ToyDesign},
      {"oracle equivalence", robustnet::OracleEquivalence},
      {"operability of every design", robustnet::Operability},
      {"regen chain physics", robustnet::RegenPhysics},
      {"cost ordering and monotonicity", robustnet::Ordering},
      {"grid surrogate and transient fractions", robustnet::GridAndTransient},
      {"solver contract", robustnet::SolverContract},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
      detail = criteria[i].second();
    } catch (const std::exception& e) {
      pass = false;
      detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream took;
    took.precision(2);
    took << std::fixed << secs;
    std::cout << (pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first
              << ": " << detail << " (" << took.str() << " s)" << std::endl;
    failed += pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
