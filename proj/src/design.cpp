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


#include <algorithm>
#include <chrono>
#include <future>
#include <stdexcept>
#include <string>

#include "robustnet/algorithms.hpp"
#include "robustnet/design_model.hpp"
#include "robustnet/lp/solver.hpp"
#include "robustnet/operation.hpp"

namespace robustnet {
namespace {

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<FailureScenario> ScenarioList(const Topology& topology,
                                          const DesignOptions& options) {
  std::vector<FailureScenario> scenarios =
      options.scenarios.empty() ? EnumerateFailures(topology) : options.scenarios;
  for (const FailureScenario& f : scenarios) CheckScenario(topology, f);
  return scenarios;
}

struct SubSolve {
  lp::SolveResult result;
  DesignModel model;
};

SubSolve SolveScenarios(const Topology& topology, const DemandMatrix& demands,
                        const CostModel& costs,
                        const std::vector<FailureScenario>& scenarios,
                        const PriorPlacement& prior, int design_cap,
                        double time_limit) {
  BuildOptions build;
  build.prior = prior;
  build.design_cap = design_cap;
  SubSolve out;
  out.model = BuildDesignModel(topology, demands, scenarios, costs, build);
  lp::SolveOptions solve;
  solve.time_limit_seconds = time_limit;
  out.result = lp::Solve(out.model.model, solve);
  return out;
}

void RequireSolution(const Topology& topology, const FailureScenario& f,
                     const lp::SolveResult& result) {
  if (result.has_solution()) return;
  if (result.status == lp::SolveStatus::kInfeasible) {
    throw InfeasibleError("demands are unroutable under " +
                              ScenarioName(topology, f),
                          true, f);
  }
  if (result.status == lp::SolveStatus::kUnbounded) {
    throw std::logic_error("design model is unbounded");
  }
  throw TimeLimitError("no feasible placement for " + ScenarioName(topology, f) +
                       " within the time limit");
}

lp::SolveStatus Combine(const std::vector<lp::SolveStatus>& statuses) {
  for (lp::SolveStatus s : statuses) {
    if (s != lp::SolveStatus::kOptimal) return lp::SolveStatus::kFeasible;
  }
  return lp::SolveStatus::kOptimal;
}

// Replaces each plan with the leanest one the final design supports. The
// design solve only prices equipment, so its plans may carry idle hops.
void TidyPlans(const Topology& topology, const DemandMatrix& demands,
               const CostModel& costs, const Design& design,
               double time_limit_seconds, std::vector<OperationPlan>& plans) {
  for (OperationPlan& plan : plans) {
    try {
      plan = Operate(topology, demands, costs, design, plan.scenario,
                     time_limit_seconds);
    } catch (const TimeLimitError&) {
      // keep the plan from the design solve
    }
  }
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kOptimal:
      return "optimal";
    case Algorithm::kSimple:
      return "simple";
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kLegacy:
      return "legacy";
  }
  return "?";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kOptimal, Algorithm::kSimple,
                      Algorithm::kGreedy, Algorithm::kLegacy}) {
    if (AlgorithmName(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

DesignResult DesignOptimal(const Topology& topology, const DemandMatrix& demands,
                           const CostModel& costs,
                           const DesignOptions& options) {
  const auto start = Clock::now();
  DesignResult out;
  out.algorithm = Algorithm::kOptimal;
  out.scenarios = ScenarioList(topology, options);
  SubSolve joint = SolveScenarios(topology, demands, costs, out.scenarios, {},
                                  options.design_cap,
                                  options.time_limit_seconds);
  if (joint.result.status == lp::SolveStatus::kInfeasible) {
    for (const FailureScenario& f : out.scenarios) {
      SubSolve probe = SolveScenarios(topology, demands, costs, {f}, {},
                                      options.design_cap,
                                      options.time_limit_seconds);
      RequireSolution(topology, f, probe.result);
    }
    throw InfeasibleError("no single placement covers every scenario", false,
                          {});
  }
  if (!joint.result.has_solution()) {
    if (joint.result.status == lp::SolveStatus::kUnbounded) {
      throw std::logic_error("design model is unbounded");
    }
    throw TimeLimitError("no feasible placement within the time limit");
  }
  out.design = ExtractNewEquipment(topology, joint.model, joint.result.values);
  out.plans = ExtractPlans(topology, demands, joint.model, joint.result.values);
  TidyPlans(topology, demands, costs, out.design, options.time_limit_seconds,
            out.plans);
  FinalizeDesign(topology, costs, out.plans, out.design);
  out.status = joint.result.status;
  out.solve_statuses = {joint.result.status};
  out.best_bound = joint.result.best_bound;
  out.seconds = Since(start);
  return out;
}

DesignResult DesignSimple(const Topology& topology, const DemandMatrix& demands,
                          const CostModel& costs,
                          const DesignOptions& options) {
  const auto start = Clock::now();
  DesignResult out;
  out.algorithm = Algorithm::kSimple;
  out.scenarios = ScenarioList(topology, options);
  std::vector<std::future<SubSolve>> jobs;
  for (const FailureScenario& f : out.scenarios) {
    jobs.push_back(std::async(std::launch::async, [&, f] {
      return SolveScenarios(topology, demands, costs, {f}, {},
                            options.design_cap, options.time_limit_seconds);
    }));
  }
  std::vector<SubSolve> solved;
  for (auto& job : jobs) solved.push_back(job.get());

  out.design = EmptyDesign(topology);
  for (size_t i = 0; i < solved.size(); ++i) {
    RequireSolution(topology, out.scenarios[i], solved[i].result);
    const Design part =
        ExtractNewEquipment(topology, solved[i].model, solved[i].result.values);
    for (int r = 0; r < topology.num_routers(); ++r) {
      out.design.tails[r] = std::max(out.design.tails[r], part.tails[r]);
      out.design.ports[r] = std::max(out.design.ports[r], part.ports[r]);
    }
    for (int n = 0; n < topology.num_nodes(); ++n) {
      out.design.regens_reported[n] =
          std::max(out.design.regens_reported[n], part.regens_reported[n]);
    }
    out.plans.push_back(ExtractPlans(topology, demands, solved[i].model,
                                     solved[i].result.values)
                            .front());
    out.solve_statuses.push_back(solved[i].result.status);
  }
  TidyPlans(topology, demands, costs, out.design, options.time_limit_seconds,
            out.plans);
  FinalizeDesign(topology, costs, out.plans, out.design);
  out.status = Combine(out.solve_statuses);
  out.seconds = Since(start);
  return out;
}

DesignResult DesignGreedy(const Topology& topology, const DemandMatrix& demands,
                          const CostModel& costs,
                          const DesignOptions& options) {
  const auto start = Clock::now();
  DesignResult out;
  out.algorithm = Algorithm::kGreedy;
  out.scenarios = ScenarioList(topology, options);
  // NoFailure always goes first; the rest keep their order.
  std::stable_partition(out.scenarios.begin(), out.scenarios.end(),
                        [](const FailureScenario& f) {
                          return f.kind == FailureScenario::Kind::kNoFailure;
                        });
  out.design = EmptyDesign(topology);
  for (const FailureScenario& f : out.scenarios) {
    SubSolve step = SolveScenarios(topology, demands, costs, {f},
                                   AsPrior(out.design), options.design_cap,
                                   options.time_limit_seconds);
    RequireSolution(topology, f, step.result);
    const Design added =
        ExtractNewEquipment(topology, step.model, step.result.values);
    for (int r = 0; r < topology.num_routers(); ++r) {
      out.design.tails[r] += added.tails[r];
      out.design.ports[r] += added.ports[r];
    }
    for (int n = 0; n < topology.num_nodes(); ++n) {
      out.design.regens_reported[n] += added.regens_reported[n];
    }
    out.plans.push_back(
        ExtractPlans(topology, demands, step.model, step.result.values).front());
    out.solve_statuses.push_back(step.result.status);
  }
  TidyPlans(topology, demands, costs, out.design, options.time_limit_seconds,
            out.plans);
  FinalizeDesign(topology, costs, out.plans, out.design);
  out.status = Combine(out.solve_statuses);
  out.seconds = Since(start);
  return out;
}

DesignResult RunDesign(Algorithm algorithm, const Topology& topology,
                       const DemandMatrix& demands, const CostModel& costs,
                       const DesignOptions& options) {
  switch (algorithm) {
    case Algorithm::kOptimal:
      return DesignOptimal(topology, demands, costs, options);
    case Algorithm::kSimple:
      return DesignSimple(topology, demands, costs, options);
    case Algorithm::kGreedy:
      return DesignGreedy(topology, demands, costs, options);
    case Algorithm::kLegacy:
      return DesignLegacy(topology, demands, costs, options);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace robustnet
