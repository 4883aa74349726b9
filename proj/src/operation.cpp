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


#include "robustnet/operation.hpp"

#include <algorithm>
#include <cmath>

#include "mcf.hpp"
#include "robustnet/design_model.hpp"
#include "robustnet/lp/solver.hpp"

namespace robustnet {

OperationPlan Operate(const Topology& topology, const DemandMatrix& demands,
                      const CostModel& costs, const Design& design,
                      const FailureScenario& scenario,
                      double time_limit_seconds) {
  BuildOptions options;
  options.prior = AsPrior(design);
  options.operation_mode = true;
  DesignModel dm = BuildDesignModel(topology, demands, {scenario}, costs, options);
  lp::SolveOptions solve_options;
  solve_options.time_limit_seconds = time_limit_seconds;
  const lp::SolveResult result = lp::Solve(dm.model, solve_options);
  if (result.status == lp::SolveStatus::kInfeasible) {
    throw InfeasibleError("design does not cover scenario " +
                              ScenarioName(topology, scenario),
                          true, scenario);
  }
  if (!result.has_solution()) {
    throw TimeLimitError("no operation plan found for " +
                         ScenarioName(topology, scenario) +
                         " within the time limit");
  }
  return ExtractPlans(topology, demands, dm, result.values).front();
}

std::vector<int> ExpandNodePath(const Topology& topology,
                                const FailureScenario& scenario,
                                const DistanceTable& dist, int from_node,
                                int to_node, const std::vector<int>& regens) {
  const double limit = topology.regen_dist() + MileTolerance(topology);
  std::vector<int> stops = {from_node};
  stops.insert(stops.end(), regens.begin(), regens.end());
  stops.push_back(to_node);
  std::vector<int> walk = {from_node};
  for (size_t i = 1; i < stops.size(); ++i) {
    const int u = stops[i - 1], v = stops[i];
    if (!dist.reachable(u, v) || dist(u, v) > limit) {
      throw TopologyError("regen hop " + topology.node_name(u) + " -> " +
                          topology.node_name(v) + " exceeds regen_dist under " +
                          ScenarioName(topology, scenario));
    }
    const std::vector<int> leg = ShortestPath(topology, scenario, dist, u, v);
    walk.insert(walk.end(), leg.begin() + 1, leg.end());
  }
  return walk;
}

std::vector<int> ExpandLinkPath(const Topology& topology,
                                const FailureScenario& scenario, int a, int b,
                                const std::vector<int>& regens) {
  return ExpandNodePath(topology, scenario, ShortestDistances(topology, scenario),
                        topology.router(a).home, topology.router(b).home,
                        regens);
}

std::vector<int> WalkSpans(const Topology& topology,
                           const std::vector<int>& walk) {
  std::vector<int> spans;
  for (size_t i = 1; i < walk.size(); ++i) {
    const int s = topology.FindSpan(walk[i - 1], walk[i]);
    if (s < 0) {
      throw TopologyError("no span between '" + topology.node_name(walk[i - 1]) +
                          "' and '" + topology.node_name(walk[i]) + "'");
    }
    spans.push_back(s);
  }
  return spans;
}

std::vector<int> SurvivingCapacity(const Topology& topology,
                                   const OperationPlan& plan,
                                   const FailureScenario& scenario) {
  std::vector<int> out;
  for (const PlanLink& link : plan.links) {
    if (!RouterAlive(scenario, link.a) || !RouterAlive(scenario, link.b)) {
      out.push_back(0);
      continue;
    }
    if (link.chains.empty()) {
      out.push_back(link.capacity);
      continue;
    }
    int units = 0;
    for (const RegenChain& chain : link.chains) {
      bool alive = true;
      for (int s : WalkSpans(topology, chain.path)) alive &= SpanAlive(scenario, s);
      if (alive) units += chain.units;
    }
    out.push_back(std::min(units, link.capacity));
  }
  return out;
}

TransientReport EvaluateTransient(const Topology& topology,
                                  const DemandMatrix& demands,
                                  const OperationPlan& no_failure_plan,
                                  const FailureScenario& scenario,
                                  const TransientOptions& options) {
  CheckScenario(topology, scenario);
  TransientReport report;
  report.scenario = scenario;
  const std::vector<int> capacity =
      SurvivingCapacity(topology, no_failure_plan, scenario);
  std::vector<internal::McfLink> links;
  for (size_t l = 0; l < capacity.size(); ++l) {
    if (capacity[l] <= 0) continue;
    const PlanLink& link = no_failure_plan.links[l];
    report.surviving_links.emplace_back(link.a, link.b);
    internal::McfLink mcf_link;
    mcf_link.a = link.a;
    mcf_link.b = link.b;
    mcf_link.fixed = capacity[l];
    links.push_back(std::move(mcf_link));
  }

  lp::LinearModel model;
  internal::McfOptions mcf_options;
  mcf_options.elastic = true;
  const internal::McfIndex index = internal::AddMcf(
      model, topology, demands, scenario, links, "", mcf_options);
  for (int d : index.demands) report.offered += demands[d].units;
  if (index.demands.empty()) {
    report.fraction = 1.0;
    return report;
  }
  if (options.max_concurrent) {
    const int lambda = model.AddVariable("lambda", 0.0, 1.0, false, -1.0);
    for (size_t k = 0; k < index.demands.size(); ++k) {
      model.AddConstraint(
          "share" + std::to_string(k),
          {{index.delivered[k], 1.0},
           {lambda, -demands[index.demands[k]].units}},
          lp::Comparator::kEqual, 0.0);
    }
  } else {
    for (int z : index.delivered) model.SetObjectiveCoefficient(z, -1.0);
  }
  lp::SolveOptions solve_options;
  solve_options.time_limit_seconds = options.time_limit_seconds;
  const lp::SolveResult result = lp::Solve(model, solve_options);
  if (!result.has_solution()) {
    throw TimeLimitError("transient routing for " +
                         ScenarioName(topology, scenario) + " did not finish");
  }
  for (int z : index.delivered) report.delivered += result.values[z];
  report.delivered = std::clamp(report.delivered, 0.0, report.offered);
  if (report.offered - report.delivered <= 1e-9 * report.offered) {
    report.delivered = report.offered;
  }
  report.fraction = std::clamp(report.delivered / report.offered, 0.0, 1.0);
  return report;
}

}  // namespace robustnet
