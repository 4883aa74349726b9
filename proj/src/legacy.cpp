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
#include <cmath>
#include <map>

#include "mcf.hpp"
#include "robustnet/algorithms.hpp"
#include "robustnet/design_model.hpp"
#include "robustnet/lp/solver.hpp"
#include "robustnet/operation.hpp"

namespace robustnet {
namespace {

using Clock = std::chrono::steady_clock;

bool LinkAvailable(const Topology& topology, const LegacyLink& link,
                   const FailureScenario& f) {
  if (!RouterAlive(f, link.a) || !RouterAlive(f, link.b)) return false;
  for (int s : WalkSpans(topology, link.path)) {
    if (!SpanAlive(f, s)) return false;
  }
  return true;
}

struct Candidate {
  int a = -1;
  int b = -1;
  std::vector<int> path;
  std::vector<int> regens;
  double unit_cost = 0.0;
  int var = -1;
};

}  // namespace

bool FarthestReachRegens(const Topology& topology, const std::vector<int>& path,
                         std::vector<int>& regens) {
  regens.clear();
  const double limit = topology.regen_dist() + MileTolerance(topology);
  double since = 0.0;  // miles since the last regen or the source
  for (size_t i = 1; i < path.size(); ++i) {
    const int s = topology.FindSpan(path[i - 1], path[i]);
    if (s < 0) throw TopologyError("path is not a span walk");
    const double miles = topology.span(s).miles;
    if (miles > limit) return false;
    if (since + miles > limit) {
      regens.push_back(path[i - 1]);
      since = 0.0;
    }
    since += miles;
  }
  return true;
}

DesignResult DesignLegacy(const Topology& topology, const DemandMatrix& demands,
                          const CostModel& costs,
                          const DesignOptions& options) {
  const auto start = Clock::now();
  ValidateCosts(costs);
  DesignResult out;
  out.algorithm = Algorithm::kLegacy;
  out.scenarios =
      options.scenarios.empty() ? EnumerateFailures(topology) : options.scenarios;
  for (const FailureScenario& f : out.scenarios) CheckScenario(topology, f);
  std::stable_partition(out.scenarios.begin(), out.scenarios.end(),
                        [](const FailureScenario& f) {
                          return f.kind == FailureScenario::Kind::kNoFailure;
                        });
  const double unit_cap = std::max(1.0, std::ceil(demands.total() - 1e-9));
  const int num_routers = topology.num_routers();

  std::vector<LegacyLink>& links = out.legacy_links;
  for (size_t fi = 0; fi < out.scenarios.size(); ++fi) {
    const FailureScenario& f = out.scenarios[fi];
    const DistanceTable dist = ShortestDistances(topology, f);
    std::map<std::pair<int, int>, double> existing;
    for (const LegacyLink& link : links) {
      if (LinkAvailable(topology, link, f)) existing[{link.a, link.b}] += link.units;
    }

    lp::LinearModel model;
    std::vector<Candidate> candidates;
    std::vector<internal::McfLink> mcf_links;
    for (int a = 0; a < num_routers; ++a) {
      if (!RouterAlive(f, a)) continue;
      for (int b = a + 1; b < num_routers; ++b) {
        if (!RouterAlive(f, b)) continue;
        const int ha = topology.router(a).home, hb = topology.router(b).home;
        Candidate c;
        c.a = a;
        c.b = b;
        bool usable = true;
        if (ha == hb) {
          c.unit_cost = 2.0 * costs.port;
        } else {
          c.path = ShortestPath(topology, f, dist, ha, hb);
          usable = !c.path.empty() && FarthestReachRegens(topology, c.path, c.regens);
          c.unit_cost = 2.0 * costs.tail + costs.regen * c.regens.size();
        }
        internal::McfLink ml;
        ml.a = a;
        ml.b = b;
        auto it = existing.find({a, b});
        ml.fixed = it == existing.end() ? 0.0 : it->second;
        if (usable) {
          c.var = model.AddVariable("N[" + internal::RouterPairName(topology, a, b) + "]",
                                    0.0, unit_cap, true, c.unit_cost, 1);
          ml.capacity = {{c.var, 1.0}};
          candidates.push_back(std::move(c));
        }
        if (usable || ml.fixed > 0.0) mcf_links.push_back(std::move(ml));
      }
    }
    internal::AddMcf(model, topology, demands, f, mcf_links, "", {});
    lp::SolveOptions solve;
    solve.time_limit_seconds = options.time_limit_seconds;
    const lp::SolveResult result = lp::Solve(model, solve);
    if (!result.has_solution()) {
      if (result.status == lp::SolveStatus::kInfeasible) {
        throw InfeasibleError("no surviving paths route the demands under " +
                                  ScenarioName(topology, f),
                              true, f);
      }
      throw TimeLimitError("no legacy links found for " +
                           ScenarioName(topology, f) + " within the time limit");
    }
    out.solve_statuses.push_back(result.status);
    for (const Candidate& c : candidates) {
      const int units = static_cast<int>(std::lround(result.values[c.var]));
      if (units <= 0) continue;
      auto same = std::find_if(links.begin(), links.end(), [&c](const LegacyLink& l) {
        return l.a == c.a && l.b == c.b && l.path == c.path;
      });
      if (same != links.end() && LinkAvailable(topology, *same, f)) {
        same->units += units;
        continue;
      }
      LegacyLink link;
      link.a = c.a;
      link.b = c.b;
      link.units = units;
      link.path = c.path;
      link.regens = c.regens;
      link.bought_in = static_cast<int>(fi);
      links.push_back(std::move(link));
    }
  }

  out.design = EmptyDesign(topology);
  for (const LegacyLink& link : links) {
    if (link.path.empty()) {
      out.design.ports[link.a] += link.units;
      out.design.ports[link.b] += link.units;
      continue;
    }
    out.design.tails[link.a] += link.units;
    out.design.tails[link.b] += link.units;
    for (int n : link.regens) out.design.regens_reported[n] += link.units;
  }

  // Per-scenario plans: every link still standing, routed by a feasibility LP.
  for (const FailureScenario& f : out.scenarios) {
    OperationPlan plan;
    plan.scenario = f;
    std::vector<internal::McfLink> mcf_links;
    for (const LegacyLink& link : links) {
      if (!LinkAvailable(topology, link, f)) continue;
      PlanLink* target = nullptr;
      for (PlanLink& p : plan.links) {
        if (p.a == link.a && p.b == link.b) target = &p;
      }
      if (target == nullptr) {
        plan.links.push_back({link.a, link.b, 0, {}});
        target = &plan.links.back();
      }
      target->capacity += link.units;
      if (!link.path.empty()) {
        target->chains.push_back({link.units, link.regens, link.path});
      }
    }
    for (const PlanLink& p : plan.links) {
      internal::McfLink ml;
      ml.a = p.a;
      ml.b = p.b;
      ml.fixed = p.capacity;
      mcf_links.push_back(std::move(ml));
    }
    lp::LinearModel model;
    internal::McfOptions mcf_options;
    mcf_options.flow_cost = 1.0;
    const internal::McfIndex index =
        internal::AddMcf(model, topology, demands, f, mcf_links, "", mcf_options);
    const lp::SolveResult result = lp::Solve(model);
    if (!result.has_solution()) {
      throw std::logic_error("legacy links do not route " +
                             ScenarioName(topology, f));
    }
    plan.flows = internal::ExtractFlows(index, mcf_links, result.values);
    out.plans.push_back(std::move(plan));
  }
  FinalizeDesign(topology, costs, out.plans, out.design);
  out.status = out.solve_statuses.empty()
                   ? lp::SolveStatus::kOptimal
                   : (std::all_of(out.solve_statuses.begin(),
                                  out.solve_statuses.end(),
                                  [](lp::SolveStatus s) {
                                    return s == lp::SolveStatus::kOptimal;
                                  })
                          ? lp::SolveStatus::kOptimal
                          : lp::SolveStatus::kFeasible);
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

}  // namespace robustnet
