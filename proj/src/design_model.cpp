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


#include "robustnet/design_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "mcf.hpp"
#include "robustnet/operation.hpp"

namespace robustnet {

struct ScenarioVars {
  std::vector<internal::McfLink> mcf_links;
  internal::McfIndex mcf;
};

DesignModel::DesignModel() = default;
DesignModel::~DesignModel() = default;
DesignModel::DesignModel(DesignModel&&) noexcept = default;
DesignModel& DesignModel::operator=(DesignModel&&) noexcept = default;

namespace {

constexpr int kEquipmentPriority = 2;
constexpr int kLinkPriority = 1;
constexpr double kOperationFlowCost = 1e-3;

std::string Tag(int f) { return "[f" + std::to_string(f) + "]"; }

}  // namespace

DesignModel BuildDesignModel(const Topology& topology,
                             const DemandMatrix& demands,
                             const std::vector<FailureScenario>& scenarios,
                             const CostModel& costs,
                             const BuildOptions& options) {
  if (scenarios.empty()) throw TopologyError("scenario list is empty");
  for (const FailureScenario& f : scenarios) CheckScenario(topology, f);
  ValidateCosts(costs);

  std::set<std::pair<int, int>> allowed;
  for (auto [a, b] : options.external_links) {
    if (a < 0 || b < 0 || a >= topology.num_routers() ||
        b >= topology.num_routers() || a == b) {
      throw TopologyError("invalid external link candidate");
    }
    if (topology.router(a).home == topology.router(b).home) {
      throw TopologyError("colocated routers " + topology.router(a).id + " and " +
                          topology.router(b).id +
                          " cannot form an external link");
    }
    allowed.emplace(std::min(a, b), std::max(a, b));
  }

  DesignModel dm;
  dm.scenarios = scenarios;
  lp::LinearModel& m = dm.model;
  const int num_routers = topology.num_routers();
  const int num_nodes = topology.num_nodes();
  const double unit_cap =
      std::max(1.0, std::ceil(demands.total() - 1e-9));

  int external_pairs = 0;
  for (int a = 0; a < num_routers; ++a) {
    for (int b = a + 1; b < num_routers; ++b) {
      if (topology.router(a).home != topology.router(b).home) ++external_pairs;
    }
  }
  auto equipment_cap = [&](double generous) {
    if (options.operation_mode) return 0.0;
    if (options.design_cap >= 0) return static_cast<double>(options.design_cap);
    return std::max(1.0, generous);
  };
  const double obj_scale = options.operation_mode ? 0.0 : 1.0;

  dm.tail_vars.resize(num_routers);
  dm.port_vars.assign(num_routers, -1);
  for (int r = 0; r < num_routers; ++r) {
    dm.tail_vars[r] = m.AddVariable("T[" + topology.router(r).id + "]", 0.0,
                                    equipment_cap(num_routers * unit_cap), true,
                                    obj_scale * costs.tail, kEquipmentPriority);
  }
  dm.regen_vars.resize(num_nodes);
  for (int n = 0; n < num_nodes; ++n) {
    dm.regen_vars[n] = m.AddVariable(
        "R[" + topology.node_name(n) + "]", 0.0,
        equipment_cap(external_pairs * unit_cap), true,
        obj_scale * costs.regen, kEquipmentPriority);
  }
  for (int r = 0; r < num_routers; ++r) {
    if (topology.routers_at(topology.router(r).home).size() < 2) continue;
    dm.port_vars[r] = m.AddVariable("P[" + topology.router(r).id + "]", 0.0,
                                    equipment_cap(num_routers * unit_cap), true,
                                    obj_scale * costs.port, kEquipmentPriority);
  }

  const double link_cost = options.operation_mode ? 1.0 : 0.0;
  for (size_t fi = 0; fi < scenarios.size(); ++fi) {
    const FailureScenario& f = scenarios[fi];
    const std::string tag = Tag(static_cast<int>(fi));
    const std::vector<std::pair<int, int>> adjacency =
        RegenAdjacency(topology, f);
    std::vector<LinkVars> links;
    auto scenario_vars = std::make_unique<ScenarioVars>();

    for (int a = 0; a < num_routers; ++a) {
      if (!RouterAlive(f, a)) continue;
      for (int b = a + 1; b < num_routers; ++b) {
        if (!RouterAlive(f, b)) continue;
        const int ha = topology.router(a).home, hb = topology.router(b).home;
        LinkVars link;
        link.a = a;
        link.b = b;
        link.colocated = ha == hb;
        if (!link.colocated && !allowed.empty() && !allowed.count({a, b})) {
          continue;
        }
        const std::string pair = internal::RouterPairName(topology, a, b);
        link.x = m.AddVariable("X" + tag + "[" + pair + "]", 0.0, unit_cap, true,
                               link_cost, kLinkPriority);
        if (!link.colocated) {
          for (auto [u, v] : adjacency) {
            if (u == hb || v == ha) continue;
            const int var = m.AddVariable(
                "C" + tag + "[" + pair + "][" + topology.node_name(u) + ">" +
                    topology.node_name(v) + "]",
                0.0, unit_cap, true, link_cost, 0);
            link.arcs.push_back({u, v, var});
          }
          // Source coverage, destination coverage and contiguity.
          std::vector<lp::Term> out_src = {{link.x, -1.0}};
          std::vector<lp::Term> in_dst = {{link.x, -1.0}};
          std::map<int, std::vector<lp::Term>> balance;
          for (const ChainArc& arc : link.arcs) {
            if (arc.u == ha) out_src.push_back({arc.var, 1.0});
            if (arc.v == hb) in_dst.push_back({arc.var, 1.0});
            if (arc.u != ha) balance[arc.u].push_back({arc.var, -1.0});
            if (arc.v != hb) balance[arc.v].push_back({arc.var, 1.0});
          }
          m.AddConstraint("src" + tag + "[" + pair + "]", std::move(out_src),
                          lp::Comparator::kGreaterEqual, 0.0);
          m.AddConstraint("dst" + tag + "[" + pair + "]", std::move(in_dst),
                          lp::Comparator::kGreaterEqual, 0.0);
          for (auto& [node, terms] : balance) {
            m.AddConstraint("path" + tag + "[" + pair + "][" +
                                topology.node_name(node) + "]",
                            std::move(terms), lp::Comparator::kEqual, 0.0);
          }
        }
        internal::McfLink mcf_link;
        mcf_link.a = a;
        mcf_link.b = b;
        mcf_link.capacity = {{link.x, 1.0}};
        scenario_vars->mcf_links.push_back(std::move(mcf_link));
        links.push_back(std::move(link));
      }
    }

    // Tails and ports per router.
    for (int r = 0; r < num_routers; ++r) {
      if (!RouterAlive(f, r)) continue;
      std::vector<lp::Term> tails, ports;
      for (const LinkVars& link : links) {
        if (link.a != r && link.b != r) continue;
        (link.colocated ? ports : tails).push_back({link.x, 1.0});
      }
      const std::string& id = topology.router(r).id;
      if (!tails.empty()) {
        tails.push_back({dm.tail_vars[r], -1.0});
        m.AddConstraint("tail" + tag + "[" + id + "]", std::move(tails),
                        lp::Comparator::kLessEqual, options.prior.tail(r));
      }
      if (!ports.empty()) {
        ports.push_back({dm.port_vars[r], -1.0});
        m.AddConstraint("port" + tag + "[" + id + "]", std::move(ports),
                        lp::Comparator::kLessEqual, options.prior.port(r));
      }
    }
    // Regens per node; a link's own source node is not charged.
    std::vector<std::vector<lp::Term>> regen_rows(num_nodes);
    for (const LinkVars& link : links) {
      const int ha = topology.router(link.a).home;
      for (const ChainArc& arc : link.arcs) {
        if (arc.u != ha) regen_rows[arc.u].push_back({arc.var, 1.0});
      }
    }
    for (int n = 0; n < num_nodes; ++n) {
      if (regen_rows[n].empty()) continue;
      regen_rows[n].push_back({dm.regen_vars[n], -1.0});
      m.AddConstraint("regen" + tag + "[" + topology.node_name(n) + "]",
                      std::move(regen_rows[n]), lp::Comparator::kLessEqual,
                      options.prior.regen(n));
    }

    internal::McfOptions mcf_options;
    mcf_options.flow_cost = options.operation_mode ? kOperationFlowCost : 0.0;
    scenario_vars->mcf = internal::AddMcf(m, topology, demands, f,
                                          scenario_vars->mcf_links, tag,
                                          mcf_options);
    dm.links.push_back(std::move(links));
    dm.flow_index.push_back(std::move(scenario_vars));
  }
  return dm;
}

Design ExtractNewEquipment(const Topology& topology, const DesignModel& dm,
                           const std::vector<double>& values) {
  Design d = EmptyDesign(topology);
  auto get = [&values](int var) {
    return var < 0 ? 0 : static_cast<int>(std::lround(values[var]));
  };
  for (int r = 0; r < topology.num_routers(); ++r) {
    d.tails[r] = get(dm.tail_vars[r]);
    d.ports[r] = get(dm.port_vars[r]);
  }
  for (int n = 0; n < topology.num_nodes(); ++n) {
    d.regens_reported[n] = get(dm.regen_vars[n]);
  }
  return d;
}

namespace {

// Splits integral chain-arc units into walks from `from` to `to`, cancelling
// any cycles on the way, until `units` wavelengths are covered.
std::vector<std::pair<std::vector<int>, int>> DecomposeChains(
    const Topology& topology, const LinkVars& link,
    const std::vector<double>& values, int from, int to, int units) {
  std::map<std::pair<int, int>, int> remaining;
  for (const ChainArc& arc : link.arcs) {
    const int v = static_cast<int>(std::lround(values[arc.var]));
    if (v > 0) remaining[{arc.u, arc.v}] += v;
  }
  std::vector<std::pair<std::vector<int>, int>> walks;
  while (units > 0) {
    std::vector<int> walk = {from};
    int cur = from;
    while (cur != to) {
      int next = -1;
      for (auto& [arc, left] : remaining) {
        if (arc.first != cur || left <= 0) continue;
        if (next < 0 ||
            topology.node_name(arc.second) < topology.node_name(next)) {
          next = arc.second;
        }
      }
      if (next < 0) throw std::logic_error("regen chain is not contiguous");
      auto seen = std::find(walk.begin(), walk.end(), next);
      if (seen == walk.end()) {
        walk.push_back(next);
        cur = next;
        continue;
      }
      std::vector<int> cycle(seen, walk.end());
      cycle.push_back(next);
      int amount = remaining[{cur, next}];
      for (size_t i = 1; i < cycle.size(); ++i) {
        amount = std::min(amount, remaining[{cycle[i - 1], cycle[i]}]);
      }
      for (size_t i = 1; i < cycle.size(); ++i) {
        remaining[{cycle[i - 1], cycle[i]}] -= amount;
      }
      walk.erase(seen + 1, walk.end());
      cur = next;
    }
    int amount = units;
    for (size_t i = 1; i < walk.size(); ++i) {
      amount = std::min(amount, remaining[{walk[i - 1], walk[i]}]);
    }
    for (size_t i = 1; i < walk.size(); ++i) {
      remaining[{walk[i - 1], walk[i]}] -= amount;
    }
    units -= amount;
    auto same = std::find_if(walks.begin(), walks.end(),
                             [&walk](const auto& w) { return w.first == walk; });
    if (same != walks.end()) {
      same->second += amount;
    } else {
      walks.emplace_back(std::move(walk), amount);
    }
  }
  return walks;
}

}  // namespace

std::vector<OperationPlan> ExtractPlans(const Topology& topology,
                                        const DemandMatrix& demands,
                                        const DesignModel& dm,
                                        const std::vector<double>& values) {
  (void)demands;
  std::vector<OperationPlan> plans;
  for (size_t fi = 0; fi < dm.scenarios.size(); ++fi) {
    const FailureScenario& f = dm.scenarios[fi];
    const DistanceTable dist = ShortestDistances(topology, f);
    OperationPlan plan;
    plan.scenario = f;
    for (const LinkVars& lv : dm.links[fi]) {
      const int capacity = static_cast<int>(std::lround(values[lv.x]));
      if (capacity <= 0) continue;
      PlanLink link;
      link.a = lv.a;
      link.b = lv.b;
      link.capacity = capacity;
      if (!lv.colocated) {
        const int ha = topology.router(lv.a).home;
        const int hb = topology.router(lv.b).home;
        for (auto& [walk, units] :
             DecomposeChains(topology, lv, values, ha, hb, capacity)) {
          RegenChain chain;
          chain.units = units;
          chain.regens.assign(walk.begin() + 1, walk.end() - 1);
          chain.path = ExpandNodePath(topology, f, dist, ha, hb, chain.regens);
          link.chains.push_back(std::move(chain));
        }
      }
      plan.links.push_back(std::move(link));
    }
    plan.flows = internal::ExtractFlows(dm.flow_index[fi]->mcf,
                                        dm.flow_index[fi]->mcf_links, values);
    plans.push_back(std::move(plan));
  }
  return plans;
}

void FinalizeDesign(const Topology& topology, const CostModel& costs,
                    const std::vector<OperationPlan>& plans, Design& design) {
  // Free equipment the solver left unused is dropped so reports stay tidy.
  std::vector<int> tails(topology.num_routers(), 0);
  std::vector<int> ports(topology.num_routers(), 0);
  std::vector<int> regens(topology.num_nodes(), 0);
  for (const OperationPlan& plan : plans) {
    std::vector<int> t(topology.num_routers(), 0), p(topology.num_routers(), 0);
    std::vector<int> g(topology.num_nodes(), 0);
    for (const PlanLink& link : plan.links) {
      auto& use = link.chains.empty() ? p : t;
      use[link.a] += link.capacity;
      use[link.b] += link.capacity;
      for (const RegenChain& chain : link.chains) {
        for (int n : chain.regens) g[n] += chain.units;
      }
    }
    for (int r = 0; r < topology.num_routers(); ++r) {
      tails[r] = std::max(tails[r], t[r]);
      ports[r] = std::max(ports[r], p[r]);
    }
    for (int n = 0; n < topology.num_nodes(); ++n) {
      regens[n] = std::max(regens[n], g[n]);
    }
  }
  for (int r = 0; r < topology.num_routers(); ++r) {
    if (costs.tail == 0.0) design.tails[r] = std::min(design.tails[r], tails[r]);
    if (costs.port == 0.0) design.ports[r] = std::min(design.ports[r], ports[r]);
  }
  for (int n = 0; n < topology.num_nodes(); ++n) {
    if (costs.regen == 0.0) {
      design.regens_reported[n] = std::min(design.regens_reported[n], regens[n]);
    }
  }

  std::vector<int> source_units(topology.num_nodes(), 0);
  for (const OperationPlan& plan : plans) {
    std::vector<int> units(topology.num_nodes(), 0);
    for (const PlanLink& link : plan.links) {
      if (link.chains.empty()) continue;
      units[topology.router(link.a).home] += link.capacity;
    }
    for (int n = 0; n < topology.num_nodes(); ++n) {
      source_units[n] = std::max(source_units[n], units[n]);
    }
  }
  design.regens_raw.resize(topology.num_nodes());
  for (int n = 0; n < topology.num_nodes(); ++n) {
    design.regens_raw[n] = design.regens_reported[n] + source_units[n];
  }
  design.total_cost_reported = costs.tail * design.total_tails() +
                               costs.regen * design.total_regens_reported() +
                               costs.port * design.total_ports();
  design.total_cost_raw = costs.tail * design.total_tails() +
                          costs.regen * design.total_regens_raw() +
                          costs.port * design.total_ports();
}

}  // namespace robustnet
