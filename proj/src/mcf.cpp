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


#include "mcf.hpp"

#include <cmath>

namespace robustnet::internal {

std::string RouterPairName(const Topology& topology, int a, int b) {
  return topology.router(a).id + "-" + topology.router(b).id;
}

McfIndex AddMcf(lp::LinearModel& model, const Topology& topology,
                const DemandMatrix& demands, const FailureScenario& f,
                const std::vector<McfLink>& links, const std::string& prefix,
                const McfOptions& options) {
  McfIndex index;
  index.demands = ServedDemands(topology, demands, f);
  const int num_links = static_cast<int>(links.size());
  std::vector<std::vector<int>> touching(topology.num_routers());
  for (int l = 0; l < num_links; ++l) {
    touching[links[l].a].push_back(l);
    touching[links[l].b].push_back(l);
  }

  for (int d : index.demands) {
    const Demand& dem = demands[d];
    const std::string tag = prefix + "[" + topology.node_name(dem.src) + ">" +
                            topology.node_name(dem.dst) + "]";
    std::vector<std::array<int, 2>> y(num_links);
    for (int l = 0; l < num_links; ++l) {
      const std::string pair = RouterPairName(topology, links[l].a, links[l].b);
      y[l][0] = model.AddVariable("Y" + tag + "[" + pair + "]", 0.0, dem.units,
                                  false, options.flow_cost);
      y[l][1] = model.AddVariable("Y" + tag + "[" + pair + "~]", 0.0, dem.units,
                                  false, options.flow_cost);
    }
    int z = -1;
    if (options.elastic) {
      z = model.AddVariable("Z" + tag, 0.0, dem.units, false);
      index.delivered.push_back(z);
    }
    std::vector<lp::Term> sent, received;
    auto add_access = [&](int node, const char* kind,
                          std::vector<lp::Term>& sum) {
      std::vector<std::pair<int, int>> arcs;
      for (int r : AliveRoutersAt(topology, f, node)) {
        const int v = model.AddVariable(std::string(kind) + tag + "[" +
                                            topology.router(r).id + "]",
                                        0.0, dem.units, false);
        sum.push_back({v, 1.0});
        arcs.emplace_back(r, v);
      }
      return arcs;
    };
    const auto in_arcs = add_access(dem.src, "A", sent);
    const auto out_arcs = add_access(dem.dst, "B", received);
    for (auto* sum : {&sent, &received}) {
      if (options.elastic) {
        sum->push_back({z, -1.0});
        model.AddConstraint((sum == &sent ? "send" : "recv") + tag, *sum,
                            lp::Comparator::kEqual, 0.0);
      } else {
        model.AddConstraint((sum == &sent ? "send" : "recv") + tag, *sum,
                            lp::Comparator::kEqual, dem.units);
      }
    }

    for (int r = 0; r < topology.num_routers(); ++r) {
      if (!RouterAlive(f, r)) continue;
      std::vector<lp::Term> row;
      for (int l : touching[r]) {
        const bool is_a = links[l].a == r;
        row.push_back({y[l][is_a ? 1 : 0], 1.0});   // inbound
        row.push_back({y[l][is_a ? 0 : 1], -1.0});  // outbound
      }
      for (auto [router, v] : in_arcs) {
        if (router == r) row.push_back({v, 1.0});
      }
      for (auto [router, v] : out_arcs) {
        if (router == r) row.push_back({v, -1.0});
      }
      if (row.empty()) continue;
      model.AddConstraint("flow" + tag + "[" + topology.router(r).id + "]",
                          std::move(row), lp::Comparator::kEqual, 0.0);
    }
    index.y.push_back(std::move(y));
  }

  for (int l = 0; l < num_links; ++l) {
    if (index.demands.empty()) break;
    for (int dir = 0; dir < 2; ++dir) {
      std::vector<lp::Term> row;
      for (const auto& y : index.y) row.push_back({y[l][dir], 1.0});
      for (const lp::Term& t : links[l].capacity) row.push_back({t.var, -t.coef});
      model.AddConstraint(
          "cap" + prefix + "[" + RouterPairName(topology, links[l].a, links[l].b) +
              (dir ? "~]" : "]"),
          std::move(row), lp::Comparator::kLessEqual, links[l].fixed);
    }
  }
  return index;
}

std::vector<PlanFlow> ExtractFlows(const McfIndex& index,
                                   const std::vector<McfLink>& links,
                                   const std::vector<double>& values) {
  std::vector<PlanFlow> flows;
  for (size_t k = 0; k < index.demands.size(); ++k) {
    for (size_t l = 0; l < links.size(); ++l) {
      for (int dir = 0; dir < 2; ++dir) {
        const double v = values[index.y[k][l][dir]];
        if (v <= 1e-9) continue;
        PlanFlow flow;
        flow.demand = index.demands[k];
        flow.from = dir == 0 ? links[l].a : links[l].b;
        flow.to = dir == 0 ? links[l].b : links[l].a;
        flow.units = v;
        flows.push_back(flow);
      }
    }
  }
  return flows;
}

}  // namespace robustnet::internal
