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


#include "robustnet/types.hpp"

#include <numeric>

namespace robustnet {
namespace {

int Sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

int Design::total_tails() const { return Sum(tails); }
int Design::total_regens_reported() const { return Sum(regens_reported); }
int Design::total_regens_raw() const { return Sum(regens_raw); }
int Design::total_ports() const { return Sum(ports); }

Design EmptyDesign(const Topology& topology) {
  Design d;
  d.tails.assign(topology.num_routers(), 0);
  d.ports.assign(topology.num_routers(), 0);
  d.regens_raw.assign(topology.num_nodes(), 0);
  d.regens_reported.assign(topology.num_nodes(), 0);
  return d;
}

PriorPlacement AsPrior(const Design& design) {
  return {design.tails, design.regens_reported, design.ports};
}

const PlanLink* OperationPlan::FindLink(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (const PlanLink& link : links) {
    if (link.a == a && link.b == b) return &link;
  }
  return nullptr;
}

std::vector<int> ServedDemands(const Topology& topology,
                               const DemandMatrix& demands,
                               const FailureScenario& f) {
  std::vector<int> out;
  for (int d = 0; d < demands.size(); ++d) {
    const Demand& dem = demands[d];
    if (dem.units <= 0.0) continue;
    if (AliveRoutersAt(topology, f, dem.src).empty() ||
        AliveRoutersAt(topology, f, dem.dst).empty()) {
      continue;
    }
    out.push_back(d);
  }
  return out;
}

}  // namespace robustnet
