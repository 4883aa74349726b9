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


#ifndef ROBUSTNET_OPERATION_HPP_
#define ROBUSTNET_OPERATION_HPP_

#include <vector>

#include "robustnet/lp/linear_model.hpp"
#include "robustnet/net_model.hpp"
#include "robustnet/types.hpp"

namespace robustnet {

// Configures links and routes every served demand under `scenario` using
// only the equipment in `design` (tails, reported regens, ports). Throws
// InfeasibleError when the design does not cover the scenario and
// TimeLimitError when the limit expires without a plan.
OperationPlan Operate(const Topology& topology, const DemandMatrix& demands,
                      const CostModel& costs, const Design& design,
                      const FailureScenario& scenario,
                      double time_limit_seconds = lp::kInfinity);

// Node walk of one link wavelength: shortest surviving paths from the
// endpoint node of router `a` through each regen in order to the endpoint
// node of router `b`. Ties follow ShortestPath(). Throws TopologyError when
// a leg is unreachable or longer than regen_dist.
std::vector<int> ExpandLinkPath(const Topology& topology,
                                const FailureScenario& scenario, int a, int b,
                                const std::vector<int>& regens);
std::vector<int> ExpandNodePath(const Topology& topology,
                                const FailureScenario& scenario,
                                const DistanceTable& dist, int from_node,
                                int to_node, const std::vector<int>& regens);

// Span indices along a node walk. Throws TopologyError on a missing span.
std::vector<int> WalkSpans(const Topology& topology,
                           const std::vector<int>& walk);

struct TransientOptions {
  // Maximize the common delivered fraction instead of the total.
  bool max_concurrent = false;
  double time_limit_seconds = lp::kInfinity;
};

// Routing-only recovery on the no-failure links that survive `scenario`.
TransientReport EvaluateTransient(const Topology& topology,
                                  const DemandMatrix& demands,
                                  const OperationPlan& no_failure_plan,
                                  const FailureScenario& scenario,
                                  const TransientOptions& options = {});

// Capacity of each plan link that survives `scenario`, in plan link order.
std::vector<int> SurvivingCapacity(const Topology& topology,
                                   const OperationPlan& plan,
                                   const FailureScenario& scenario);

}  // namespace robustnet

#endif  // ROBUSTNET_OPERATION_HPP_
