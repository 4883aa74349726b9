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


#ifndef ROBUSTNET_SRC_MCF_HPP_
#define ROBUSTNET_SRC_MCF_HPP_

#include <array>
#include <string>
#include <vector>

#include "robustnet/lp/linear_model.hpp"
#include "robustnet/net_model.hpp"
#include "robustnet/types.hpp"

namespace robustnet::internal {

// Capacity of a bidirectional link: fixed + sum of terms, per direction.
struct McfLink {
  int a = -1;
  int b = -1;
  std::vector<lp::Term> capacity;
  double fixed = 0.0;
};

struct McfOptions {
  // Deliveries become variables in [0, D] instead of being forced to D.
  bool elastic = false;
  double flow_cost = 0.0;
};

struct McfIndex {
  std::vector<int> demands;  // served demand indices
  // y[k][l] = {a->b, b->a} flow variables of demand k on link l.
  std::vector<std::vector<std::array<int, 2>>> y;
  // Delivered-amount variables; elastic mode only.
  std::vector<int> delivered;
};

// Adds per-demand flow conservation with access arcs at every live router of
// the endpoint nodes, and the per-direction capacity rows.
McfIndex AddMcf(lp::LinearModel& model, const Topology& topology,
                const DemandMatrix& demands, const FailureScenario& f,
                const std::vector<McfLink>& links, const std::string& prefix,
                const McfOptions& options);

std::vector<PlanFlow> ExtractFlows(const McfIndex& index,
                                   const std::vector<McfLink>& links,
                                   const std::vector<double>& values);

std::string RouterPairName(const Topology& topology, int a, int b);

}  // namespace robustnet::internal

#endif  // ROBUSTNET_SRC_MCF_HPP_
