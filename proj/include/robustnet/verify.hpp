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


#ifndef ROBUSTNET_VERIFY_HPP_
#define ROBUSTNET_VERIFY_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "robustnet/net_model.hpp"
#include "robustnet/types.hpp"

// Independent checkers for tests. Nothing here uses the LP machinery.
namespace robustnet::verify {

class OracleRefused : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleResult {
  bool feasible = false;
  double cost = 0.0;
  // Tails, reported regens and ports of the cheapest placement found.
  Design witness;
  int64_t search_space = 0;
  int64_t candidates_checked = 0;
};

// Exhaustive search over every placement with T_u, R_u, P_u in [0, cap].
// A placement is operable under a scenario when some integer link
// configuration within its tails and ports routes all served demands and
// every link wavelength can be given a regen chain within the regens.
//
// Exact for demand sets that share a single source node, share a single
// destination node, or run between one node pair in both directions; throws
// OracleRefused for other demand sets and for search spaces above
// `max_space`.
OracleResult OracleDesignSearch(const Topology& topology,
                                const DemandMatrix& demands,
                                const CostModel& costs,
                                const std::vector<FailureScenario>& scenarios,
                                int cap, int64_t max_space = 10'000'000);

// True iff the walk, split at the listed regens (matched in order along the
// walk), has every stretch no longer than regen_dist. Throws TopologyError
// when consecutive walk nodes share no surviving span.
bool CheckRegenFeasiblePath(const Topology& topology,
                            const FailureScenario& scenario,
                            const std::vector<int>& node_path,
                            const std::vector<int>& regen_nodes);

// Each returns human-readable violations; empty means the check passed.
std::vector<std::string> CheckFlowConservation(const Topology& topology,
                                               const DemandMatrix& demands,
                                               const OperationPlan& plan,
                                               double tolerance = 1e-6);
std::vector<std::string> CheckLinkCapacity(const Topology& topology,
                                           const OperationPlan& plan,
                                           double tolerance = 1e-6);
std::vector<std::string> CheckEquipmentUsage(const Topology& topology,
                                             const Design& design,
                                             const OperationPlan& plan);
// Chain walks: endpoints, connectivity, regen spacing and leg lengths.
std::vector<std::string> CheckChains(const Topology& topology,
                                     const OperationPlan& plan);

// All of the above for one plan.
std::vector<std::string> CheckPlan(const Topology& topology,
                                   const DemandMatrix& demands,
                                   const Design& design,
                                   const OperationPlan& plan);

}  // namespace robustnet::verify

#endif  // ROBUSTNET_VERIFY_HPP_
