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


#ifndef ROBUSTNET_ALGORITHMS_HPP_
#define ROBUSTNET_ALGORITHMS_HPP_

#include <string_view>
#include <vector>

#include "robustnet/lp/linear_model.hpp"
#include "robustnet/net_model.hpp"
#include "robustnet/types.hpp"

namespace robustnet {

enum class Algorithm { kOptimal, kSimple, kGreedy, kLegacy };

std::string_view AlgorithmName(Algorithm algorithm);
// Throws std::invalid_argument for unknown names.
Algorithm ParseAlgorithm(std::string_view name);

struct DesignOptions {
  // Optimal: limit for the joint solve. Simple, Greedy, Legacy: limit for
  // each per-scenario solve.
  double time_limit_seconds = lp::kInfinity;
  // Scenarios to protect against; empty means EnumerateFailures().
  std::vector<FailureScenario> scenarios;
  // Upper bound on every T_u, R_u, P_u; negative means none.
  int design_cap = -1;
};

// A link bought by the Legacy baseline: fixed optical path and regens.
struct LegacyLink {
  int a = -1;
  int b = -1;
  int units = 0;
  std::vector<int> path;    // node walk, empty for colocated links
  std::vector<int> regens;  // farthest-reach placement along `path`
  int bought_in = -1;       // scenario position
};

struct DesignResult {
  Algorithm algorithm = Algorithm::kOptimal;
  Design design;
  std::vector<FailureScenario> scenarios;
  // One plan per scenario, same order.
  std::vector<OperationPlan> plans;
  // kOptimal when every solve was proven optimal, kFeasible when at least
  // one returned a time-limited incumbent.
  lp::SolveStatus status = lp::SolveStatus::kOptimal;
  std::vector<lp::SolveStatus> solve_statuses;
  double best_bound = -lp::kInfinity;  // joint solve only
  double seconds = 0.0;
  std::vector<LegacyLink> legacy_links;
};

// All of these throw InfeasibleError (naming the first unroutable scenario
// when one is found) and TimeLimitError when a solve ends without any
// feasible placement.
DesignResult DesignOptimal(const Topology& topology, const DemandMatrix& demands,
                           const CostModel& costs,
                           const DesignOptions& options = {});
// Independent per-scenario solves, run concurrently; elementwise maximum.
DesignResult DesignSimple(const Topology& topology, const DemandMatrix& demands,
                          const CostModel& costs,
                          const DesignOptions& options = {});
// Sequential per-scenario solves that pay only for equipment beyond what
// earlier scenarios bought.
DesignResult DesignGreedy(const Topology& topology, const DemandMatrix& demands,
                          const CostModel& costs,
                          const DesignOptions& options = {});
// IP links pinned to shortest optical paths, each owning its equipment.
DesignResult DesignLegacy(const Topology& topology, const DemandMatrix& demands,
                          const CostModel& costs,
                          const DesignOptions& options = {});

DesignResult RunDesign(Algorithm algorithm, const Topology& topology,
                       const DemandMatrix& demands, const CostModel& costs,
                       const DesignOptions& options = {});

// Regens placed by walking `path` and stopping at the last node within
// regen_dist of the previous regen (or the source). Returns false when a
// single span is longer than regen_dist.
bool FarthestReachRegens(const Topology& topology, const std::vector<int>& path,
                         std::vector<int>& regens);

}  // namespace robustnet

#endif  // ROBUSTNET_ALGORITHMS_HPP_
