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


#ifndef ROBUSTNET_TYPES_HPP_
#define ROBUSTNET_TYPES_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "robustnet/lp/linear_model.hpp"
#include "robustnet/net_model.hpp"

namespace robustnet {

// Equipment placement. Vectors are indexed by router (tails, ports) or node
// (regens) and always sized to the topology.
struct Design {
  std::vector<int> tails;
  // Regens as the model accounts them, including one unit at the source
  // node of every link unit that the real network does not need.
  std::vector<int> regens_raw;
  std::vector<int> regens_reported;
  std::vector<int> ports;
  double total_cost_raw = 0.0;
  double total_cost_reported = 0.0;

  int total_tails() const;
  int total_regens_reported() const;
  int total_regens_raw() const;
  int total_ports() const;
};

Design EmptyDesign(const Topology& topology);

// Equipment already paid for; empty vectors mean zero.
struct PriorPlacement {
  std::vector<int> tails;
  std::vector<int> regens;
  std::vector<int> ports;

  int tail(int r) const { return r < static_cast<int>(tails.size()) ? tails[r] : 0; }
  int regen(int n) const { return n < static_cast<int>(regens.size()) ? regens[n] : 0; }
  int port(int r) const { return r < static_cast<int>(ports.size()) ? ports[r] : 0; }
};

PriorPlacement AsPrior(const Design& design);

// `units` wavelengths of one link share a regen chain. `path` is the node
// walk from the link's first endpoint node to its second.
struct RegenChain {
  int units = 0;
  std::vector<int> regens;
  std::vector<int> path;
};

// A bidirectional IP link between routers a < b. Links between colocated
// routers have no chains.
struct PlanLink {
  int a = -1;
  int b = -1;
  int capacity = 0;
  std::vector<RegenChain> chains;
};

// Traffic of one demand on one direction of a link.
struct PlanFlow {
  int demand = -1;  // index into the DemandMatrix
  int from = -1;    // router
  int to = -1;      // router
  double units = 0.0;
};

struct OperationPlan {
  FailureScenario scenario;
  std::vector<PlanLink> links;
  std::vector<PlanFlow> flows;

  const PlanLink* FindLink(int a, int b) const;
};

struct TransientReport {
  FailureScenario scenario;
  double offered = 0.0;
  double delivered = 0.0;
  double fraction = 1.0;
  std::vector<std::pair<int, int>> surviving_links;
};

// Demands with positive units whose endpoint nodes each keep a live router.
std::vector<int> ServedDemands(const Topology& topology,
                               const DemandMatrix& demands,
                               const FailureScenario& f);

// Raised when a design or operation problem has no solution. `scenario` is
// the first scenario found to be unroutable, when known.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& message, bool has_scenario,
                  FailureScenario scenario)
      : std::runtime_error(message),
        has_scenario_(has_scenario),
        scenario_(scenario) {}
  bool has_scenario() const { return has_scenario_; }
  const FailureScenario& scenario() const { return scenario_; }

 private:
  bool has_scenario_;
  FailureScenario scenario_;
};

// Raised when the time limit expires before any feasible solution exists.
class TimeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace robustnet

#endif  // ROBUSTNET_TYPES_HPP_
