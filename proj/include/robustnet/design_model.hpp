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


#ifndef ROBUSTNET_DESIGN_MODEL_HPP_
#define ROBUSTNET_DESIGN_MODEL_HPP_

#include <memory>
#include <utility>
#include <vector>

#include "robustnet/lp/linear_model.hpp"
#include "robustnet/net_model.hpp"
#include "robustnet/types.hpp"

namespace robustnet {

struct BuildOptions {
  PriorPlacement prior;
  // Upper bound on every T_u, R_u and P_u; negative means no explicit cap.
  int design_cap = -1;
  // Equipment is fixed to `prior` (no new T, R, P may be bought) and the
  // objective becomes the resources used: link units + chain units + a small
  // charge per flow unit.
  bool operation_mode = false;
  // Restricts the external (non-colocated) link candidates to these router
  // pairs; empty means every pair. Colocated pairs are rejected.
  std::vector<std::pair<int, int>> external_links;
};

struct ChainArc {
  int u = -1;
  int v = -1;
  int var = -1;
};

struct LinkVars {
  int a = -1;  // router, a < b
  int b = -1;
  bool colocated = false;
  int x = -1;
  std::vector<ChainArc> arcs;
};

struct ScenarioVars;

// A design model and the index needed to read a solution back.
struct DesignModel {
  DesignModel();
  ~DesignModel();
  DesignModel(DesignModel&&) noexcept;
  DesignModel& operator=(DesignModel&&) noexcept;

  lp::LinearModel model;
  std::vector<FailureScenario> scenarios;
  std::vector<int> tail_vars;   // per router
  std::vector<int> regen_vars;  // per node
  std::vector<int> port_vars;   // per router, -1 without colocated peers
  std::vector<std::vector<LinkVars>> links;  // per scenario
  std::vector<std::unique_ptr<ScenarioVars>> flow_index;  // per scenario
};

// Builds the joint placement model over `scenarios`. Throws TopologyError
// for an empty or invalid scenario list, and for colocated pairs listed in
// options.external_links.
DesignModel BuildDesignModel(const Topology& topology,
                             const DemandMatrix& demands,
                             const std::vector<FailureScenario>& scenarios,
                             const CostModel& costs,
                             const BuildOptions& options = {});

// New equipment bought by the solution (T, reported R, P). Raw regens and
// the costs are filled in by FinalizeDesign().
Design ExtractNewEquipment(const Topology& topology, const DesignModel& dm,
                           const std::vector<double>& values);

std::vector<OperationPlan> ExtractPlans(const Topology& topology,
                                        const DemandMatrix& demands,
                                        const DesignModel& dm,
                                        const std::vector<double>& values);

// Drops zero-cost equipment no plan uses, then fills regens_raw (reported +
// scenario maximum of the source-node units of the plans) and both costs.
void FinalizeDesign(const Topology& topology, const CostModel& costs,
                    const std::vector<OperationPlan>& plans, Design& design);

}  // namespace robustnet

#endif  // ROBUSTNET_DESIGN_MODEL_HPP_
