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


#ifndef ROBUSTNET_REPORT_HPP_
#define ROBUSTNET_REPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "robustnet/algorithms.hpp"
#include "robustnet/net_model.hpp"
#include "robustnet/types.hpp"

namespace robustnet {

// Design document: equipment maps keyed by router or node id, cost summary
// and the per-scenario links with their regen chains and flows.
std::string DesignToJson(const Topology& topology, const DemandMatrix& demands,
                         const DesignResult& result);

struct DesignDocument {
  std::string algorithm;
  Design design;
  std::vector<OperationPlan> plans;

  // Throws ParseError when the document has no NoFailure plan.
  const OperationPlan& NoFailurePlan() const;
};

// Throws ParseError naming the field on malformed or mismatched documents.
DesignDocument ParseDesignDocument(const Topology& topology,
                                   const DemandMatrix& demands,
                                   std::string_view text,
                                   const std::string& source = "<design>");

// Columns: scenario_kind, scenario_id, offered, delivered, fraction.
std::string TransientCsv(const Topology& topology,
                         const std::vector<TransientReport>& reports);

// Columns: algorithm, status, tails, regens, regens_raw, ports, total_cost,
// seconds.
std::string CompareCsv(const std::vector<DesignResult>& results);

}  // namespace robustnet

#endif  // ROBUSTNET_REPORT_HPP_
