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

#ifndef ROBUSTNET_LP_SOLVER_HPP_
#define ROBUSTNET_LP_SOLVER_HPP_

#include <cstdint>
#include <limits>

#include "robustnet/lp/linear_model.hpp"

namespace robustnet::lp {

struct SolveOptions {
  double time_limit_seconds = kInfinity;
  int64_t node_limit = std::numeric_limits<int64_t>::max();
};

// Branch-and-bound over the integer variables with the dual simplex as the
// relaxation oracle. Nodes are explored best-bound first (ties: deeper node,
// then creation order); the branching variable is the most fractional one
// within the highest branch_priority class that has a fractional value.
//
// Deterministic for identical input unless the time limit expires. Throws
// ModelError for malformed models before any work is done.
SolveResult Solve(const LinearModel& model, const SolveOptions& options = {});

}  // namespace robustnet::lp

#endif  // ROBUSTNET_LP_SOLVER_HPP_
