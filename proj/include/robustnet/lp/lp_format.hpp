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

#ifndef ROBUSTNET_LP_LP_FORMAT_HPP_
#define ROBUSTNET_LP_LP_FORMAT_HPP_

#include <ostream>
#include <string>

#include "robustnet/lp/linear_model.hpp"

namespace robustnet::lp {

// Writes the model in CPLEX LP text format so it can be cross-checked with
// external solvers. Names are sanitized to the format's identifier alphabet
// and made unique; lines are wrapped well below the 255 character limit.
void WriteLpFormat(const LinearModel& model, std::ostream& out);
std::string ToLpFormat(const LinearModel& model);

// The identifier WriteLpFormat() would emit for `name`, before uniquing.
std::string SanitizeLpName(const std::string& name);

}  // namespace robustnet::lp

#endif  // ROBUSTNET_LP_LP_FORMAT_HPP_
