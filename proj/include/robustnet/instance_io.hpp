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


#ifndef ROBUSTNET_INSTANCE_IO_HPP_
#define ROBUSTNET_INSTANCE_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "robustnet/net_model.hpp"

namespace robustnet {

// Malformed input. The message names the source, and the line and column
// for syntax errors or the offending field otherwise.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Instance {
  Topology topology;
  DemandMatrix demands;
  CostModel costs;
};

// Keys: ip_nodes, optical_nodes, routers [{id, home}], spans [{u, v, miles}],
// regen_dist (default 1000), demands [{src, dst, units}] and
// costs {tail, regen, port} (defaults 1, 1, 0).
Instance ParseInstance(std::string_view text,
                       const std::string& source = "<input>");
Instance LoadInstance(const std::string& path);

// Whole file as a string; throws ParseError when it cannot be read.
std::string ReadFile(const std::string& path);

}  // namespace robustnet

#endif  // ROBUSTNET_INSTANCE_IO_HPP_
