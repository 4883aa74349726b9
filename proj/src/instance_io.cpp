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


#include "robustnet/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json_util.hpp"

namespace robustnet {

using internal::Field;
using internal::Json;

Instance ParseInstance(std::string_view text, const std::string& source) {
  const Json root = internal::ParseJson(text, source);
  const Field top(root, source);
  top.RequireObject();

  TopologySpec spec;
  for (const Field& n : top.Get("ip_nodes").Elements()) {
    spec.ip_nodes.push_back(n.String());
  }
  if (top.Has("optical_nodes")) {
    for (const Field& n : top.Get("optical_nodes").Elements()) {
      spec.optical_nodes.push_back(n.String());
    }
  }
  for (const Field& r : top.Get("routers").Elements()) {
    spec.routers.push_back({r.Get("id").String(), r.Get("home").String()});
  }
  if (top.Has("spans")) {
    for (const Field& s : top.Get("spans").Elements()) {
      spec.spans.push_back(
          {s.Get("u").String(), s.Get("v").String(), s.Get("miles").Number()});
    }
  }
  if (top.Has("regen_dist")) spec.regen_dist = top.Get("regen_dist").Number();

  Topology topology = [&] {
    try {
      return Topology::Create(spec);
    } catch (const TopologyError& e) {
      throw ParseError(source + ": invalid topology: " + e.what());
    }
  }();

  std::vector<Demand> entries;
  if (top.Has("demands")) {
    for (const Field& d : top.Get("demands").Elements()) {
      Demand dem;
      const Field src = d.Get("src"), dst = d.Get("dst");
      dem.src = topology.FindNode(src.String());
      if (dem.src < 0) src.Fail("unknown node '" + src.String() + "'");
      dem.dst = topology.FindNode(dst.String());
      if (dem.dst < 0) dst.Fail("unknown node '" + dst.String() + "'");
      dem.units = d.Get("units").Number();
      entries.push_back(dem);
    }
  }
  DemandMatrix demands;
  try {
    demands = DemandMatrix::Create(topology, std::move(entries));
  } catch (const TopologyError& e) {
    throw ParseError(source + ": demands: " + e.what());
  }

  CostModel costs;
  if (top.Has("costs")) {
    const Field c = top.Get("costs");
    c.RequireObject();
    if (c.Has("tail")) costs.tail = c.Get("tail").Number();
    if (c.Has("regen")) costs.regen = c.Get("regen").Number();
    if (c.Has("port")) costs.port = c.Get("port").Number();
    try {
      ValidateCosts(costs);
    } catch (const TopologyError& e) {
      c.Fail(e.what());
    }
  }
  return Instance{std::move(topology), std::move(demands), costs};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Instance LoadInstance(const std::string& path) {
  return ParseInstance(ReadFile(path), path);
}

}  // namespace robustnet
