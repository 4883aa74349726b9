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


#ifndef ROBUSTNET_TESTS_TEST_UTIL_HPP_
#define ROBUSTNET_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <random>
#include <set>
#include <tuple>
#include <string>
#include <vector>

#include "robustnet/instance_io.hpp"
#include "robustnet/net_model.hpp"

namespace robustnet::testing {

inline std::string DataPath(const std::string& name) {
  return std::string(ROBUSTNET_DATA_DIR) + "/" + name + ".json";
}

inline Instance Fixture(const std::string& name) {
  return LoadInstance(DataPath(name));
}

inline int Node(const Topology& t, const std::string& name) {
  const int n = t.FindNode(name);
  if (n < 0) throw std::invalid_argument("no node " + name);
  return n;
}

inline int RouterIndex(const Topology& t, const std::string& id) {
  const int r = t.FindRouter(id);
  if (r < 0) throw std::invalid_argument("no router " + id);
  return r;
}

inline FailureScenario Cut(const Topology& t, const std::string& a,
                           const std::string& b) {
  const int s = t.FindSpan(Node(t, a), Node(t, b));
  if (s < 0) throw std::invalid_argument("no span " + a + "-" + b);
  return FailureScenario::SpanCut(s);
}

inline FailureScenario Down(const Topology& t, const std::string& id) {
  return FailureScenario::RouterDown(RouterIndex(t, id));
}

inline std::vector<std::string> Names(const Topology& t,
                                      const std::vector<int>& nodes) {
  std::vector<std::string> out;
  for (int n : nodes) out.push_back(t.node_name(n));
  return out;
}

// Random ring-plus-chords micro topology: 2-3 IP nodes with 1-2 routers each
// (at most 4 routers), 1-6 optical nodes, spans of 250-900 miles and demands
// out of the first IP node. Caps are 2 for small placement spaces, else 1.
struct MicroInstance {
  TopologySpec spec;
  std::vector<std::tuple<int, int, double>> demands;  // node indices
  int cap = 2;
};

inline Instance BuildMicro(const MicroInstance& m) {
  Topology t = Topology::Create(m.spec);
  std::vector<Demand> entries;
  for (auto [s, d, u] : m.demands) entries.push_back({s, d, u});
  DemandMatrix dm = DemandMatrix::Create(t, entries);
  return Instance{std::move(t), std::move(dm), CostModel{}};
}

inline MicroInstance RandomMicro(unsigned seed) {
  std::mt19937 rng(seed);
  auto pick = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  MicroInstance m;
  const int ip = pick(2, 3);
  const int optical = pick(1, 6);
  for (int i = 0; i < ip; ++i) m.spec.ip_nodes.push_back("N" + std::to_string(i));
  for (int i = 0; i < optical; ++i) {
    m.spec.optical_nodes.push_back("O" + std::to_string(i));
  }
  int routers = 0;
  for (int i = 0; i < ip; ++i) {
    const int here = (routers + (ip - i) < 4 && pick(0, 1)) ? 2 : 1;
    for (int k = 0; k < here; ++k) {
      m.spec.routers.push_back({"R" + std::to_string(routers++), m.spec.ip_nodes[i]});
    }
  }
  std::vector<std::string> all = m.spec.ip_nodes;
  all.insert(all.end(), m.spec.optical_nodes.begin(), m.spec.optical_nodes.end());
  std::shuffle(all.begin(), all.end(), rng);
  std::set<std::pair<std::string, std::string>> used;
  auto add_span = [&](const std::string& a, const std::string& b) {
    if (a == b || used.count({a, b}) || used.count({b, a})) return;
    used.insert({a, b});
    m.spec.spans.push_back({a, b, 50.0 * pick(5, 18)});
  };
  // A ring keeps every span cut survivable; two-node rings get a detour.
  for (size_t i = 1; i < all.size(); ++i) add_span(all[i - 1], all[i]);
  if (all.size() > 2) add_span(all.back(), all.front());
  const int extra = pick(0, 3);
  for (int k = 0; k < extra; ++k) {
    add_span(all[pick(0, static_cast<int>(all.size()) - 1)],
             all[pick(0, static_cast<int>(all.size()) - 1)]);
  }
  m.spec.regen_dist = 1000.0;
  const int slots = routers + ip + optical;
  m.cap = slots <= 10 ? 2 : 1;
  for (int i = 1; i < ip; ++i) {
    const double units = m.cap == 2 ? 0.1 * pick(2, 15) : 0.1 * pick(2, 10);
    m.demands.emplace_back(0, i, units);
  }
  return m;
}

}  // namespace robustnet::testing

#endif  // ROBUSTNET_TESTS_TEST_UTIL_HPP_
