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


#include "robustnet/net_model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <set>
#include <tuple>

namespace robustnet {
namespace {

void Fail(const std::string& message) { throw TopologyError(message); }

}  // namespace

Topology Topology::Create(const TopologySpec& spec) {
  Topology t;
  if (!(spec.regen_dist > 0.0) || !std::isfinite(spec.regen_dist)) {
    Fail("regen_dist must be a positive finite number");
  }
  t.regen_dist_ = spec.regen_dist;
  auto add_node = [&t](const std::string& name) {
    if (name.empty()) Fail("node ids must be nonempty");
    if (!t.node_index_.emplace(name, t.num_nodes()).second) {
      Fail("duplicate node id '" + name + "'");
    }
    t.node_names_.push_back(name);
  };
  for (const std::string& n : spec.ip_nodes) add_node(n);
  t.num_ip_nodes_ = t.num_nodes();
  for (const std::string& n : spec.optical_nodes) add_node(n);
  if (t.num_ip_nodes_ == 0) Fail("at least one IP node is required");

  t.routers_at_.assign(t.num_nodes(), {});
  for (const auto& r : spec.routers) {
    if (r.id.empty()) Fail("router ids must be nonempty");
    const int home = t.FindNode(r.home);
    if (home < 0) Fail("router '" + r.id + "' has unknown home '" + r.home + "'");
    if (!t.is_ip_node(home)) {
      Fail("router '" + r.id + "' is homed at optical node '" + r.home + "'");
    }
    const int index = t.num_routers();
    if (!t.router_index_.emplace(r.id, index).second) {
      Fail("duplicate router id '" + r.id + "'");
    }
    t.routers_.push_back({r.id, home});
    t.routers_at_[home].push_back(index);
  }
  for (int n = 0; n < t.num_ip_nodes_; ++n) {
    if (t.routers_at_[n].empty()) {
      Fail("IP node '" + t.node_names_[n] + "' houses no router");
    }
  }

  t.incident_.assign(t.num_nodes(), {});
  std::set<std::pair<int, int>> seen;
  for (const auto& s : spec.spans) {
    const int u = t.FindNode(s.u), v = t.FindNode(s.v);
    if (u < 0) Fail("span endpoint '" + s.u + "' is not a declared node");
    if (v < 0) Fail("span endpoint '" + s.v + "' is not a declared node");
    if (u == v) Fail("span " + s.u + "-" + s.v + " is a self loop");
    if (!(s.miles > 0.0) || !std::isfinite(s.miles)) {
      Fail("span " + s.u + "-" + s.v + " must have a positive length");
    }
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      Fail("duplicate span " + s.u + "-" + s.v);
    }
    const int index = t.num_spans();
    t.spans_.push_back({u, v, s.miles});
    t.incident_[u].emplace_back(v, index);
    t.incident_[v].emplace_back(u, index);
  }

  std::vector<bool> reached(t.num_nodes(), false);
  std::vector<int> stack = {0};
  reached[0] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (auto [v, s] : t.incident_[u]) {
      if (!reached[v]) {
        reached[v] = true;
        stack.push_back(v);
      }
    }
  }
  for (int n = 0; n < t.num_nodes(); ++n) {
    if (!reached[n]) {
      Fail("span graph is disconnected: '" + t.node_names_[n] +
           "' is unreachable from '" + t.node_names_[0] + "'");
    }
  }
  return t;
}

int Topology::FindNode(std::string_view name) const {
  auto it = node_index_.find(std::string(name));
  return it == node_index_.end() ? -1 : it->second;
}

int Topology::FindRouter(std::string_view id) const {
  auto it = router_index_.find(std::string(id));
  return it == router_index_.end() ? -1 : it->second;
}

int Topology::FindSpan(int u, int v) const {
  for (auto [w, s] : incident_.at(u)) {
    if (w == v) return s;
  }
  return -1;
}

std::string Topology::SpanName(int s) const {
  const Span& span = spans_.at(s);
  return node_names_[span.u] + "-" + node_names_[span.v];
}

int Topology::FindSpanByName(std::string_view name) const {
  for (size_t cut = name.find('-'); cut != std::string_view::npos;
       cut = name.find('-', cut + 1)) {
    const int u = FindNode(name.substr(0, cut));
    const int v = FindNode(name.substr(cut + 1));
    if (u >= 0 && v >= 0) {
      const int s = FindSpan(u, v);
      if (s >= 0) return s;
    }
  }
  return -1;
}

Topology Topology::WithRegenDist(double regen_dist) const {
  if (!(regen_dist > 0.0) || !std::isfinite(regen_dist)) {
    Fail("regen_dist must be a positive finite number");
  }
  Topology t = *this;
  t.regen_dist_ = regen_dist;
  return t;
}

DemandMatrix DemandMatrix::Create(const Topology& topology,
                                  std::vector<Demand> entries) {
  std::set<std::pair<int, int>> seen;
  for (const Demand& d : entries) {
    if (d.src < 0 || d.src >= topology.num_nodes() || d.dst < 0 ||
        d.dst >= topology.num_nodes()) {
      Fail("demand endpoint out of range");
    }
    const std::string label =
        topology.node_name(d.src) + "->" + topology.node_name(d.dst);
    if (d.src == d.dst) Fail("self demand at '" + topology.node_name(d.src) + "'");
    if (!topology.is_ip_node(d.src) || !topology.is_ip_node(d.dst)) {
      Fail("demand " + label + " has an endpoint that is not an IP node");
    }
    if (!(d.units >= 0.0) || !std::isfinite(d.units)) {
      Fail("demand " + label + " must be a nonnegative finite number");
    }
    if (!seen.emplace(d.src, d.dst).second) Fail("duplicate demand " + label);
  }
  std::sort(entries.begin(), entries.end(), [](const Demand& a, const Demand& b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });
  DemandMatrix m;
  m.entries_ = std::move(entries);
  return m;
}

double DemandMatrix::total() const {
  double sum = 0.0;
  for (const Demand& d : entries_) sum += d.units;
  return sum;
}

void ValidateCosts(const CostModel& costs) {
  for (double c : {costs.tail, costs.regen, costs.port}) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      Fail("costs must be nonnegative finite numbers");
    }
  }
}

std::string_view KindName(FailureScenario::Kind kind) {
  switch (kind) {
    case FailureScenario::Kind::kNoFailure:
      return "NoFailure";
    case FailureScenario::Kind::kSpanCut:
      return "SpanCut";
    case FailureScenario::Kind::kRouterDown:
      return "RouterDown";
  }
  return "?";
}

std::string ScenarioId(const Topology& topology, const FailureScenario& f) {
  switch (f.kind) {
    case FailureScenario::Kind::kNoFailure:
      return "";
    case FailureScenario::Kind::kSpanCut:
      return topology.SpanName(f.index);
    case FailureScenario::Kind::kRouterDown:
      return topology.router(f.index).id;
  }
  return "";
}

std::string ScenarioName(const Topology& topology, const FailureScenario& f) {
  if (f.kind == FailureScenario::Kind::kNoFailure) return "NoFailure";
  return std::string(KindName(f.kind)) + "(" + ScenarioId(topology, f) + ")";
}

FailureScenario ParseScenario(const Topology& topology, std::string_view kind,
                              std::string_view id) {
  if (kind == "NoFailure") return FailureScenario::NoFailure();
  if (kind == "SpanCut") {
    const int s = topology.FindSpanByName(id);
    if (s < 0) Fail("unknown span '" + std::string(id) + "'");
    return FailureScenario::SpanCut(s);
  }
  if (kind == "RouterDown") {
    const int r = topology.FindRouter(id);
    if (r < 0) Fail("unknown router '" + std::string(id) + "'");
    return FailureScenario::RouterDown(r);
  }
  Fail("unknown scenario kind '" + std::string(kind) + "'");
  return {};
}

void CheckScenario(const Topology& topology, const FailureScenario& f) {
  switch (f.kind) {
    case FailureScenario::Kind::kNoFailure:
      return;
    case FailureScenario::Kind::kSpanCut:
      if (f.index < 0 || f.index >= topology.num_spans()) {
        Fail("scenario references unknown span " + std::to_string(f.index));
      }
      return;
    case FailureScenario::Kind::kRouterDown:
      if (f.index < 0 || f.index >= topology.num_routers()) {
        Fail("scenario references unknown router " + std::to_string(f.index));
      }
      return;
  }
}

bool SpanAlive(const FailureScenario& f, int span) {
  return !(f.kind == FailureScenario::Kind::kSpanCut && f.index == span);
}

bool RouterAlive(const FailureScenario& f, int router) {
  return !(f.kind == FailureScenario::Kind::kRouterDown && f.index == router);
}

std::vector<int> AliveRoutersAt(const Topology& topology,
                                const FailureScenario& f, int node) {
  std::vector<int> out;
  for (int r : topology.routers_at(node)) {
    if (RouterAlive(f, r)) out.push_back(r);
  }
  return out;
}

std::vector<FailureScenario> EnumerateFailures(const Topology& topology) {
  std::vector<FailureScenario> out;
  out.reserve(1 + topology.num_spans() + topology.num_routers());
  out.push_back(FailureScenario::NoFailure());
  for (int s = 0; s < topology.num_spans(); ++s) {
    out.push_back(FailureScenario::SpanCut(s));
  }
  for (int r = 0; r < topology.num_routers(); ++r) {
    out.push_back(FailureScenario::RouterDown(r));
  }
  return out;
}

DistanceTable ShortestDistances(const Topology& topology,
                                const FailureScenario& f) {
  CheckScenario(topology, f);
  const int n = topology.num_nodes();
  DistanceTable table(n);
  using Entry = std::pair<double, int>;
  for (int src = 0; src < n; ++src) {
    std::vector<double> dist(n, kUnreachable);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[src] = 0.0;
    heap.emplace(0.0, src);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > dist[u]) continue;
      for (auto [v, s] : topology.incident(u)) {
        if (!SpanAlive(f, s)) continue;
        const double nd = d + topology.span(s).miles;
        if (nd < dist[v]) {
          dist[v] = nd;
          heap.emplace(nd, v);
        }
      }
    }
    for (int v = 0; v < n; ++v) table.at(src, v) = dist[v];
  }
  // Dijkstra sums in different orders from each end; make the table
  // exactly symmetric.
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double d = std::min(table(u, v), table(v, u));
      table.at(u, v) = d;
      table.at(v, u) = d;
    }
  }
  return table;
}

double MileTolerance(const Topology& topology) {
  return 1e-9 * std::max(1.0, topology.regen_dist());
}

std::vector<std::pair<int, int>> RegenAdjacency(const Topology& topology,
                                                const DistanceTable& dist) {
  const double limit = topology.regen_dist() + MileTolerance(topology);
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < dist.size(); ++u) {
    for (int v = 0; v < dist.size(); ++v) {
      if (u != v && dist(u, v) <= limit) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> RegenAdjacency(const Topology& topology,
                                                const FailureScenario& f) {
  return RegenAdjacency(topology, ShortestDistances(topology, f));
}

std::vector<int> ShortestPath(const Topology& topology, const FailureScenario& f,
                              const DistanceTable& dist, int from, int to) {
  if (!dist.reachable(from, to)) return {};
  const double tol = MileTolerance(topology);
  std::vector<int> walk = {from};
  int cur = from;
  while (cur != to) {
    int next = -1;
    for (auto [v, s] : topology.incident(cur)) {
      if (!SpanAlive(f, s) || !dist.reachable(v, to)) continue;
      const double via = topology.span(s).miles + dist(v, to);
      if (std::abs(via - dist(cur, to)) > tol) continue;
      if (next < 0 || topology.node_name(v) < topology.node_name(next)) next = v;
    }
    if (next < 0) return {};
    walk.push_back(next);
    cur = next;
  }
  return walk;
}

double WalkLength(const Topology& topology, const FailureScenario& f,
                  const std::vector<int>& walk) {
  double length = 0.0;
  for (size_t i = 1; i < walk.size(); ++i) {
    const int s = topology.FindSpan(walk[i - 1], walk[i]);
    if (s < 0 || !SpanAlive(f, s)) {
      Fail("walk is disconnected between '" + topology.node_name(walk[i - 1]) +
           "' and '" + topology.node_name(walk[i]) + "'");
    }
    length += topology.span(s).miles;
  }
  return length;
}

}  // namespace robustnet
