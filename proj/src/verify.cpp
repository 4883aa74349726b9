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


#include "robustnet/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace robustnet::verify {
namespace {

constexpr double kBig = std::numeric_limits<double>::infinity();

// Edmonds-Karp on a small dense-ish graph.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : n_(n), head_(n, -1) {}

  void AddArc(int u, int v, double cap) {
    to_.push_back(v), cap_.push_back(cap), next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size()) - 1;
    to_.push_back(u), cap_.push_back(0.0), next_.push_back(head_[v]);
    head_[v] = static_cast<int>(to_.size()) - 1;
  }

  // Stops early once `enough` units are pushed.
  double Run(int s, int t, double enough = kBig) {
    double total = 0.0;
    std::vector<int> via(n_);
    while (total < enough) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> queue;
      queue.push(s);
      via[s] = -2;
      while (!queue.empty() && via[t] == -1) {
        const int u = queue.front();
        queue.pop();
        for (int e = head_[u]; e >= 0; e = next_[e]) {
          if (cap_[e] > 1e-12 && via[to_[e]] == -1) {
            via[to_[e]] = e;
            queue.push(to_[e]);
          }
        }
      }
      if (via[t] == -1) break;
      double push = enough - total;
      for (int v = t; v != s; v = to_[via[v] ^ 1]) push = std::min(push, cap_[via[v]]);
      for (int v = t; v != s; v = to_[via[v] ^ 1]) {
        cap_[via[v]] -= push;
        cap_[via[v] ^ 1] += push;
      }
      total += push;
    }
    return total;
  }

 private:
  int n_;
  std::vector<int> head_, to_, next_;
  std::vector<double> cap_;
};

// Floyd-Warshall over the spans surviving `f`.
std::vector<std::vector<double>> AllPairs(const Topology& topology,
                                          const FailureScenario& f) {
  const int n = topology.num_nodes();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kBig));
  for (int u = 0; u < n; ++u) d[u][u] = 0.0;
  for (int s = 0; s < topology.num_spans(); ++s) {
    if (f.kind == FailureScenario::Kind::kSpanCut && f.index == s) continue;
    const Span& span = topology.span(s);
    d[span.u][span.v] = std::min(d[span.u][span.v], span.miles);
    d[span.v][span.u] = std::min(d[span.v][span.u], span.miles);
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

bool Alive(const FailureScenario& f, int router) {
  return !(f.kind == FailureScenario::Kind::kRouterDown && f.index == router);
}

struct Shape {
  bool single_source = false;
  // Demands run only between two nodes, in either direction.
  bool single_pair = false;
  int node = -1;  // the common source or sink; one end of the pair
};

class Oracle {
 public:
  Oracle(const Topology& topology, const DemandMatrix& demands,
         const std::vector<FailureScenario>& scenarios, Shape shape)
      : t_(topology), demands_(demands), scenarios_(scenarios), shape_(shape) {
    limit_ = topology.regen_dist() * (1.0 + 1e-9);
    for (const FailureScenario& f : scenarios) dist_.push_back(AllPairs(topology, f));
  }

  bool Operable(const Design& d, int scenario) {
    tails_ = &d.tails;
    regens_ = &d.regens_reported;
    ports_ = &d.ports;
    fi_ = scenario;
    const FailureScenario& f = scenarios_[fi_];
    served_.clear();
    for (const Demand& dem : demands_.entries()) {
      if (dem.units <= 0.0 || !NodeAlive(f, dem.src) || !NodeAlive(f, dem.dst)) {
        continue;
      }
      served_.push_back(dem);
    }
    if (served_.empty()) return true;
    links_.clear();
    for (int a = 0; a < t_.num_routers(); ++a) {
      for (int b = a + 1; b < t_.num_routers(); ++b) {
        if (!Alive(f, a) || !Alive(f, b)) continue;
        const bool co = t_.router(a).home == t_.router(b).home;
        const std::vector<int>& budget = co ? *ports_ : *tails_;
        const int bound = std::min(budget[a], budget[b]);
        if (bound > 0) links_.push_back({a, b, co, bound});
      }
    }
    x_.assign(links_.size(), 0);
    left_tails_ = *tails_;
    left_ports_ = *ports_;
    return Enumerate(0);
  }

 private:
  struct Candidate {
    int a, b;
    bool colocated;
    int bound;
  };

  bool NodeAlive(const FailureScenario& f, int node) const {
    for (int r : t_.routers_at(node)) {
      if (Alive(f, r)) return true;
    }
    return false;
  }

  bool Enumerate(size_t i) {
    if (i == links_.size()) return Routable() && Packable();
    const Candidate& c = links_[i];
    std::vector<int>& left = c.colocated ? left_ports_ : left_tails_;
    const int top = std::min({c.bound, left[c.a], left[c.b]});
    for (int v = 0; v <= top; ++v) {
      x_[i] = v;
      left[c.a] -= v;
      left[c.b] -= v;
      const bool ok = Enumerate(i + 1);
      left[c.a] += v;
      left[c.b] += v;
      if (ok) return true;
    }
    x_[i] = 0;
    return false;
  }

  bool Routable() const {
    if (!shape_.single_pair) {
      return Routable(shape_.single_source, shape_.node, served_);
    }
    // Opposite directions of one node pair never compete: reversing an
    // acyclic flow of one direction gives a flow of the other direction on
    // the opposite arcs, and every link has equal capacity both ways.
    std::vector<Demand> forward, backward;
    for (const Demand& d : served_) {
      (d.src == shape_.node ? forward : backward).push_back(d);
    }
    return (forward.empty() || Routable(true, shape_.node, forward)) &&
           (backward.empty() || Routable(true, backward.front().src, backward));
  }

  // Single-commodity reduction of demands sharing a source (or a sink) on
  // the configured links.
  bool Routable(bool single_source, int shared,
                const std::vector<Demand>& demands) const {
    const FailureScenario& f = scenarios_[fi_];
    const int routers = t_.num_routers();
    const int src = routers, sink = routers + 1, agg = routers + 2;
    MaxFlow flow(routers + 2 + t_.num_nodes());
    for (size_t i = 0; i < links_.size(); ++i) {
      if (x_[i] == 0) continue;
      flow.AddArc(links_[i].a, links_[i].b, x_[i]);
      flow.AddArc(links_[i].b, links_[i].a, x_[i]);
    }
    std::map<int, double> far_end;
    double required = 0.0;
    for (const Demand& dem : demands) {
      far_end[single_source ? dem.dst : dem.src] += dem.units;
      required += dem.units;
    }
    for (int r : t_.routers_at(shared)) {
      if (!Alive(f, r)) continue;
      if (single_source) {
        flow.AddArc(src, r, kBig);
      } else {
        flow.AddArc(r, sink, kBig);
      }
    }
    for (auto [node, units] : far_end) {
      for (int r : t_.routers_at(node)) {
        if (!Alive(f, r)) continue;
        if (single_source) {
          flow.AddArc(r, agg + node, kBig);
        } else {
          flow.AddArc(agg + node, r, kBig);
        }
      }
      if (single_source) {
        flow.AddArc(agg + node, sink, units);
      } else {
        flow.AddArc(src, agg + node, units);
      }
    }
    return flow.Run(src, sink, required) >= required - 1e-9;
  }

  bool Hop(int u, int v) const { return u != v && dist_[fi_][u][v] <= limit_; }

  // Every configured wavelength gets a walk between its endpoint nodes whose
  // hops are within regen_dist; interior nodes consume one regen each.
  bool Packable() {
    std::map<std::pair<int, int>, int> units;
    for (size_t i = 0; i < links_.size(); ++i) {
      if (links_[i].colocated || x_[i] == 0) continue;
      int ha = t_.router(links_[i].a).home, hb = t_.router(links_[i].b).home;
      units[{std::min(ha, hb), std::max(ha, hb)}] += x_[i];
    }
    if (units.empty()) return true;
    if (units.size() == 1) {
      auto [pair, k] = *units.begin();
      return NodeSplitFlow(pair.first, pair.second, k) >= k;
    }
    std::vector<std::pair<std::vector<std::vector<int>>, int>> demand;
    for (auto [pair, k] : units) {
      std::vector<std::vector<int>> paths;
      std::vector<int> walk = {pair.first};
      SimplePaths(pair.second, walk, paths);
      if (paths.empty()) return false;
      demand.emplace_back(std::move(paths), k);
    }
    std::vector<int> left = *regens_;
    return Assign(demand, 0, 0, 0, left);
  }

  double NodeSplitFlow(int from, int to, int k) const {
    const int n = t_.num_nodes();
    MaxFlow flow(2 * n);  // node w: in = w, out = n + w
    for (int w = 0; w < n; ++w) {
      if (w == from || w == to) continue;
      flow.AddArc(w, n + w, (*regens_)[w]);
    }
    for (int u = 0; u < n; ++u) {
      if (u == to) continue;
      for (int v = 0; v < n; ++v) {
        if (v == from || !Hop(u, v)) continue;
        flow.AddArc(u == from ? n + from : n + u, v, kBig);
      }
    }
    return flow.Run(n + from, to, k);
  }

  void SimplePaths(int to, std::vector<int>& walk,
                   std::vector<std::vector<int>>& out) const {
    const int u = walk.back();
    if (Hop(u, to)) {
      walk.push_back(to);
      out.push_back(walk);
      walk.pop_back();
    }
    for (int v = 0; v < t_.num_nodes(); ++v) {
      if (v == to || (*regens_)[v] <= 0 || !Hop(u, v)) continue;
      if (std::find(walk.begin(), walk.end(), v) != walk.end()) continue;
      walk.push_back(v);
      SimplePaths(to, walk, out);
      walk.pop_back();
    }
  }

  bool Assign(const std::vector<std::pair<std::vector<std::vector<int>>, int>>& demand,
              size_t pair, int done, size_t first_path, std::vector<int>& left) {
    if (pair == demand.size()) return true;
    if (done == demand[pair].second) return Assign(demand, pair + 1, 0, 0, left);
    const auto& paths = demand[pair].first;
    for (size_t p = first_path; p < paths.size(); ++p) {
      const std::vector<int>& path = paths[p];
      bool fits = true;
      for (size_t i = 1; i + 1 < path.size(); ++i) fits &= left[path[i]] > 0;
      if (!fits) continue;
      for (size_t i = 1; i + 1 < path.size(); ++i) --left[path[i]];
      const bool ok = Assign(demand, pair, done + 1, p, left);
      for (size_t i = 1; i + 1 < path.size(); ++i) ++left[path[i]];
      if (ok) return true;
    }
    return false;
  }

  const Topology& t_;
  const DemandMatrix& demands_;
  const std::vector<FailureScenario>& scenarios_;
  Shape shape_;
  double limit_ = 0.0;
  std::vector<std::vector<std::vector<double>>> dist_;

  const std::vector<int>* tails_ = nullptr;
  const std::vector<int>* regens_ = nullptr;
  const std::vector<int>* ports_ = nullptr;
  int fi_ = 0;
  std::vector<Demand> served_;
  std::vector<Candidate> links_;
  std::vector<int> x_;
  std::vector<int> left_tails_, left_ports_;
};

std::string Name(const Topology& t, int router) { return t.router(router).id; }

}  // namespace

OracleResult OracleDesignSearch(const Topology& topology,
                                const DemandMatrix& demands,
                                const CostModel& costs,
                                const std::vector<FailureScenario>& scenarios,
                                int cap, int64_t max_space) {
  if (cap < 0) throw OracleRefused("cap must be nonnegative");
  if (scenarios.empty()) throw OracleRefused("scenario list is empty");
  OracleResult out;
  out.witness = EmptyDesign(topology);

  std::set<int> sources, sinks;
  for (const Demand& d : demands.entries()) {
    if (d.units <= 0.0) continue;
    sources.insert(d.src);
    sinks.insert(d.dst);
  }
  if (sources.empty()) {
    out.feasible = true;
    return out;
  }
  std::set<int> ends = sources;
  ends.insert(sinks.begin(), sinks.end());
  Shape shape;
  if (sources.size() == 1) {
    shape = {true, false, *sources.begin()};
  } else if (sinks.size() == 1) {
    shape = {false, false, *sinks.begin()};
  } else if (ends.size() == 2) {
    shape = {true, true, *ends.begin()};
  } else {
    throw OracleRefused(
        "oracle needs a single common source node, a single common "
        "destination node, or demands between one node pair");
  }

  // Free equipment is always placed at the cap.
  struct Slot {
    std::vector<int>* target;
    int index;
    double cost;
  };
  Design probe = EmptyDesign(topology);
  std::vector<Slot> slots;
  auto add = [&](std::vector<int>& v, int i, double c) {
    if (c == 0.0) {
      v[i] = cap;
    } else {
      slots.push_back({&v, i, c});
    }
  };
  for (int r = 0; r < topology.num_routers(); ++r) add(probe.tails, r, costs.tail);
  for (int n = 0; n < topology.num_nodes(); ++n) {
    add(probe.regens_reported, n, costs.regen);
  }
  for (int r = 0; r < topology.num_routers(); ++r) {
    if (topology.routers_at(topology.router(r).home).size() >= 2) {
      add(probe.ports, r, costs.port);
    }
  }
  double space = std::pow(cap + 1.0, static_cast<double>(slots.size()));
  if (space > static_cast<double>(max_space)) {
    std::ostringstream msg;
    msg << "search space of " << space << " placements exceeds " << max_space;
    throw OracleRefused(msg.str());
  }
  out.search_space = static_cast<int64_t>(space);

  struct Entry {
    float cost;
    uint32_t code;
  };
  std::vector<Entry> order(out.search_space);
  for (int64_t code = 0; code < out.search_space; ++code) {
    double c = 0.0;
    int64_t rest = code;
    for (const Slot& s : slots) {
      c += s.cost * static_cast<double>(rest % (cap + 1));
      rest /= cap + 1;
    }
    order[code] = {static_cast<float>(c), static_cast<uint32_t>(code)};
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const Entry& a, const Entry& b) { return a.cost < b.cost; });

  Oracle oracle(topology, demands, scenarios, shape);
  std::vector<int> check_order(scenarios.size());
  std::iota(check_order.begin(), check_order.end(), 0);
  double best = kBig;
  for (const Entry& e : order) {
    if (out.feasible && e.cost > best * (1.0 + 1e-6) + 1e-6) break;
    int64_t rest = e.code;
    double exact = 0.0;
    for (const Slot& s : slots) {
      const int v = static_cast<int>(rest % (cap + 1));
      (*s.target)[s.index] = v;
      exact += s.cost * v;
      rest /= cap + 1;
    }
    if (out.feasible && exact >= best) continue;
    ++out.candidates_checked;
    bool ok = true;
    for (size_t i = 0; i < check_order.size() && ok; ++i) {
      if (!oracle.Operable(probe, check_order[i])) {
        ok = false;
        // Failing scenarios tend to fail again; check them first next time.
        std::rotate(check_order.begin(), check_order.begin() + i,
                    check_order.begin() + i + 1);
      }
    }
    if (!ok) continue;
    out.feasible = true;
    best = exact;
    out.witness.tails = probe.tails;
    out.witness.regens_reported = probe.regens_reported;
    out.witness.ports = probe.ports;
  }
  if (out.feasible) {
    out.cost = best;
    out.witness.regens_raw = out.witness.regens_reported;
    out.witness.total_cost_reported = best;
    out.witness.total_cost_raw = best;
  }
  return out;
}

bool CheckRegenFeasiblePath(const Topology& topology,
                            const FailureScenario& scenario,
                            const std::vector<int>& node_path,
                            const std::vector<int>& regen_nodes) {
  const double limit = topology.regen_dist() * (1.0 + 1e-9);
  double stretch = 0.0;
  size_t next = 0;
  for (size_t i = 1; i < node_path.size(); ++i) {
    const int s = topology.FindSpan(node_path[i - 1], node_path[i]);
    if (s < 0 || (scenario.kind == FailureScenario::Kind::kSpanCut &&
                  scenario.index == s)) {
      throw TopologyError("walk is disconnected at '" +
                          topology.node_name(node_path[i - 1]) + "'");
    }
    stretch += topology.span(s).miles;
    if (stretch > limit) return false;
    if (next < regen_nodes.size() && node_path[i] == regen_nodes[next] &&
        i + 1 < node_path.size()) {
      stretch = 0.0;
      ++next;
    }
  }
  return next == regen_nodes.size();
}

std::vector<std::string> CheckFlowConservation(const Topology& topology,
                                               const DemandMatrix& demands,
                                               const OperationPlan& plan,
                                               double tolerance) {
  std::vector<std::string> out;
  const FailureScenario& f = plan.scenario;
  auto node_alive = [&](int node) {
    for (int r : topology.routers_at(node)) {
      if (Alive(f, r)) return true;
    }
    return false;
  };
  std::vector<std::vector<double>> net(
      demands.size(), std::vector<double>(topology.num_routers(), 0.0));
  for (const PlanFlow& flow : plan.flows) {
    if (flow.demand < 0 || flow.demand >= demands.size()) {
      out.push_back("flow references unknown demand " + std::to_string(flow.demand));
      continue;
    }
    if (flow.units < -tolerance) {
      out.push_back("negative flow on " + Name(topology, flow.from) + "->" +
                    Name(topology, flow.to));
    }
    net[flow.demand][flow.from] += flow.units;
    net[flow.demand][flow.to] -= flow.units;
  }
  for (int d = 0; d < demands.size(); ++d) {
    const Demand& dem = demands[d];
    const std::string label =
        topology.node_name(dem.src) + "->" + topology.node_name(dem.dst);
    const bool served =
        dem.units > 0.0 && node_alive(dem.src) && node_alive(dem.dst);
    const double want = served ? dem.units : 0.0;
    double sent = 0.0, received = 0.0;
    for (int r = 0; r < topology.num_routers(); ++r) {
      const int home = topology.router(r).home;
      const double v = net[d][r];
      if (home == dem.src) {
        sent += v;
        if (v < -tolerance) {
          out.push_back("demand " + label + " enters source router " +
                        Name(topology, r));
        }
      } else if (home == dem.dst) {
        received -= v;
        if (v > tolerance) {
          out.push_back("demand " + label + " leaves destination router " +
                        Name(topology, r));
        }
      } else if (std::abs(v) > tolerance) {
        std::ostringstream msg;
        msg << "demand " << label << " unbalanced at " << Name(topology, r)
            << " by " << v;
        out.push_back(msg.str());
      }
    }
    if (std::abs(sent - want) > tolerance) {
      std::ostringstream msg;
      msg << "demand " << label << " sends " << sent << " of " << want;
      out.push_back(msg.str());
    }
    if (std::abs(received - want) > tolerance) {
      std::ostringstream msg;
      msg << "demand " << label << " receives " << received << " of " << want;
      out.push_back(msg.str());
    }
  }
  return out;
}

std::vector<std::string> CheckLinkCapacity(const Topology& topology,
                                           const OperationPlan& plan,
                                           double tolerance) {
  std::vector<std::string> out;
  std::map<std::pair<int, int>, double> load;
  for (const PlanFlow& flow : plan.flows) load[{flow.from, flow.to}] += flow.units;
  for (auto [arc, units] : load) {
    const PlanLink* link = plan.FindLink(arc.first, arc.second);
    const double cap = link ? link->capacity : 0.0;
    if (units > cap + tolerance) {
      std::ostringstream msg;
      msg << "link " << Name(topology, arc.first) << "->"
          << Name(topology, arc.second) << " carries " << units
          << " over capacity " << cap;
      out.push_back(msg.str());
    }
  }
  return out;
}

std::vector<std::string> CheckEquipmentUsage(const Topology& topology,
                                             const Design& design,
                                             const OperationPlan& plan) {
  std::vector<std::string> out;
  const FailureScenario& f = plan.scenario;
  std::vector<int> tails(topology.num_routers(), 0);
  std::vector<int> ports(topology.num_routers(), 0);
  std::vector<int> regens(topology.num_nodes(), 0);
  std::set<std::pair<int, int>> seen;
  for (const PlanLink& link : plan.links) {
    const std::string label = Name(topology, link.a) + "-" + Name(topology, link.b);
    if (link.a >= link.b) out.push_back("link " + label + " is not ordered");
    if (!seen.emplace(link.a, link.b).second) out.push_back("duplicate link " + label);
    if (!Alive(f, link.a) || !Alive(f, link.b)) {
      out.push_back("link " + label + " uses a failed router");
    }
    if (link.capacity < 0) out.push_back("link " + label + " has negative capacity");
    const bool colocated = topology.router(link.a).home == topology.router(link.b).home;
    if (colocated) {
      ports[link.a] += link.capacity;
      ports[link.b] += link.capacity;
      continue;
    }
    tails[link.a] += link.capacity;
    tails[link.b] += link.capacity;
    int units = 0;
    for (const RegenChain& chain : link.chains) {
      units += chain.units;
      for (int n : chain.regens) regens[n] += chain.units;
    }
    if (units < link.capacity) {
      out.push_back("link " + label + " has fewer chained units than capacity");
    }
  }
  for (int r = 0; r < topology.num_routers(); ++r) {
    if (tails[r] > design.tails[r]) {
      out.push_back("router " + Name(topology, r) + " uses " +
                    std::to_string(tails[r]) + " tails of " +
                    std::to_string(design.tails[r]));
    }
    if (ports[r] > design.ports[r]) {
      out.push_back("router " + Name(topology, r) + " uses " +
                    std::to_string(ports[r]) + " ports of " +
                    std::to_string(design.ports[r]));
    }
  }
  for (int n = 0; n < topology.num_nodes(); ++n) {
    if (regens[n] > design.regens_reported[n]) {
      out.push_back("node " + topology.node_name(n) + " uses " +
                    std::to_string(regens[n]) + " regens of " +
                    std::to_string(design.regens_reported[n]));
    }
  }
  return out;
}

std::vector<std::string> CheckChains(const Topology& topology,
                                     const OperationPlan& plan) {
  std::vector<std::string> out;
  const auto dist = AllPairs(topology, plan.scenario);
  const double limit = topology.regen_dist() * (1.0 + 1e-9);
  for (const PlanLink& link : plan.links) {
    const std::string label = Name(topology, link.a) + "-" + Name(topology, link.b);
    const int ha = topology.router(link.a).home, hb = topology.router(link.b).home;
    for (const RegenChain& chain : link.chains) {
      if (chain.path.empty() || chain.path.front() != ha || chain.path.back() != hb) {
        out.push_back("chain of " + label + " does not join its endpoints");
        continue;
      }
      try {
        if (!CheckRegenFeasiblePath(topology, plan.scenario, chain.path,
                                    chain.regens)) {
          out.push_back("chain of " + label + " has a stretch over regen_dist");
          continue;
        }
      } catch (const TopologyError& e) {
        out.push_back("chain of " + label + ": " + e.what());
        continue;
      }
      // Legs between consecutive stops must be shortest paths.
      size_t next = 0;
      int stop = ha;
      double leg = 0.0;
      for (size_t i = 1; i < chain.path.size(); ++i) {
        leg += topology.span(topology.FindSpan(chain.path[i - 1], chain.path[i])).miles;
        const bool at_regen = next < chain.regens.size() &&
                              chain.path[i] == chain.regens[next] &&
                              i + 1 < chain.path.size();
        if (at_regen || i + 1 == chain.path.size()) {
          const int here = chain.path[i];
          if (leg > limit) {
            out.push_back("leg of " + label + " exceeds regen_dist");
          }
          if (leg > dist[stop][here] * (1.0 + 1e-9) + 1e-9) {
            out.push_back("leg of " + label + " from " + topology.node_name(stop) +
                          " is not a shortest path");
          }
          stop = here;
          leg = 0.0;
          if (at_regen) ++next;
        }
      }
    }
  }
  return out;
}

std::vector<std::string> CheckPlan(const Topology& topology,
                                   const DemandMatrix& demands,
                                   const Design& design,
                                   const OperationPlan& plan) {
  std::vector<std::string> out = CheckFlowConservation(topology, demands, plan);
  auto usage = CheckEquipmentUsage(topology, design, plan);
  out.insert(out.end(), usage.begin(), usage.end());
  auto cap = CheckLinkCapacity(topology, plan);
  out.insert(out.end(), cap.begin(), cap.end());
  auto chains = CheckChains(topology, plan);
  out.insert(out.end(), chains.begin(), chains.end());
  return out;
}

}  // namespace robustnet::verify
