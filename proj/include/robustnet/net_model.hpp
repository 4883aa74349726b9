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


#ifndef ROBUSTNET_NET_MODEL_HPP_
#define ROBUSTNET_NET_MODEL_HPP_

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace robustnet {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

class TopologyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Router {
  std::string id;
  int home = -1;  // node index
};

struct Span {
  int u = -1;
  int v = -1;
  double miles = 0.0;
};

// Plain description used to build a Topology; ids are resolved by Create().
struct TopologySpec {
  struct SpanSpec {
    std::string u, v;
    double miles = 0.0;
  };
  struct RouterSpec {
    std::string id, home;
  };
  std::vector<std::string> ip_nodes;
  std::vector<std::string> optical_nodes;
  std::vector<RouterSpec> routers;
  std::vector<SpanSpec> spans;
  double regen_dist = 1000.0;
};

// The optical layer: IP nodes (which house routers), optical-only nodes and
// mileage-weighted spans. Immutable once created.
//
// Nodes are indexed with IP nodes first, in declaration order, then optical
// nodes. Routers and spans keep their declaration order.
class Topology {
 public:
  static Topology Create(const TopologySpec& spec);

  int num_nodes() const { return static_cast<int>(node_names_.size()); }
  int num_ip_nodes() const { return num_ip_nodes_; }
  int num_routers() const { return static_cast<int>(routers_.size()); }
  int num_spans() const { return static_cast<int>(spans_.size()); }
  double regen_dist() const { return regen_dist_; }

  bool is_ip_node(int node) const { return node < num_ip_nodes_; }
  const std::string& node_name(int node) const { return node_names_.at(node); }
  const Router& router(int r) const { return routers_.at(r); }
  const std::vector<Router>& routers() const { return routers_; }
  const Span& span(int s) const { return spans_.at(s); }
  const std::vector<Span>& spans() const { return spans_; }
  // Routers housed at `node`, ascending.
  const std::vector<int>& routers_at(int node) const {
    return routers_at_.at(node);
  }
  // (neighbor, span index) pairs, in span declaration order.
  const std::vector<std::pair<int, int>>& incident(int node) const {
    return incident_.at(node);
  }

  // -1 when absent.
  int FindNode(std::string_view name) const;
  int FindRouter(std::string_view id) const;
  int FindSpan(int u, int v) const;
  // "U-V" with the endpoints as declared.
  std::string SpanName(int s) const;
  int FindSpanByName(std::string_view name) const;

  // A copy with a different regeneration distance.
  Topology WithRegenDist(double regen_dist) const;

 private:
  Topology() = default;

  int num_ip_nodes_ = 0;
  std::vector<std::string> node_names_;
  std::vector<Router> routers_;
  std::vector<Span> spans_;
  std::vector<std::vector<int>> routers_at_;
  std::vector<std::vector<std::pair<int, int>>> incident_;
  std::unordered_map<std::string, int> node_index_;
  std::unordered_map<std::string, int> router_index_;
  double regen_dist_ = 1000.0;
};

struct Demand {
  int src = -1;
  int dst = -1;
  double units = 0.0;  // 100 Gbps units
};

// Demands between IP nodes, sorted by (src, dst).
class DemandMatrix {
 public:
  DemandMatrix() = default;
  // Throws TopologyError on self-demands, non-IP endpoints, negative or
  // non-finite units, or duplicate pairs.
  static DemandMatrix Create(const Topology& topology,
                             std::vector<Demand> entries);

  const std::vector<Demand>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const Demand& operator[](int i) const { return entries_.at(i); }
  double total() const;

 private:
  std::vector<Demand> entries_;
};

struct CostModel {
  double tail = 1.0;
  double regen = 1.0;
  double port = 0.0;
};

void ValidateCosts(const CostModel& costs);

struct FailureScenario {
  enum class Kind { kNoFailure, kSpanCut, kRouterDown };
  Kind kind = Kind::kNoFailure;
  int index = -1;  // span or router index

  static FailureScenario NoFailure() { return {}; }
  static FailureScenario SpanCut(int span) { return {Kind::kSpanCut, span}; }
  static FailureScenario RouterDown(int router) {
    return {Kind::kRouterDown, router};
  }

  bool operator==(const FailureScenario& o) const {
    return kind == o.kind && index == o.index;
  }
  bool operator!=(const FailureScenario& o) const { return !(*this == o); }
};

std::string_view KindName(FailureScenario::Kind kind);
// Span name, router id, or "" for NoFailure.
std::string ScenarioId(const Topology& topology, const FailureScenario& f);
// For example "SpanCut(N1-O1)".
std::string ScenarioName(const Topology& topology, const FailureScenario& f);
// Inverse of KindName/ScenarioId; throws TopologyError.
FailureScenario ParseScenario(const Topology& topology, std::string_view kind,
                              std::string_view id);
// Throws TopologyError when the referenced span or router does not exist.
void CheckScenario(const Topology& topology, const FailureScenario& f);

bool SpanAlive(const FailureScenario& f, int span);
bool RouterAlive(const FailureScenario& f, int router);
// Routers at `node` that survive `f`.
std::vector<int> AliveRoutersAt(const Topology& topology,
                                const FailureScenario& f, int node);

// NoFailure, then one SpanCut per span, then one RouterDown per router.
std::vector<FailureScenario> EnumerateFailures(const Topology& topology);

// All-pairs shortest distances over the spans that survive a scenario.
// A router failure removes no spans.
class DistanceTable {
 public:
  DistanceTable() = default;
  explicit DistanceTable(int n) : n_(n), d_(static_cast<size_t>(n) * n,
                                            kUnreachable) {}
  int size() const { return n_; }
  double operator()(int u, int v) const {
    return d_[static_cast<size_t>(u) * n_ + v];
  }
  double& at(int u, int v) { return d_[static_cast<size_t>(u) * n_ + v]; }
  bool reachable(int u, int v) const { return (*this)(u, v) != kUnreachable; }

 private:
  int n_ = 0;
  std::vector<double> d_;
};

DistanceTable ShortestDistances(const Topology& topology,
                                const FailureScenario& f);

// Ordered pairs (u, v), u != v, with dist(u, v) <= regen_dist; sorted.
std::vector<std::pair<int, int>> RegenAdjacency(const Topology& topology,
                                                const FailureScenario& f);
std::vector<std::pair<int, int>> RegenAdjacency(const Topology& topology,
                                                const DistanceTable& dist);

// Tolerance used whenever mileages are compared.
double MileTolerance(const Topology& topology);

// A shortest node walk from `from` to `to` under `f`. Among equal-length
// alternatives the walk picks, at every step, the next node with the
// smallest id. Empty when unreachable.
std::vector<int> ShortestPath(const Topology& topology, const FailureScenario& f,
                              const DistanceTable& dist, int from, int to);

// Sum of span lengths along a node walk; throws TopologyError when two
// consecutive nodes are not joined by a surviving span.
double WalkLength(const Topology& topology, const FailureScenario& f,
                  const std::vector<int>& walk);

}  // namespace robustnet

#endif  // ROBUSTNET_NET_MODEL_HPP_
