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


#include "robustnet/report.hpp"

#include <iomanip>
#include <sstream>

#include "json_util.hpp"
#include "robustnet/instance_io.hpp"

namespace robustnet {

using internal::Field;
using internal::OrderedJson;

namespace {

std::string Fixed(double v, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

OrderedJson NodeList(const Topology& t, const std::vector<int>& nodes) {
  OrderedJson out = OrderedJson::array();
  for (int n : nodes) out.push_back(t.node_name(n));
  return out;
}

OrderedJson PlanToJson(const Topology& t, const DemandMatrix& demands,
                       const OperationPlan& plan) {
  OrderedJson out;
  out["kind"] = KindName(plan.scenario.kind);
  out["id"] = ScenarioId(t, plan.scenario);
  OrderedJson links = OrderedJson::array();
  for (const PlanLink& link : plan.links) {
    OrderedJson l;
    l["routers"] = {t.router(link.a).id, t.router(link.b).id};
    l["capacity"] = link.capacity;
    OrderedJson chains = OrderedJson::array();
    for (const RegenChain& chain : link.chains) {
      OrderedJson c;
      c["units"] = chain.units;
      c["regens"] = NodeList(t, chain.regens);
      c["path"] = NodeList(t, chain.path);
      chains.push_back(std::move(c));
    }
    l["chains"] = std::move(chains);
    links.push_back(std::move(l));
  }
  out["links"] = std::move(links);
  OrderedJson flows = OrderedJson::array();
  for (const PlanFlow& flow : plan.flows) {
    OrderedJson f;
    f["src"] = t.node_name(demands[flow.demand].src);
    f["dst"] = t.node_name(demands[flow.demand].dst);
    f["from"] = t.router(flow.from).id;
    f["to"] = t.router(flow.to).id;
    f["units"] = flow.units;
    flows.push_back(std::move(f));
  }
  out["flows"] = std::move(flows);
  return out;
}

}  // namespace

std::string DesignToJson(const Topology& t, const DemandMatrix& demands,
                         const DesignResult& result) {
  const Design& d = result.design;
  OrderedJson doc;
  doc["algorithm"] = AlgorithmName(result.algorithm);
  doc["status"] = lp::ToString(result.status);
  auto by_router = [&t](const std::vector<int>& v, bool ports) {
    OrderedJson out = OrderedJson::object();
    for (int r = 0; r < t.num_routers(); ++r) {
      if (ports && t.routers_at(t.router(r).home).size() < 2) continue;
      out[t.router(r).id] = v[r];
    }
    return out;
  };
  auto by_node = [&t](const std::vector<int>& v) {
    OrderedJson out = OrderedJson::object();
    for (int n = 0; n < t.num_nodes(); ++n) {
      if (v[n] != 0) out[t.node_name(n)] = v[n];
    }
    return out;
  };
  doc["tails"] = by_router(d.tails, false);
  doc["regens_raw"] = by_node(d.regens_raw);
  doc["regens_reported"] = by_node(d.regens_reported);
  doc["ports"] = by_router(d.ports, true);
  OrderedJson costs;
  costs["tails"] = d.total_tails();
  costs["regens_reported"] = d.total_regens_reported();
  costs["regens_raw"] = d.total_regens_raw();
  costs["ports"] = d.total_ports();
  costs["total_reported"] = d.total_cost_reported;
  costs["total_raw"] = d.total_cost_raw;
  doc["costs"] = std::move(costs);
  OrderedJson scenarios = OrderedJson::array();
  for (const OperationPlan& plan : result.plans) {
    scenarios.push_back(PlanToJson(t, demands, plan));
  }
  doc["scenarios"] = std::move(scenarios);
  return doc.dump(2) + "\n";
}

const OperationPlan& DesignDocument::NoFailurePlan() const {
  for (const OperationPlan& plan : plans) {
    if (plan.scenario.kind == FailureScenario::Kind::kNoFailure) return plan;
  }
  throw ParseError("design document has no NoFailure scenario");
}

DesignDocument ParseDesignDocument(const Topology& t,
                                   const DemandMatrix& demands,
                                   std::string_view text,
                                   const std::string& source) {
  const internal::Json root = internal::ParseJson(text, source);
  const Field top(root, source);
  top.RequireObject();
  DesignDocument doc;
  if (top.Has("algorithm")) doc.algorithm = top.Get("algorithm").String();
  doc.design = EmptyDesign(t);

  auto router_of = [&t](const Field& f) {
    const int r = t.FindRouter(f.String());
    if (r < 0) f.Fail("unknown router '" + f.String() + "'");
    return r;
  };
  auto node_of = [&t](const Field& f) {
    const int n = t.FindNode(f.String());
    if (n < 0) f.Fail("unknown node '" + f.String() + "'");
    return n;
  };
  auto read_map = [&](const char* key, std::vector<int>& out, bool routers) {
    if (!top.Has(key)) return;
    const Field m = top.Get(key);
    m.RequireObject();
    for (auto it = m.value().begin(); it != m.value().end(); ++it) {
      const Field v = m.Get(it.key());
      int index = routers ? t.FindRouter(it.key()) : t.FindNode(it.key());
      if (index < 0) v.Fail("unknown id");
      out[index] = v.Integer();
      if (out[index] < 0) v.Fail("must be nonnegative");
    }
  };
  read_map("tails", doc.design.tails, true);
  read_map("regens_raw", doc.design.regens_raw, false);
  read_map("regens_reported", doc.design.regens_reported, false);
  read_map("ports", doc.design.ports, true);
  if (top.Has("costs")) {
    const Field c = top.Get("costs");
    if (c.Has("total_reported")) {
      doc.design.total_cost_reported = c.Get("total_reported").Number();
    }
    if (c.Has("total_raw")) doc.design.total_cost_raw = c.Get("total_raw").Number();
  }

  for (const Field& s : top.Get("scenarios").Elements()) {
    OperationPlan plan;
    try {
      plan.scenario = ParseScenario(t, s.Get("kind").String(),
                                    s.Has("id") ? s.Get("id").String() : "");
    } catch (const TopologyError& e) {
      s.Fail(e.what());
    }
    for (const Field& l : s.Get("links").Elements()) {
      PlanLink link;
      const auto ends = l.Get("routers").Elements();
      if (ends.size() != 2) l.Get("routers").Fail("expected two routers");
      link.a = router_of(ends[0]);
      link.b = router_of(ends[1]);
      if (link.a == link.b) l.Fail("link joins a router to itself");
      if (link.a > link.b) std::swap(link.a, link.b);
      link.capacity = l.Get("capacity").Integer();
      if (l.Has("chains")) {
        for (const Field& c : l.Get("chains").Elements()) {
          RegenChain chain;
          chain.units = c.Get("units").Integer();
          for (const Field& n : c.Get("regens").Elements()) {
            chain.regens.push_back(node_of(n));
          }
          for (const Field& n : c.Get("path").Elements()) {
            chain.path.push_back(node_of(n));
          }
          for (size_t i = 1; i < chain.path.size(); ++i) {
            if (t.FindSpan(chain.path[i - 1], chain.path[i]) < 0) {
              c.Get("path").Fail("consecutive nodes share no span");
            }
          }
          link.chains.push_back(std::move(chain));
        }
      }
      plan.links.push_back(std::move(link));
    }
    if (s.Has("flows")) {
      for (const Field& f : s.Get("flows").Elements()) {
        PlanFlow flow;
        const int src = node_of(f.Get("src")), dst = node_of(f.Get("dst"));
        for (int d = 0; d < demands.size(); ++d) {
          if (demands[d].src == src && demands[d].dst == dst) flow.demand = d;
        }
        if (flow.demand < 0) f.Fail("flow for an unknown demand");
        flow.from = router_of(f.Get("from"));
        flow.to = router_of(f.Get("to"));
        flow.units = f.Get("units").Number();
        plan.flows.push_back(flow);
      }
    }
    doc.plans.push_back(std::move(plan));
  }
  return doc;
}

std::string TransientCsv(const Topology& t,
                         const std::vector<TransientReport>& reports) {
  std::ostringstream os;
  os << "scenario_kind,scenario_id,offered,delivered,fraction\n";
  for (const TransientReport& r : reports) {
    os << KindName(r.scenario.kind) << ',' << ScenarioId(t, r.scenario) << ','
       << Fixed(r.offered) << ',' << Fixed(r.delivered) << ','
       << Fixed(r.fraction) << '\n';
  }
  return os.str();
}

std::string CompareCsv(const std::vector<DesignResult>& results) {
  std::ostringstream os;
  os << "algorithm,status,tails,regens,regens_raw,ports,total_cost,seconds\n";
  for (const DesignResult& r : results) {
    os << AlgorithmName(r.algorithm) << ',' << lp::ToString(r.status) << ','
       << r.design.total_tails() << ',' << r.design.total_regens_reported() << ','
       << r.design.total_regens_raw() << ',' << r.design.total_ports() << ','
       << Fixed(r.design.total_cost_reported) << ',' << Fixed(r.seconds, 3)
       << '\n';
  }
  return os.str();
}

}  // namespace robustnet
