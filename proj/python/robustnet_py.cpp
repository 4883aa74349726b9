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


// Python bindings: instance loading, the four design algorithms, transient
// evaluation, the exhaustive oracle and LP export.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "robustnet/algorithms.hpp"
#include "robustnet/design_model.hpp"
#include "robustnet/instance_io.hpp"
#include "robustnet/lp/lp_format.hpp"
#include "robustnet/operation.hpp"
#include "robustnet/report.hpp"
#include "robustnet/verify.hpp"

namespace py = pybind11;

namespace robustnet {
namespace {

using InstancePtr = std::shared_ptr<Instance>;

struct PyDesign {
  InstancePtr instance;
  DesignResult result;
};

py::dict ByRouter(const Topology& t, const std::vector<int>& v) {
  py::dict out;
  for (int r = 0; r < t.num_routers(); ++r) {
    if (v[r] != 0) out[py::str(t.router(r).id)] = v[r];
  }
  return out;
}

py::dict ByNode(const Topology& t, const std::vector<int>& v) {
  py::dict out;
  for (int n = 0; n < t.num_nodes(); ++n) {
    if (v[n] != 0) out[py::str(t.node_name(n))] = v[n];
  }
  return out;
}

std::vector<FailureScenario> Scenarios(
    const Topology& t,
    const std::optional<std::vector<std::pair<std::string, std::string>>>& names) {
  if (!names) return EnumerateFailures(t);
  std::vector<FailureScenario> out;
  for (const auto& [kind, id] : *names) out.push_back(ParseScenario(t, kind, id));
  return out;
}

std::vector<std::pair<std::string, std::string>> ScenarioNames(const Topology& t) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const FailureScenario& f : EnumerateFailures(t)) {
    out.emplace_back(std::string(KindName(f.kind)), ScenarioId(t, f));
  }
  return out;
}

PyDesign Design_(const InstancePtr& in, const std::string& algorithm,
                 std::optional<double> time_limit,
                 const std::optional<std::vector<std::pair<std::string, std::string>>>&
                     scenarios,
                 int design_cap) {
  DesignOptions options;
  if (time_limit) options.time_limit_seconds = *time_limit;
  if (scenarios) options.scenarios = Scenarios(in->topology, scenarios);
  options.design_cap = design_cap;
  const Algorithm a = ParseAlgorithm(algorithm);
  py::gil_scoped_release release;
  return PyDesign{in, RunDesign(a, in->topology, in->demands, in->costs, options)};
}

py::list Transient(const InstancePtr& in, const PyDesign& design, bool max_concurrent,
                   std::optional<double> time_limit) {
  const Topology& t = in->topology;
  const OperationPlan* base = nullptr;
  for (const OperationPlan& p : design.result.plans) {
    if (p.scenario == FailureScenario::NoFailure()) base = &p;
  }
  if (base == nullptr) {
    throw std::invalid_argument("design has no NoFailure plan");
  }
  TransientOptions options;
  options.max_concurrent = max_concurrent;
  if (time_limit) options.time_limit_seconds = *time_limit;
  py::list out;
  for (const FailureScenario& f : EnumerateFailures(t)) {
    const TransientReport r = EvaluateTransient(t, in->demands, *base, f, options);
    py::dict row;
    row["kind"] = std::string(KindName(f.kind));
    row["id"] = ScenarioId(t, f);
    row["offered"] = r.offered;
    row["delivered"] = r.delivered;
    row["fraction"] = r.fraction;
    out.append(row);
  }
  return out;
}

py::dict Oracle(const InstancePtr& in, int cap,
                const std::optional<std::vector<std::pair<std::string, std::string>>>&
                    scenarios,
                int64_t max_space) {
  const Topology& t = in->topology;
  const auto fs = Scenarios(t, scenarios);
  verify::OracleResult r;
  {
    py::gil_scoped_release release;
    r = verify::OracleDesignSearch(t, in->demands, in->costs, fs, cap, max_space);
  }
  py::dict out;
  out["feasible"] = r.feasible;
  out["cost"] = r.cost;
  out["tails"] = ByRouter(t, r.witness.tails);
  out["regens"] = ByNode(t, r.witness.regens_reported);
  out["ports"] = ByRouter(t, r.witness.ports);
  out["search_space"] = r.search_space;
  return out;
}

}  // namespace
}  // namespace robustnet

PYBIND11_MODULE(_robustnet, m) {
  using namespace robustnet;
  m.doc() = "Robust IP/optical backbone design";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TopologyError>(m, "TopologyError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
  py::register_exception<TimeLimitError>(m, "TimeLimitError", PyExc_RuntimeError);
  py::register_exception<verify::OracleRefused>(m, "OracleRefused", PyExc_ValueError);

  py::class_<Instance, std::shared_ptr<Instance>>(m, "Instance")
      .def_property_readonly("ip_nodes",
                             [](const Instance& in) {
                               std::vector<std::string> out;
                               for (int n = 0; n < in.topology.num_ip_nodes(); ++n) {
                                 out.push_back(in.topology.node_name(n));
                               }
                               return out;
                             })
      .def_property_readonly("routers",
                             [](const Instance& in) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (int r = 0; r < in.topology.num_routers(); ++r) {
                                 const Router& x = in.topology.router(r);
                                 out.emplace_back(x.id, in.topology.node_name(x.home));
                               }
                               return out;
                             })
      .def_property_readonly("num_nodes",
                             [](const Instance& in) { return in.topology.num_nodes(); })
      .def_property_readonly("num_spans",
                             [](const Instance& in) { return in.topology.num_spans(); })
      .def_property_readonly("regen_dist",
                             [](const Instance& in) { return in.topology.regen_dist(); })
      .def_property_readonly("total_demand",
                             [](const Instance& in) { return in.demands.total(); })
      .def("scenarios",
           [](const Instance& in) { return ScenarioNames(in.topology); },
           "Every failure scenario as (kind, id), NoFailure first.")
      .def("distance",
           [](const Instance& in, const std::string& u, const std::string& v) {
             const int a = in.topology.FindNode(u), b = in.topology.FindNode(v);
             if (a < 0 || b < 0) throw std::invalid_argument("unknown node");
             return ShortestDistances(in.topology, FailureScenario::NoFailure())(a, b);
           },
           py::arg("u"), py::arg("v"));

  py::class_<PyDesign>(m, "Design")
      .def_property_readonly("algorithm",
                             [](const PyDesign& d) {
                               return std::string(AlgorithmName(d.result.algorithm));
                             })
      .def_property_readonly("status",
                             [](const PyDesign& d) {
                               return std::string(lp::ToString(d.result.status));
                             })
      .def_property_readonly("tails",
                             [](const PyDesign& d) {
                               return ByRouter(d.instance->topology, d.result.design.tails);
                             })
      .def_property_readonly("regens",
                             [](const PyDesign& d) {
                               return ByNode(d.instance->topology,
                                             d.result.design.regens_reported);
                             })
      .def_property_readonly("regens_raw",
                             [](const PyDesign& d) {
                               return ByNode(d.instance->topology,
                                             d.result.design.regens_raw);
                             })
      .def_property_readonly("ports",
                             [](const PyDesign& d) {
                               return ByRouter(d.instance->topology, d.result.design.ports);
                             })
      .def_property_readonly(
          "total_cost", [](const PyDesign& d) { return d.result.design.total_cost_reported; })
      .def_property_readonly(
          "total_cost_raw", [](const PyDesign& d) { return d.result.design.total_cost_raw; })
      .def_property_readonly("seconds", [](const PyDesign& d) { return d.result.seconds; })
      .def_property_readonly("num_scenarios",
                             [](const PyDesign& d) { return d.result.plans.size(); })
      .def("to_json",
           [](const PyDesign& d) {
             return DesignToJson(d.instance->topology, d.instance->demands, d.result);
           })
      .def("check",
           [](const PyDesign& d) {
             std::vector<std::string> out;
             for (const OperationPlan& p : d.result.plans) {
               for (std::string& e : verify::CheckPlan(d.instance->topology,
                                                       d.instance->demands,
                                                       d.result.design, p)) {
                 out.push_back(std::move(e));
               }
             }
             return out;
           },
           "Violations found in the reported plans; empty when clean.")
      .def("__repr__", [](const PyDesign& d) {
        return "<Design " + std::string(AlgorithmName(d.result.algorithm)) +
               " cost=" + std::to_string(d.result.design.total_cost_reported) + ">";
      });

  m.def("load_instance",
        [](const std::string& path) { return std::make_shared<Instance>(LoadInstance(path)); },
        py::arg("path"));
  m.def("parse_instance",
        [](const std::string& text) {
          return std::make_shared<Instance>(ParseInstance(text, "<string>"));
        },
        py::arg("text"));
  m.def("design", &Design_, py::arg("instance"), py::arg("algorithm") = "optimal",
        py::arg("time_limit") = py::none(), py::arg("scenarios") = py::none(),
        py::arg("design_cap") = -1,
        "Runs one design algorithm: optimal, simple, greedy or legacy.");
  m.def("transient", &Transient, py::arg("instance"), py::arg("design"),
        py::arg("max_concurrent") = false, py::arg("time_limit") = py::none(),
        "Delivered fraction per scenario on the surviving no-failure links.");
  m.def("oracle", &Oracle, py::arg("instance"), py::arg("cap") = 2,
        py::arg("scenarios") = py::none(), py::arg("max_space") = 10'000'000,
        "Exhaustive placement search; exact on small instances.");
  m.def("export_lp",
        [](const InstancePtr& in) {
          const DesignModel dm = BuildDesignModel(in->topology, in->demands,
                                                  EnumerateFailures(in->topology),
                                                  in->costs);
          return lp::ToLpFormat(dm.model);
        },
        py::arg("instance"));
}
