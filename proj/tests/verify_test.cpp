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


#include <gtest/gtest.h>

#include "robustnet/algorithms.hpp"
#include "robustnet/operation.hpp"
#include "robustnet/verify.hpp"
#include "test_util.hpp"

namespace robustnet {
namespace {

using testing::Fixture;
using testing::Node;

TEST(Oracle, ToyExamples) {
  const Instance in = Fixture("toy2x5");
  const auto all = EnumerateFailures(in.topology);
  const verify::OracleResult r =
      verify::OracleDesignSearch(in.topology, in.demands, in.costs, all, 2);
  ASSERT_TRUE(r.feasible);
  EXPECT_DOUBLE_EQ(r.cost, 6.0);
  EXPECT_EQ(r.witness.total_tails(), 4);
  EXPECT_EQ(r.witness.total_regens_reported(), 2);

  const verify::OracleResult nf = verify::OracleDesignSearch(
      in.topology, in.demands, in.costs, {FailureScenario::NoFailure()}, 2);
  EXPECT_DOUBLE_EQ(nf.cost, 3.0);

  const DemandMatrix none = DemandMatrix::Create(in.topology, {});
  EXPECT_DOUBLE_EQ(
      verify::OracleDesignSearch(in.topology, none, in.costs, all, 2).cost, 0.0);
}

TEST(Oracle, WitnessIsOperable) {
  const Instance in = Fixture("toy2x5");
  const auto all = EnumerateFailures(in.topology);
  const verify::OracleResult r =
      verify::OracleDesignSearch(in.topology, in.demands, in.costs, all, 2);
  for (const FailureScenario& f : all) {
    EXPECT_NO_THROW(Operate(in.topology, in.demands, in.costs, r.witness, f))
        << ScenarioName(in.topology, f);
  }
}

TEST(Oracle, RefusesLargeSpaces) {
  const Instance in = Fixture("grid3x3");
  EXPECT_THROW(verify::OracleDesignSearch(in.topology, in.demands, in.costs,
                                          EnumerateFailures(in.topology), 3, 1000),
               verify::OracleRefused);
}

TEST(Oracle, RefusesUnsupportedDemandShapes) {
  TopologySpec spec;
  spec.ip_nodes = {"A", "B", "C"};
  spec.routers = {{"RA", "A"}, {"RB", "B"}, {"RC", "C"}};
  spec.spans = {{"A", "B", 100}, {"B", "C", 100}, {"C", "A", 100}};
  const Topology t = Topology::Create(spec);
  const DemandMatrix d = DemandMatrix::Create(t, {{0, 1, 0.5}, {1, 2, 0.5}});
  EXPECT_THROW(verify::OracleDesignSearch(t, d, CostModel{},
                                          {FailureScenario::NoFailure()}, 1),
               verify::OracleRefused);
}

TEST(Oracle, InfeasibleWhenBridgeIsCut) {
  TopologySpec spec;
  spec.ip_nodes = {"A", "B"};
  spec.routers = {{"RA", "A"}, {"RB", "B"}};
  spec.spans = {{"A", "B", 100}};
  const Topology t = Topology::Create(spec);
  const DemandMatrix d = DemandMatrix::Create(t, {{0, 1, 1.0}});
  EXPECT_FALSE(verify::OracleDesignSearch(t, d, CostModel{},
                                          EnumerateFailures(t), 2).feasible);
}

TEST(Oracle, MatchesOptimalOnRandomMicros) {
  int compared = 0;
  for (unsigned seed = 0; compared < 8 && seed < 200; ++seed) {
    const auto m = testing::RandomMicro(seed);
    const Instance in = testing::BuildMicro(m);
    const auto scenarios = EnumerateFailures(in.topology);
    verify::OracleResult oracle;
    try {
      oracle = verify::OracleDesignSearch(in.topology, in.demands, in.costs,
                                          scenarios, m.cap, 2'000'000);
    } catch (const verify::OracleRefused&) {
      continue;
    }
    DesignOptions opt;
    opt.design_cap = m.cap;
    if (!oracle.feasible) {
      EXPECT_THROW(DesignOptimal(in.topology, in.demands, in.costs, opt),
                   InfeasibleError)
          << "seed " << seed;
      continue;
    }
    const DesignResult r = DesignOptimal(in.topology, in.demands, in.costs, opt);
    EXPECT_DOUBLE_EQ(r.design.total_cost_reported, oracle.cost) << "seed " << seed;
    ++compared;
  }
  EXPECT_EQ(compared, 8);
}

TEST(RegenPath, Examples) {
  const Topology t = Fixture("toy2x5").topology;
  const FailureScenario nf = FailureScenario::NoFailure();
  const std::vector<int> top{Node(t, "N1"), Node(t, "O1"), Node(t, "O2"),
                             Node(t, "O3"), Node(t, "N2")};
  EXPECT_TRUE(verify::CheckRegenFeasiblePath(t, nf, top, {Node(t, "O2")}));
  EXPECT_FALSE(verify::CheckRegenFeasiblePath(t, nf, top, {}));
  EXPECT_FALSE(verify::CheckRegenFeasiblePath(t, nf, top, {Node(t, "O1")}));
  EXPECT_TRUE(verify::CheckRegenFeasiblePath(t, nf, {Node(t, "N1")}, {}));
  EXPECT_TRUE(verify::CheckRegenFeasiblePath(t, nf, {}, {}));
  EXPECT_THROW(verify::CheckRegenFeasiblePath(t, nf, {Node(t, "N1"), Node(t, "N2")}, {}),
               TopologyError);
  EXPECT_THROW(verify::CheckRegenFeasiblePath(t, testing::Cut(t, "O1", "O2"), top,
                                              {Node(t, "O2")}),
               TopologyError);
}

// Two routers, one link carrying the whole demand.
Topology TwoNodeTopology() {
  TopologySpec spec;
  spec.ip_nodes = {"A", "B"};
  spec.routers = {{"RA", "A"}, {"RB", "B"}};
  spec.spans = {{"A", "B", 100}};
  return Topology::Create(spec);
}

struct TwoNode {
  TwoNode()
      : topology(TwoNodeTopology()),
        demands(DemandMatrix::Create(topology, {{0, 1, 0.7}})) {
    plan.scenario = FailureScenario::NoFailure();
    plan.links.push_back({0, 1, 1, {RegenChain{1, {}, {0, 1}}}});
    plan.flows.push_back({0, 0, 1, 0.7});
    design = EmptyDesign(topology);
    design.tails = {1, 1};
    design.regens_raw = {1, 0};
  }
  Topology topology;
  DemandMatrix demands;
  OperationPlan plan;
  Design design;
};

TEST(Checks, HandBuiltPlanPasses) {
  TwoNode c;
  EXPECT_TRUE(verify::CheckFlowConservation(c.topology, c.demands, c.plan).empty());
  EXPECT_TRUE(verify::CheckPlan(c.topology, c.demands, c.design, c.plan).empty());
}

TEST(Checks, DetectsViolations) {
  TwoNode c;
  OperationPlan dropped = c.plan;
  dropped.flows.clear();
  EXPECT_GE(verify::CheckFlowConservation(c.topology, c.demands, dropped).size(), 1u);

  OperationPlan over = c.plan;
  over.flows[0].units = 1.5;
  EXPECT_FALSE(verify::CheckLinkCapacity(c.topology, over).empty());

  Design short_tails = c.design;
  short_tails.tails = {1, 0};
  EXPECT_FALSE(verify::CheckEquipmentUsage(c.topology, short_tails, c.plan).empty());

  const Topology near = c.topology.WithRegenDist(50);
  EXPECT_FALSE(verify::CheckChains(near, c.plan).empty());
}

TEST(Checks, MutatedOperatePlanFails) {
  const Instance in = Fixture("toy2x5");
  const DesignResult r = DesignOptimal(in.topology, in.demands, in.costs);
  for (const OperationPlan& plan : r.plans) {
    if (plan.flows.empty()) continue;
    EXPECT_TRUE(verify::CheckFlowConservation(in.topology, in.demands, plan).empty());
    OperationPlan mutated = plan;
    mutated.flows.erase(mutated.flows.begin());
    EXPECT_FALSE(
        verify::CheckFlowConservation(in.topology, in.demands, mutated).empty());
  }
}

}  // namespace
}  // namespace robustnet
