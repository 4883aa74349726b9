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

#include <cmath>
#include <random>

#include "robustnet/lp/linear_model.hpp"
#include "robustnet/lp/lp_format.hpp"
#include "robustnet/lp/solver.hpp"
#include "brute_force.hpp"

namespace robustnet::lp {
namespace {

using testing::BruteForce;
using testing::RandomIntegerModel;

TEST(LpSolve, SingleLowerBound) {
  LinearModel m;
  const int x = m.AddVariable("x", 0, kInfinity, true, 1.0);
  m.AddConstraint("c", {{x, 1.0}}, Comparator::kGreaterEqual, 3.0);
  const SolveResult r = Solve(m);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.values[x], 3.0, 1e-9);
  EXPECT_NEAR(r.objective_value, 3.0, 1e-9);
}

TEST(LpSolve, IntegerRoundingOfFractionalBound) {
  LinearModel m;
  const int x = m.AddVariable("x", 0, kInfinity, true, 1.0);
  const int y = m.AddVariable("y", 0, kInfinity, true, 1.0);
  m.AddConstraint("c", {{x, 1.0}, {y, 1.0}}, Comparator::kGreaterEqual, 1.5);
  const SolveResult r = Solve(m);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.objective_value, 2.0, 1e-9);
  EXPECT_NEAR(r.best_bound, 2.0, 1e-6);
}

TEST(LpSolve, ContinuousTextbookModel) {
  LinearModel m;
  const int x = m.AddVariable("x", 0, kInfinity, false, -3.0);
  const int y = m.AddVariable("y", 0, kInfinity, false, -5.0);
  m.AddConstraint("a", {{x, 1.0}}, Comparator::kLessEqual, 4.0);
  m.AddConstraint("b", {{y, 2.0}}, Comparator::kLessEqual, 12.0);
  m.AddConstraint("c", {{x, 3.0}, {y, 2.0}}, Comparator::kLessEqual, 18.0);
  const SolveResult r = Solve(m);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.values[x], 2.0, 1e-7);
  EXPECT_NEAR(r.values[y], 6.0, 1e-7);
  EXPECT_NEAR(r.objective_value, -36.0, 1e-7);
}

TEST(LpSolve, FreeVariablesAndEqualities) {
  LinearModel m;
  const int x = m.AddVariable("x", -kInfinity, kInfinity, false, 1.0);
  const int y = m.AddVariable("y", -kInfinity, kInfinity, false, 0.0);
  m.AddConstraint("e", {{x, 1.0}, {y, -1.0}}, Comparator::kEqual, -4.0);
  m.AddConstraint("g", {{y, 1.0}}, Comparator::kGreaterEqual, -1.0);
  const SolveResult r = Solve(m);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.values[x], -5.0, 1e-7);
}

TEST(LpSolve, DetectsInfeasibility) {
  LinearModel m;
  const int x = m.AddVariable("x", 0, 10, true, 1.0);
  m.AddConstraint("lo", {{x, 2.0}}, Comparator::kGreaterEqual, 3.0);
  m.AddConstraint("hi", {{x, 2.0}}, Comparator::kLessEqual, 3.8);
  EXPECT_EQ(Solve(m).status, SolveStatus::kInfeasible);

  LinearModel lp;
  const int y = lp.AddVariable("y", 0, kInfinity, false, 1.0);
  lp.AddConstraint("a", {{y, 1.0}}, Comparator::kLessEqual, -1.0);
  EXPECT_EQ(Solve(lp).status, SolveStatus::kInfeasible);
}

TEST(LpSolve, DetectsUnboundedness) {
  LinearModel m;
  const int x = m.AddVariable("x", 0, kInfinity, false, -1.0);
  const int y = m.AddVariable("y", 0, kInfinity, false, 0.0);
  m.AddConstraint("c", {{x, 1.0}, {y, -1.0}}, Comparator::kLessEqual, 2.0);
  EXPECT_EQ(Solve(m).status, SolveStatus::kUnbounded);
}

TEST(LpSolve, EmptyModel) {
  LinearModel m;
  const SolveResult r = Solve(m);
  EXPECT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_EQ(r.objective_value, 0.0);
}

TEST(LpSolve, ObjectiveOffsetIsReported) {
  LinearModel m;
  const int x = m.AddVariable("x", 1, 4, true, 2.0);
  m.SetObjectiveOffset(10.0);
  const SolveResult r = Solve(m);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.values[x], 1.0, 1e-9);
  EXPECT_NEAR(r.objective_value, 12.0, 1e-9);
}

TEST(LpSolve, RejectsMalformedModelsByName) {
  LinearModel bad_bounds;
  bad_bounds.AddVariable("capacity", 3, 1, true);
  try {
    Solve(bad_bounds);
    FAIL() << "expected ModelError";
  } catch (const ModelError& e) {
    EXPECT_NE(std::string(e.what()).find("capacity"), std::string::npos);
  }

  LinearModel bad_ref;
  bad_ref.AddVariable("x", 0, 1, false);
  bad_ref.AddConstraint("flow_row", {{7, 1.0}}, Comparator::kLessEqual, 1.0);
  try {
    Solve(bad_ref);
    FAIL() << "expected ModelError";
  } catch (const ModelError& e) {
    EXPECT_NE(std::string(e.what()).find("flow_row"), std::string::npos);
  }

  LinearModel bad_coef;
  const int x = bad_coef.AddVariable("x", 0, 1, false);
  bad_coef.AddConstraint("nan_row", {{x, std::nan("")}}, Comparator::kLessEqual, 1.0);
  EXPECT_THROW(Solve(bad_coef), ModelError);
}

TEST(LpSolve, DuplicateVariableNamesRejected) {
  LinearModel m;
  m.AddVariable("x", 0, 1, false);
  m.AddVariable("x", 0, 1, false);
  EXPECT_THROW(Solve(m), ModelError);
}

TEST(LpSolve, NodeLimitReturnsIncumbentOrNothing) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    LinearModel m = RandomIntegerModel(rng, 10);
    SolveOptions options;
    options.node_limit = 2;
    const SolveResult r = Solve(m, options);
    if (r.status == SolveStatus::kFeasible) {
      EXPECT_TRUE(ValidateSolution(m, r.values).empty());
      EXPECT_LE(r.best_bound, r.objective_value + 1e-9);
    } else {
      EXPECT_NE(r.status, SolveStatus::kUnbounded);
    }
  }
}

TEST(LpSolve, DeterministicAcrossRuns) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    LinearModel m = RandomIntegerModel(rng, 8);
    const SolveResult a = Solve(m), b = Solve(m);
    ASSERT_EQ(a.status, b.status);
    EXPECT_EQ(a.values, b.values);
    EXPECT_EQ(a.nodes, b.nodes);
  }
}

TEST(LpSolve, MatchesBruteForceOnRandomIntegerModels) {
  std::mt19937 rng(2024);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 12;
    LinearModel m = RandomIntegerModel(rng, n);
    const double expected = BruteForce(m);
    const SolveResult r = Solve(m);
    if (!std::isfinite(expected)) {
      EXPECT_EQ(r.status, SolveStatus::kInfeasible) << "trial " << trial;
      continue;
    }
    ++feasible;
    ASSERT_EQ(r.status, SolveStatus::kOptimal) << "trial " << trial;
    EXPECT_NEAR(r.objective_value, expected, 1e-6) << "trial " << trial;
    EXPECT_TRUE(ValidateSolution(m, r.values).empty()) << "trial " << trial;
    EXPECT_LE(r.objective_value - r.best_bound,
              1e-6 * std::max(1.0, std::abs(r.objective_value)));
  }
  EXPECT_GE(feasible, 100);
}

TEST(LpSolve, AddingAConstraintNeverLowersTheOptimum) {
  std::mt19937 rng(99);
  int compared = 0;
  for (int trial = 0; trial < 100; ++trial) {
    LinearModel m = RandomIntegerModel(rng, 6);
    const SolveResult before = Solve(m);
    LinearModel tighter = m;
    std::vector<Term> terms;
    for (int j = 0; j < m.num_variables(); ++j) {
      terms.push_back({j, static_cast<double>(std::uniform_int_distribution<int>(-2, 2)(rng))});
    }
    tighter.AddConstraint("extra", terms, Comparator::kLessEqual,
                          std::uniform_int_distribution<int>(0, 4)(rng));
    const SolveResult after = Solve(tighter);
    if (before.status != SolveStatus::kOptimal) {
      EXPECT_NE(after.status, SolveStatus::kOptimal);
      continue;
    }
    if (after.status != SolveStatus::kOptimal) continue;
    ++compared;
    EXPECT_GE(after.objective_value, before.objective_value - 1e-9);
  }
  EXPECT_GT(compared, 20);
}

TEST(ValidateSolution, FeasiblePointIsClean) {
  LinearModel m;
  const int x = m.AddVariable("x", 0, 5, true);
  m.AddConstraint("c", {{x, 1.0}}, Comparator::kLessEqual, 3.0);
  EXPECT_TRUE(ValidateSolution(m, std::vector<double>{2.0}).empty());
}

TEST(ValidateSolution, ReportsIntegrality) {
  LinearModel m;
  m.AddVariable("x", 0, 5, true);
  const auto v = ValidateSolution(m, std::vector<double>{2.5});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::kIntegrality);
  EXPECT_EQ(v[0].name, "x");
}

TEST(ValidateSolution, ReportsConstraintsBoundsAndNames) {
  LinearModel m;
  const int x = m.AddVariable("x", 0, 5, false);
  const int y = m.AddVariable("y", 0, 5, false);
  m.AddConstraint("sum", {{x, 1.0}, {y, 1.0}}, Comparator::kEqual, 4.0);
  const auto v = ValidateSolution(m, std::vector<double>{6.0, 1.0});
  ASSERT_EQ(v.size(), 2u);

  const auto named = ValidateSolution(m, std::map<std::string, double>{
                                             {"x", 1.0}, {"ghost", 2.0}});
  bool unknown = false, missing = false;
  for (const Violation& e : named) {
    unknown |= e.kind == Violation::Kind::kUnknownVariable && e.name == "ghost";
    missing |= e.kind == Violation::Kind::kMissingValue && e.name == "y";
    EXPECT_FALSE(Describe(e).empty());
  }
  EXPECT_TRUE(unknown);
  EXPECT_TRUE(missing);
  EXPECT_TRUE(ValidateSolution(m, std::map<std::string, double>{
                                      {"x", 1.0}, {"y", 3.0}})
                  .empty());
}

TEST(LpFormat, WritesSectionsAndSanitizedNames) {
  LinearModel m;
  const int x = m.AddVariable("X[f0][R1-R3]", 0, 4, true, 1.0);
  const int y = m.AddVariable("flow y", 0, kInfinity, false, 0.5);
  const int z = m.AddVariable("flow_y", -kInfinity, kInfinity, false);
  m.AddConstraint("cap[R1]", {{x, -1.0}, {y, 1.0}}, Comparator::kLessEqual, 0.0);
  m.AddConstraint("", {{z, 2.0}, {y, 1.0}}, Comparator::kEqual, 3.0);
  const std::string text = ToLpFormat(m);
  for (const char* section : {"Minimize", "Subject To", "Bounds", "General", "End"}) {
    EXPECT_NE(text.find(section), std::string::npos) << section;
  }
  EXPECT_EQ(text.find('['), std::string::npos);
  EXPECT_NE(text.find("X_f0__R1_R3_"), std::string::npos);
  EXPECT_NE(text.find("flow_y#1 free"), std::string::npos);
  EXPECT_NE(text.find("0 <= X_f0__R1_R3_ <= 4"), std::string::npos);
  EXPECT_EQ(SanitizeLpName("3x"), "_3x");
  EXPECT_EQ(SanitizeLpName("e1"), "_e1");
}

TEST(LpFormat, WrapsLongRows) {
  LinearModel m;
  std::vector<Term> terms;
  for (int j = 0; j < 200; ++j) {
    terms.push_back({m.AddVariable("variable_" + std::to_string(j), 0, 1, false, 1.0), 1.0});
  }
  m.AddConstraint("long", terms, Comparator::kGreaterEqual, 1.0);
  const std::string text = ToLpFormat(m);
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    EXPECT_LE(end - start, 255u);
    start = end + 1;
  }
}

}  // namespace
}  // namespace robustnet::lp
