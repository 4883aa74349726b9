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

#ifndef ROBUSTNET_TESTS_BRUTE_FORCE_HPP_
#define ROBUSTNET_TESTS_BRUTE_FORCE_HPP_

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "robustnet/lp/linear_model.hpp"

namespace robustnet::testing {

using lp::Comparator;
using lp::Constraint;
using lp::kInfinity;
using lp::LinearModel;
using lp::Term;

// Exhaustive minimum of a pure integer model; +inf when infeasible.
inline double BruteForce(const LinearModel& m) {
  const int n = m.num_variables();
  std::vector<double> x(n);
  for (int j = 0; j < n; ++j) x[j] = m.variable(j).lower;
  double best = kInfinity;
  while (true) {
    bool ok = true;
    for (const Constraint& c : m.constraints()) {
      double a = 0.0;
      for (const Term& t : c.terms) a += t.coef * x[t.var];
      if (c.comparator == Comparator::kLessEqual) ok &= a <= c.rhs + 1e-9;
      if (c.comparator == Comparator::kGreaterEqual) ok &= a >= c.rhs - 1e-9;
      if (c.comparator == Comparator::kEqual) ok &= std::abs(a - c.rhs) <= 1e-9;
      if (!ok) break;
    }
    if (ok) best = std::min(best, m.EvaluateObjective(x));
    int j = 0;
    while (j < n && x[j] >= m.variable(j).upper) {
      x[j] = m.variable(j).lower;
      ++j;
    }
    if (j == n) break;
    x[j] += 1.0;
  }
  return best;
}

// Pure integer model with n variables in [0, ub], ub <= 3 and at most 2e5
// points, and 1-6 random rows.
inline LinearModel RandomIntegerModel(std::mt19937& rng, int n) {
  auto pick = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  int ub = 3;
  while (std::pow(ub + 1.0, n) > 2e5) --ub;
  LinearModel m;
  for (int j = 0; j < n; ++j) {
    m.AddVariable("x" + std::to_string(j), 0, pick(1, ub), true, pick(-3, 4));
  }
  const int rows = pick(1, 6);
  for (int i = 0; i < rows; ++i) {
    std::vector<Term> terms;
    for (int j = 0; j < n; ++j) {
      if (pick(0, 2) == 0) continue;
      const int c = pick(-3, 3);
      if (c != 0) terms.push_back({j, static_cast<double>(c)});
    }
    if (terms.empty()) terms.push_back({pick(0, n - 1), 1.0});
    const auto cmp = static_cast<Comparator>(pick(0, 2));
    const double rhs = cmp == Comparator::kEqual ? pick(0, 3) : pick(-2, 6) + 0.5 * pick(0, 1);
    m.AddConstraint("c" + std::to_string(i), terms, cmp, rhs);
  }
  return m;
}

}  // namespace robustnet::testing

#endif  // ROBUSTNET_TESTS_BRUTE_FORCE_HPP_
