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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <queue>
#include <vector>

#include "robustnet/lp/dual_simplex.hpp"
#include "robustnet/lp/solver.hpp"

namespace robustnet::lp {
namespace {

using Clock = std::chrono::steady_clock;

struct BoundChange {
  int var;
  double lower;
  double upper;
};

struct Node {
  double bound = -kInfinity;
  int depth = 0;
  int64_t id = 0;
  std::vector<BoundChange> changes;
};

struct NodeOrder {
  // priority_queue pops the "largest"; we want the smallest bound, then the
  // deepest node, then the oldest.
  bool operator()(const std::shared_ptr<Node>& a,
                  const std::shared_ptr<Node>& b) const {
    if (a->bound != b->bound) return a->bound > b->bound;
    if (a->depth != b->depth) return a->depth < b->depth;
    return a->id > b->id;
  }
};

bool HasIntegralObjective(const LinearModel& model) {
  if (std::abs(model.objective_offset() - std::round(model.objective_offset())) >
      1e-9) {
    return false;
  }
  for (const Variable& v : model.variables()) {
    if (v.objective == 0.0) continue;
    if (!v.integer) return false;
    if (std::abs(v.objective - std::round(v.objective)) > 1e-9) return false;
  }
  return true;
}

// Most fractional variable inside the highest priority class that has any
// fractional variable; -1 when the point is integral.
int ChooseBranchVariable(const LinearModel& model,
                         const std::vector<int>& integer_vars,
                         const std::vector<double>& x) {
  int best = -1;
  int best_priority = 0;
  double best_score = 0.0;
  for (int j : integer_vars) {
    const double f = x[j] - std::floor(x[j]);
    const double score = std::min(f, 1.0 - f);
    if (score <= kFeasibilityTolerance) continue;
    const int priority = model.variable(j).branch_priority;
    if (best < 0 || priority > best_priority ||
        (priority == best_priority && score > best_score + 1e-12)) {
      best = j;
      best_priority = priority;
      best_score = score;
    }
  }
  return best;
}

class BranchAndBound {
 public:
  BranchAndBound(const LinearModel& model, const SolveOptions& options)
      : model_(model), options_(options), lp_(model) {}

  SolveResult Run();

 private:
  void ApplyBounds(const std::vector<BoundChange>& changes);
  bool TryIncumbent(const std::vector<double>& x);
  double RoundBound(double b) const {
    return integral_objective_ ? std::ceil(b - 1e-6) : b;
  }
  bool Dominated(double bound) const {
    if (!has_incumbent_) return false;
    return bound >= incumbent_value_ -
                        1e-6 * std::max(1.0, std::abs(incumbent_value_));
  }

  const LinearModel& model_;
  SolveOptions options_;
  DualSimplex lp_;
  Clock::time_point deadline_;
  std::vector<int> integer_vars_;
  std::vector<double> root_lower_, root_upper_;
  std::vector<int> applied_;
  bool integral_objective_ = false;
  bool has_incumbent_ = false;
  double incumbent_value_ = kInfinity;
  std::vector<double> incumbent_;
};

void BranchAndBound::ApplyBounds(const std::vector<BoundChange>& changes) {
  for (int j : applied_) lp_.SetColumnBounds(j, root_lower_[j], root_upper_[j]);
  applied_.clear();
  for (const BoundChange& c : changes) {
    lp_.SetColumnBounds(c.var, c.lower, c.upper);
    applied_.push_back(c.var);
  }
}

bool BranchAndBound::TryIncumbent(const std::vector<double>& x) {
  std::vector<double> candidate = x;
  for (int j : integer_vars_) candidate[j] = std::round(x[j]);

  // Re-solve with the integers fixed so the continuous part is consistent
  // with the rounded integers.
  std::vector<BoundChange> fixed;
  fixed.reserve(integer_vars_.size());
  for (int j : integer_vars_) fixed.push_back({j, candidate[j], candidate[j]});
  ApplyBounds(fixed);
  if (lp_.Solve(deadline_) == DualSimplex::Status::kOptimal) {
    candidate = lp_.primal();
    for (int j : integer_vars_) candidate[j] = std::round(candidate[j]);
  }
  if (!ValidateSolution(model_, candidate).empty()) return false;
  const double value = model_.EvaluateObjective(candidate);
  if (has_incumbent_ && value >= incumbent_value_) return false;
  has_incumbent_ = true;
  incumbent_value_ = value;
  incumbent_ = std::move(candidate);
  return true;
}

SolveResult BranchAndBound::Run() {
  const auto start = Clock::now();
  deadline_ = std::isfinite(options_.time_limit_seconds)
                  ? start + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(
                                    options_.time_limit_seconds))
                  : Clock::time_point::max();
  integral_objective_ = HasIntegralObjective(model_);

  SolveResult result;
  const int n = model_.num_variables();
  root_lower_.resize(n);
  root_upper_.resize(n);
  for (int j = 0; j < n; ++j) {
    const Variable& v = model_.variable(j);
    double lo = v.lower, hi = v.upper;
    if (v.integer) {
      integer_vars_.push_back(j);
      if (std::isfinite(lo)) lo = std::ceil(lo - kFeasibilityTolerance);
      if (std::isfinite(hi)) hi = std::floor(hi + kFeasibilityTolerance);
      if (lo > hi) {
        result.status = SolveStatus::kInfeasible;
        return result;
      }
      lp_.SetColumnBounds(j, lo, hi);
    }
    root_lower_[j] = lo;
    root_upper_[j] = hi;
  }

  std::priority_queue<std::shared_ptr<Node>, std::vector<std::shared_ptr<Node>>,
                      NodeOrder>
      open;
  int64_t next_id = 0;
  open.push(std::make_shared<Node>(Node{-kInfinity, 0, next_id++, {}}));
  bool interrupted = false;
  bool unbounded = false;
  double interrupted_bound = kInfinity;

  while (!open.empty()) {
    if (Clock::now() > deadline_ || result.nodes >= options_.node_limit) {
      interrupted = true;
      break;
    }
    std::shared_ptr<Node> node = open.top();
    open.pop();
    if (Dominated(node->bound)) continue;

    ApplyBounds(node->changes);
    const DualSimplex::Status status = lp_.Solve(deadline_);
    ++result.nodes;
    if (status == DualSimplex::Status::kTimeLimit) {
      interrupted = true;
      interrupted_bound = node->bound;
      break;
    }
    if (status == DualSimplex::Status::kInfeasible) continue;
    if (status == DualSimplex::Status::kUnbounded) {
      if (node->depth == 0) {
        unbounded = true;
        break;
      }
      continue;
    }
    const double lp_value = lp_.objective() + model_.objective_offset();
    const double bound = RoundBound(lp_value);
    if (Dominated(bound)) continue;

    const std::vector<double> x = lp_.primal();
    const int branch = ChooseBranchVariable(model_, integer_vars_, x);
    if (branch < 0) {
      TryIncumbent(x);
      continue;
    }
    const double v = x[branch];
    const double down = std::floor(v);
    const double up = down + 1.0;
    auto make_child = [&](bool go_up) {
      auto child = std::make_shared<Node>();
      child->bound = bound;
      child->depth = node->depth + 1;
      child->id = next_id++;
      child->changes = node->changes;
      double lo = lp_.column_lower(branch);
      double hi = lp_.column_upper(branch);
      if (go_up) {
        lo = up;
      } else {
        hi = down;
      }
      auto it = std::find_if(child->changes.begin(), child->changes.end(),
                             [&](const BoundChange& c) { return c.var == branch; });
      if (it != child->changes.end()) {
        it->lower = lo;
        it->upper = hi;
      } else {
        child->changes.push_back({branch, lo, hi});
      }
      open.push(std::move(child));
    };
    const bool up_first = v - down >= 0.5;
    make_child(up_first);
    make_child(!up_first);
  }

  result.lp_iterations = lp_.iterations();
  result.seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  if (unbounded) {
    result.status = SolveStatus::kUnbounded;
    return result;
  }
  if (interrupted) {
    double bound = interrupted_bound;
    while (!open.empty()) {
      if (!Dominated(open.top()->bound)) bound = std::min(bound, open.top()->bound);
      open.pop();
    }
    if (has_incumbent_) {
      result.status = SolveStatus::kFeasible;
      result.values = incumbent_;
      result.objective_value = incumbent_value_;
      result.best_bound = std::min(bound, incumbent_value_);
    } else {
      result.status = SolveStatus::kNoSolutionFound;
      result.best_bound = bound;
    }
    return result;
  }
  if (has_incumbent_) {
    result.status = SolveStatus::kOptimal;
    result.values = incumbent_;
    result.objective_value = incumbent_value_;
    result.best_bound = incumbent_value_;
  } else {
    result.status = SolveStatus::kInfeasible;
  }
  return result;
}

}  // namespace

SolveResult Solve(const LinearModel& model, const SolveOptions& options) {
  model.Validate();
  BranchAndBound bnb(model, options);
  return bnb.Run();
}

}  // namespace robustnet::lp
