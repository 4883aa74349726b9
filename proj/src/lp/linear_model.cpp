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

#include "robustnet/lp/linear_model.hpp"

#include <cmath>
#include <sstream>

namespace robustnet::lp {

int LinearModel::AddVariable(std::string name, double lower, double upper,
                             bool integer, double objective,
                             int branch_priority) {
  const int index = num_variables();
  name_index_.emplace(name, index);
  variables_.push_back(Variable{std::move(name), lower, upper, integer,
                                objective, branch_priority});
  return index;
}

int LinearModel::AddConstraint(std::string name, std::vector<Term> terms,
                               Comparator comparator, double rhs) {
  constraints_.push_back(
      Constraint{std::move(name), std::move(terms), comparator, rhs});
  return num_constraints() - 1;
}

void LinearModel::SetObjectiveCoefficient(int var, double coef) {
  variables_.at(var).objective = coef;
}

void LinearModel::SetBounds(int var, double lower, double upper) {
  Variable& v = variables_.at(var);
  v.lower = lower;
  v.upper = upper;
}

std::vector<Term> LinearModel::ObjectiveTerms() const {
  std::vector<Term> terms;
  for (int j = 0; j < num_variables(); ++j) {
    if (variables_[j].objective != 0.0) {
      terms.push_back({j, variables_[j].objective});
    }
  }
  return terms;
}

int LinearModel::FindVariable(std::string_view name) const {
  auto it = name_index_.find(std::string(name));
  return it == name_index_.end() ? -1 : it->second;
}

double LinearModel::EvaluateObjective(const std::vector<double>& values) const {
  double total = objective_offset_;
  for (int j = 0; j < num_variables(); ++j) {
    total += variables_[j].objective * values.at(j);
  }
  return total;
}

void LinearModel::Validate() const {
  for (const Variable& v : variables_) {
    if (std::isnan(v.lower) || std::isnan(v.upper)) {
      throw ModelError("variable '" + v.name + "' has a NaN bound");
    }
    if (v.lower > v.upper) {
      std::ostringstream os;
      os << "variable '" << v.name << "' has lower bound " << v.lower
         << " above upper bound " << v.upper;
      throw ModelError(os.str());
    }
    if (!std::isfinite(v.objective)) {
      throw ModelError("variable '" + v.name +
                       "' has a non-finite objective coefficient");
    }
  }
  if (name_index_.size() != variables_.size()) {
    for (int j = 0; j < num_variables(); ++j) {
      if (name_index_.at(variables_[j].name) != j) {
        throw ModelError("variable name '" + variables_[j].name +
                         "' is declared twice");
      }
    }
  }
  for (const Constraint& c : constraints_) {
    for (const Term& t : c.terms) {
      if (t.var < 0 || t.var >= num_variables()) {
        throw ModelError("constraint '" + c.name +
                         "' references undeclared variable index " +
                         std::to_string(t.var));
      }
      if (!std::isfinite(t.coef)) {
        throw ModelError("constraint '" + c.name +
                         "' has a non-finite coefficient on '" +
                         variables_[t.var].name + "'");
      }
    }
    if (std::isnan(c.rhs)) {
      throw ModelError("constraint '" + c.name + "' has a NaN right-hand side");
    }
  }
}

std::string_view ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "Optimal";
    case SolveStatus::kFeasible:
      return "Feasible";
    case SolveStatus::kInfeasible:
      return "Infeasible";
    case SolveStatus::kUnbounded:
      return "Unbounded";
    case SolveStatus::kNoSolutionFound:
      return "NoSolutionFound";
  }
  return "Unknown";
}

std::string Describe(const Violation& violation) {
  std::ostringstream os;
  switch (violation.kind) {
    case Violation::Kind::kConstraint:
      os << "constraint '" << violation.name << "' violated by "
         << violation.amount;
      break;
    case Violation::Kind::kIntegrality:
      os << "variable '" << violation.name << "' is " << violation.amount
         << " away from an integer";
      break;
    case Violation::Kind::kBound:
      os << "variable '" << violation.name << "' outside its bounds by "
         << violation.amount;
      break;
    case Violation::Kind::kUnknownVariable:
      os << "unknown variable '" << violation.name << "'";
      break;
    case Violation::Kind::kMissingValue:
      os << "no value for variable '" << violation.name << "'";
      break;
  }
  return os.str();
}

std::vector<Violation> ValidateSolution(const LinearModel& model,
                                        const std::vector<double>& values) {
  std::vector<Violation> out;
  if (static_cast<int>(values.size()) != model.num_variables()) {
    out.push_back({Violation::Kind::kMissingValue,
                   "<expected " + std::to_string(model.num_variables()) +
                       " values, got " + std::to_string(values.size()) + ">",
                   0.0});
    return out;
  }
  const double tol = kFeasibilityTolerance;
  for (int j = 0; j < model.num_variables(); ++j) {
    const Variable& v = model.variable(j);
    const double x = values[j];
    const double below = v.lower - x;
    const double above = x - v.upper;
    if (below > tol || above > tol || std::isnan(x)) {
      out.push_back({Violation::Kind::kBound, v.name,
                     std::isnan(x) ? kInfinity : std::max(below, above)});
    }
    if (v.integer) {
      const double frac = std::abs(x - std::round(x));
      if (frac > tol) {
        out.push_back({Violation::Kind::kIntegrality, v.name, frac});
      }
    }
  }
  for (const Constraint& c : model.constraints()) {
    double activity = 0.0;
    for (const Term& t : c.terms) activity += t.coef * values.at(t.var);
    double excess = 0.0;
    switch (c.comparator) {
      case Comparator::kLessEqual:
        excess = activity - c.rhs;
        break;
      case Comparator::kGreaterEqual:
        excess = c.rhs - activity;
        break;
      case Comparator::kEqual:
        excess = std::abs(activity - c.rhs);
        break;
    }
    if (excess > tol || std::isnan(activity)) {
      out.push_back({Violation::Kind::kConstraint, c.name, excess});
    }
  }
  return out;
}

std::vector<Violation> ValidateSolution(
    const LinearModel& model, const std::map<std::string, double>& values) {
  std::vector<Violation> out;
  std::vector<double> dense(model.num_variables(), 0.0);
  std::vector<bool> seen(model.num_variables(), false);
  for (const auto& [name, value] : values) {
    const int j = model.FindVariable(name);
    if (j < 0) {
      out.push_back({Violation::Kind::kUnknownVariable, name, 0.0});
      continue;
    }
    dense[j] = value;
    seen[j] = true;
  }
  for (int j = 0; j < model.num_variables(); ++j) {
    if (!seen[j]) {
      out.push_back(
          {Violation::Kind::kMissingValue, model.variable(j).name, 0.0});
    }
  }
  auto rest = ValidateSolution(model, dense);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace robustnet::lp
