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

#ifndef ROBUSTNET_LP_LINEAR_MODEL_HPP_
#define ROBUSTNET_LP_LINEAR_MODEL_HPP_

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace robustnet::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Tolerance used for constraint satisfaction and integrality, both in the
// solver and in validate_solution().
inline constexpr double kFeasibilityTolerance = 1e-6;

enum class Comparator { kLessEqual, kEqual, kGreaterEqual };

struct Term {
  int var = -1;
  double coef = 0.0;
};

struct Variable {
  std::string name;
  double lower = 0.0;
  double upper = kInfinity;
  bool integer = false;
  double objective = 0.0;
  // Higher priorities are branched on first.
  int branch_priority = 0;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Comparator comparator = Comparator::kLessEqual;
  double rhs = 0.0;
};

// Thrown when a model is malformed. The message names the offending variable
// or constraint.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A minimization mixed-integer linear program. Variables and constraints are
// addressed by dense indices in insertion order.
class LinearModel {
 public:
  LinearModel() = default;

  int AddVariable(std::string name, double lower, double upper, bool integer,
                  double objective = 0.0, int branch_priority = 0);
  int AddConstraint(std::string name, std::vector<Term> terms,
                    Comparator comparator, double rhs);

  void SetObjectiveCoefficient(int var, double coef);
  void SetBounds(int var, double lower, double upper);
  void SetObjectiveOffset(double offset) { objective_offset_ = offset; }

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  const Variable& variable(int i) const { return variables_.at(i); }
  const Constraint& constraint(int i) const { return constraints_.at(i); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  double objective_offset() const { return objective_offset_; }

  // Sparse view of the objective (nonzero coefficients only).
  std::vector<Term> ObjectiveTerms() const;

  // Returns -1 when no variable carries this name.
  int FindVariable(std::string_view name) const;

  double EvaluateObjective(const std::vector<double>& values) const;

  // Throws ModelError on the first structural defect: unknown variable index,
  // non-finite coefficient, lower > upper, NaN bounds or a repeated name.
  void Validate() const;

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::unordered_map<std::string, int> name_index_;
  double objective_offset_ = 0.0;
};

enum class SolveStatus {
  kOptimal,
  kFeasible,  // time-limited, incumbent available
  kInfeasible,
  kUnbounded,
  kNoSolutionFound,  // time-limited, no incumbent
};

std::string_view ToString(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::kNoSolutionFound;
  std::vector<double> values;
  double objective_value = kInfinity;
  double best_bound = -kInfinity;
  int64_t nodes = 0;
  int64_t lp_iterations = 0;
  double seconds = 0.0;

  bool has_solution() const {
    return status == SolveStatus::kOptimal || status == SolveStatus::kFeasible;
  }
};

struct Violation {
  enum class Kind { kConstraint, kIntegrality, kBound, kUnknownVariable,
                    kMissingValue };
  Kind kind;
  std::string name;
  double amount = 0.0;
};

std::string Describe(const Violation& violation);

// Every constraint violated beyond kFeasibilityTolerance, every bound
// violation, and every integer variable farther than the tolerance from an
// integer. `values` must have one entry per variable.
std::vector<Violation> ValidateSolution(const LinearModel& model,
                                        const std::vector<double>& values);

// Name-keyed variant: unknown names and variables without a value are
// reported rather than ignored.
std::vector<Violation> ValidateSolution(
    const LinearModel& model, const std::map<std::string, double>& values);

}  // namespace robustnet::lp

#endif  // ROBUSTNET_LP_LINEAR_MODEL_HPP_
