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

#ifndef ROBUSTNET_LP_DUAL_SIMPLEX_HPP_
#define ROBUSTNET_LP_DUAL_SIMPLEX_HPP_

#include <chrono>
#include <cstdint>
#include <vector>

#include "robustnet/lp/linear_model.hpp"

namespace robustnet::lp {

// Dense-tableau bounded dual simplex for the LP relaxation of a
// LinearModel.
//
// Every row i gets an activity variable r_i = a_i x with the row's bounds,
// so the working system is [A | -I] z = 0 and all constraints become
// variable bounds. Infinite bounds are boxed at +/-kBox so any basis can be
// made dual feasible by moving nonbasic columns to the bound matching the
// sign of their reduced cost; the dual simplex then only restores primal
// feasibility. This makes re-solving after bound changes (branching) cheap:
// the previous basis is reused as is.
//
// Intended for desk-scale models: memory is rows x (columns + rows) doubles.
class DualSimplex {
 public:
  enum class Status { kOptimal, kInfeasible, kUnbounded, kTimeLimit };

  static constexpr double kBox = 1e7;

  explicit DualSimplex(const LinearModel& model);

  // Changes the bounds of structural column j. Takes effect at next Solve().
  void SetColumnBounds(int j, double lower, double upper);
  double column_lower(int j) const { return lo_[j]; }
  double column_upper(int j) const { return hi_[j]; }

  Status Solve(std::chrono::steady_clock::time_point deadline);

  double objective() const;
  // Structural values of the last solve.
  std::vector<double> primal() const;
  int64_t iterations() const { return iterations_; }
  int num_rows() const { return m_; }
  int num_columns() const { return n_; }

 private:
  double& tab(int i, int j) { return tab_[static_cast<size_t>(i) * cols_ + j]; }
  double tab(int i, int j) const {
    return tab_[static_cast<size_t>(i) * cols_ + j];
  }

  void ResetTableau();
  void Refactor();
  void RecomputeBasicValues();
  void RecomputeReducedCosts();
  // Places nonbasic columns on the bound matching their reduced cost sign.
  void MakeDualFeasible();
  int ChooseLeavingRow(bool bland) const;
  int ChooseEnteringColumn(int row, bool increase, bool bland) const;
  void Pivot(int row, int col, double target);
  double MaxRowResidual() const;
  bool RestsOnArtificialBound() const;

  int m_ = 0;
  int n_ = 0;
  int cols_ = 0;  // n_ + m_
  std::vector<std::vector<Term>> rows_;
  std::vector<double> tab_;
  std::vector<int> head_;   // basic column per row
  std::vector<int> where_;  // row of a basic column, -1 when nonbasic
  std::vector<double> x_;
  std::vector<double> d_;
  std::vector<double> cost_;
  std::vector<double> lo_, hi_;    // true bounds
  std::vector<double> blo_, bhi_;  // boxed bounds
  std::vector<int> scratch_;
  int64_t iterations_ = 0;
};

}  // namespace robustnet::lp

#endif  // ROBUSTNET_LP_DUAL_SIMPLEX_HPP_
