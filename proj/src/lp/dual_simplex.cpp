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

#include "robustnet/lp/dual_simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace robustnet::lp {
namespace {

constexpr double kPrimalTol = 1e-7;
constexpr double kDualTol = 1e-9;
constexpr double kPivotTol = 1e-9;
constexpr double kDropTol = 1e-13;
constexpr size_t kMaxTableauEntries = size_t{400} * 1000 * 1000;

}  // namespace

DualSimplex::DualSimplex(const LinearModel& model)
    : m_(model.num_constraints()), n_(model.num_variables()) {
  cols_ = n_ + m_;
  if (static_cast<size_t>(m_) * cols_ > kMaxTableauEntries) {
    throw ModelError("model too large for the bundled dense solver (" +
                     std::to_string(m_) + " rows, " + std::to_string(n_) +
                     " columns)");
  }
  rows_.resize(m_);
  cost_.assign(cols_, 0.0);
  lo_.assign(cols_, 0.0);
  hi_.assign(cols_, 0.0);
  for (int j = 0; j < n_; ++j) {
    const Variable& v = model.variable(j);
    cost_[j] = v.objective;
    lo_[j] = v.lower;
    hi_[j] = v.upper;
  }
  blo_.resize(cols_);
  bhi_.resize(cols_);
  for (int j = 0; j < n_; ++j) {
    blo_[j] = std::isfinite(lo_[j]) ? lo_[j] : -kBox;
    bhi_[j] = std::isfinite(hi_[j]) ? hi_[j] : kBox;
  }
  for (int i = 0; i < m_; ++i) {
    const Constraint& c = model.constraint(i);
    // Merge duplicate entries so the tableau sees one coefficient per column.
    std::vector<Term> merged = c.terms;
    std::sort(merged.begin(), merged.end(),
              [](const Term& a, const Term& b) { return a.var < b.var; });
    std::vector<Term> row;
    for (const Term& t : merged) {
      if (!row.empty() && row.back().var == t.var) {
        row.back().coef += t.coef;
      } else {
        row.push_back(t);
      }
    }
    std::erase_if(row, [](const Term& t) { return t.coef == 0.0; });
    rows_[i] = std::move(row);

    const int j = n_ + i;
    switch (c.comparator) {
      case Comparator::kLessEqual:
        lo_[j] = -kInfinity;
        hi_[j] = c.rhs;
        break;
      case Comparator::kGreaterEqual:
        lo_[j] = c.rhs;
        hi_[j] = kInfinity;
        break;
      case Comparator::kEqual:
        lo_[j] = c.rhs;
        hi_[j] = c.rhs;
        break;
    }
    double amin = 0.0, amax = 0.0;
    for (const Term& t : rows_[i]) {
      const double a = t.coef * blo_[t.var];
      const double b = t.coef * bhi_[t.var];
      amin += std::min(a, b);
      amax += std::max(a, b);
    }
    blo_[j] = std::isfinite(lo_[j]) ? lo_[j] : std::min(amin, hi_[j]);
    bhi_[j] = std::isfinite(hi_[j]) ? hi_[j] : std::max(amax, lo_[j]);
  }
  head_.resize(m_);
  where_.assign(cols_, -1);
  x_.assign(cols_, 0.0);
  for (int j = 0; j < n_; ++j) {
    x_[j] = cost_[j] >= 0.0 ? blo_[j] : bhi_[j];
  }
  ResetTableau();
  RecomputeBasicValues();
  RecomputeReducedCosts();
}

void DualSimplex::ResetTableau() {
  tab_.assign(static_cast<size_t>(m_) * cols_, 0.0);
  for (int i = 0; i < m_; ++i) {
    for (const Term& t : rows_[i]) tab(i, t.var) = -t.coef;
    tab(i, n_ + i) = 1.0;
  }
  std::fill(where_.begin(), where_.end(), -1);
  for (int i = 0; i < m_; ++i) {
    head_[i] = n_ + i;
    where_[n_ + i] = i;
  }
}

void DualSimplex::Refactor() {
  const std::vector<int> target = head_;
  std::vector<char> in_target(cols_, 0);
  for (int j : target) in_target[j] = 1;
  ResetTableau();
  for (int q : target) {
    if (where_[q] >= 0) continue;
    int best = -1;
    double best_abs = kPivotTol;
    for (int i = 0; i < m_; ++i) {
      if (in_target[head_[i]]) continue;
      const double a = std::abs(tab(i, q));
      if (a > best_abs) {
        best_abs = a;
        best = i;
      }
    }
    if (best < 0) continue;  // dependent column: a slack stays basic instead
    // Plain Gauss-Jordan step; values are recomputed afterwards.
    const int r = best;
    const double piv = tab(r, q);
    double* rowr = &tab_[static_cast<size_t>(r) * cols_];
    for (int j = 0; j < cols_; ++j) rowr[j] /= piv;
    rowr[q] = 1.0;
    scratch_.clear();
    for (int j = 0; j < cols_; ++j) {
      if (std::abs(rowr[j]) > kDropTol) scratch_.push_back(j);
    }
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* rowi = &tab_[static_cast<size_t>(i) * cols_];
      const double f = rowi[q];
      if (f == 0.0) continue;
      for (int j : scratch_) rowi[j] -= f * rowr[j];
      rowi[q] = 0.0;
    }
    where_[head_[r]] = -1;
    head_[r] = q;
    where_[q] = r;
  }
  // Columns of the old basis that could not re-enter become nonbasic.
  for (int j = 0; j < cols_; ++j) {
    if (where_[j] < 0) x_[j] = std::clamp(x_[j], blo_[j], bhi_[j]);
  }
  RecomputeReducedCosts();
  MakeDualFeasible();
  RecomputeBasicValues();
}

void DualSimplex::RecomputeBasicValues() {
  std::vector<double> xb(m_, 0.0);
  for (int j = 0; j < cols_; ++j) {
    if (where_[j] >= 0 || x_[j] == 0.0) continue;
    const double v = x_[j];
    for (int i = 0; i < m_; ++i) {
      const double a = tab(i, j);
      if (a != 0.0) xb[i] -= a * v;
    }
  }
  for (int i = 0; i < m_; ++i) x_[head_[i]] = xb[i];
}

void DualSimplex::RecomputeReducedCosts() {
  d_ = cost_;
  for (int i = 0; i < m_; ++i) {
    const double cb = cost_[head_[i]];
    if (cb == 0.0) continue;
    const double* row = &tab_[static_cast<size_t>(i) * cols_];
    for (int j = 0; j < cols_; ++j) {
      if (row[j] != 0.0) d_[j] -= cb * row[j];
    }
  }
  for (int i = 0; i < m_; ++i) d_[head_[i]] = 0.0;
}

void DualSimplex::MakeDualFeasible() {
  for (int j = 0; j < cols_; ++j) {
    if (where_[j] >= 0) continue;
    double want;
    if (blo_[j] == bhi_[j]) {
      want = blo_[j];
    } else if (d_[j] > kDualTol) {
      want = blo_[j];
    } else if (d_[j] < -kDualTol) {
      want = bhi_[j];
    } else {
      // Zero reduced cost: keep the current side when it is still a bound,
      // otherwise prefer a true finite bound.
      if (x_[j] == blo_[j] || x_[j] == bhi_[j]) {
        want = x_[j];
      } else if (std::isfinite(lo_[j])) {
        want = blo_[j];
      } else if (std::isfinite(hi_[j])) {
        want = bhi_[j];
      } else {
        want = blo_[j];
      }
    }
    if (want == x_[j]) continue;
    const double delta = want - x_[j];
    for (int i = 0; i < m_; ++i) {
      const double a = tab(i, j);
      if (a != 0.0) x_[head_[i]] -= a * delta;
    }
    x_[j] = want;
  }
}

void DualSimplex::SetColumnBounds(int j, double lower, double upper) {
  lo_[j] = lower;
  hi_[j] = upper;
  blo_[j] = std::isfinite(lower) ? lower : -kBox;
  bhi_[j] = std::isfinite(upper) ? upper : kBox;
}

int DualSimplex::ChooseLeavingRow(bool bland) const {
  int best = -1;
  double best_inf = 0.0;
  for (int i = 0; i < m_; ++i) {
    const int p = head_[i];
    const double v = x_[p];
    double inf = 0.0;
    if (v < blo_[p] - kPrimalTol) {
      inf = blo_[p] - v;
    } else if (v > bhi_[p] + kPrimalTol) {
      inf = v - bhi_[p];
    }
    if (inf <= 0.0) continue;
    if (bland) {
      if (best < 0 || p < head_[best]) best = i;
    } else if (inf > best_inf) {
      best_inf = inf;
      best = i;
    }
  }
  return best;
}

int DualSimplex::ChooseEnteringColumn(int row, bool increase,
                                      bool bland) const {
  // The leaving variable must move up (increase) or down. Column j can help
  // when moving it in its feasible direction pushes the basic variable the
  // right way; x_p = -sum T_pj x_j.
  const double* t = &tab_[static_cast<size_t>(row) * cols_];
  auto eligible = [&](int j, double& ratio) {
    if (where_[j] >= 0 || blo_[j] == bhi_[j]) return false;
    const double a = t[j];
    if (std::abs(a) < kPivotTol) return false;
    const bool at_lower = x_[j] <= blo_[j];
    // Moving x_j up changes x_p by -a.
    const bool helps = at_lower ? ((-a > 0) == increase)
                                : ((a > 0) == increase);
    if (!helps) return false;
    const double dj = at_lower ? std::max(d_[j], 0.0) : std::max(-d_[j], 0.0);
    ratio = dj / std::abs(a);
    return true;
  };
  if (bland) {
    int best = -1;
    double best_ratio = kInfinity;
    for (int j = 0; j < cols_; ++j) {
      double ratio;
      if (!eligible(j, ratio)) continue;
      if (ratio < best_ratio - 1e-12) {
        best_ratio = ratio;
        best = j;
      }
    }
    return best;
  }
  // Harris two-pass: bound the step with relaxed ratios, then pick the
  // largest pivot among the candidates inside that bound.
  double bound = kInfinity;
  for (int j = 0; j < cols_; ++j) {
    double ratio;
    if (!eligible(j, ratio)) continue;
    const double a = std::abs(t[j]);
    bound = std::min(bound, ratio + kDualTol / a);
  }
  if (!std::isfinite(bound)) return -1;
  int best = -1;
  double best_abs = 0.0;
  for (int j = 0; j < cols_; ++j) {
    double ratio;
    if (!eligible(j, ratio)) continue;
    if (ratio > bound) continue;
    const double a = std::abs(t[j]);
    if (a > best_abs) {
      best_abs = a;
      best = j;
    }
  }
  return best;
}

void DualSimplex::Pivot(int r, int q, double target) {
  const int p = head_[r];
  double* rowr = &tab_[static_cast<size_t>(r) * cols_];
  const double piv = rowr[q];
  // Primal step along column q.
  const double dxp = target - x_[p];
  const double dxq = -dxp / piv;
  for (int i = 0; i < m_; ++i) {
    const double a = tab(i, q);
    if (a != 0.0) x_[head_[i]] -= a * dxq;
  }
  x_[q] += dxq;
  x_[p] = target;

  const double inv = 1.0 / piv;
  scratch_.clear();
  for (int j = 0; j < cols_; ++j) {
    if (rowr[j] == 0.0) continue;
    rowr[j] *= inv;
    if (std::abs(rowr[j]) < kDropTol) {
      rowr[j] = 0.0;
    } else {
      scratch_.push_back(j);
    }
  }
  rowr[q] = 1.0;
  for (int i = 0; i < m_; ++i) {
    if (i == r) continue;
    double* rowi = &tab_[static_cast<size_t>(i) * cols_];
    const double f = rowi[q];
    if (f == 0.0) continue;
    for (int j : scratch_) {
      double v = rowi[j] - f * rowr[j];
      if (std::abs(v) < kDropTol) v = 0.0;
      rowi[j] = v;
    }
    rowi[q] = 0.0;
  }
  const double dq = d_[q];
  if (dq != 0.0) {
    for (int j : scratch_) d_[j] -= dq * rowr[j];
  }
  d_[q] = 0.0;
  where_[p] = -1;
  where_[q] = r;
  head_[r] = q;
  ++iterations_;
}

double DualSimplex::MaxRowResidual() const {
  double worst = 0.0;
  for (int i = 0; i < m_; ++i) {
    double act = 0.0;
    for (const Term& t : rows_[i]) act += t.coef * x_[t.var];
    worst = std::max(worst, std::abs(act - x_[n_ + i]));
  }
  return worst;
}

bool DualSimplex::RestsOnArtificialBound() const {
  for (int j = 0; j < n_; ++j) {
    if ((!std::isfinite(hi_[j]) && x_[j] >= 0.5 * kBox) ||
        (!std::isfinite(lo_[j]) && x_[j] <= -0.5 * kBox)) {
      return true;
    }
  }
  return false;
}

DualSimplex::Status DualSimplex::Solve(
    std::chrono::steady_clock::time_point deadline) {
  MakeDualFeasible();
  bool refactored = false;
  int64_t stall = 0;
  double last_obj = -kInfinity;
  int64_t since_recompute = 0;
  for (int64_t local = 0;; ++local) {
    if ((local & 63) == 0 && std::chrono::steady_clock::now() > deadline) {
      return Status::kTimeLimit;
    }
    if (++since_recompute >= 200) {
      RecomputeBasicValues();
      since_recompute = 0;
    }
    const bool bland = stall > 200;
    const int r = ChooseLeavingRow(bland);
    if (r < 0) {
      RecomputeReducedCosts();
      MakeDualFeasible();
      RecomputeBasicValues();
      if (ChooseLeavingRow(false) >= 0) continue;
      if (MaxRowResidual() > 1e-7 && !refactored) {
        Refactor();
        refactored = true;
        continue;
      }
      return RestsOnArtificialBound() ? Status::kUnbounded : Status::kOptimal;
    }
    const int p = head_[r];
    const bool increase = x_[p] < blo_[p];
    const int q = ChooseEnteringColumn(r, increase, bland);
    if (q < 0) {
      if (!refactored) {
        Refactor();
        refactored = true;
        continue;
      }
      return Status::kInfeasible;
    }
    Pivot(r, q, increase ? blo_[p] : bhi_[p]);
    const double obj = objective();
    if (obj > last_obj + 1e-12) {
      last_obj = obj;
      stall = 0;
    } else {
      ++stall;
    }
  }
}

double DualSimplex::objective() const {
  double z = 0.0;
  for (int j = 0; j < n_; ++j) z += cost_[j] * x_[j];
  return z;
}

std::vector<double> DualSimplex::primal() const {
  return std::vector<double>(x_.begin(), x_.begin() + n_);
}

}  // namespace robustnet::lp
