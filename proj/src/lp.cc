// Copyright 2026 The mvbp Authors
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

#include "mvbp/lp.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace mvbp {

void LpProblem::AddRow(std::vector<double> coefficients, RowSense row_sense,
                       double right_hand_side) {
  rows.push_back(std::move(coefficients));
  row_senses.push_back(row_sense);
  rhs.push_back(right_hand_side);
}

namespace {

// Reduced costs below -kPricingTolerance make a column eligible to enter.
constexpr double kPricingTolerance = 1e-9;
// Positive column entries above this but at most kPivotTolerance make an
// "unbounded" verdict untrustworthy.
constexpr double kNoiseFloor = 1e-12;

// Simplex tableau in standard form: A x = b, x >= 0, b >= 0, minimizing.
// Columns are laid out as [structural | slacks | artificials].
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), data_(rows * (cols + 1), 0.0),
        reduced_(cols, 0.0), basis_(rows, -1) {}

  double& at(int r, int c) { return data_[r * (cols_ + 1) + c]; }
  double at(int r, int c) const { return data_[r * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  double rhs(int r) const { return at(r, cols_); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::vector<int>& basis() { return basis_; }
  const std::vector<int>& basis() const { return basis_; }

  // Installs cost vector `cost` and recomputes reduced costs and objective
  // for the current basis.
  void PriceOut(const std::vector<double>& cost) {
    cost_ = cost;
    for (int c = 0; c < cols_; ++c) reduced_[c] = cost[c];
    objective_ = 0.0;
    for (int r = 0; r < rows_; ++r) {
      const double cb = cost[basis_[r]];
      if (cb == 0.0) continue;
      for (int c = 0; c < cols_; ++c) reduced_[c] -= cb * at(r, c);
      objective_ += cb * rhs(r);
    }
  }

  void Pivot(int pivot_row, int pivot_col) {
    double* prow = &data_[pivot_row * (cols_ + 1)];
    const double inv = 1.0 / prow[pivot_col];
    for (int c = 0; c <= cols_; ++c) prow[c] *= inv;
    prow[pivot_col] = 1.0;
    for (int r = 0; r < rows_; ++r) {
      if (r == pivot_row) continue;
      double* row = &data_[r * (cols_ + 1)];
      const double f = row[pivot_col];
      if (f == 0.0) continue;
      for (int c = 0; c <= cols_; ++c) row[c] -= f * prow[c];
      row[pivot_col] = 0.0;
      if (row[cols_] < 0.0 && row[cols_] > -kNoiseFloor) row[cols_] = 0.0;
    }
    const double f = reduced_[pivot_col];
    if (f != 0.0) {
      objective_ += f * prow[cols_];
      for (int c = 0; c < cols_; ++c) reduced_[c] -= f * prow[c];
      reduced_[pivot_col] = 0.0;
    }
    basis_[pivot_row] = pivot_col;
  }

  double reduced(int c) const { return reduced_[c]; }
  double objective() const { return objective_; }
  double cost(int c) const { return cost_[c]; }

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
  std::vector<double> reduced_;
  std::vector<double> cost_;
  std::vector<int> basis_;
  double objective_ = 0.0;
};

enum class PhaseOutcome { kOptimal, kUnbounded };

// Runs primal simplex on the installed costs. Columns at or beyond
// `first_barred` never enter the basis.
PhaseOutcome RunPhase(Tableau& tab, int first_barred, int& iterations) {
  const int m = tab.rows();
  const int stall_limit = 2 * (m + tab.cols());
  const int iteration_cap = 100 * (m + tab.cols()) + 1000;
  bool bland = false;
  int stall = 0;
  for (int iter = 0;; ++iter) {
    if (iter >= iteration_cap) {
      throw LpNumericalError(
          fmt::format("simplex exceeded {} iterations", iteration_cap));
    }
    int enter = -1;
    double best = -kPricingTolerance;
    for (int c = 0; c < first_barred; ++c) {
      const double d = tab.reduced(c);
      if (bland) {
        if (d < -kPricingTolerance) {
          enter = c;
          break;
        }
      } else if (d < best) {
        best = d;
        enter = c;
      }
    }
    if (enter < 0) return PhaseOutcome::kOptimal;

    int leave = -1;
    double best_ratio = 0.0;
    double best_pivot = 0.0;
    double largest_entry = 0.0;
    for (int r = 0; r < m; ++r) {
      const double a = tab.at(r, enter);
      largest_entry = std::max(largest_entry, a);
      if (a <= kPivotTolerance) continue;
      const double ratio = std::max(tab.rhs(r), 0.0) / a;
      if (leave < 0) {
        leave = r;
        best_ratio = ratio;
        best_pivot = a;
        continue;
      }
      const double tie = 1e-12 * (1.0 + best_ratio);
      if (ratio < best_ratio - tie) {
        leave = r;
        best_ratio = ratio;
        best_pivot = a;
      } else if (ratio <= best_ratio + tie) {
        const bool take = bland ? tab.basis()[r] < tab.basis()[leave]
                                : a > best_pivot;
        if (take) {
          leave = r;
          best_ratio = std::min(ratio, best_ratio);
          best_pivot = a;
        }
      }
    }
    if (leave < 0) {
      if (largest_entry > kNoiseFloor) {
        throw LpNumericalError(fmt::format(
            "column {} has no pivot above {} (largest entry {})", enter,
            kPivotTolerance, largest_entry));
      }
      return PhaseOutcome::kUnbounded;
    }
    const double before = tab.objective();
    tab.Pivot(leave, enter);
    ++iterations;
    if (before - tab.objective() > 1e-12 * (1.0 + std::abs(before))) {
      stall = 0;
    } else if (++stall >= stall_limit) {
      bland = true;
    }
  }
}

}  // namespace

LpResult SolveLp(const LpProblem& problem) {
  const int n = problem.num_cols();
  const int m = problem.num_rows();
  for (const auto& row : problem.rows) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("LP row length differs from objective");
    }
  }
  if (static_cast<int>(problem.row_senses.size()) != m ||
      static_cast<int>(problem.rhs.size()) != m) {
    throw std::invalid_argument("LP row metadata has the wrong length");
  }

  // Normalize to b >= 0, remembering which rows were negated.
  std::vector<double> sign(m, 1.0);
  std::vector<RowSense> sense = problem.row_senses;
  for (int r = 0; r < m; ++r) {
    if (problem.rhs[r] < 0.0) {
      sign[r] = -1.0;
      if (sense[r] == RowSense::kLessEqual) {
        sense[r] = RowSense::kGreaterEqual;
      } else if (sense[r] == RowSense::kGreaterEqual) {
        sense[r] = RowSense::kLessEqual;
      }
    }
  }
  std::vector<int> slack_col(m, -1);
  std::vector<int> artificial_col(m, -1);
  int next = n;
  for (int r = 0; r < m; ++r) {
    if (sense[r] != RowSense::kEqual) slack_col[r] = next++;
  }
  const int first_artificial = next;
  for (int r = 0; r < m; ++r) {
    if (sense[r] != RowSense::kLessEqual) artificial_col[r] = next++;
  }
  const int total_cols = next;

  Tableau tab(m, total_cols);
  std::vector<int> initial_col(m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) tab.at(r, c) = sign[r] * problem.rows[r][c];
    tab.rhs(r) = sign[r] * problem.rhs[r];
    if (slack_col[r] >= 0) {
      tab.at(r, slack_col[r]) = sense[r] == RowSense::kLessEqual ? 1.0 : -1.0;
    }
    if (artificial_col[r] >= 0) tab.at(r, artificial_col[r]) = 1.0;
    initial_col[r] =
        artificial_col[r] >= 0 ? artificial_col[r] : slack_col[r];
    tab.basis()[r] = initial_col[r];
  }

  LpResult result;
  double rhs_scale = 1.0;
  for (double b : problem.rhs) rhs_scale = std::max(rhs_scale, std::abs(b));

  if (first_artificial < total_cols) {
    std::vector<double> phase1(total_cols, 0.0);
    for (int c = first_artificial; c < total_cols; ++c) phase1[c] = 1.0;
    tab.PriceOut(phase1);
    RunPhase(tab, first_artificial, result.iterations);
    if (tab.objective() > kLpTolerance * rhs_scale) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    // Drive zero-level artificials out of the basis where possible; rows
    // where that fails are redundant and keep their artificial.
    for (int r = 0; r < m; ++r) {
      if (tab.basis()[r] < first_artificial) continue;
      int col = -1;
      double best = kPivotTolerance;
      for (int c = 0; c < first_artificial; ++c) {
        if (std::abs(tab.at(r, c)) > best) {
          best = std::abs(tab.at(r, c));
          col = c;
        }
      }
      if (col >= 0) {
        tab.rhs(r) = 0.0;
        tab.Pivot(r, col);
      }
    }
  }

  const double direction =
      problem.sense == ObjectiveSense::kMaximize ? -1.0 : 1.0;
  std::vector<double> cost(total_cols, 0.0);
  for (int c = 0; c < n; ++c) cost[c] = direction * problem.objective[c];
  tab.PriceOut(cost);
  if (RunPhase(tab, first_artificial, result.iterations) ==
      PhaseOutcome::kUnbounded) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  result.status = LpStatus::kOptimal;
  result.primal.assign(n, 0.0);
  result.basis.resize(m);
  for (int r = 0; r < m; ++r) {
    const int col = tab.basis()[r];
    if (col < n) {
      result.primal[col] = std::max(tab.rhs(r), 0.0);
      result.basis[r] = col;
    } else if (col < first_artificial) {
      // Map the slack column back to its row.
      const int row = static_cast<int>(
          std::find(slack_col.begin(), slack_col.end(), col) -
          slack_col.begin());
      result.basis[r] = n + row;
    } else {
      const int row = static_cast<int>(
          std::find(artificial_col.begin(), artificial_col.end(), col) -
          artificial_col.begin());
      result.basis[r] = n + m + row;
    }
  }
  result.objective = 0.0;
  for (int c = 0; c < n; ++c) {
    result.objective += problem.objective[c] * result.primal[c];
  }
  // The initial basis columns form an identity in the starting tableau, so
  // their current entries are the columns of B^-1.
  result.duals.assign(m, 0.0);
  for (int r = 0; r < m; ++r) {
    double price = 0.0;
    for (int k = 0; k < m; ++k) {
      price += cost[tab.basis()[k]] * tab.at(k, initial_col[r]);
    }
    result.duals[r] = direction * sign[r] * price;
  }
  return result;
}

std::span<const double> Duals(const LpResult& result) {
  if (result.status != LpStatus::kOptimal) {
    throw std::logic_error("duals requested from a non-optimal LP result");
  }
  return result.duals;
}

int PositiveSupportSize(const LpResult& result, double tolerance) {
  return static_cast<int>(
      std::count_if(result.primal.begin(), result.primal.end(),
                    [tolerance](double v) { return v > tolerance; }));
}

double MaxPrimalViolation(const LpProblem& problem,
                          std::span<const double> primal) {
  double worst = 0.0;
  for (double v : primal) worst = std::max(worst, -v);
  for (int r = 0; r < problem.num_rows(); ++r) {
    double lhs = 0.0;
    for (int c = 0; c < problem.num_cols(); ++c) {
      lhs += problem.rows[r][c] * primal[c];
    }
    const double b = problem.rhs[r];
    switch (problem.row_senses[r]) {
      case RowSense::kLessEqual:
        worst = std::max(worst, lhs - b);
        break;
      case RowSense::kGreaterEqual:
        worst = std::max(worst, b - lhs);
        break;
      case RowSense::kEqual:
        worst = std::max(worst, std::abs(lhs - b));
        break;
    }
  }
  return worst;
}

double DualObjective(const LpProblem& problem, std::span<const double> duals) {
  double total = 0.0;
  for (int r = 0; r < problem.num_rows(); ++r) {
    total += problem.rhs[r] * duals[r];
  }
  return total;
}

}  // namespace mvbp
