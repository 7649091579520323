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

// Dense two-phase primal simplex.
//
// Every optimal result is a basic (vertex) solution: at most `num_rows()`
// structural and slack variables are strictly positive. Callers that round
// LP solutions rely on this, so the solver never returns an interior point.
//
// Pivoting is Dantzig's largest-coefficient rule; after 2 * (rows + columns)
// consecutive non-improving pivots the phase switches to Bland's rule for
// guaranteed termination.

#ifndef MVBP_LP_H_
#define MVBP_LP_H_

#include <span>
#include <vector>

#include "mvbp/model.h"

namespace mvbp {

// Feasibility / optimality tolerance.
inline constexpr double kLpTolerance = 1e-7;
// Smallest acceptable pivot magnitude.
inline constexpr double kPivotTolerance = 1e-10;

enum class ObjectiveSense { kMaximize, kMinimize };
enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

// Variables are implicitly bounded below by zero.
struct LpProblem {
  ObjectiveSense sense = ObjectiveSense::kMaximize;
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<RowSense> row_senses;
  std::vector<double> rhs;

  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_cols() const { return static_cast<int>(objective.size()); }
  void AddRow(std::vector<double> coefficients, RowSense row_sense,
              double right_hand_side);
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> primal;
  double objective = 0.0;
  // d(objective) / d(rhs[r]), in the problem's own sense.
  std::vector<double> duals;
  // Basic variable per row. Index c < num_cols is structural variable c;
  // num_cols + r is the slack of row r and num_cols + num_rows + r the
  // artificial of a redundant row r.
  std::vector<int> basis;
  int iterations = 0;
};

// Thrown when no pivot above kPivotTolerance is available where one is
// needed, or when the iteration cap is hit. The caller may rescale and retry.
class LpNumericalError : public Error {
 public:
  using Error::Error;
};

LpResult SolveLp(const LpProblem& problem);

// Row prices of an optimal result. Throws std::logic_error otherwise.
std::span<const double> Duals(const LpResult& result);

// Number of structural variables with value above `tolerance`.
int PositiveSupportSize(const LpResult& result,
                        double tolerance = kLpTolerance);

// Largest violation of the problem's constraints by `primal`, including
// negativity.
double MaxPrimalViolation(const LpProblem& problem,
                          std::span<const double> primal);

// Sum of rhs[r] * duals[r].
double DualObjective(const LpProblem& problem, std::span<const double> duals);

}  // namespace mvbp

#endif  // MVBP_LP_H_
