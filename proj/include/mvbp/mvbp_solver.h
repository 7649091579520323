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

// LP-guided MVBP solver.
//
// 1. Solve the covering LP (value OPT*).
// 2. Greedy phase: repeatedly buy the support column with the highest
//    uncovered dual profit per unit weight, until the bought weight reaches
//    ln(2D) * OPT* or every item is covered.
// 3. Pack the leftover items with the dual-oblivious First-Fit packer.
//
// The result costs at most (ln 2D + 1) OPT* + sum_t w_t + max_t w_t; every
// report carries that bound and whether it held.

#ifndef MVBP_MVBP_SOLVER_H_
#define MVBP_MVBP_SOLVER_H_

#include <span>
#include <vector>

#include "mvbp/cover_lp.h"
#include "mvbp/model.h"

namespace mvbp {

// Bin-type count above which the subset wrapper falls back to a single
// unrestricted solve.
inline constexpr int kMaxWrappedBinTypes = 20;

struct GreedyStep {
  int column = 0;  // index into CoverLpSolution::columns
  double rate = 0.0;
  double covered_profit = 0.0;
  // Dual mass still uncovered after this pick.
  double residual_profit = 0.0;
  // prod_{q <= k} max(0, 1 - w_q / OPT*) * sum_i y_i.
  double residual_bound = 0.0;
};

struct GreedyState {
  std::vector<int> chosen;  // column indices in pick order
  std::vector<int> uncovered;
  double weight = 0.0;
  std::vector<GreedyStep> trace;
  // True when the loop stopped on the weight threshold with items left.
  bool reached_weight_bound = false;
};

class EmptySupportError : public Error {
 public:
  using Error::Error;
};

GreedyState GreedyPhase(const Instance& instance, const CoverLpSolution& cover,
                        std::span<const double> y, double rho);

struct SolveReport {
  Packing packing;
  double cost = 0.0;
  double lp_value = 0.0;       // OPT*
  double greedy_cost = 0.0;    // w(G)
  double residual_cost = 0.0;  // cost of the First-Fit bins
  double dual_sum = 0.0;       // sum_i y_i
  int greedy_picks = 0;
  int lp_columns = 0;
  // (ln 2D + 1) OPT* + sum_t w_t + w_max, or the unweighted form
  // (ln 2D + 1) OPT* + T + 1 for SolveUnweighted.
  double bound = 0.0;
  bool bound_ok = false;
  // Greedy internals checked on every run.
  bool greedy_cap_ok = true;
  bool decay_ok = true;
  // Wrapper bookkeeping. `bin_type_mask` is the subset of types the
  // returned packing was computed over (all types when unwrapped).
  unsigned long long bin_type_mask = 0;
  int subsets_solved = 0;
  bool wrapper_fallback = false;
};

// Tolerance on every bound check: 1e-6 * max(1, bound).
bool WithinBound(double value, double bound);

SolveReport SolveWeighted(const Instance& instance, double epsilon_lp = 0.1);
// Requires every bin-type weight to be 1.
SolveReport SolveUnweighted(const Instance& instance, double epsilon_lp = 0.1);
// Minimum over SolveWeighted on every nonempty subset of bin types that can
// hold every item. Ties go to the lower subset mask.
SolveReport SolveWeightedWrapped(const Instance& instance,
                                 double epsilon_lp = 0.1);

// `instance` restricted to the bin types in `mask`, in index order.
Instance RestrictBinTypes(const Instance& instance, unsigned long long mask);

}  // namespace mvbp

#endif  // MVBP_MVBP_SOLVER_H_
