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

// Column generation for the covering LP of an MVBP instance:
//
//   min  sum_C w_C x_C   s.t.  sum_{C contains i} x_C >= 1 for every item i,
//                              x >= 0,
//
// where C ranges over (bin type, item set, incarnation assignment) triples
// that fit the bin type. Pricing is one weighted knapsack per bin type,
// solved by the MMK approximation scheme with item profits equal to the
// master's row duals.

#ifndef MVBP_COVER_LP_H_
#define MVBP_COVER_LP_H_

#include <optional>
#include <span>
#include <vector>

#include "mvbp/model.h"

namespace mvbp {

struct Column {
  int bin_type = 0;
  // Sorted by item; one entry per covered item.
  std::vector<Assignment> assignment;
  double cost = 0.0;

  bool operator==(const Column&) const = default;
};

// True iff the column's incarnations fit its bin type in every dimension.
bool IsCompatible(const Instance& instance, const Column& column);

// One singleton column per item, using the dual-oblivious selector pair.
std::vector<Column> InitialColumns(const Instance& instance);

// Best column over all bin types whose dual profit exceeds its cost by more
// than the LP tolerance, ranked by profit / cost (zero-cost columns with
// positive profit rank first; ties to the lower bin type).
std::optional<Column> Separate(const Instance& instance,
                               std::span<const double> duals,
                               double epsilon_sep);

class IterationLimitError : public Error {
 public:
  using Error::Error;
};

struct CoverLpSolution {
  std::vector<Column> columns;
  std::vector<double> x;
  double value = 0.0;
  std::vector<double> duals;
  double epsilon = 0.0;
  // Indices of columns with x above kLpTolerance, ascending.
  std::vector<int> support;
  // Master objective after each solve, first to last.
  std::vector<double> objective_history;
  int columns_added = 0;
};

// Iterates master solve / Separate until no violated column remains.
// Throws IterationLimitError after 50 * n * T column additions.
CoverLpSolution SolveCoverLp(const Instance& instance, double epsilon_lp = 0.1);

}  // namespace mvbp

#endif  // MVBP_COVER_LP_H_
