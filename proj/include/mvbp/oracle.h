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

// Exhaustive solvers used as ground truth for small instances. They refuse
// rather than approximate when the search exceeds the budget.

#ifndef MVBP_ORACLE_H_
#define MVBP_ORACLE_H_

#include <cstdint>

#include "mvbp/cover_lp.h"
#include "mvbp/model.h"

namespace mvbp {

struct OracleBudget {
  // Cap on the enumerated search space: (m+1)^n for knapsack, search nodes
  // for bin packing, columns for the covering LP.
  int64_t max_search = 10'000'000;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// Optimal knapsack selection (unit capacities, bin types ignored).
KnapsackSelection ExactMmk(const Instance& instance,
                           const OracleBudget& budget = {});

struct MvbpOptimum {
  Packing packing;
  double cost = 0.0;
  int64_t nodes = 0;
};

// Minimum-cost packing by depth-first search over item -> (bin, incarnation)
// assignments. Bins are opened in item order, so interchangeable bins are
// never enumerated twice.
MvbpOptimum ExactMvbp(const Instance& instance,
                      const OracleBudget& budget = {});

// Every (bin type, item set, incarnation assignment) that fits, nonempty.
std::vector<Column> EnumerateColumns(const Instance& instance,
                                     const OracleBudget& budget = {});

struct CoverLpValue {
  double value = 0.0;
  int64_t num_columns = 0;
};

// Covering LP solved once over the full column universe.
CoverLpValue ExactCoverLp(const Instance& instance,
                          const OracleBudget& budget = {});

}  // namespace mvbp

#endif  // MVBP_ORACLE_H_
