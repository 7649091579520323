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

#include "mvbp/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "mvbp/lp.h"

namespace mvbp {

namespace {

// (m+1)^n, saturating at the budget + 1.
int64_t ChoiceSpace(const Instance& instance, int64_t cap) {
  int64_t space = 1;
  for (const Item& item : instance.items) {
    const int64_t options = static_cast<int64_t>(item.incarnations.size()) + 1;
    if (space > cap / options) return cap + 1;
    space *= options;
  }
  return space;
}

class KnapsackSearch {
 public:
  explicit KnapsackSearch(const Instance& instance)
      : instance_(instance), load_(instance.dimension, 0.0) {}

  KnapsackSelection Run() {
    Visit(0, 0.0);
    KnapsackSelection best;
    best.chosen = best_;
    best.value = SelectionWeight(instance_, best_);
    return best;
  }

 private:
  void Visit(int item, double value) {
    if (item == instance_.num_items()) {
      if (value > best_value_) {
        best_value_ = value;
        best_ = current_;
      }
      return;
    }
    Visit(item + 1, value);
    const auto& incs = instance_.items[item].incarnations;
    for (int j = 0; j < static_cast<int>(incs.size()); ++j) {
      bool fits = true;
      for (int d = 0; d < instance_.dimension; ++d) {
        fits = fits &&
               load_[d] + incs[j].sizes[d] <= 1.0 + kFeasibilityTolerance;
      }
      if (!fits) continue;
      for (int d = 0; d < instance_.dimension; ++d) load_[d] += incs[j].sizes[d];
      current_.push_back({item, j});
      Visit(item + 1, value + incs[j].weight);
      current_.pop_back();
      for (int d = 0; d < instance_.dimension; ++d) load_[d] -= incs[j].sizes[d];
    }
  }

  const Instance& instance_;
  std::vector<double> load_;
  std::vector<Assignment> current_;
  std::vector<Assignment> best_;
  double best_value_ = 0.0;
};

class PackingSearch {
 public:
  PackingSearch(const Instance& instance, int64_t node_budget)
      : instance_(instance), node_budget_(node_budget) {}

  MvbpOptimum Run() {
    // Upper bound: every item alone in its cheapest fitting type.
    best_cost_ = 0.0;
    for (int i = 0; i < instance_.num_items(); ++i) {
      double cheapest = std::numeric_limits<double>::infinity();
      int best_t = -1, best_j = -1;
      for (int j = 0; j < NumIncarnations(i); ++j) {
        for (int t = 0; t < instance_.num_bin_types(); ++t) {
          if (FitsAlone(instance_, i, j, t) &&
              instance_.bin_types[t].weight < cheapest) {
            cheapest = instance_.bin_types[t].weight;
            best_t = t;
            best_j = j;
          }
        }
      }
      if (best_t < 0) throw InfeasibleItemError(i);
      best_cost_ += cheapest;
      best_.bins.push_back({best_t, {{i, best_j}}});
    }
    Visit(0, 0.0);
    MvbpOptimum result;
    result.packing = best_;
    result.cost = PackingCost(instance_, best_);
    result.nodes = nodes_;
    return result;
  }

 private:
  int NumIncarnations(int item) const {
    return static_cast<int>(instance_.items[item].incarnations.size());
  }

  bool Fits(const std::vector<double>& load, int type, int item,
            int incarnation) const {
    const auto& caps = instance_.bin_types[type].capacities;
    for (int d = 0; d < instance_.dimension; ++d) {
      if (load[d] + instance_.size(item, incarnation, d) >
          caps[d] + kFeasibilityTolerance) {
        return false;
      }
    }
    return true;
  }

  void Place(int b, int item, int incarnation, double sign) {
    for (int d = 0; d < instance_.dimension; ++d) {
      loads_[b][d] += sign * instance_.size(item, incarnation, d);
    }
  }

  void Visit(int item, double cost) {
    if (++nodes_ > node_budget_) {
      throw BudgetExceededError(fmt::format(
          "exact packing search exceeded {} nodes", node_budget_));
    }
    if (cost >= best_cost_) return;
    if (item == instance_.num_items()) {
      best_cost_ = cost;
      best_ = current_;
      return;
    }
    for (int j = 0; j < NumIncarnations(item); ++j) {
      for (size_t b = 0; b < current_.bins.size(); ++b) {
        if (!Fits(loads_[b], current_.bins[b].bin_type, item, j)) continue;
        Place(b, item, j, 1.0);
        current_.bins[b].assignments.push_back({item, j});
        Visit(item + 1, cost);
        current_.bins[b].assignments.pop_back();
        Place(b, item, j, -1.0);
      }
      for (int t = 0; t < instance_.num_bin_types(); ++t) {
        if (!FitsAlone(instance_, item, j, t)) continue;
        current_.bins.push_back({t, {{item, j}}});
        loads_.emplace_back(instance_.items[item].incarnations[j].sizes);
        Visit(item + 1, cost + instance_.bin_types[t].weight);
        loads_.pop_back();
        current_.bins.pop_back();
      }
    }
  }

  const Instance& instance_;
  int64_t node_budget_;
  int64_t nodes_ = 0;
  Packing current_;
  std::vector<std::vector<double>> loads_;
  Packing best_;
  double best_cost_ = 0.0;
};

}  // namespace

KnapsackSelection ExactMmk(const Instance& instance,
                           const OracleBudget& budget) {
  if (ChoiceSpace(instance, budget.max_search) > budget.max_search) {
    throw BudgetExceededError(fmt::format(
        "knapsack search space exceeds {}", budget.max_search));
  }
  return KnapsackSearch(instance).Run();
}

MvbpOptimum ExactMvbp(const Instance& instance, const OracleBudget& budget) {
  ValidateForSolve(instance);
  return PackingSearch(instance, budget.max_search).Run();
}

std::vector<Column> EnumerateColumns(const Instance& instance,
                                     const OracleBudget& budget) {
  std::vector<Column> columns;
  const int n = instance.num_items();
  for (int t = 0; t < instance.num_bin_types(); ++t) {
    const auto& caps = instance.bin_types[t].capacities;
    std::vector<double> load(instance.dimension, 0.0);
    Column current{t, {}, instance.bin_types[t].weight};
    // Items in ascending order; each is skipped or takes one incarnation.
    auto visit = [&](auto&& self, int item) -> void {
      if (item == n) {
        if (current.assignment.empty()) return;
        if (static_cast<int64_t>(columns.size()) >= budget.max_search) {
          throw BudgetExceededError(fmt::format(
              "column universe exceeds {} columns", budget.max_search));
        }
        columns.push_back(current);
        return;
      }
      self(self, item + 1);
      const auto& incs = instance.items[item].incarnations;
      for (int j = 0; j < static_cast<int>(incs.size()); ++j) {
        bool fits = true;
        for (int d = 0; d < instance.dimension; ++d) {
          fits = fits &&
                 load[d] + incs[j].sizes[d] <= caps[d] + kFeasibilityTolerance;
        }
        if (!fits) continue;
        for (int d = 0; d < instance.dimension; ++d) load[d] += incs[j].sizes[d];
        current.assignment.push_back({item, j});
        self(self, item + 1);
        current.assignment.pop_back();
        for (int d = 0; d < instance.dimension; ++d) load[d] -= incs[j].sizes[d];
      }
    };
    visit(visit, 0);
  }
  return columns;
}

CoverLpValue ExactCoverLp(const Instance& instance,
                          const OracleBudget& budget) {
  ValidateForSolve(instance);
  CoverLpValue out;
  const int n = instance.num_items();
  if (n == 0) return out;
  const std::vector<Column> columns = EnumerateColumns(instance, budget);
  out.num_columns = static_cast<int64_t>(columns.size());
  LpProblem lp;
  lp.sense = ObjectiveSense::kMinimize;
  const int cols = static_cast<int>(columns.size());
  lp.objective.resize(cols);
  std::vector<std::vector<double>> rows(n, std::vector<double>(cols, 0.0));
  for (int c = 0; c < cols; ++c) {
    lp.objective[c] = columns[c].cost;
    for (const Assignment& a : columns[c].assignment) rows[a.item][c] = 1.0;
  }
  for (auto& row : rows) lp.AddRow(std::move(row), RowSense::kGreaterEqual, 1.0);
  const LpResult result = SolveLp(lp);
  if (result.status != LpStatus::kOptimal) {
    throw Error("full covering LP did not solve to optimality");
  }
  out.value = result.objective;
  return out;
}

}  // namespace mvbp
