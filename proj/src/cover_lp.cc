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

#include "mvbp/cover_lp.h"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

#include "mvbp/dual_oblivious.h"
#include "mvbp/lp.h"
#include "mvbp/mmk_ptas.h"

namespace mvbp {

bool IsCompatible(const Instance& instance, const Column& column) {
  if (column.bin_type < 0 || column.bin_type >= instance.num_bin_types()) {
    return false;
  }
  const auto& caps = instance.bin_types[column.bin_type].capacities;
  std::vector<double> load(instance.dimension, 0.0);
  int previous = -1;
  for (const Assignment& a : column.assignment) {
    if (a.item <= previous || a.item >= instance.num_items()) return false;
    previous = a.item;
    for (int d = 0; d < instance.dimension; ++d) {
      load[d] += instance.size(a.item, a.incarnation, d);
    }
  }
  for (int d = 0; d < instance.dimension; ++d) {
    if (load[d] > caps[d] + kFeasibilityTolerance) return false;
  }
  return true;
}

std::vector<Column> InitialColumns(const Instance& instance) {
  const std::vector<ItemSelector> selectors = ComputeSelectors(instance);
  std::vector<Column> columns;
  columns.reserve(selectors.size());
  for (int i = 0; i < instance.num_items(); ++i) {
    const int t = selectors[i].bin_type;
    columns.push_back(
        {t, {{i, selectors[i].incarnation}}, instance.bin_types[t].weight});
  }
  return columns;
}

namespace {

// Knapsack over the items with positive profit, sizes scaled by the
// capacities of `bin_type`, incarnations that cannot fit alone dropped.
// Fills `origin` with the source (item, incarnation) of every entry.
Instance PricingInstance(const Instance& instance, std::span<const double> y,
                         int bin_type,
                         std::vector<std::vector<Assignment>>& origin) {
  Instance knapsack;
  knapsack.dimension = instance.dimension;
  origin.clear();
  const auto& caps = instance.bin_types[bin_type].capacities;
  for (int i = 0; i < instance.num_items(); ++i) {
    if (!(y[i] > 0.0)) continue;
    Item item;
    std::vector<Assignment> from;
    const int m = static_cast<int>(instance.items[i].incarnations.size());
    for (int j = 0; j < m; ++j) {
      if (!FitsAlone(instance, i, j, bin_type)) continue;
      Incarnation inc;
      inc.weight = y[i];
      inc.sizes.resize(instance.dimension);
      for (int d = 0; d < instance.dimension; ++d) {
        inc.sizes[d] = instance.size(i, j, d) / caps[d];
      }
      item.incarnations.push_back(std::move(inc));
      from.push_back({i, j});
    }
    if (item.incarnations.empty()) continue;
    knapsack.items.push_back(std::move(item));
    origin.push_back(std::move(from));
  }
  return knapsack;
}

LpProblem MasterProblem(const Instance& instance,
                        const std::vector<Column>& columns) {
  LpProblem lp;
  lp.sense = ObjectiveSense::kMinimize;
  const int cols = static_cast<int>(columns.size());
  lp.objective.resize(cols);
  std::vector<std::vector<double>> rows(instance.num_items(),
                                        std::vector<double>(cols, 0.0));
  for (int c = 0; c < cols; ++c) {
    lp.objective[c] = columns[c].cost;
    for (const Assignment& a : columns[c].assignment) rows[a.item][c] = 1.0;
  }
  for (auto& row : rows) {
    lp.AddRow(std::move(row), RowSense::kGreaterEqual, 1.0);
  }
  return lp;
}

}  // namespace

std::optional<Column> Separate(const Instance& instance,
                               std::span<const double> duals,
                               double epsilon_sep) {
  std::optional<Column> best;
  double best_rank = 0.0;
  std::vector<std::vector<Assignment>> origin;
  for (int t = 0; t < instance.num_bin_types(); ++t) {
    const Instance knapsack = PricingInstance(instance, duals, t, origin);
    if (knapsack.items.empty()) continue;
    const KnapsackSelection selection = SolveMmk(knapsack, epsilon_sep);
    const double w = instance.bin_types[t].weight;
    double profit = 0.0;
    Column column{t, {}, w};
    for (const Assignment& a : selection.chosen) {
      const Assignment source = origin[a.item][a.incarnation];
      column.assignment.push_back(source);
      profit += duals[source.item];
    }
    std::sort(column.assignment.begin(), column.assignment.end());
    const bool violated =
        w > 0.0 ? profit > w * (1.0 + kLpTolerance) : profit > kLpTolerance;
    if (!violated) continue;
    if (!IsCompatible(instance, column)) {
      throw std::logic_error(
          fmt::format("pricing produced an incompatible column for bin type {}",
                      t));
    }
    const double rank =
        w > 0.0 ? profit / w : std::numeric_limits<double>::infinity();
    if (!best || rank > best_rank) {
      best = std::move(column);
      best_rank = rank;
    }
  }
  return best;
}

CoverLpSolution SolveCoverLp(const Instance& instance, double epsilon_lp) {
  CoverLpSolution solution;
  solution.epsilon = epsilon_lp;
  solution.columns = InitialColumns(instance);
  const int n = instance.num_items();
  if (n == 0) return solution;

  std::set<std::pair<int, std::vector<Assignment>>> known;
  for (const Column& c : solution.columns) {
    known.emplace(c.bin_type, c.assignment);
  }
  const int limit = 50 * n * instance.num_bin_types();
  LpResult master;
  while (true) {
    master = SolveLp(MasterProblem(instance, solution.columns));
    if (master.status != LpStatus::kOptimal) {
      // Singleton columns keep the master feasible and costs are >= 0.
      throw std::logic_error("covering master LP not optimal");
    }
    solution.objective_history.push_back(master.objective);
    solution.duals.assign(master.duals.begin(), master.duals.end());
    for (double& y : solution.duals) y = std::max(y, 0.0);

    std::optional<Column> column =
        Separate(instance, solution.duals, epsilon_lp);
    if (!column) break;
    // A known column can only come back through tolerance noise.
    if (!known.emplace(column->bin_type, column->assignment).second) break;
    if (solution.columns_added >= limit) {
      throw IterationLimitError(
          fmt::format("column generation added {} columns without converging",
                      solution.columns_added));
    }
    solution.columns.push_back(std::move(*column));
    ++solution.columns_added;
  }

  solution.x = master.primal;
  solution.value = master.objective;
  for (int c = 0; c < static_cast<int>(solution.x.size()); ++c) {
    if (solution.x[c] > kLpTolerance) solution.support.push_back(c);
  }
  return solution;
}

}  // namespace mvbp
