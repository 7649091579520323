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

#include "mvbp/mvbp_solver.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <optional>

#include "mvbp/dual_oblivious.h"
#include "mvbp/lp.h"

namespace mvbp {

bool WithinBound(double value, double bound) {
  return value <= bound + 1e-6 * std::max(1.0, std::abs(bound));
}

GreedyState GreedyPhase(const Instance& instance, const CoverLpSolution& cover,
                        std::span<const double> y, double rho) {
  const int n = instance.num_items();
  GreedyState state;
  std::vector<char> open(n, 1);
  int open_count = n;
  const double opt = cover.value;
  if (n == 0 || !(opt > 0.0)) {
    state.uncovered.resize(n);
    std::iota(state.uncovered.begin(), state.uncovered.end(), 0);
    return state;
  }
  const double threshold = std::log(rho) * opt;
  const double total = std::accumulate(y.begin(), y.end(), 0.0);
  double product = 1.0;
  double remaining = total;

  while (state.weight < threshold && open_count > 0) {
    if (cover.support.empty()) {
      throw EmptySupportError("greedy phase has uncovered items but no support");
    }
    int best = -1;
    double best_rate = -1.0;
    double best_profit = 0.0;
    int best_hits = 0;
    for (int c : cover.support) {
      const Column& column = cover.columns[c];
      double profit = 0.0;
      int hits = 0;
      for (const Assignment& a : column.assignment) {
        if (!open[a.item]) continue;
        profit += y[a.item];
        ++hits;
      }
      double rate;
      if (column.cost > 0.0) {
        rate = profit / column.cost;
      } else {
        rate = hits > 0 ? std::numeric_limits<double>::infinity() : 0.0;
      }
      if (rate > best_rate) {
        best = c;
        best_rate = rate;
        best_profit = profit;
        best_hits = hits;
      }
    }
    // Every support column misses S: sum_{i in S} y_i is zero and buying
    // more coverage cannot shrink the residual.
    if (best_hits == 0) break;

    const Column& column = cover.columns[best];
    for (const Assignment& a : column.assignment) {
      if (open[a.item]) {
        open[a.item] = 0;
        --open_count;
      }
    }
    state.chosen.push_back(best);
    state.weight += column.cost;
    remaining = 0.0;
    for (int i = 0; i < n; ++i) {
      if (open[i]) remaining += y[i];
    }
    product *= std::max(0.0, 1.0 - column.cost / opt);
    state.trace.push_back(
        {best, best_rate, best_profit, remaining, product * total});
  }
  for (int i = 0; i < n; ++i) {
    if (open[i]) state.uncovered.push_back(i);
  }
  state.reached_weight_bound = open_count > 0 && state.weight >= threshold;
  return state;
}

namespace {

SolveReport SolveWithBound(const Instance& instance, double epsilon_lp,
                           bool unweighted_bound) {
  ValidateForSolve(instance);
  const int dim = instance.dimension;
  const double rho = 2.0 * dim;
  const std::vector<ItemSelector> selectors = ComputeSelectors(instance);
  const std::vector<double> y = DualObliviousDuals(instance, selectors);
  const CoverLpSolution cover = SolveCoverLp(instance, epsilon_lp);
  const GreedyState greedy = GreedyPhase(instance, cover, y, rho);

  SolveReport report;
  report.lp_value = cover.value;
  report.lp_columns = static_cast<int>(cover.columns.size());
  report.dual_sum = std::accumulate(y.begin(), y.end(), 0.0);
  report.greedy_picks = static_cast<int>(greedy.chosen.size());
  report.greedy_cost = greedy.weight;
  report.bin_type_mask = instance.num_bin_types() >= 64
                             ? ~0ULL
                             : (1ULL << instance.num_bin_types()) - 1;

  // One bin per bought column; an item covered twice stays with the first
  // column that covered it. Bins left empty by that are not opened.
  std::vector<char> placed(instance.num_items(), 0);
  for (int c : greedy.chosen) {
    const Column& column = cover.columns[c];
    Bin bin{column.bin_type, {}};
    for (const Assignment& a : column.assignment) {
      if (placed[a.item]) continue;
      placed[a.item] = 1;
      bin.assignments.push_back(a);
    }
    if (!bin.assignments.empty()) report.packing.bins.push_back(std::move(bin));
  }
  const Packing residual = ApprPack(instance, selectors, greedy.uncovered);
  report.residual_cost = PackingCost(instance, residual);
  for (const Bin& bin : residual.bins) report.packing.bins.push_back(bin);
  report.cost = PackingCost(instance, report.packing);

  const double log_term = std::log(rho) + 1.0;
  if (unweighted_bound) {
    report.bound =
        log_term * cover.value + instance.num_bin_types() + 1.0;
  } else {
    report.bound = log_term * cover.value + instance.total_bin_weight() +
                   instance.max_bin_weight();
  }
  report.bound_ok = WithinBound(report.cost, report.bound);

  if (cover.value > 0.0) {
    report.greedy_cap_ok =
        WithinBound(greedy.weight,
                    std::log(rho) * cover.value + instance.max_bin_weight()) &&
        (greedy.chosen.empty() ||
         greedy.weight - cover.columns[greedy.chosen.back()].cost <
             std::log(rho) * cover.value);
    const double slack = 1e-6 * std::max(1.0, report.dual_sum);
    for (const GreedyStep& step : greedy.trace) {
      if (step.residual_profit > step.residual_bound + slack) {
        report.decay_ok = false;
      }
    }
    if (greedy.reached_weight_bound && !greedy.trace.empty() &&
        greedy.trace.back().residual_profit > report.dual_sum / rho + slack) {
      report.decay_ok = false;
    }
  }
  return report;
}

}  // namespace

SolveReport SolveWeighted(const Instance& instance, double epsilon_lp) {
  return SolveWithBound(instance, epsilon_lp, /*unweighted_bound=*/false);
}

SolveReport SolveUnweighted(const Instance& instance, double epsilon_lp) {
  for (const BinType& type : instance.bin_types) {
    if (type.weight != 1.0) {
      throw InvalidInstanceError(
          "unweighted solve requires every bin-type weight to be 1");
    }
  }
  return SolveWithBound(instance, epsilon_lp, /*unweighted_bound=*/true);
}

Instance RestrictBinTypes(const Instance& instance, unsigned long long mask) {
  Instance restricted;
  restricted.dimension = instance.dimension;
  restricted.items = instance.items;
  for (int t = 0; t < instance.num_bin_types(); ++t) {
    if (mask >> t & 1ULL) restricted.bin_types.push_back(instance.bin_types[t]);
  }
  return restricted;
}

SolveReport SolveWeightedWrapped(const Instance& instance, double epsilon_lp) {
  ValidateForSolve(instance);
  const int num_types = instance.num_bin_types();
  if (num_types > kMaxWrappedBinTypes) {
    SolveReport report = SolveWeighted(instance, epsilon_lp);
    report.wrapper_fallback = true;
    report.subsets_solved = 1;
    return report;
  }
  const long long num_masks = (1LL << num_types) - 1;
  std::vector<std::optional<SolveReport>> reports(num_masks);
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic, 1)
  for (long long k = 0; k < num_masks; ++k) {
    const unsigned long long mask = static_cast<unsigned long long>(k) + 1;
    try {
      const Instance restricted = RestrictBinTypes(instance, mask);
      reports[k] = SolveWeighted(restricted, epsilon_lp);
      // Map restricted type indices back to the full instance.
      std::vector<int> original;
      for (int t = 0; t < num_types; ++t) {
        if (mask >> t & 1ULL) original.push_back(t);
      }
      for (Bin& bin : reports[k]->packing.bins) {
        bin.bin_type = original[bin.bin_type];
      }
      reports[k]->bin_type_mask = mask;
    } catch (const InfeasibleItemError&) {
      // Some item fits no type of this subset.
    } catch (...) {
#pragma omp critical(mvbp_wrapper_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  int solved = 0;
  std::optional<SolveReport> best;
  for (auto& report : reports) {
    if (!report) continue;
    ++solved;
    if (!best || report->cost < best->cost) best = std::move(report);
  }
  // ValidateForSolve guarantees the full mask succeeds.
  best->subsets_solved = solved;
  return *std::move(best);
}

}  // namespace mvbp
