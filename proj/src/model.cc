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

#include "mvbp/model.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace mvbp {

int Instance::max_incarnations() const {
  int m = 0;
  for (const Item& item : items) {
    m = std::max(m, static_cast<int>(item.incarnations.size()));
  }
  return m;
}

double Instance::total_bin_weight() const {
  double total = 0.0;
  for (const BinType& type : bin_types) total += type.weight;
  return total;
}

double Instance::max_bin_weight() const {
  double best = 0.0;
  for (const BinType& type : bin_types) best = std::max(best, type.weight);
  return best;
}

InfeasibleItemError::InfeasibleItemError(int item)
    : Error(fmt::format("item {} fits in no bin type", item)), item_(item) {}

std::vector<std::string> ValidateInstance(const Instance& instance) {
  std::vector<std::string> violations;
  const int dim = instance.dimension;
  if (dim < 1) {
    violations.push_back(fmt::format("dimension {} is not positive", dim));
  }
  for (int i = 0; i < instance.num_items(); ++i) {
    const Item& item = instance.items[i];
    if (item.incarnations.empty()) {
      violations.push_back(fmt::format("item {} has no incarnations", i));
    }
    for (int j = 0; j < static_cast<int>(item.incarnations.size()); ++j) {
      const Incarnation& inc = item.incarnations[j];
      if (static_cast<int>(inc.sizes.size()) != dim) {
        violations.push_back(fmt::format(
            "item {} incarnation {}: sizes has {} entries, expected {}", i, j,
            inc.sizes.size(), dim));
      }
      for (int d = 0; d < static_cast<int>(inc.sizes.size()); ++d) {
        if (!std::isfinite(inc.sizes[d]) || inc.sizes[d] < 0.0) {
          violations.push_back(fmt::format(
              "item {} incarnation {}: size {} in dimension {} is not a "
              "finite nonnegative number",
              i, j, inc.sizes[d], d));
        }
      }
      if (!std::isfinite(inc.weight) || inc.weight < 0.0) {
        violations.push_back(fmt::format(
            "item {} incarnation {}: weight {} is negative or not finite", i,
            j, inc.weight));
      }
    }
  }
  for (int t = 0; t < instance.num_bin_types(); ++t) {
    const BinType& type = instance.bin_types[t];
    if (static_cast<int>(type.capacities.size()) != dim) {
      violations.push_back(
          fmt::format("bin type {}: capacities has {} entries, expected {}", t,
                      type.capacities.size(), dim));
    }
    for (int d = 0; d < static_cast<int>(type.capacities.size()); ++d) {
      if (!std::isfinite(type.capacities[d]) || type.capacities[d] <= 0.0) {
        violations.push_back(fmt::format(
            "bin type {}: capacity {} in dimension {} is not positive", t,
            type.capacities[d], d));
      }
    }
    if (!std::isfinite(type.weight) || type.weight < 0.0) {
      violations.push_back(fmt::format(
          "bin type {}: weight {} is negative or not finite", t, type.weight));
    }
  }
  return violations;
}

bool FitsAlone(const Instance& instance, int item, int incarnation,
               int bin_type) {
  const auto& sizes = instance.items[item].incarnations[incarnation].sizes;
  const auto& caps = instance.bin_types[bin_type].capacities;
  for (int d = 0; d < instance.dimension; ++d) {
    if (sizes[d] > caps[d] + kFeasibilityTolerance) return false;
  }
  return true;
}

void ValidateForSolve(const Instance& instance) {
  std::vector<std::string> violations = ValidateInstance(instance);
  if (!violations.empty()) {
    throw InvalidInstanceError(violations.front());
  }
  if (instance.bin_types.empty()) {
    throw InvalidInstanceError("bin packing needs at least one bin type");
  }
  for (int i = 0; i < instance.num_items(); ++i) {
    bool fits = false;
    const int m = static_cast<int>(instance.items[i].incarnations.size());
    for (int j = 0; j < m && !fits; ++j) {
      for (int t = 0; t < instance.num_bin_types() && !fits; ++t) {
        fits = FitsAlone(instance, i, j, t);
      }
    }
    if (!fits) throw InfeasibleItemError(i);
  }
}

PackingVerdict CheckPacking(const Instance& instance, const Packing& packing) {
  PackingVerdict verdict;
  const int n = instance.num_items();
  std::vector<int> seen(n, 0);
  verdict.min_slack = std::numeric_limits<double>::infinity();
  for (int b = 0; b < static_cast<int>(packing.bins.size()); ++b) {
    const Bin& bin = packing.bins[b];
    if (bin.bin_type < 0 || bin.bin_type >= instance.num_bin_types()) {
      verdict.violations.push_back(
          fmt::format("bin {}: bin type {} out of range", b, bin.bin_type));
      verdict.slack.emplace_back();
      continue;
    }
    std::vector<double> load(instance.dimension, 0.0);
    bool malformed = false;
    for (const Assignment& a : bin.assignments) {
      if (a.item < 0 || a.item >= n) {
        verdict.violations.push_back(
            fmt::format("bin {}: item {} out of range", b, a.item));
        malformed = true;
        continue;
      }
      const int m = static_cast<int>(instance.items[a.item].incarnations.size());
      if (a.incarnation < 0 || a.incarnation >= m) {
        verdict.violations.push_back(
            fmt::format("bin {}: item {} has no incarnation {}", b, a.item,
                        a.incarnation));
        malformed = true;
        continue;
      }
      ++seen[a.item];
      for (int d = 0; d < instance.dimension; ++d) {
        load[d] += instance.size(a.item, a.incarnation, d);
      }
    }
    std::vector<double> slack(instance.dimension);
    const auto& caps = instance.bin_types[bin.bin_type].capacities;
    for (int d = 0; d < instance.dimension; ++d) {
      slack[d] = caps[d] - load[d];
      verdict.min_slack = std::min(verdict.min_slack, slack[d]);
      if (load[d] > caps[d] + kFeasibilityTolerance) {
        verdict.violations.push_back(
            fmt::format("bin {}: dimension {} load {} > capacity {}", b, d,
                        load[d], caps[d]));
      }
    }
    verdict.slack.push_back(malformed ? std::vector<double>{} : slack);
  }
  for (int i = 0; i < n; ++i) {
    if (seen[i] == 0) {
      verdict.violations.push_back(fmt::format("item {} unassigned", i));
    } else if (seen[i] > 1) {
      verdict.violations.push_back(
          fmt::format("item {} assigned {} times", i, seen[i]));
    }
  }
  if (packing.bins.empty()) verdict.min_slack = 0.0;
  verdict.feasible = verdict.violations.empty();
  return verdict;
}

double PackingCost(const Instance& instance, const Packing& packing) {
  double cost = 0.0;
  for (const Bin& bin : packing.bins) {
    cost += instance.bin_types[bin.bin_type].weight;
  }
  return cost;
}

std::vector<std::string> CheckKnapsackSelection(
    const Instance& instance, const KnapsackSelection& selection) {
  std::vector<std::string> violations;
  const int n = instance.num_items();
  std::vector<int> seen(n, 0);
  std::vector<double> load(instance.dimension, 0.0);
  for (const Assignment& a : selection.chosen) {
    if (a.item < 0 || a.item >= n ||
        a.incarnation < 0 ||
        a.incarnation >=
            static_cast<int>(instance.items[a.item].incarnations.size())) {
      violations.push_back(fmt::format("selection entry ({}, {}) out of range",
                                       a.item, a.incarnation));
      continue;
    }
    if (++seen[a.item] == 2) {
      violations.push_back(
          fmt::format("item {} selected more than once", a.item));
    }
    for (int d = 0; d < instance.dimension; ++d) {
      load[d] += instance.size(a.item, a.incarnation, d);
    }
  }
  for (int d = 0; d < instance.dimension; ++d) {
    if (load[d] > 1.0 + kFeasibilityTolerance) {
      violations.push_back(
          fmt::format("dimension {} load {} exceeds 1", d, load[d]));
    }
  }
  return violations;
}

double SelectionWeight(const Instance& instance,
                       const std::vector<Assignment>& chosen) {
  double total = 0.0;
  for (const Assignment& a : chosen) {
    total += instance.items[a.item].incarnations[a.incarnation].weight;
  }
  return total;
}

}  // namespace mvbp
