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

#include "mvbp/dual_oblivious.h"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace mvbp {

std::vector<ItemSelector> ComputeSelectors(const Instance& instance) {
  std::vector<ItemSelector> selectors(instance.num_items());
  for (int i = 0; i < instance.num_items(); ++i) {
    bool found = false;
    ItemSelector& best = selectors[i];
    const int m = static_cast<int>(instance.items[i].incarnations.size());
    for (int j = 0; j < m; ++j) {
      for (int t = 0; t < instance.num_bin_types(); ++t) {
        if (!FitsAlone(instance, i, j, t)) continue;
        int worst_dim = 0;
        double worst = Load(instance, i, j, t, 0);
        for (int d = 1; d < instance.dimension; ++d) {
          const double load = Load(instance, i, j, t, d);
          if (load > worst) {
            worst = load;
            worst_dim = d;
          }
        }
        const double effective = instance.bin_types[t].weight * worst;
        if (!found || effective < best.effective_load) {
          best = {effective, j, t, worst_dim, worst};
          found = true;
        }
      }
    }
    if (!found) throw InfeasibleItemError(i);
  }
  return selectors;
}

FirstFitResult FirstFit(std::span<const double> sizes, double capacity) {
  FirstFitResult result;
  for (int k = 0; k < static_cast<int>(sizes.size()); ++k) {
    const double size = sizes[k];
    if (size > capacity + kFeasibilityTolerance) {
      throw ItemTooLargeError(fmt::format(
          "item {} of size {} exceeds capacity {}", k, size, capacity));
    }
    size_t b = 0;
    while (b < result.bins.size() &&
           result.loads[b] + size > capacity + kFeasibilityTolerance) {
      ++b;
    }
    if (b == result.bins.size()) {
      result.bins.emplace_back();
      result.loads.push_back(0.0);
    }
    result.bins[b].push_back(k);
    result.loads[b] += size;
  }
  return result;
}

Packing ApprPack(const Instance& instance,
                 const std::vector<ItemSelector>& selectors,
                 std::span<const int> subset) {
  std::vector<int> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  Packing packing;
  for (int t = 0; t < instance.num_bin_types(); ++t) {
    std::vector<int> klass;
    std::vector<double> sizes;
    for (int i : members) {
      if (selectors[i].bin_type != t) continue;
      klass.push_back(i);
      sizes.push_back(selectors[i].scalar_size);
    }
    if (klass.empty()) continue;
    const FirstFitResult ff = FirstFit(sizes);
    for (const auto& slots : ff.bins) {
      Bin bin{t, {}};
      for (int k : slots) {
        bin.assignments.push_back({klass[k], selectors[klass[k]].incarnation});
      }
      packing.bins.push_back(std::move(bin));
    }
  }
  return packing;
}

Packing ApprPack(const Instance& instance) {
  const std::vector<ItemSelector> selectors = ComputeSelectors(instance);
  std::vector<int> all(instance.num_items());
  std::iota(all.begin(), all.end(), 0);
  return ApprPack(instance, selectors, all);
}

std::vector<double> DualObliviousDuals(
    const Instance& instance, const std::vector<ItemSelector>& selectors) {
  std::vector<double> y(selectors.size());
  for (size_t i = 0; i < selectors.size(); ++i) {
    y[i] = selectors[i].effective_load / instance.dimension;
  }
  return y;
}

std::vector<double> DualObliviousDuals(const Instance& instance) {
  return DualObliviousDuals(instance, ComputeSelectors(instance));
}

}  // namespace mvbp
