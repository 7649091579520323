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

// First-Fit based packer whose cost on any item subset S is bounded by
// 2D * sum_{i in S} y_i + sum_t w_t for a single dual-feasible vector y.
//
// Each item is sent, with one fixed incarnation, to the bin type that
// minimizes its weighted worst-dimension load; each bin-type class is then
// First-Fit packed using that worst-dimension load as a scalar size.

#ifndef MVBP_DUAL_OBLIVIOUS_H_
#define MVBP_DUAL_OBLIVIOUS_H_

#include <span>
#include <vector>

#include "mvbp/model.h"

namespace mvbp {

// Fraction of dimension d of bin type t taken by incarnation j of item i.
inline double Load(const Instance& instance, int item, int incarnation,
                   int bin_type, int d) {
  return instance.size(item, incarnation, d) /
         instance.bin_types[bin_type].capacities[d];
}

struct ItemSelector {
  // w_t * max_d Load(i, j, t, d), minimized over fitting (j, t) pairs.
  double effective_load = 0.0;
  int incarnation = 0;
  int bin_type = 0;
  // Dimension attaining the maximum load of (incarnation, bin_type).
  int dimension = 0;
  // Load in `dimension`; the scalar First-Fit size.
  double scalar_size = 0.0;
};

// Ties go to the lowest incarnation, then bin type, then dimension. Only
// pairs where the incarnation fits alone in the bin type are candidates.
// Throws InfeasibleItemError when an item has no candidate.
std::vector<ItemSelector> ComputeSelectors(const Instance& instance);

class ItemTooLargeError : public Error {
 public:
  using Error::Error;
};

struct FirstFitResult {
  // Indices into the input, per bin, in insertion order.
  std::vector<std::vector<int>> bins;
  std::vector<double> loads;
};

// Scans `sizes` in order and puts each into the leftmost bin with room,
// opening a bin on the right when none has room. Throws ItemTooLargeError
// for a size above capacity + kFeasibilityTolerance.
FirstFitResult FirstFit(std::span<const double> sizes, double capacity = 1.0);

// Packs the items of `subset` (all items when omitted), scanning each class
// in ascending item order.
Packing ApprPack(const Instance& instance,
                 const std::vector<ItemSelector>& selectors,
                 std::span<const int> subset);
Packing ApprPack(const Instance& instance);

// y_i = effective_load_i / D.
std::vector<double> DualObliviousDuals(
    const Instance& instance, const std::vector<ItemSelector>& selectors);
std::vector<double> DualObliviousDuals(const Instance& instance);

}  // namespace mvbp

#endif  // MVBP_DUAL_OBLIVIOUS_H_
