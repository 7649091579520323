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

// Domain types for multiple-choice vector bin packing (MVBP) and
// multiple-choice multidimensional knapsack (MMK) instances, plus the
// feasibility and cost checks every solver result is held to.
//
// All indices (items, incarnations, bin types, dimensions) are 0-based.

#ifndef MVBP_MODEL_H_
#define MVBP_MODEL_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvbp {

// Absolute tolerance on every load-vs-capacity comparison.
inline constexpr double kFeasibilityTolerance = 1e-9;

struct Incarnation {
  std::vector<double> sizes;
  // Only meaningful for knapsack instances.
  double weight = 1.0;

  bool operator==(const Incarnation&) const = default;
};

struct Item {
  std::vector<Incarnation> incarnations;

  bool operator==(const Item&) const = default;
};

struct BinType {
  std::vector<double> capacities;
  double weight = 1.0;

  bool operator==(const BinType&) const = default;
};

// An MVBP instance. Pure knapsack instances leave `bin_types` empty and are
// read against a unit capacity in every dimension.
struct Instance {
  int dimension = 0;
  std::vector<Item> items;
  std::vector<BinType> bin_types;

  int num_items() const { return static_cast<int>(items.size()); }
  int num_bin_types() const { return static_cast<int>(bin_types.size()); }
  int max_incarnations() const;
  double size(int item, int incarnation, int d) const {
    return items[item].incarnations[incarnation].sizes[d];
  }
  // Sum and maximum of the bin-type weights (0 when there are no types).
  double total_bin_weight() const;
  double max_bin_weight() const;

  bool operator==(const Instance&) const = default;
};

struct Assignment {
  int item = 0;
  int incarnation = 0;

  auto operator<=>(const Assignment&) const = default;
};

struct Bin {
  int bin_type = 0;
  std::vector<Assignment> assignments;

  bool operator==(const Bin&) const = default;
};

struct Packing {
  std::vector<Bin> bins;

  bool operator==(const Packing&) const = default;
};

struct KnapsackSelection {
  std::vector<Assignment> chosen;
  double value = 0.0;
};

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInstanceError : public Error {
 public:
  using Error::Error;
};

// No incarnation of `item` fits alone in any bin type.
class InfeasibleItemError : public Error {
 public:
  explicit InfeasibleItemError(int item);
  int item() const { return item_; }

 private:
  int item_;
};

// Returns one human-readable line per violated structural invariant; empty
// iff the instance is well formed.
std::vector<std::string> ValidateInstance(const Instance& instance);

// True iff incarnation `incarnation` of `item` fits alone in bin type
// `bin_type` in every dimension.
bool FitsAlone(const Instance& instance, int item, int incarnation,
               int bin_type);

// Throws InvalidInstanceError on structural violations (or when there are no
// bin types) and InfeasibleItemError when some item fits in no bin type.
void ValidateForSolve(const Instance& instance);

struct PackingVerdict {
  bool feasible = false;
  std::vector<std::string> violations;
  // slack[b][d] = capacity - load for bin b; empty for malformed bins.
  std::vector<std::vector<double>> slack;
  double min_slack = 0.0;
};

PackingVerdict CheckPacking(const Instance& instance, const Packing& packing);

// Sum of the weights of the opened bins' types.
double PackingCost(const Instance& instance, const Packing& packing);

// Violations of the knapsack constraints (unit capacity per dimension, at
// most one incarnation per item). Does not check `value`.
std::vector<std::string> CheckKnapsackSelection(
    const Instance& instance, const KnapsackSelection& selection);

double SelectionWeight(const Instance& instance,
                       const std::vector<Assignment>& chosen);

}  // namespace mvbp

#endif  // MVBP_MODEL_H_
