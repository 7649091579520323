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

// Polynomial-time approximation scheme for weighted multiple-choice
// multidimensional knapsack.
//
// For every guess (G, g) of at most q = min(n, ceil(D / epsilon)) items and
// their incarnations, the remaining items are packed by a basic optimal
// solution of the restricted LP relaxation, rounded down. The best rounded
// selection over all guesses is within a factor 1 + epsilon of optimal.
//
// Sizes are read against a unit capacity per dimension; callers rescale.
// Bin types on the instance are ignored.
//
// Two implementations are provided and must agree bit for bit:
//   SolveMmkSerial   - enumerates every guess and rejects infeasible ones
//                      one at a time. Kept as the reference.
//   SolveMmk         - generates only the accepted guesses (a rejected guess
//                      rejects all its extensions) and evaluates them with
//                      an OpenMP parallel loop.

#ifndef MVBP_MMK_PTAS_H_
#define MVBP_MMK_PTAS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mvbp/lp.h"
#include "mvbp/model.h"

namespace mvbp {

// LP values within this distance of 1 count as 1 when rounding down.
inline constexpr double kIntegralityTolerance = 1e-6;

// A guessed set of items, sorted ascending, with one incarnation each.
struct Guess {
  std::vector<int> items;
  std::vector<int> incarnations;

  bool operator==(const Guess&) const = default;
};

// q = min(n, ceil(D / epsilon)).
int GuessSize(int num_items, int dimension, double epsilon);

// Every guess with at most q items, each exactly once. Order: item sets
// lexicographically (as sorted index sequences, empty set first), and within
// one item set incarnation maps lexicographically.
void EnumerateGuesses(const Instance& instance, int q,
                      const std::function<void(const Guess&)>& visit);
std::vector<Guess> EnumerateGuesses(const Instance& instance, int q);

// The LP of one accepted guess.
struct RestrictedMmkLp {
  std::vector<double> residual;  // 1 - sum of guessed sizes, per dimension
  // Smallest guessed weight; +inf for the empty guess. Outside incarnations
  // strictly heavier than this are fixed to zero.
  double weight_threshold = 0.0;
  std::vector<Assignment> fixed;  // the guess itself
  double fixed_weight = 0.0;
  // LP column c is incarnation free_vars[c]. Rows are the D residual
  // capacities followed by one "at most one incarnation" row per item that
  // still has a free variable.
  std::vector<Assignment> free_vars;
  int num_free_items = 0;
  LpProblem lp;
};

// nullopt iff some residual capacity is negative.
std::optional<RestrictedMmkLp> BuildRestrictedLp(const Instance& instance,
                                                 const Guess& guess);

// Keeps the guess plus every LP variable at 1 (within
// kIntegralityTolerance).
KnapsackSelection RoundDown(const Instance& instance,
                            const RestrictedMmkLp& restricted,
                            const LpResult& lp_result);

// Per-guess diagnostics.
struct GuessRecord {
  // Position among the accepted guesses, in EnumerateGuesses order.
  int64_t rank = 0;
  double lp_objective = 0.0;  // fixed weight + LP value
  double value = 0.0;         // after rounding
  int num_rows = 0;
  int positive_support = 0;   // positive item variables in the LP solution
  int fractional_entries = 0;
  int fractional_items = 0;   // items with at least one fractional entry
};

struct MmkOptions {
  double epsilon = 1.0;
  // When set, receives one record per accepted guess in rank order.
  std::vector<GuessRecord>* trace = nullptr;
};

KnapsackSelection SolveMmk(const Instance& instance, const MmkOptions& options);
KnapsackSelection SolveMmkSerial(const Instance& instance,
                                 const MmkOptions& options);

inline KnapsackSelection SolveMmk(const Instance& instance, double epsilon) {
  return SolveMmk(instance, MmkOptions{.epsilon = epsilon});
}

}  // namespace mvbp

#endif  // MVBP_MMK_PTAS_H_
