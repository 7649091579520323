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

#include <gtest/gtest.h>

#include "mvbp/dual_oblivious.h"
#include "mvbp/oracle.h"
#include "test_util.h"

namespace mvbp {
namespace {

using testing::MixedBins;
using testing::Halves;
using testing::MakeItem;
using testing::RandomInstance;
using testing::TwoFamilies;

TEST(WithinBoundTest, RelativeSlack) {
  EXPECT_TRUE(WithinBound(5.0, 5.0));
  EXPECT_TRUE(WithinBound(5.000004, 5.0));
  EXPECT_FALSE(WithinBound(5.00001, 5.0));
  EXPECT_TRUE(WithinBound(1e-7, 0.0));
  EXPECT_FALSE(WithinBound(1e-5, 0.0));
}

TEST(SolveWeightedTest, Halves) {
  const Instance inst = Halves(4);
  const SolveReport r = SolveWeighted(inst);
  EXPECT_TRUE(CheckPacking(inst, r.packing).feasible);
  EXPECT_NEAR(r.lp_value, 2.0, 1e-7);
  EXPECT_EQ(r.greedy_picks, 2);
  EXPECT_DOUBLE_EQ(r.cost, 2.0);
  EXPECT_NEAR(r.bound, (std::log(2.0) + 1.0) * 2.0 + 2.0, 1e-9);
  EXPECT_TRUE(r.bound_ok);
  EXPECT_TRUE(r.greedy_cap_ok);
  EXPECT_TRUE(r.decay_ok);
}

TEST(SolveWeightedTest, TwoFamiliesIsOptimal) {
  const Instance inst = TwoFamilies();
  const SolveReport r = SolveWeighted(inst);
  EXPECT_TRUE(CheckPacking(inst, r.packing).feasible);
  EXPECT_DOUBLE_EQ(r.cost, 2.0);
  EXPECT_DOUBLE_EQ(ExactMvbp(inst).cost, 2.0);
}

TEST(SolveWeightedTest, EmptyInstance) {
  const SolveReport r = SolveWeighted(Halves(0));
  EXPECT_TRUE(r.packing.bins.empty());
  EXPECT_EQ(r.cost, 0.0);
  EXPECT_TRUE(r.bound_ok);
}

TEST(SolveWeightedTest, InfeasibleItem) {
  Instance inst = Halves(2);
  inst.items[0].incarnations[0].sizes = {1.2};
  EXPECT_THROW(SolveWeighted(inst), InfeasibleItemError);
}

TEST(SolveUnweightedTest, RejectsWeightedBins) {
  EXPECT_THROW(SolveUnweighted(MixedBins()), InvalidInstanceError);
  const SolveReport r = SolveUnweighted(TwoFamilies());
  EXPECT_NEAR(r.bound, (std::log(4.0) + 1.0) * r.lp_value + 3.0, 1e-9);
}

TEST(GreedyPhaseTest, EmptySupportWithOpenItems) {
  const Instance inst = Halves(2);
  CoverLpSolution cover;
  cover.value = 1.0;
  const std::vector<double> y = {0.5, 0.5};
  EXPECT_THROW(GreedyPhase(inst, cover, y, 2.0), EmptySupportError);
}

TEST(GreedyPhaseTest, StopsAtWeightThreshold) {
  // ln(2) * OPT* = ln(2) * 2 ~ 1.386: the second pick crosses it.
  const Instance inst = Halves(4);
  const CoverLpSolution cover = SolveCoverLp(inst);
  const auto y = DualObliviousDuals(inst);
  const GreedyState g = GreedyPhase(inst, cover, y, 2.0);
  EXPECT_EQ(g.chosen.size(), 2);
  EXPECT_TRUE(g.uncovered.empty());
  EXPECT_FALSE(g.reached_weight_bound);
  ASSERT_EQ(g.trace.size(), 2);
  EXPECT_NEAR(g.trace[0].rate, 1.0, 1e-9);
  EXPECT_NEAR(g.trace[0].residual_profit, 1.0, 1e-9);
  EXPECT_NEAR(g.trace[0].residual_bound, 1.0, 1e-9);
}

TEST(RestrictBinTypesTest, KeepsOrder) {
  const Instance inst = MixedBins();
  const Instance r = RestrictBinTypes(inst, 0b10);
  ASSERT_EQ(r.num_bin_types(), 1);
  EXPECT_EQ(r.bin_types[0], inst.bin_types[1]);
  EXPECT_EQ(r.items, inst.items);
}

TEST(SolveWeightedWrappedTest, SolvesEveryFeasibleSubset) {
  Instance inst = Halves(3);
  inst.bin_types = {{{1.0}, 1.0}, {{0.5}, 0.6}, {{1.0}, 2.0}};
  const SolveReport r = SolveWeightedWrapped(inst);
  EXPECT_EQ(r.subsets_solved, 7);
  EXPECT_FALSE(r.wrapper_fallback);
  EXPECT_TRUE(CheckPacking(inst, r.packing).feasible);
  EXPECT_DOUBLE_EQ(r.cost, PackingCost(inst, r.packing));
  for (const Bin& b : r.packing.bins) {
    EXPECT_TRUE(r.bin_type_mask >> b.bin_type & 1ULL);
  }
}

TEST(SolveWeightedWrappedTest, SkipsSubsetsThatCannotHoldAnItem) {
  Instance inst = Halves(2);
  inst.items[1].incarnations[0].sizes = {0.9};
  inst.bin_types = {{{1.0}, 1.0}, {{0.5}, 0.4}};
  const SolveReport r = SolveWeightedWrapped(inst);
  EXPECT_EQ(r.subsets_solved, 2);
  EXPECT_TRUE(CheckPacking(inst, r.packing).feasible);
}

// Full-mask solve is one of the candidates, so wrapping never costs more.
TEST(SolveWeightedWrappedTest, NeverWorseThanUnwrapped) {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    const Instance inst = RandomInstance(seed, 8, 2, 2, 3, true);
    const SolveReport plain = SolveWeighted(inst);
    const SolveReport wrapped = SolveWeightedWrapped(inst);
    EXPECT_LE(wrapped.cost, plain.cost) << "seed " << seed;
  }
}

// Every run: feasible packing covering each item once, cost matches the
// packing, all internal checks hold, and the cost sits between the LP value
// and the reported bound.
TEST(SolveWeightedPropertyTest, BoundsAndFeasibility) {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    const int dim = 1 + seed % 3;
    const Instance inst =
        RandomInstance(seed, 3 + seed % 8, 1 + seed % 3, dim, 1 + seed % 3,
                       seed % 2 == 0);
    const SolveReport r = SolveWeighted(inst);
    EXPECT_TRUE(CheckPacking(inst, r.packing).feasible) << "seed " << seed;
    EXPECT_DOUBLE_EQ(r.cost, PackingCost(inst, r.packing));
    EXPECT_NEAR(r.cost, r.greedy_cost + r.residual_cost, 1e-9)
        << "seed " << seed;
    EXPECT_TRUE(r.bound_ok) << "seed " << seed;
    EXPECT_TRUE(r.greedy_cap_ok) << "seed " << seed;
    EXPECT_TRUE(r.decay_ok) << "seed " << seed;
    EXPECT_GE(r.cost, r.lp_value - 1e-6) << "seed " << seed;
    EXPECT_LE(r.dual_sum, r.lp_value + 1e-6) << "seed " << seed;
  }
}

TEST(SolveWeightedPropertyTest, NoBetterThanOracle) {
  for (uint64_t seed = 50; seed <= 70; ++seed) {
    const Instance inst = RandomInstance(seed, 6, 2, 2, 2, seed % 2 == 0);
    const double opt = ExactMvbp(inst).cost;
    EXPECT_GE(SolveWeighted(inst).cost, opt - 1e-9);
    EXPECT_LE(SolveWeightedWrapped(inst).cost / opt, std::log(4.0) + 3.0);
  }
}

}  // namespace
}  // namespace mvbp
