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

#include "mvbp/lp.h"

#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include <gtest/gtest.h>

namespace mvbp {
namespace {

constexpr double kTol = 1e-7;

// Solves the square system M z = rhs by Gaussian elimination with partial
// pivoting. nullopt when singular.
std::optional<std::vector<double>> SolveSquare(std::vector<std::vector<double>> m,
                                               std::vector<double> rhs) {
  const int k = static_cast<int>(rhs.size());
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    for (int r = col + 1; r < k; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (std::abs(m[pivot][col]) < 1e-12) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (int r = 0; r < k; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < k; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> z(k);
  for (int i = 0; i < k; ++i) z[i] = rhs[i] / m[i][i];
  return z;
}

// Brute-force optimum of a bounded LP: every choice of n tight constraints
// among the rows and the nonnegativity bounds gives a candidate vertex.
// Returns nullopt when no vertex is feasible.
std::optional<double> VertexOracle(const LpProblem& lp) {
  const int n = lp.num_cols();
  const int m = lp.num_rows();
  std::vector<std::vector<double>> all = lp.rows;
  std::vector<double> rhs = lp.rhs;
  for (int c = 0; c < n; ++c) {
    std::vector<double> e(n, 0.0);
    e[c] = 1.0;
    all.push_back(e);
    rhs.push_back(0.0);
  }
  const int total = m + n;
  std::optional<double> best;
  for (unsigned mask = 0; mask < (1u << total); ++mask) {
    if (__builtin_popcount(mask) != n) continue;
    std::vector<std::vector<double>> sys;
    std::vector<double> b;
    for (int r = 0; r < total; ++r) {
      if (mask >> r & 1u) {
        sys.push_back(all[r]);
        b.push_back(rhs[r]);
      }
    }
    const auto x = SolveSquare(sys, b);
    if (!x) continue;
    if (MaxPrimalViolation(lp, *x) > 1e-9) continue;
    double value = 0.0;
    for (int c = 0; c < n; ++c) value += lp.objective[c] * (*x)[c];
    const bool better = lp.sense == ObjectiveSense::kMaximize
                            ? !best || value > *best
                            : !best || value < *best;
    if (better) best = value;
  }
  return best;
}

LpProblem TwoVariableExample() {
  LpProblem lp;
  lp.objective = {5.0, 4.0};
  lp.AddRow({0.6, 0.5}, RowSense::kLessEqual, 1.0);
  lp.AddRow({1.0, 0.0}, RowSense::kLessEqual, 1.0);
  lp.AddRow({0.0, 1.0}, RowSense::kLessEqual, 1.0);
  return lp;
}

TEST(SolveLpTest, TwoVariableExampleReachesVertex) {
  const LpProblem lp = TwoVariableExample();
  const LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, 8.2, kTol);
  EXPECT_NEAR(r.primal[0], 1.0, kTol);
  EXPECT_NEAR(r.primal[1], 0.8, kTol);
  const auto oracle = VertexOracle(lp);
  ASSERT_TRUE(oracle);
  EXPECT_NEAR(*oracle, 8.2, kTol);
  // The first row's price is 4 / 0.5 = 8; x1 <= 1 prices at 5 - 0.6 * 8.
  const auto y = Duals(r);
  EXPECT_NEAR(y[0], 8.0, kTol);
  EXPECT_NEAR(y[1], 0.2, kTol);
  EXPECT_NEAR(y[2], 0.0, kTol);
  EXPECT_NEAR(DualObjective(lp, y), r.objective, kTol);
}

TEST(SolveLpTest, Infeasible) {
  LpProblem lp;
  lp.objective = {1.0};
  lp.AddRow({1.0}, RowSense::kLessEqual, 1.0);
  lp.AddRow({1.0}, RowSense::kGreaterEqual, 2.0);
  EXPECT_EQ(SolveLp(lp).status, LpStatus::kInfeasible);
}

TEST(SolveLpTest, Unbounded) {
  LpProblem lp;
  lp.objective = {1.0, 1.0};
  lp.AddRow({1.0, -1.0}, RowSense::kLessEqual, 1.0);
  EXPECT_EQ(SolveLp(lp).status, LpStatus::kUnbounded);
}

TEST(SolveLpTest, DualsRequireOptimal) {
  LpProblem lp;
  lp.objective = {1.0};
  lp.AddRow({1.0}, RowSense::kGreaterEqual, 1.0);
  const LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kUnbounded);
  EXPECT_THROW(Duals(r), std::logic_error);
}

TEST(SolveLpTest, NoRows) {
  LpProblem lp;
  lp.sense = ObjectiveSense::kMinimize;
  lp.objective = {1.0, 2.0};
  const LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.objective, 0.0);
}

TEST(SolveLpTest, CoveringMinimizationWithNegativeRhsRow) {
  LpProblem lp;
  lp.sense = ObjectiveSense::kMinimize;
  lp.objective = {1.0, 1.0, 1.0};
  lp.AddRow({1.0, 1.0, 0.0}, RowSense::kGreaterEqual, 1.0);
  lp.AddRow({0.0, 1.0, 1.0}, RowSense::kGreaterEqual, 1.0);
  lp.AddRow({1.0, 0.0, 1.0}, RowSense::kGreaterEqual, 1.0);
  lp.AddRow({-1.0, 0.0, 0.0}, RowSense::kGreaterEqual, -0.25);
  const LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, 1.75, kTol);
  EXPECT_NEAR(r.objective, *VertexOracle(lp), kTol);
  EXPECT_NEAR(DualObjective(lp, Duals(r)), r.objective, kTol);
}

TEST(SolveLpTest, RedundantEqualities) {
  LpProblem lp;
  lp.objective = {1.0, 2.0};
  lp.AddRow({1.0, 1.0}, RowSense::kEqual, 1.0);
  lp.AddRow({2.0, 2.0}, RowSense::kEqual, 2.0);
  const LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, 2.0, kTol);
  EXPECT_NEAR(DualObjective(lp, Duals(r)), r.objective, kTol);
}

// Degenerate cycling example (Beale); the anti-cycling switch must finish.
TEST(SolveLpTest, BealeDegenerateProblemTerminates) {
  LpProblem lp;
  lp.objective = {0.75, -150.0, 0.02, -6.0};
  lp.AddRow({0.25, -60.0, -0.04, 9.0}, RowSense::kLessEqual, 0.0);
  lp.AddRow({0.5, -90.0, -0.02, 3.0}, RowSense::kLessEqual, 0.0);
  lp.AddRow({0.0, 0.0, 1.0, 0.0}, RowSense::kLessEqual, 1.0);
  const LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, 0.05, kTol);
}

// Random bounded problems: objective matches the vertex oracle, the result
// is a vertex, the duals are feasible and close the gap.
TEST(SolveLpPropertyTest, MatchesVertexOracleOnRandomBoundedProblems) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> coef(-1.0, 2.0);
  std::uniform_real_distribution<double> pos(0.1, 2.0);
  std::uniform_int_distribution<int> dims(1, 4);
  std::uniform_int_distribution<int> sense_pick(0, 5);
  int optimal = 0;
  for (int round = 0; round < 300; ++round) {
    const int n = dims(rng);
    const int m = dims(rng);
    LpProblem lp;
    lp.sense = round % 2 ? ObjectiveSense::kMinimize : ObjectiveSense::kMaximize;
    for (int c = 0; c < n; ++c) lp.objective.push_back(coef(rng));
    for (int r = 0; r < m; ++r) {
      std::vector<double> row(n);
      for (double& v : row) v = coef(rng);
      const int s = sense_pick(rng);
      const RowSense sense = s < 3   ? RowSense::kLessEqual
                             : s < 5 ? RowSense::kGreaterEqual
                                     : RowSense::kEqual;
      lp.AddRow(row, sense, coef(rng));
    }
    // Box keeps every problem bounded.
    std::vector<double> box(n, 1.0);
    lp.AddRow(box, RowSense::kLessEqual, 3.0 + pos(rng));

    const LpResult r = SolveLp(lp);
    const auto oracle = VertexOracle(lp);
    if (!oracle) {
      EXPECT_EQ(r.status, LpStatus::kInfeasible) << "round " << round;
      continue;
    }
    ASSERT_EQ(r.status, LpStatus::kOptimal) << "round " << round;
    ++optimal;
    EXPECT_NEAR(r.objective, *oracle, 1e-6) << "round " << round;
    EXPECT_LE(MaxPrimalViolation(lp, r.primal), kTol) << "round " << round;

    // Vertex: positive structurals plus positive slacks <= rows.
    int positive = PositiveSupportSize(r);
    for (int row = 0; row < lp.num_rows(); ++row) {
      double lhs = 0.0;
      for (int c = 0; c < n; ++c) lhs += lp.rows[row][c] * r.primal[c];
      if (lp.row_senses[row] != RowSense::kEqual &&
          std::abs(lhs - lp.rhs[row]) > kTol) {
        ++positive;
      }
    }
    EXPECT_LE(positive, lp.num_rows()) << "round " << round;

    // Dual feasibility in the d(objective)/d(rhs) convention.
    const auto y = Duals(r);
    const bool maximize = lp.sense == ObjectiveSense::kMaximize;
    for (int row = 0; row < lp.num_rows(); ++row) {
      const double signed_y = maximize ? y[row] : -y[row];
      if (lp.row_senses[row] == RowSense::kLessEqual) {
        EXPECT_GE(signed_y, -1e-7) << "round " << round << " row " << row;
      } else if (lp.row_senses[row] == RowSense::kGreaterEqual) {
        EXPECT_LE(signed_y, 1e-7) << "round " << round << " row " << row;
      }
    }
    for (int c = 0; c < n; ++c) {
      double reduced = 0.0;
      for (int row = 0; row < lp.num_rows(); ++row) {
        reduced += lp.rows[row][c] * y[row];
      }
      if (maximize) {
        EXPECT_GE(reduced, lp.objective[c] - 1e-6) << "round " << round;
      } else {
        EXPECT_LE(reduced, lp.objective[c] + 1e-6) << "round " << round;
      }
    }
    EXPECT_NEAR(DualObjective(lp, y), r.objective, 1e-6) << "round " << round;
  }
  EXPECT_GT(optimal, 100);
}

TEST(MaxPrimalViolationTest, CountsNegativityAndRows) {
  const LpProblem lp = TwoVariableExample();
  EXPECT_DOUBLE_EQ(MaxPrimalViolation(lp, std::vector<double>{1.0, 0.8}), 0.0);
  EXPECT_NEAR(MaxPrimalViolation(lp, std::vector<double>{-0.5, 0.0}), 0.5,
              1e-15);
  EXPECT_NEAR(MaxPrimalViolation(lp, std::vector<double>{1.0, 1.0}), 0.1,
              1e-12);
}

}  // namespace
}  // namespace mvbp
