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

#include "mvbp/mmk_ptas.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>

namespace mvbp {

int GuessSize(int num_items, int dimension, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  const double ratio = static_cast<double>(dimension) / epsilon;
  const double q = std::ceil(ratio - 1e-9);
  if (q >= num_items) return num_items;
  return std::max(0, static_cast<int>(q));
}

namespace {

int NumIncarnations(const Instance& instance, int item) {
  return static_cast<int>(instance.items[item].incarnations.size());
}

// Depth-first walk over item sets in lexicographic order. Each node carries
// every incarnation map of its set (lexicographic) together with the
// residual capacity it leaves. With `prune`, maps that overflow are dropped
// and a node without maps ends its subtree.
class GuessWalker {
 public:
  struct Partial {
    std::vector<int> incarnations;
    std::vector<double> residual;
  };

  GuessWalker(const Instance& instance, int q, bool prune,
              const std::function<void(const Guess&)>& visit)
      : instance_(instance), q_(q), prune_(prune), visit_(visit) {}

  void Run() {
    std::vector<int> items;
    std::vector<Partial> root(1);
    root[0].residual.assign(instance_.dimension, 1.0);
    Walk(items, root);
  }

 private:
  void Walk(std::vector<int>& items, const std::vector<Partial>& maps) {
    Guess guess;
    guess.items = items;
    for (const Partial& p : maps) {
      guess.incarnations = p.incarnations;
      visit_(guess);
    }
    if (static_cast<int>(items.size()) >= q_) return;
    const int first = items.empty() ? 0 : items.back() + 1;
    for (int i = first; i < instance_.num_items(); ++i) {
      std::vector<Partial> next;
      for (const Partial& p : maps) {
        for (int j = 0; j < NumIncarnations(instance_, i); ++j) {
          Partial child{p.incarnations, p.residual};
          child.incarnations.push_back(j);
          bool fits = true;
          for (int d = 0; d < instance_.dimension; ++d) {
            child.residual[d] -= instance_.size(i, j, d);
            fits = fits && child.residual[d] >= -kFeasibilityTolerance;
          }
          if (fits || !prune_) next.push_back(std::move(child));
        }
      }
      if (next.empty()) continue;
      items.push_back(i);
      Walk(items, next);
      items.pop_back();
    }
  }

  const Instance& instance_;
  int q_;
  bool prune_;
  const std::function<void(const Guess&)>& visit_;
};

struct Evaluation {
  KnapsackSelection selection;
  GuessRecord record;
};

Evaluation Evaluate(const Instance& instance,
                    const RestrictedMmkLp& restricted) {
  Evaluation eval;
  eval.record.num_rows = restricted.lp.num_rows();
  if (restricted.free_vars.empty()) {
    eval.selection.chosen = restricted.fixed;
    eval.selection.value = restricted.fixed_weight;
    eval.record.lp_objective = restricted.fixed_weight;
    eval.record.value = restricted.fixed_weight;
    return eval;
  }
  const LpResult lp = SolveLp(restricted.lp);
  if (lp.status != LpStatus::kOptimal) {
    // x = 0 is feasible and every variable is at most 1.
    throw LpNumericalError("restricted knapsack LP not solved to optimality");
  }
  eval.selection = RoundDown(instance, restricted, lp);
  eval.record.lp_objective = restricted.fixed_weight + lp.objective;
  eval.record.value = eval.selection.value;
  eval.record.positive_support = PositiveSupportSize(lp, kIntegralityTolerance);
  int last_item = -1;
  for (int c = 0; c < static_cast<int>(lp.primal.size()); ++c) {
    const double x = lp.primal[c];
    if (x > kIntegralityTolerance && x < 1.0 - kIntegralityTolerance) {
      ++eval.record.fractional_entries;
      // free_vars are grouped by item.
      if (restricted.free_vars[c].item != last_item) {
        ++eval.record.fractional_items;
        last_item = restricted.free_vars[c].item;
      }
    }
  }
  return eval;
}

// Strictly greater wins so that the first guess in enumeration order keeps
// ties.
bool Better(double candidate, double incumbent) {
  return candidate > incumbent;
}

}  // namespace

void EnumerateGuesses(const Instance& instance, int q,
                      const std::function<void(const Guess&)>& visit) {
  GuessWalker(instance, q, /*prune=*/false, visit).Run();
}

std::vector<Guess> EnumerateGuesses(const Instance& instance, int q) {
  std::vector<Guess> out;
  EnumerateGuesses(instance, q, [&out](const Guess& g) { out.push_back(g); });
  return out;
}

std::optional<RestrictedMmkLp> BuildRestrictedLp(const Instance& instance,
                                                 const Guess& guess) {
  const int dim = instance.dimension;
  RestrictedMmkLp out;
  out.residual.assign(dim, 1.0);
  out.weight_threshold = std::numeric_limits<double>::infinity();
  std::vector<char> in_guess(instance.num_items(), 0);
  for (size_t k = 0; k < guess.items.size(); ++k) {
    const int i = guess.items[k];
    const int j = guess.incarnations[k];
    in_guess[i] = 1;
    for (int d = 0; d < dim; ++d) out.residual[d] -= instance.size(i, j, d);
    const double w = instance.items[i].incarnations[j].weight;
    out.weight_threshold = std::min(out.weight_threshold, w);
    out.fixed.push_back({i, j});
    out.fixed_weight += w;
  }
  for (int d = 0; d < dim; ++d) {
    if (out.residual[d] < -kFeasibilityTolerance) return std::nullopt;
    out.residual[d] = std::max(out.residual[d], 0.0);
  }

  std::vector<int> item_of_row;
  for (int i = 0; i < instance.num_items(); ++i) {
    if (in_guess[i]) continue;
    bool any = false;
    for (int j = 0; j < NumIncarnations(instance, i); ++j) {
      if (instance.items[i].incarnations[j].weight > out.weight_threshold) {
        continue;
      }
      out.free_vars.push_back({i, j});
      any = true;
    }
    if (any) item_of_row.push_back(i);
  }
  out.num_free_items = static_cast<int>(item_of_row.size());

  const int cols = static_cast<int>(out.free_vars.size());
  LpProblem& lp = out.lp;
  lp.sense = ObjectiveSense::kMaximize;
  lp.objective.resize(cols);
  for (int c = 0; c < cols; ++c) {
    const Assignment& a = out.free_vars[c];
    lp.objective[c] = instance.items[a.item].incarnations[a.incarnation].weight;
  }
  for (int d = 0; d < dim; ++d) {
    std::vector<double> row(cols);
    for (int c = 0; c < cols; ++c) {
      row[c] = instance.size(out.free_vars[c].item,
                             out.free_vars[c].incarnation, d);
    }
    lp.AddRow(std::move(row), RowSense::kLessEqual, out.residual[d]);
  }
  for (int item : item_of_row) {
    std::vector<double> row(cols, 0.0);
    for (int c = 0; c < cols; ++c) {
      if (out.free_vars[c].item == item) row[c] = 1.0;
    }
    lp.AddRow(std::move(row), RowSense::kLessEqual, 1.0);
  }
  return out;
}

KnapsackSelection RoundDown(const Instance& instance,
                            const RestrictedMmkLp& restricted,
                            const LpResult& lp_result) {
  KnapsackSelection selection;
  selection.chosen = restricted.fixed;
  for (int c = 0; c < static_cast<int>(restricted.free_vars.size()); ++c) {
    if (lp_result.primal[c] >= 1.0 - kIntegralityTolerance) {
      selection.chosen.push_back(restricted.free_vars[c]);
    }
  }
  if (!CheckKnapsackSelection(instance, selection).empty()) {
    // Values just below 1 pushed the load over; take only exact ones.
    selection.chosen = restricted.fixed;
    for (int c = 0; c < static_cast<int>(restricted.free_vars.size()); ++c) {
      if (lp_result.primal[c] >= 1.0) {
        selection.chosen.push_back(restricted.free_vars[c]);
      }
    }
  }
  std::sort(selection.chosen.begin(), selection.chosen.end());
  selection.value = SelectionWeight(instance, selection.chosen);
  return selection;
}

KnapsackSelection SolveMmkSerial(const Instance& instance,
                                 const MmkOptions& options) {
  const int q =
      GuessSize(instance.num_items(), instance.dimension, options.epsilon);
  KnapsackSelection best;
  bool have_best = false;
  int64_t rank = 0;
  if (options.trace != nullptr) options.trace->clear();
  EnumerateGuesses(instance, q, [&](const Guess& guess) {
    std::optional<RestrictedMmkLp> restricted =
        BuildRestrictedLp(instance, guess);
    if (!restricted) return;
    Evaluation eval = Evaluate(instance, *restricted);
    eval.record.rank = rank++;
    if (options.trace != nullptr) options.trace->push_back(eval.record);
    if (!have_best || Better(eval.selection.value, best.value)) {
      best = std::move(eval.selection);
      have_best = true;
    }
  });
  return best;
}

KnapsackSelection SolveMmk(const Instance& instance,
                           const MmkOptions& options) {
  const int q =
      GuessSize(instance.num_items(), instance.dimension, options.epsilon);
  std::vector<Guess> guesses;
  GuessWalker(instance, q, /*prune=*/true,
              [&guesses](const Guess& g) { guesses.push_back(g); })
      .Run();

  const int64_t count = static_cast<int64_t>(guesses.size());
  std::vector<Evaluation> evals(count);
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic, 8)
  for (int64_t k = 0; k < count; ++k) {
    try {
      std::optional<RestrictedMmkLp> restricted =
          BuildRestrictedLp(instance, guesses[k]);
      // The walker already applied the same residual test.
      if (!restricted) throw std::logic_error("pruned walk emitted a reject");
      evals[k] = Evaluate(instance, *restricted);
    } catch (...) {
#pragma omp critical(mvbp_mmk_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  if (options.trace != nullptr) options.trace->clear();
  int64_t best = 0;
  for (int64_t k = 0; k < count; ++k) {
    evals[k].record.rank = k;
    if (options.trace != nullptr) options.trace->push_back(evals[k].record);
    if (k > 0 && Better(evals[k].selection.value, evals[best].selection.value)) {
      best = k;
    }
  }
  return std::move(evals[best].selection);
}

}  // namespace mvbp
