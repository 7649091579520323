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

#include "mvbp/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "mvbp/cover_lp.h"
#include "mvbp/dual_oblivious.h"
#include "mvbp/lp.h"
#include "mvbp/mmk_ptas.h"
#include "mvbp/mvbp_solver.h"
#include "mvbp/oracle.h"

namespace mvbp::cli {

namespace {

class Report {
 public:
  void Add(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
  }
  void Add(std::string key, double value) {
    Add(std::move(key), fmt::format("{}", value));
  }
  void Add(std::string key, int value) {
    Add(std::move(key), std::to_string(value));
  }
  void Add(std::string key, int64_t value) {
    Add(std::move(key), std::to_string(value));
  }
  void Add(std::string key, bool value) {
    Add(std::move(key), std::string(value ? "true" : "false"));
  }

  void Write(std::ostream& out, bool pretty) const {
    size_t width = 0;
    for (const auto& [key, value] : fields_) width = std::max(width, key.size());
    for (const auto& [key, value] : fields_) {
      if (pretty) {
        out << fmt::format("{:<{}}  {}\n", key, width, value);
      } else {
        out << key << '=' << value << '\n';
      }
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ParseError(fmt::format("cannot write {}", path));
  file << contents;
}

// Parses and validates an instance file.
Instance LoadInstance(const std::string& path,
                      std::optional<int> expected_dimension) {
  Instance inst = ParseInstance(ReadFile(path)).instance;
  if (expected_dimension && *expected_dimension != inst.dimension) {
    throw ParseError(fmt::format("requested dimension {} but {} declares {}",
                                 *expected_dimension, path, inst.dimension));
  }
  const std::vector<std::string> violations = ValidateInstance(inst);
  if (!violations.empty()) throw InvalidInstanceError(violations.front());
  return inst;
}

// Maps library errors onto exit codes.
template <typename Body>
int Guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidInstanceError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InfeasibleItemError& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasibleItem;
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kBoundViolation;
  }
}

void AddSolveFields(Report& report, const SolveReport& solve) {
  report.Add("lp_value", solve.lp_value);
  report.Add("lp_columns", solve.lp_columns);
  report.Add("dual_sum", solve.dual_sum);
  report.Add("greedy_picks", solve.greedy_picks);
  report.Add("greedy_cost", solve.greedy_cost);
  report.Add("residual_cost", solve.residual_cost);
  report.Add("bins", static_cast<int>(solve.packing.bins.size()));
  report.Add("cost", solve.cost);
  report.Add("bound", solve.bound);
  report.Add("bound_ok", solve.bound_ok);
  report.Add("greedy_cap_ok", solve.greedy_cap_ok);
  report.Add("decay_ok", solve.decay_ok);
  report.Add("bin_type_mask", fmt::format("{:#x}", solve.bin_type_mask));
}

}  // namespace

int RunGenerate(const GenerateCommand& command, std::ostream& out,
                std::ostream& err) {
  if (auto problem = CheckGeneratorParams(command.params)) {
    err << "error: " << *problem << '\n';
    return kInputError;
  }
  return Guarded(err, [&] {
    InstanceFile file = GenerateInstance(command.params);
    if (!command.name.empty()) file.metadata["name"] = command.name;
    const std::string text = SerializeInstance(file);
    if (command.out_path.empty()) {
      out << text;
    } else {
      WriteFile(command.out_path, text);
    }
    return static_cast<int>(kOk);
  });
}

int RunSolve(const SolveCommand& command, std::ostream& out,
             std::ostream& err) {
  if (command.mode != "mmk" && command.mode != "mvbp" &&
      command.mode != "mvbp-wrapped") {
    err << "error: unknown mode " << command.mode << '\n';
    return kInputError;
  }
  return Guarded(err, [&]() -> int {
    const Instance inst =
        LoadInstance(command.instance_path, command.expected_dimension);
    Report report;
    report.Add("mode", command.mode);
    report.Add("items", inst.num_items());
    report.Add("dimension", inst.dimension);
    report.Add("bin_types", inst.num_bin_types());

    if (command.mode == "mmk") {
      const double epsilon = command.epsilon.value_or(1.0);
      if (!(epsilon > 0.0)) throw ParseError("epsilon must be positive");
      if (inst.num_bin_types() > 0) {
        report.Add("warning",
                   std::string("bin types ignored; knapsack uses unit "
                               "capacities"));
      }
      std::vector<GuessRecord> trace;
      const KnapsackSelection selection =
          SolveMmk(inst, MmkOptions{.epsilon = epsilon, .trace = &trace});
      int max_fractional = 0;
      for (const GuessRecord& r : trace) {
        max_fractional = std::max(max_fractional, r.fractional_items);
      }
      const bool feasible = CheckKnapsackSelection(inst, selection).empty();
      const bool ok = feasible && max_fractional <= inst.dimension;
      report.Add("epsilon", epsilon);
      report.Add("guess_size",
                 GuessSize(inst.num_items(), inst.dimension, epsilon));
      report.Add("guesses", static_cast<int64_t>(trace.size()));
      report.Add("chosen", static_cast<int>(selection.chosen.size()));
      report.Add("value", selection.value);
      report.Add("max_fractional_items", max_fractional);
      report.Add("feasible", feasible);
      report.Add("bound_ok", ok);
      report.Write(out, command.pretty);
      if (!command.out_path.empty()) {
        WriteFile(command.out_path, SerializeSelection(selection));
      }
      return ok ? kOk : kBoundViolation;
    }

    const double epsilon = command.epsilon.value_or(0.1);
    if (!(epsilon > 0.0)) throw ParseError("epsilon must be positive");
    ValidateForSolve(inst);
    const SolveReport solve = command.mode == "mvbp"
                                  ? SolveWeighted(inst, epsilon)
                                  : SolveWeightedWrapped(inst, epsilon);
    const PackingVerdict verdict = CheckPacking(inst, solve.packing);
    report.Add("epsilon", epsilon);
    AddSolveFields(report, solve);
    if (command.mode == "mvbp-wrapped") {
      report.Add("subsets_solved", solve.subsets_solved);
      report.Add("wrapper_fallback", solve.wrapper_fallback);
    }
    report.Add("feasible", verdict.feasible);
    report.Write(out, command.pretty);
    for (const std::string& v : verdict.violations) err << "violation: " << v << '\n';
    if (!command.out_path.empty()) {
      WriteFile(command.out_path, SerializePacking(solve.packing));
    }
    const bool ok = verdict.feasible && solve.bound_ok &&
                    solve.greedy_cap_ok && solve.decay_ok;
    return ok ? kOk : kBoundViolation;
  });
}

int RunVerify(const VerifyCommand& command, std::ostream& out,
              std::ostream& err) {
  return Guarded(err, [&]() -> int {
    const Instance inst = LoadInstance(command.instance_path, std::nullopt);
    const Packing packing = ParsePacking(ReadFile(command.packing_path));
    const PackingVerdict verdict = CheckPacking(inst, packing);
    Report report;
    report.Add("bins", static_cast<int>(packing.bins.size()));
    report.Add("cost", verdict.feasible || packing.bins.empty()
                           ? PackingCost(inst, packing)
                           : std::numeric_limits<double>::quiet_NaN());
    report.Add("min_slack", verdict.min_slack);
    report.Add("feasible", verdict.feasible);
    report.Write(out, false);
    for (const std::string& v : verdict.violations) {
      out << "violation=" << v << '\n';
    }
    return verdict.feasible ? kOk : kInfeasiblePacking;
  });
}

int RunCompare(const CompareCommand& command, std::ostream& out,
               std::ostream& err) {
  return Guarded(err, [&]() -> int {
    if (!(command.epsilon > 0.0)) throw ParseError("epsilon must be positive");
    if (command.oracle_budget < 1) throw ParseError("oracle budget must be >= 1");
    const Instance inst = LoadInstance(command.instance_path, std::nullopt);
    ValidateForSolve(inst);
    const OracleBudget budget{command.oracle_budget};
    const MvbpOptimum exact = ExactMvbp(inst, budget);
    const CoverLpValue lp = ExactCoverLp(inst, budget);
    const SolveReport solve = SolveWeightedWrapped(inst, command.epsilon);
    double ratio = 1.0;
    if (exact.cost > 0.0) {
      ratio = solve.cost / exact.cost;
    } else if (solve.cost > 0.0) {
      ratio = std::numeric_limits<double>::infinity();
    }
    const double ceiling = std::log(2.0 * inst.dimension) + 3.0;
    const bool ok = ratio <= ceiling;
    Report report;
    report.Add("items", inst.num_items());
    report.Add("dimension", inst.dimension);
    report.Add("bin_types", inst.num_bin_types());
    report.Add("oracle_opt", exact.cost);
    report.Add("oracle_lp_value", lp.value);
    report.Add("oracle_lp_columns", lp.num_columns);
    report.Add("solver_lp_value", solve.lp_value);
    report.Add("solver_cost", solve.cost);
    report.Add("ratio", ratio);
    report.Add("ceiling", ceiling);
    report.Add("ratio_ok", ok);
    report.Write(out, command.pretty);
    return ok ? kOk : kBoundViolation;
  });
}

}  // namespace mvbp::cli
