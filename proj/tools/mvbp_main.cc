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

#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "mvbp/cli.h"

int main(int argc, char** argv) {
  using namespace mvbp::cli;

  CLI::App app{"Multiple-choice vector bin packing and knapsack solvers"};
  app.require_subcommand(1);

  GenerateCommand generate;
  mvbp::GeneratorParams& params = generate.params;
  CLI::App* gen = app.add_subcommand("generate", "Write a seeded random instance");
  gen->add_option("-n,--items", params.num_items, "Number of items");
  gen->add_option("-m,--incarnations", params.max_incarnations,
                  "Maximum incarnations per item");
  gen->add_option("-D,--dimension", params.dimension, "Dimensions");
  gen->add_option("-T,--bin-types", params.num_bin_types, "Bin types");
  gen->add_option("--size-lo", params.size_lo, "Smallest size");
  gen->add_option("--size-hi", params.size_hi, "Largest size");
  gen->add_option("--capacity-lo", params.capacity_lo,
                  "Smallest capacity of extra bin types");
  gen->add_flag("--weighted", params.weighted_bins,
                "Draw weights for extra bin types");
  gen->add_option("--seed", params.seed, "Random seed");
  gen->add_option("--name", generate.name, "Instance name stored in metadata");
  gen->add_option("--out", generate.out_path, "Output file (default stdout)");

  SolveCommand solve;
  std::optional<double> solve_epsilon;
  std::optional<int> solve_dimension;
  CLI::App* sol = app.add_subcommand("solve", "Solve an instance file");
  sol->add_option("instance", solve.instance_path, "Instance file")->required();
  sol->add_option("--mode", solve.mode, "mmk | mvbp | mvbp-wrapped")
      ->check(CLI::IsMember({"mmk", "mvbp", "mvbp-wrapped"}));
  sol->add_option("--epsilon", solve_epsilon,
                  "Approximation parameter (mmk 1.0, mvbp 0.1)");
  sol->add_option("--dimension", solve_dimension,
                  "Reject files of another dimension");
  sol->add_option("--out", solve.out_path, "Packing or selection output file");
  sol->add_flag("--pretty", solve.pretty, "Aligned table output");

  VerifyCommand verify;
  CLI::App* ver = app.add_subcommand("verify", "Check a packing file");
  ver->add_option("instance", verify.instance_path, "Instance file")->required();
  ver->add_option("packing", verify.packing_path, "Packing file")->required();

  CompareCommand compare;
  CLI::App* cmp =
      app.add_subcommand("compare", "Compare the solver with exact oracles");
  cmp->add_option("instance", compare.instance_path, "Instance file")
      ->required();
  cmp->add_option("--epsilon", compare.epsilon, "Covering LP epsilon");
  cmp->add_option("--oracle-budget", compare.oracle_budget,
                  "Search-space cap for the exact oracles");
  cmp->add_flag("--pretty", compare.pretty, "Aligned table output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (*gen) return RunGenerate(generate, std::cout, std::cerr);
  if (*sol) {
    solve.epsilon = solve_epsilon;
    solve.expected_dimension = solve_dimension;
    return RunSolve(solve, std::cout, std::cerr);
  }
  if (*ver) return RunVerify(verify, std::cout, std::cerr);
  return RunCompare(compare, std::cout, std::cerr);
}
