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

// Subcommands of the `mvbp` tool, callable in-process. Each returns the
// process exit code and writes its report as `key=value` lines (or an
// aligned table when `pretty`) to `out`; diagnostics go to `err`.

#ifndef MVBP_CLI_H_
#define MVBP_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "mvbp/instance_io.h"

namespace mvbp::cli {

enum ExitCode : int {
  kOk = 0,
  kInfeasiblePacking = 1,
  kInputError = 2,
  kBoundViolation = 3,
  kInfeasibleItem = 4,
  kBudgetExceeded = 5,
};

struct GenerateCommand {
  GeneratorParams params;
  std::string out_path;  // stdout when empty
  std::string name;
};

struct SolveCommand {
  std::string instance_path;
  std::string mode = "mvbp";  // mmk | mvbp | mvbp-wrapped
  // Defaults: 1.0 for mmk, 0.1 for the bin-packing modes.
  std::optional<double> epsilon;
  std::string out_path;  // packing (or selection) file; skipped when empty
  bool pretty = false;
  // Rejects the file (exit 2) when its dimension differs.
  std::optional<int> expected_dimension;
};

struct VerifyCommand {
  std::string instance_path;
  std::string packing_path;
};

struct CompareCommand {
  std::string instance_path;
  double epsilon = 0.1;
  int64_t oracle_budget = 10'000'000;
  bool pretty = false;
};

int RunGenerate(const GenerateCommand& command, std::ostream& out,
                std::ostream& err);
int RunSolve(const SolveCommand& command, std::ostream& out,
             std::ostream& err);
int RunVerify(const VerifyCommand& command, std::ostream& out,
              std::ostream& err);
int RunCompare(const CompareCommand& command, std::ostream& out,
               std::ostream& err);

}  // namespace mvbp::cli

#endif  // MVBP_CLI_H_
