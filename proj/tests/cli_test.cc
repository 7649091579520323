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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "mvbp/instance_io.h"
#include "test_util.h"

namespace mvbp::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mvbp_cli_test_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string Write(const std::string& name, const Instance& inst) {
    return Write(name, SerializeInstance(inst));
  }
  std::string Path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

// Value of `key` in a key=value report, or "" when absent.
std::string Field(const std::string& report, const std::string& key) {
  std::istringstream lines(report);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
  }
  return "";
}

TEST_F(CliTest, GenerateSolveVerify) {
  GenerateCommand gen;
  gen.params.seed = 9;
  gen.params.num_bin_types = 2;
  gen.out_path = Path("inst.json");
  ASSERT_EQ(RunGenerate(gen, out_, err_), kOk);

  SolveCommand solve;
  solve.instance_path = gen.out_path;
  solve.out_path = Path("packing.json");
  ASSERT_EQ(RunSolve(solve, out_, err_), kOk) << err_.str();
  EXPECT_EQ(Field(out_.str(), "feasible"), "true");
  EXPECT_EQ(Field(out_.str(), "bound_ok"), "true");

  std::ostringstream verify_out;
  EXPECT_EQ(RunVerify({gen.out_path, solve.out_path}, verify_out, err_), kOk);
  EXPECT_EQ(Field(verify_out.str(), "feasible"), "true");
  EXPECT_EQ(Field(verify_out.str(), "cost"), Field(out_.str(), "cost"));
}

TEST_F(CliTest, SolveIsDeterministic) {
  const std::string inst = Write("inst.json", testing::RandomInstance(
                                                  3, 9, 2, 2, 3, true));
  for (const std::string mode : {"mmk", "mvbp", "mvbp-wrapped"}) {
    std::string reports[2];
    std::string files[2];
    for (int run = 0; run < 2; ++run) {
      std::ostringstream out;
      SolveCommand solve;
      solve.instance_path = inst;
      solve.mode = mode;
      solve.out_path = Path("out" + std::to_string(run) + ".json");
      EXPECT_EQ(RunSolve(solve, out, err_), kOk) << mode << err_.str();
      reports[run] = out.str();
      files[run] = ReadFile(solve.out_path);
    }
    EXPECT_EQ(reports[0], reports[1]) << mode;
    EXPECT_EQ(files[0], files[1]) << mode;
  }
}

TEST_F(CliTest, VerifyReportsInfeasiblePacking) {
  const std::string inst = Write("inst.json", testing::Halves(2));
  const std::string packing = Write(
      "p.json",
      SerializePacking({{{0, {{0, 0}}}}}));
  EXPECT_EQ(RunVerify({inst, packing}, out_, err_), kInfeasiblePacking);
  EXPECT_EQ(Field(out_.str(), "violation"), "item 1 unassigned");
}

TEST_F(CliTest, InputErrors) {
  const std::string bad = Write("bad.json", "{\"dimension\": 1}");
  EXPECT_EQ(RunSolve({.instance_path = bad}, out_, err_), kInputError);
  EXPECT_EQ(RunSolve({.instance_path = Path("missing.json")}, out_, err_),
            kInputError);

  const std::string inst = Write("inst.json", testing::MixedBins());
  EXPECT_EQ(RunSolve({.instance_path = inst, .expected_dimension = 3}, out_,
                     err_),
            kInputError);
  EXPECT_EQ(RunSolve({.instance_path = inst, .mode = "magic"}, out_, err_),
            kInputError);
  EXPECT_EQ(RunSolve({.instance_path = inst, .epsilon = -1.0}, out_, err_),
            kInputError);

  Instance invalid = testing::MixedBins();
  invalid.items[0].incarnations[0].sizes.push_back(0.1);
  EXPECT_EQ(RunSolve({.instance_path = Write("invalid.json", invalid)}, out_,
                     err_),
            kInputError);

  GenerateCommand gen;
  gen.params.dimension = 0;
  EXPECT_EQ(RunGenerate(gen, out_, err_), kInputError);
}

TEST_F(CliTest, InfeasibleItem) {
  Instance inst = testing::Halves(2);
  inst.items[1].incarnations[0].sizes = {1.5};
  const std::string path = Write("inst.json", inst);
  EXPECT_EQ(RunSolve({.instance_path = path}, out_, err_), kInfeasibleItem);
  EXPECT_EQ(RunCompare({.instance_path = path}, out_, err_), kInfeasibleItem);
}

TEST_F(CliTest, MmkWarnsAboutBinTypes) {
  const std::string inst = Write("inst.json", testing::MixedBins());
  EXPECT_EQ(RunSolve({.instance_path = inst, .mode = "mmk"}, out_, err_), kOk);
  EXPECT_NE(Field(out_.str(), "warning"), "");
  EXPECT_EQ(Field(out_.str(), "guess_size"), "2");
}

TEST_F(CliTest, CompareFixedInstances) {
  const std::string halves = Write("halves.json", testing::Halves(4));
  EXPECT_EQ(RunCompare({.instance_path = halves}, out_, err_), kOk);
  EXPECT_EQ(Field(out_.str(), "oracle_opt"), "2");
  EXPECT_EQ(Field(out_.str(), "ratio"), "1");

  std::ostringstream families;
  const std::string two = Write("two.json", testing::TwoFamilies());
  EXPECT_EQ(RunCompare({.instance_path = two}, families, err_), kOk);
  EXPECT_EQ(Field(families.str(), "ratio"), "1");

  std::ostringstream empty;
  const std::string none = Write("empty.json", testing::Halves(0));
  EXPECT_EQ(RunCompare({.instance_path = none}, empty, err_), kOk);
  EXPECT_EQ(Field(empty.str(), "ratio"), "1");
}

TEST_F(CliTest, CompareBudget) {
  const std::string inst =
      Write("inst.json", testing::RandomInstance(5, 12, 2, 2, 2, false));
  EXPECT_EQ(RunCompare({.instance_path = inst, .oracle_budget = 20}, out_,
                       err_),
            kBudgetExceeded);
}

TEST_F(CliTest, PrettyTable) {
  const std::string inst = Write("inst.json", testing::Halves(4));
  EXPECT_EQ(RunSolve({.instance_path = inst, .pretty = true}, out_, err_), kOk);
  EXPECT_EQ(out_.str().find('='), std::string::npos);
  EXPECT_NE(out_.str().find("cost "), std::string::npos);
}

}  // namespace
}  // namespace mvbp::cli
