// Copyright 2026 The qecc Authors
//
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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "qecc/code_file.hpp"
#include "qecc/constructions.hpp"

using qecc::cli::run_command;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_command(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, ConstructThenVerifyCode10) {
  const CliRun built = run({"construct", "code10"});
  ASSERT_EQ(built.code, 0);
  const CliRun v = run({"verify", "-"}, built.out);
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_TRUE(has(v.out, "parameters: [10,4,3]")) << v.out;
  EXPECT_TRUE(has(v.out, "g: 15/32 (0.468750)")) << v.out;
}

TEST(Cli, EveryRecipeVerifies) {
  for (const auto& id : qecc::standard_recipes()) {
    const CliRun built = run({"construct", id.to_string()});
    ASSERT_EQ(built.code, 0) << id.to_string() << built.err;
    const CliRun v = run({"verify", "-"}, built.out);
    EXPECT_EQ(v.code, 0) << id.to_string() << "\n" << v.out;
  }
}

TEST(Cli, ConstructAcceptsSeparateParameters) {
  EXPECT_EQ(run({"construct", "power5", "2"}).out, run({"construct", "power5(2)"}).out);
  EXPECT_EQ(run({"construct", "perfect_recursion", "2", "4"}).out, run({"construct", "perfect_recursion(2,4)"}).out);
}

TEST(Cli, ConstructOutputParses) {
  const CliRun built = run({"construct", "code16", "--binary"});
  const auto file = qecc::parse_code_file(built.out);
  EXPECT_EQ(file.style, qecc::WordStyle::kBinary);
  EXPECT_EQ(file.fragment.n, 16u);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"verify", "nonexistent.code"}).code, 2);
  EXPECT_EQ(run({"construct", "nope"}).code, 2);
  EXPECT_EQ(run({"catalog", "show", "nope"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"distance", "-"}, "# format-version: 1\nXZZXI\n").code, 2);
  EXPECT_EQ(run({"verify", "-"}, "XZ\n").code, 2);
  EXPECT_EQ(run({"search", "--n", "9", "--s", "2", "--distinct-xyz"}).code, 2);
}

TEST(Cli, VerifyFailsOnAnticommutingRows) {
  const CliRun v = run({"verify", "-"}, "# format-version: 1\nXI\nZI\n");
  EXPECT_EQ(v.code, 1);
  EXPECT_TRUE(has(v.out, "valid: no"));
}

TEST(Cli, VerifyFailsOnContradictedClaim) {
  const CliRun v = run({"verify", "-"}, "# format-version: 1\n# claimed: [3,2,3]\nZZI\nIZZ\n");
  EXPECT_EQ(v.code, 1) << v.out;
  EXPECT_TRUE(has(v.out, "contradicted")) << v.out;
}

TEST(Cli, VerifyWithCollisionCertificate) {
  const CliRun built = run({"construct", "concat_25_1_9"});
  const CliRun v = run({"verify", "-", "--collision", "2"}, built.out);
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_TRUE(has(v.out, "certified d>=5")) << v.out;
  EXPECT_TRUE(has(v.out, "degenerate:")) << v.out;
}

TEST(Cli, DistanceCommand) {
  const CliRun built = run({"catalog", "show", "code513a"});
  const CliRun d = run({"distance", "-", "--max-weight", "3"}, built.out);
  EXPECT_EQ(d.code, 0);
  EXPECT_TRUE(has(d.out, "parameters: [5,1,3]")) << d.out;
  const CliRun c = run({"distance", "-", "--collision", "2"}, built.out);
  EXPECT_EQ(c.code, 1);
  EXPECT_TRUE(has(c.out, "refuted")) << c.out;
}

TEST(Cli, CatalogCommands) {
  const CliRun list = run({"catalog", "list"});
  EXPECT_EQ(list.code, 0);
  EXPECT_TRUE(has(list.out, "code10 code [10,6,3]"));
  const CliRun show = run({"catalog", "show", "sub22"});
  EXPECT_TRUE(has(show.out, "10|11"));
}

TEST(Cli, VerifyAllIsIdempotent) {
  const CliRun a = run({"catalog", "verify-all"});
  const CliRun b = run({"catalog", "verify-all"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(has(a.out, "code10 valid code [10,6,3] n=10 k=4 g(t=1)=15/32 (0.468750)")) << a.out;
  EXPECT_TRUE(has(a.out, "code2517 erratum")) << a.out;
}

TEST(Cli, InfoReportsFlags) {
  const CliRun built = run({"catalog", "show", "sub43"});
  const CliRun i = run({"info", "-"}, built.out);
  EXPECT_EQ(i.code, 0);
  EXPECT_TRUE(has(i.out, "left rows even: yes")) << i.out;
  EXPECT_TRUE(has(i.out, "distinct xyz syndromes: yes")) << i.out;
}

TEST(Cli, SearchEmitsVerifiedRecords) {
  const CliRun s = run({"search", "--n", "5", "--s", "4", "--distance3", "--left-even", "--forbid-uniform", "--commuting",
                     "--independent", "--limit", "3"});
  EXPECT_EQ(s.code, 0);
  EXPECT_TRUE(has(s.out, "# strategy: exhaustive limit=3"));
  EXPECT_TRUE(has(s.out, "# name: search-3"));
  EXPECT_FALSE(has(s.out, "# verified: no"));
  const CliRun r = run({"search", "--n", "5", "--s", "4", "--distance3", "--commuting", "--seed", "7", "--limit", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "rng=mt19937_64 seed=7"));
  EXPECT_EQ(r.out, run({"search", "--n", "5", "--s", "4", "--distance3", "--commuting", "--seed", "7", "--limit", "2"}).out);
}

TEST(Cli, SearchWithNothingFoundExitsOne) {
  const CliRun s = run({"search", "--n", "2", "--s", "1", "--distance3"});
  EXPECT_EQ(s.code, 1);
}
