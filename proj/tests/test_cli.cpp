// Copyright 2026 The permpoly Authors
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

#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "permpoly_cli/cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = permpoly::cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, PptestPermutation) {
  const CliRun r = run({"pptest", "--t", "3", "--poly", "x^6"});
  EXPECT_EQ(r.code, permpoly::cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("true"), std::string::npos) << r.out;
  const CliRun h = run({"pptest", "--t", "3", "--poly", "x^6", "--method", "hermite"});
  EXPECT_EQ(h.code, permpoly::cli::kExitOk);
}

TEST(Cli, PptestNonPermutation) {
  const CliRun r = run({"pptest", "--t", "4", "--poly", "x^3"});
  EXPECT_EQ(r.code, permpoly::cli::kExitFail);
  EXPECT_NE(r.out.find("false"), std::string::npos) << r.out;
}

TEST(Cli, Lucas) {
  const CliRun r = run({"lucas", "--n", "2", "--parts", "1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
  const CliRun odd = run({"lucas", "--n", "47", "--parts", "32,8,4,2,1"});
  EXPECT_EQ(odd.out, "1\n");
  const CliRun p3 = run({"lucas", "--n", "4", "--parts", "2,2", "--p", "3"});
  EXPECT_EQ(p3.out, "0\n");
}

TEST(Cli, ClassifyJson) {
  const CliRun r = run({"classify", "--deg", "6", "--t", "6", "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["pps_found"], 0);
  EXPECT_EQ(j["degree"], 6);
  EXPECT_EQ(j.dump(2) + "\n", r.out);
}

TEST(Cli, ClassifyModesAgree) {
  const CliRun v = run({"classify", "--deg", "7", "--t", "4", "--json"});
  const CliRun f = run({"classify", "--deg", "7", "--t", "4", "--mode", "fast", "--json"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(nlohmann::json::parse(v.out)["classes"], nlohmann::json::parse(f.out)["classes"]);
}

TEST(Cli, HermiteSym) {
  const CliRun r = run({"hermite-sym", "--deg", "6", "--t", "8", "--u", "5", "--pin", "a=1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(r.out.empty());
  const CliRun bad_r = run({"hermite-sym", "--deg", "6", "--t", "8", "--r", "3", "--u", "5"});
  EXPECT_EQ(bad_r.code, permpoly::cli::kExitUsage);
}

TEST(Cli, FieldAndVerify) {
  const CliRun f = run({"field", "--t", "4"});
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("0x13"), std::string::npos) << f.out;
  const CliRun q = run({"verify", "--suite", "quintic", "--t", "5"});
  EXPECT_EQ(q.code, 0) << q.out;
}

TEST(Cli, UsageErrors) {
  const CliRun missing = run({"pptest", "--t", "3"});
  EXPECT_EQ(missing.code, permpoly::cli::kExitUsage);
  const CliRun bad_poly = run({"pptest", "--t", "3", "--poly", "x^6+q"});
  EXPECT_EQ(bad_poly.code, permpoly::cli::kExitUsage);
  EXPECT_NE(bad_poly.err.find("q"), std::string::npos);
  const CliRun bad_cmd = run({"frobnicate"});
  EXPECT_EQ(bad_cmd.code, permpoly::cli::kExitUsage);
  const CliRun bad_mode = run({"classify", "--deg", "6", "--t", "3", "--mode", "slow"});
  EXPECT_EQ(bad_mode.code, permpoly::cli::kExitUsage);
  EXPECT_EQ(run({}).code, permpoly::cli::kExitUsage);
}

}  // namespace
