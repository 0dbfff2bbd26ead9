// Copyright 2026 The holder-bounds Authors
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
#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"

namespace holder::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "holder-bounds");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, ZetaTableMarksCorrectedRow) {
  Outcome o = invoke({"zeta-table", "5"});
  ASSERT_EQ(o.code, kOk) << o.err;
  EXPECT_NE(o.out.find("1.20205690315959"), std::string::npos);
  EXPECT_NE(o.out.find("1.00062026085458"), std::string::npos);
  EXPECT_NE(o.out.find("π^11·√188643/127702575 *"), std::string::npos);
  EXPECT_NE(o.out.find("93555"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"zeta-table", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"zeta-table", "--k-max", "-3"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"check", "nothing"}).code, kUsage);
  EXPECT_EQ(invoke({"--format", "xml", "zeta-table", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"--precision", "32", "zeta-table", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"--digits", "100", "zeta-table", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"bound", "--l", "2", "--s", "1", "--m", "3", "--values", "1,2"}).code, kUsage);
  EXPECT_EQ(invoke({"bound", "--l", "1", "--s", "2", "--m", "3", "--values", "1,-2"}).code, kUsage);
  EXPECT_EQ(invoke({"check", "binomial", "--N", "10", "--s", "3"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Cli, JsonNumbersRoundTripThroughHex) {
  Outcome o = invoke({"--format", "json", "zeta-table", "3"});
  ASSERT_EQ(o.code, kOk);
  nlohmann::json j = nlohmann::json::parse(o.out);
  ASSERT_EQ(j["rows"].size(), 3u);
  for (const auto& row : j["rows"]) {
    EXPECT_EQ(io::rerender_number(row["bound"], 15, 256), row["bound"]["value"].get<std::string>());
    EXPECT_EQ(io::rerender_number(row["zeta"], 15, 256), row["zeta"]["value"].get<std::string>());
  }
  EXPECT_EQ(j["rows"][0]["closed_form"]["rad_num"], "15");
  EXPECT_TRUE(j["all_hold"].get<bool>());
}

TEST(Cli, DinuIsDeterministic) {
  Outcome a = invoke({"--seed", "9", "--trials", "20000", "--format", "json", "check", "dinu"});
  Outcome b = invoke({"--seed", "9", "--trials", "20000", "--format", "json", "check", "dinu"});
  ASSERT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  nlohmann::json j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["premise_violations"], 0);
  EXPECT_EQ(j["max_lhs"]["value"].get<std::string>().substr(0, 8), "0.192450");
}

TEST(Cli, SequenceFromFileWithWeights) {
  std::string path = ::testing::TempDir() + "holder_seq.txt";
  {
    std::ofstream f(path);
    f << "1, 2\n\n3\n 0.5 ,1\n";
  }
  WeightedSequence s = parse_sequence("@" + path, 128);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.atoms()[0].weight == 2);
  Outcome o = invoke({"bound", "--l", "1", "--s", "3/2", "--m", "inf", "--values", "@" + path});
  EXPECT_EQ(o.code, kOk) << o.err;
  std::remove(path.c_str());
  EXPECT_EQ(invoke({"bound", "--l", "1", "--s", "3/2", "--m", "2", "--values", "@/nonexistent/file"}).code, kUsage);
}

TEST(Cli, BoundFromNorms) {
  Outcome o = invoke({"--format", "json", "bound", "--l", "1", "--s", "5/4", "--m", "inf", "--norm-l", "1/3",
                      "--norm-m", "0.25"});
  ASSERT_EQ(o.code, kOk) << o.err;
  nlohmann::json j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["exp_m"], "1/4");
  EXPECT_EQ(j["rhs"]["value"].get<std::string>(), "0.235702260395516");
}

TEST(Cli, ChecksReportHolds) {
  EXPECT_EQ(invoke({"check", "holder", "--f", "1,2,3", "--g", "4,5,6", "--p", "3"}).code, kOk);
  EXPECT_EQ(invoke({"check", "binomial", "--N", "10", "--s", "1.5"}).code, kOk);
  EXPECT_EQ(invoke({"check", "gamma", "--y", "2.5", "--y", "7"}).code, kOk);
  EXPECT_EQ(invoke({"check", "beta", "--x", "1.5", "--y", "2.25"}).code, kOk);
  EXPECT_EQ(invoke({"check", "integral", "--s", "3/2"}).code, kOk);
  EXPECT_EQ(invoke({"--trials", "2000", "check", "general", "--n", "5", "--m", "2"}).code, kOk);
  Outcome md = invoke({"check", "holder", "--f", "1,2", "--g", "3,4"});
  EXPECT_NE(md.out.find("\\|\\|fg\\|\\|_1"), std::string::npos) << md.out;
  Outcome csv = invoke({"--format", "csv", "check", "binomial", "--N", "4", "--s", "2"});
  EXPECT_NE(csv.out.find("\r\n"), std::string::npos);
}

}  // namespace
}  // namespace holder::cli
