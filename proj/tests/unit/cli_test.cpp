// Copyright 2026 The rpsent Authors
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

// Drives the installed-layout executable through a shell, the way a user would.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string command = std::string("\"") + RPSENT_CLI_PATH + "\" " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string data(const char* name) { return std::string("\"") + RPSENT_TEST_DATA_DIR + "/" + name + "\""; }

TEST(Cli, EntropyMaxRps) {
  const CliResult r = run("entropy " + data("max-RPS-N2.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("3.32193"), std::string::npos);
}

TEST(Cli, EntropyBadSumIsNonzero) {
  const std::string command =
      std::string("\"") + RPSENT_CLI_PATH + "\" entropy " + data("bad-sum.json") + " 2>&1 >/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string err;
  std::array<char, 1024> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) err.append(buf.data(), got);
  const int raw = pclose(pipe);
  EXPECT_NE(WEXITSTATUS(raw), 0);
  EXPECT_NE(err.find("mass sum 0.99"), std::string::npos) << err;
}

TEST(Cli, TablesThreeRowTwo) {
  const CliResult r = run("tables 3 --from 1 --to 10");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\n2,1.00000,2.32193,3.32193,3.44270,3.64%\n"), std::string::npos);
}

TEST(Cli, TablesAreByteDeterministic) {
  EXPECT_EQ(run("tables 1").out, run("tables 1").out);
  EXPECT_EQ(run("tables 2 --from 10 --to 30 --step 10").out, run("tables 2 --from 10 --to 30 --step 10").out);
}

TEST(Cli, MaxentRpsTwo) {
  const CliResult r = run("maxent rps 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"1/10\""), std::string::npos);
  EXPECT_NE(r.out.find("\"2/5\""), std::string::npos);
}

TEST(Cli, ValidateAndInjectedFault) {
  EXPECT_EQ(run("validate --n-max 12").status, 0);
  const CliResult bad = run("validate --n-max 12 --inject-fault sa-off-by-one");
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("\"ok\": false"), std::string::npos);
}

TEST(Cli, BenchCsv) {
  const CliResult r = run("bench --from 100 --to 200 --step 100");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\n100,5250,102,"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\n200,20500,202,"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("tables 4").status, 2);
  EXPECT_EQ(run("maxent gini 3").status, 2);
  EXPECT_EQ(run("validate --n-max 2").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
}

}  // namespace
