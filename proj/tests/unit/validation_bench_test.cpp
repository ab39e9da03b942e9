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

#include <gtest/gtest.h>

#include <sstream>

#include "rpsent/bench.hpp"
#include "rpsent/errors.hpp"
#include "rpsent/exact_combinatorics.hpp"
#include "rpsent/validation_suite.hpp"

namespace rpsent::report {
namespace {

ValidationOptions quick() {
  ValidationOptions o;
  o.n_max = 25;
  o.enumeration_cap = 4;
  o.trials = 100;
  return o;
}

TEST(Validation, QuickRunPasses) {
  const ValidationReport report = run_validation(quick());
  EXPECT_TRUE(report.ok());
  ASSERT_EQ(report.checks.size(), 7u);
  EXPECT_EQ(report.checks.front().name, "lemma1_floor_identity");
  const std::string json = to_json(report);
  EXPECT_NE(json.find("\"ok\": true"), std::string::npos);
  EXPECT_NE(json.find("\"rng\": \"mt19937_64\""), std::string::npos);
}

TEST(Validation, InjectedFaultNamesFirstFailingN) {
  ValidationOptions o = quick();
  o.sa_override = [](unsigned n) { return n < 6 ? combinatorics::sa(n) : combinatorics::sa(n) + ExactNatural(1); };
  const ValidationReport report = run_validation(o);
  EXPECT_FALSE(report.ok());
  const CheckResult& lemma1 = report.checks.front();
  EXPECT_FALSE(lemma1.passed());
  EXPECT_EQ(lemma1.failures.front().n, 6u);
  EXPECT_EQ(lemma1.failure_count, 20u);
  for (std::size_t i = 1; i < report.checks.size(); ++i) EXPECT_TRUE(report.checks[i].passed());
  EXPECT_NE(to_json(report).find("\"ok\": false"), std::string::npos);
}

TEST(Validation, RejectsTinyNMax) {
  ValidationOptions o = quick();
  o.n_max = 2;
  EXPECT_THROW(run_validation(o), DomainError);
}

TEST(Bench, MultiplyCountsFollowClosedForms) {
  // Envelope: n(n+1)/2 for the S_A sums plus 2n for the A(n,u) steps and the
  // products. Limit: n - 1 for the factorial, one square, two endpoint scalings.
  for (unsigned n : {1u, 2u, 10u, 57u, 100u, 200u}) {
    const BenchRow row = bench_one(n);
    EXPECT_EQ(row.envelope_multiplies, std::uint64_t{n} * (n + 1) / 2 + 2ull * n) << n;
    EXPECT_EQ(row.limit_multiplies, std::uint64_t{n} + 2) << n;
  }
  EXPECT_LE(bench_one(1).limit_multiplies, bench_one(1).envelope_multiplies);
}

TEST(Bench, SweepIsMonotone) {
  const auto rows = run_bench({10, 100, 10});
  ASSERT_EQ(rows.size(), 10u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GT(rows[i].envelope_multiplies, rows[i - 1].envelope_multiplies);
    EXPECT_GT(rows[i].limit_multiplies, rows[i - 1].limit_multiplies);
  }
  std::ostringstream os;
  write_bench_csv(os, rows);
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')),
            "N,envelope_multiplies,limit_multiplies,envelope_seconds,limit_seconds");
}

}  // namespace
}  // namespace rpsent::report
