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

#include "rpsent/tables.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "rpsent/errors.hpp"

namespace rpsent::report {
namespace {

TEST(Format, Scientific) {
  EXPECT_EQ(format_scientific(HighPrecision("39581776363330")), "3.96E+13");
  EXPECT_EQ(format_scientific(HighPrecision("-0.0957")), "-9.57E-02");
  EXPECT_EQ(format_scientific(HighPrecision("2.3916e316")), "2.39E+316");
  EXPECT_EQ(format_scientific(HighPrecision(0)), "0.00E+00");
  EXPECT_EQ(format_scientific(HighPrecision("45.1699"), 3), "4.52E+01");
}

TEST(Format, FixedAndPercent) {
  EXPECT_EQ(format_fixed(3.3219280948873626), "3.32193");
  EXPECT_EQ(format_fixed(0.0), "0.00000");
  EXPECT_EQ(format_percent(3.6383), "3.64%");
  EXPECT_EQ(format_percent(-0.3212), "-0.32%");
  EXPECT_EQ(format_percent(std::nullopt), "n/a");
}

TEST(TableThree, SecondRowAndFootnote) {
  const CsvTable t = make_table(3, default_range(3));
  ASSERT_EQ(t.rows.size(), 10u);
  EXPECT_EQ(t.header.front(), "N");
  EXPECT_EQ(t.rows[1], (std::vector<std::string>{"2", "1.00000", "2.32193", "3.32193", "3.44270", "3.64%"}));
  EXPECT_EQ(t.rows[0].back(), "n/a");
  ASSERT_EQ(t.notes.size(), 1u);
}

TEST(TableThree, TenthRowToSevenDigits) {
  const MaxEntropyRow row = max_entropy_row(10);
  EXPECT_NEAR(row.h_shannon, 3.3219281, 5e-8);
  EXPECT_NEAR(row.h_deng, 15.824387, 5e-7);
  EXPECT_NEAR(row.h_rps, 45.169902, 5e-7);
  EXPECT_NEAR(row.h_lim, 45.024817, 5e-7);
  EXPECT_NEAR(*row.delta_percent, -0.321197, 5e-6);
}

TEST(TableOne, FirstRow) {
  const CsvTable t = make_table(1, {10, 10, 1});
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0][1], "3.96E+13");
  EXPECT_EQ(t.rows[0][2], "3.58E+13");
  EXPECT_EQ(t.rows[0][4], "-9.57E-02");
}

TEST(TableTwo, FirstRow) {
  const CsvTable t = make_table(2, {10, 10, 1});
  EXPECT_EQ(t.rows[0][1], "3.63E+06");
  EXPECT_EQ(t.rows[0][2], "3.60E+06");
  EXPECT_EQ(t.rows[0][4], "-8.30E-03");
}

TEST(Csv, ByteDeterministic) {
  std::ostringstream a;
  std::ostringstream b;
  write_csv(a, make_table(1, default_range(1)));
  write_csv(b, make_table(1, default_range(1)));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, 7), "N,S(N),");
}

TEST(Range, Validation) {
  EXPECT_THROW(make_table(3, {5, 4, 1}), DomainError);
  EXPECT_THROW(make_table(3, {0, 4, 1}), DomainError);
  EXPECT_THROW(make_table(4, {1, 2, 1}), DomainError);
  EXPECT_EQ(make_table(3, {1, 10, 3}).rows.size(), 4u);
}

}  // namespace
}  // namespace rpsent::report
