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

#ifndef RPSENT_TABLES_HPP
#define RPSENT_TABLES_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rpsent/approximation.hpp"

namespace rpsent::report {

using approx::ErrorReport;
using approx::HighPrecision;

/// Exact envelope S(N) against e (N!)^2, plus the entropies log2 of each.
struct EnvelopeRow {
  unsigned n = 0;
  HighPrecision s;
  HighPrecision s_lim;
  ErrorReport ds;
  double h_max = 0.0;
  double h_lim = 0.0;
  ErrorReport dh;
};

/// N! against Stirling's formula, plus their base-2 logarithms.
struct StirlingRow {
  unsigned n = 0;
  HighPrecision factorial;
  HighPrecision stirling;
  ErrorReport ds;
  HighPrecision log_factorial;
  HighPrecision log_stirling;
  ErrorReport dlog;
};

/// Maximum Shannon / Deng / RPS entropy, the limit estimate, and its relative
/// error in percent (absent when the maximum RPS entropy is 0).
struct MaxEntropyRow {
  unsigned n = 0;
  double h_shannon = 0.0;
  double h_deng = 0.0;
  double h_rps = 0.0;
  double h_lim = 0.0;
  std::optional<double> delta_percent;
};

EnvelopeRow envelope_row(unsigned n);
StirlingRow stirling_row(unsigned n);
MaxEntropyRow max_entropy_row(unsigned n);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;  // written to the diagnostic stream, not the CSV
};

struct Range {
  unsigned from = 1;
  unsigned to = 1;
  unsigned step = 1;
};

/// Default N range of each table: 10..100 step 10 for tables 1 and 2, 1..10 for table 3.
Range default_range(int which);

CsvTable envelope_table(const Range& range);
CsvTable stirling_table(const Range& range);
CsvTable max_entropy_table(const Range& range);

/// which = 1, 2 or 3.
CsvTable make_table(int which, const Range& range);

void write_csv(std::ostream& os, const CsvTable& table);

/// Scientific notation with `significant` digits and an uppercase, at least
/// two-digit exponent: "3.96E+13", "-9.57E-02", "2.39E+316".
std::string format_scientific(const HighPrecision& value, int significant = 3);
std::string format_fixed(double value, int decimals = 5);
/// "3.64%", or "n/a" when absent.
std::string format_percent(const std::optional<double>& value);

}  // namespace rpsent::report

#endif  // RPSENT_TABLES_HPP
