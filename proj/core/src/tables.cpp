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

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "rpsent/entropies.hpp"
#include "rpsent/errors.hpp"

namespace rpsent::report {

namespace {

std::vector<unsigned> expand(const Range& range) {
  if (range.from < 1 || range.step < 1 || range.from > range.to) {
    throw DomainError("table range must satisfy 1 <= from <= to and step >= 1");
  }
  std::vector<unsigned> out;
  for (unsigned n = range.from; n <= range.to; n += range.step) out.push_back(n);
  return out;
}

std::string format_relative(const ErrorReport& report) {
  return report.relative_error ? format_scientific(*report.relative_error) : "n/a";
}

}  // namespace

EnvelopeRow envelope_row(unsigned n) {
  EnvelopeRow row;
  row.n = n;
  row.s = approx::to_high_precision(combinatorics::s_envelope(n));
  row.s_lim = approx::to_high_precision(approx::rps_envelope_limit(n).midpoint());
  row.ds = approx::error_report(row.s, row.s_lim);
  row.h_max = entropy::max_entropy_value(entropy::Kind::rps, n).bits;
  row.h_lim = approx::h_lim_rps(n).bits;
  row.dh = approx::error_report(HighPrecision(row.h_max), HighPrecision(row.h_lim));
  return row;
}

StirlingRow stirling_row(unsigned n) {
  StirlingRow row;
  row.n = n;
  row.factorial = approx::to_high_precision(combinatorics::factorial(n));
  row.stirling = approx::stirling(n);
  row.ds = approx::error_report(row.factorial, row.stirling);
  row.log_factorial = approx::log2_hp(row.factorial);
  row.log_stirling = approx::log2_hp(row.stirling);
  row.dlog = approx::error_report(row.log_factorial, row.log_stirling);
  return row;
}

MaxEntropyRow max_entropy_row(unsigned n) {
  MaxEntropyRow row;
  row.n = n;
  row.h_shannon = entropy::max_entropy_value(entropy::Kind::shannon, n).bits;
  row.h_deng = entropy::max_entropy_value(entropy::Kind::deng, n).bits;
  row.h_rps = entropy::max_entropy_value(entropy::Kind::rps, n).bits;
  row.h_lim = approx::h_lim_rps(n).bits;
  if (row.h_rps != 0.0) row.delta_percent = (row.h_lim - row.h_rps) / row.h_rps * 100.0;
  return row;
}

Range default_range(int which) {
  if (which == 3) return {1, 10, 1};
  return {10, 100, 10};
}

CsvTable envelope_table(const Range& range) {
  CsvTable table;
  table.header = {"N",         "S(N)",          "S_lim(N)", "ΔS_abs", "ΔS_rel",
                  "H_max-RPS", "H_lim-RPS", "ΔH_abs",   "ΔH_rel"};
  for (unsigned n : expand(range)) {
    const EnvelopeRow row = envelope_row(n);
    table.rows.push_back({std::to_string(n), format_scientific(row.s), format_scientific(row.s_lim),
                          format_scientific(row.ds.absolute_error), format_relative(row.ds),
                          format_scientific(HighPrecision(row.h_max)), format_scientific(HighPrecision(row.h_lim)),
                          format_scientific(row.dh.absolute_error), format_relative(row.dh)});
  }
  return table;
}

CsvTable stirling_table(const Range& range) {
  CsvTable table;
  table.header = {"N",        "N!",          "S_t(N)",          "ΔS_t-abs", "ΔS_t-rel",
                  "log(N!)", "log(S_t(N))", "Δlog_t-abs", "Δlog_t-rel"};
  for (unsigned n : expand(range)) {
    const StirlingRow row = stirling_row(n);
    table.rows.push_back({std::to_string(n), format_scientific(row.factorial), format_scientific(row.stirling),
                          format_scientific(row.ds.absolute_error), format_relative(row.ds),
                          format_scientific(row.log_factorial), format_scientific(row.log_stirling),
                          format_scientific(row.dlog.absolute_error), format_relative(row.dlog)});
  }
  return table;
}

CsvTable max_entropy_table(const Range& range) {
  CsvTable table;
  table.header = {"N", "H_max-SE", "H_max-DE", "H_max-RPS", "H_lim-RPS", "ΔH_RPS"};
  for (unsigned n : expand(range)) {
    const MaxEntropyRow row = max_entropy_row(n);
    table.rows.push_back({std::to_string(n), format_fixed(row.h_shannon), format_fixed(row.h_deng),
                          format_fixed(row.h_rps), format_fixed(row.h_lim), format_percent(row.delta_percent)});
    if (!row.delta_percent) {
      table.notes.push_back("N=" + std::to_string(n) +
                            ": ΔH_RPS is undefined because H_max-RPS = 0; reported as n/a rather than 0.00%");
    }
  }
  return table;
}

CsvTable make_table(int which, const Range& range) {
  switch (which) {
    case 1:
      return envelope_table(range);
    case 2:
      return stirling_table(range);
    case 3:
      return max_entropy_table(range);
    default:
      throw DomainError("table must be 1, 2 or 3");
  }
}

void write_csv(std::ostream& os, const CsvTable& table) {
  auto write_line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) os << ',';
      os << cells[i];
    }
    os << '\n';
  };
  write_line(table.header);
  for (const auto& row : table.rows) write_line(row);
}

std::string format_scientific(const HighPrecision& value, int significant) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(significant - 1) << value;
  std::string text = os.str();
  const auto e = text.find_first_of("eE");
  if (e == std::string::npos) return text;
  std::string mantissa = text.substr(0, e);
  std::string exponent = text.substr(e + 1);
  char sign = '+';
  if (!exponent.empty() && (exponent.front() == '+' || exponent.front() == '-')) {
    sign = exponent.front();
    exponent.erase(0, 1);
  }
  while (exponent.size() > 2 && exponent.front() == '0') exponent.erase(0, 1);
  if (exponent.size() < 2) exponent.insert(0, 2 - exponent.size(), '0');
  return mantissa + "E" + sign + exponent;
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string format_percent(const std::optional<double>& value) {
  if (!value) return "n/a";
  return format_fixed(*value, 2) + "%";
}

}  // namespace rpsent::report
