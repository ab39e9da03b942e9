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

#include "rpsent/bench.hpp"

#include <chrono>
#include <ostream>

#include "rpsent/errors.hpp"

namespace rpsent::report {

namespace {

template <class F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

BenchRow bench_one(unsigned n) {
  if (n < 1) throw DomainError("bench: n must be at least 1");
  approx::limit_e_bracket();  // process constant, kept out of the count

  BenchRow row;
  row.n = n;
  {
    OperationCounter counter;
    CountingScope scope(counter);
    row.envelope_seconds = timed([n] { (void)combinatorics::s_envelope(n); });
    row.envelope_multiplies = counter.multiplies;
  }
  {
    combinatorics::FactorialCache cache(std::max(n, 1u));
    OperationCounter counter;
    CountingScope scope(counter);
    row.limit_seconds = timed([n, &cache] { (void)approx::rps_envelope_limit(n, cache); });
    row.limit_multiplies = counter.multiplies;
  }
  return row;
}

Range default_bench_range() { return {10, 200, 10}; }

std::vector<BenchRow> run_bench(const Range& range) {
  if (range.from < 1 || range.step < 1 || range.from > range.to) {
    throw DomainError("bench range must satisfy 1 <= from <= to and step >= 1");
  }
  std::vector<BenchRow> rows;
  for (unsigned n = range.from; n <= range.to; n += range.step) rows.push_back(bench_one(n));
  return rows;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "N,envelope_multiplies,limit_multiplies,envelope_seconds,limit_seconds\n";
  for (const auto& row : rows) {
    os << row.n << ',' << row.envelope_multiplies << ',' << row.limit_multiplies << ','
       << format_scientific(approx::HighPrecision(row.envelope_seconds)) << ','
       << format_scientific(approx::HighPrecision(row.limit_seconds)) << '\n';
  }
}

}  // namespace rpsent::report
