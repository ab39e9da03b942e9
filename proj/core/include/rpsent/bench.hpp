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

#ifndef RPSENT_BENCH_HPP
#define RPSENT_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rpsent/tables.hpp"

namespace rpsent::report {

struct BenchRow {
  unsigned n = 0;
  std::uint64_t envelope_multiplies = 0;  // s_envelope(n)
  std::uint64_t limit_multiplies = 0;     // e * (n!)^2 from a cold factorial cache
  double envelope_seconds = 0.0;
  double limit_seconds = 0.0;
};

BenchRow bench_one(unsigned n);
std::vector<BenchRow> run_bench(const Range& range);

/// Default sweep 10..200 step 10.
Range default_bench_range();

/// Columns N,envelope_multiplies,limit_multiplies,envelope_seconds,limit_seconds.
void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace rpsent::report

#endif  // RPSENT_BENCH_HPP
