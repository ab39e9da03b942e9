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

#include <benchmark/benchmark.h>

#include "rpsent/approximation.hpp"
#include "rpsent/exact_combinatorics.hpp"
#include "rpsent/exact_number.hpp"

namespace {

void BM_ExactEnvelope(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  rpsent::OperationCounter counter;
  for (auto _ : state) {
    rpsent::CountingScope scope(counter);
    benchmark::DoNotOptimize(rpsent::combinatorics::s_envelope(n));
  }
  state.counters["multiplies"] =
      benchmark::Counter(static_cast<double>(counter.multiplies), benchmark::Counter::kAvgIterations);
  state.SetComplexityN(n);
}

void BM_LimitEnvelope(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  rpsent::approx::limit_e_bracket();
  rpsent::OperationCounter counter;
  for (auto _ : state) {
    rpsent::combinatorics::FactorialCache cache(n);  // cold: n! is rebuilt every iteration
    rpsent::CountingScope scope(counter);
    benchmark::DoNotOptimize(rpsent::approx::rps_envelope_limit(n, cache));
  }
  state.counters["multiplies"] =
      benchmark::Counter(static_cast<double>(counter.multiplies), benchmark::Counter::kAvgIterations);
  state.SetComplexityN(n);
}

void BM_Log2OfEnvelope(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const rpsent::ExactNatural s = rpsent::combinatorics::s_envelope(n);
  for (auto _ : state) benchmark::DoNotOptimize(rpsent::combinatorics::log2_of(s, 9));
}

}  // namespace

BENCHMARK(BM_ExactEnvelope)->RangeMultiplier(2)->Range(25, 400)->Complexity();
BENCHMARK(BM_LimitEnvelope)->RangeMultiplier(2)->Range(25, 400)->Complexity();
BENCHMARK(BM_Log2OfEnvelope)->Arg(10)->Arg(100)->Arg(400);
BENCHMARK_MAIN();
