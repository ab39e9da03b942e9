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

#ifndef RPSENT_VALIDATION_SUITE_HPP
#define RPSENT_VALIDATION_SUITE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rpsent/belief_structures.hpp"
#include "rpsent/exact_number.hpp"

namespace rpsent::report {

struct ValidationOptions {
  unsigned n_max = 50;
  unsigned enumeration_cap = belief::kDefaultEnumerationCap;
  unsigned trials = 1000;
  double step = 0.05;
  std::uint64_t seed = 42;
  double ascent_tolerance = 1e-10;
  unsigned ascent_max_iters = 100000;
  // Replaces S_A in the floor-identity check. Only used for fault injection.
  std::function<ExactNatural(unsigned)> sa_override;
};

struct CheckFailure {
  unsigned n = 0;
  std::string detail;
};

inline constexpr std::size_t kMaxReportedFailures = 20;

struct CheckResult {
  std::string name;
  unsigned first_n = 0;
  unsigned last_n = 0;
  std::size_t failure_count = 0;
  std::vector<CheckFailure> failures;  // the first kMaxReportedFailures, in n order

  [[nodiscard]] bool passed() const noexcept { return failure_count == 0; }
};

struct ValidationReport {
  unsigned n_max = 0;
  unsigned enumeration_cap = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool ok() const noexcept;
};

/// Runs, in order: lemma1_floor_identity (1..n_max), lemma2_sandwich (1..n_max),
/// lemma3_ratio (3..n_max), theorem4_convergence (10..n_max),
/// enumeration_cross_check, perturbation_maximality and simplex_ascent
/// (1..enumeration_cap). Throws DomainError when n_max < 3.
ValidationReport run_validation(const ValidationOptions& options);

/// Deterministic JSON rendering (no timings).
std::string to_json(const ValidationReport& report);

}  // namespace rpsent::report

#endif  // RPSENT_VALIDATION_SUITE_HPP
