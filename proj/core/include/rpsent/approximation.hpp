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

#ifndef RPSENT_APPROXIMATION_HPP
#define RPSENT_APPROXIMATION_HPP

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <optional>

#include "rpsent/entropies.hpp"
#include "rpsent/exact_combinatorics.hpp"
#include "rpsent/exact_number.hpp"

namespace rpsent::approx {

/// 50 significant decimal digits.
using HighPrecision = boost::multiprecision::cpp_dec_float_50;

HighPrecision pi();
HighPrecision euler_e();
/// log2(e) to double precision.
inline constexpr double kLog2E = 1.4426950408889634074;

HighPrecision to_high_precision(const ExactNatural& value);
HighPrecision to_high_precision(const Rational& value);
HighPrecision log2_hp(const HighPrecision& value);

/// Error of `approx` against `exact`; relative error is (approx - exact) / exact
/// and absent when exact = 0.
struct ErrorReport {
  HighPrecision exact;
  HighPrecision approx;
  HighPrecision absolute_error;
  std::optional<HighPrecision> relative_error;

  [[nodiscard]] bool relative_undefined() const noexcept { return !relative_error.has_value(); }
};

ErrorReport error_report(const HighPrecision& exact, const HighPrecision& approx);

/// e * (n!)^2 bracketed with relative width <= 1e-30.
RationalInterval rps_envelope_limit(unsigned n);
/// Same, drawing n! from `cache` (lets the benchmark start from a cold table).
RationalInterval rps_envelope_limit(unsigned n, combinatorics::FactorialCache& cache);

/// The e bracket used by rps_envelope_limit (relative width <= 1e-30).
const RationalInterval& limit_e_bracket();

/// log2(e * (n!)^2) = log2 e + 2 log2 n!.
entropy::EntropyValue h_lim_rps(unsigned n);

/// sqrt(2 pi n) (n/e)^n, evaluated in the log domain.
HighPrecision stirling(unsigned n);

enum class Verdict { holds, violated, indeterminate };

std::string_view to_string(Verdict verdict);

/// Per-n check of
///   e n! (R - 2) + 1 <= S(n) <= e n! (R - 1) + 2,  R = sum_{u=1..n} u!/(n-u)!
/// with e taken as a rational bracket.
struct BoundsCheck {
  unsigned n = 0;
  RationalInterval lower{Rational(0)};
  RationalInterval upper{Rational(0)};
  ExactNatural value;
  Verdict verdict = Verdict::indeterminate;
  unsigned e_terms = 0;
};

/// Refines the e bracket (doubling its term count from n + 10) until the
/// verdict is decided; returns indeterminate after `max_refinements` rounds.
BoundsCheck lemma2_bounds(unsigned n, unsigned max_refinements = 16);

struct RatioCheck {
  Rational ratio_minus_one;  // sum_ratio(n) / n! - 1
  Rational proof_bound;      // (n - 2) / (2 n (n - 1)) + 1/n
};

/// Requires n >= 3 (DomainError otherwise).
RatioCheck lemma3_ratio(unsigned n);

}  // namespace rpsent::approx

#endif  // RPSENT_APPROXIMATION_HPP
