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

#include "rpsent/approximation.hpp"

#include <string>

#include "rpsent/errors.hpp"

namespace rpsent::approx {

namespace {

const char* const kPi = "3.14159265358979323846264338327950288419716939937510";
const char* const kE = "2.71828182845904523536028747135266249775724709369995";

RationalInterval make_limit_e_bracket() {
  const Rational max_relative_width(mpz_class(1), mpz_class("1000000000000000000000000000000"));
  for (unsigned terms = 2;; ++terms) {
    RationalInterval e = combinatorics::e_interval(terms);
    if (e.width() / e.lo() <= max_relative_width) return e;
  }
}

}  // namespace

HighPrecision pi() { return HighPrecision(kPi); }

HighPrecision euler_e() { return HighPrecision(kE); }

HighPrecision to_high_precision(const ExactNatural& value) { return HighPrecision(value.to_string()); }

HighPrecision to_high_precision(const Rational& value) {
  return HighPrecision(value.numerator().get_str()) / HighPrecision(value.denominator().get_str());
}

HighPrecision log2_hp(const HighPrecision& value) {
  static const HighPrecision ln2 = boost::multiprecision::log(HighPrecision(2));
  return boost::multiprecision::log(value) / ln2;
}

ErrorReport error_report(const HighPrecision& exact, const HighPrecision& approx) {
  ErrorReport report{exact, approx, approx - exact, std::nullopt};
  if (exact != 0) report.relative_error = report.absolute_error / exact;
  return report;
}

const RationalInterval& limit_e_bracket() {
  static const RationalInterval bracket = make_limit_e_bracket();
  return bracket;
}

RationalInterval rps_envelope_limit(unsigned n) {
  return rps_envelope_limit(n, combinatorics::default_factorial_cache());
}

RationalInterval rps_envelope_limit(unsigned n, combinatorics::FactorialCache& cache) {
  if (n < 1) throw DomainError("rps_envelope_limit: n must be >= 1");
  const ExactNatural& n_factorial = cache.get(n);
  const Rational square(n_factorial * n_factorial);
  return limit_e_bracket().scaled(square);
}

entropy::EntropyValue h_lim_rps(unsigned n) {
  if (n < 1) throw DomainError("h_lim_rps: n must be >= 1");
  return {kLog2E + 2.0 * combinatorics::log2_of(combinatorics::factorial(n), 12)};
}

HighPrecision stirling(unsigned n) {
  if (n < 1) throw DomainError("stirling: n must be >= 1");
  static const HighPrecision ln2 = boost::multiprecision::log(HighPrecision(2));
  const HighPrecision big_n(n);
  // log2 S_t(n) = 1/2 log2(2 pi n) + n (log2 n - log2 e)
  const HighPrecision log2_value =
      log2_hp(2 * pi() * big_n) / 2 + big_n * (log2_hp(big_n) - log2_hp(euler_e()));
  return boost::multiprecision::exp(log2_value * ln2);
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::holds:
      return "holds";
    case Verdict::violated:
      return "violated";
    case Verdict::indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

BoundsCheck lemma2_bounds(unsigned n, unsigned max_refinements) {
  if (n < 1) throw DomainError("lemma2_bounds: n must be >= 1");
  const Rational ratio_sum = combinatorics::sum_ratio(n);
  const Rational n_factorial(combinatorics::factorial(n));
  const Rational lower_factor = n_factorial * (ratio_sum - Rational(2));
  const Rational upper_factor = n_factorial * (ratio_sum - Rational(1));

  BoundsCheck check;
  check.n = n;
  check.value = combinatorics::s_envelope(n);
  const Rational value(check.value);

  unsigned terms = n + 10;
  for (unsigned round = 0; round <= max_refinements; ++round, terms *= 2) {
    const RationalInterval e = combinatorics::e_interval(terms);
    check.lower = e.scaled(lower_factor).shifted(Rational(1));
    check.upper = e.scaled(upper_factor).shifted(Rational(2));
    check.e_terms = terms;
    if (check.lower.hi() <= value && value <= check.upper.lo()) {
      check.verdict = Verdict::holds;
      return check;
    }
    if (check.lower.lo() > value || check.upper.hi() < value) {
      check.verdict = Verdict::violated;
      return check;
    }
  }
  check.verdict = Verdict::indeterminate;
  return check;
}

RatioCheck lemma3_ratio(unsigned n) {
  if (n < 3) throw DomainError("lemma3_ratio: n must be >= 3, got " + std::to_string(n));
  const Rational big_n(static_cast<std::int64_t>(n));
  RatioCheck out;
  out.ratio_minus_one = combinatorics::sum_ratio(n) / Rational(combinatorics::factorial(n)) - Rational(1);
  out.proof_bound = (big_n - Rational(2)) / (Rational(2) * big_n * (big_n - Rational(1))) + Rational(1) / big_n;
  return out;
}

}  // namespace rpsent::approx
