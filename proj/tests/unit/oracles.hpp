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

#ifndef RPSENT_TESTS_ORACLES_HPP
#define RPSENT_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

// Reference implementations that share no code with the library: GMP's own
// factorial, MPFR transcendental functions, and brute-force enumeration.

namespace oracle_ref {

mpz_class factorial(unsigned n);

/// sum_{u=0..n} n!/(n-u)! by explicit division of factorials.
mpz_class sa(unsigned n);

/// sum_{u=1..n} n!/(n-u)! * (sa(u) - 1).
mpz_class s_envelope(unsigned n);

/// Counts every ordered arrangement of every subset of an n-set, empty one
/// included, by walking std::next_permutation over each subset. n <= 8.
std::uint64_t brute_force_pes_count(unsigned n);

/// Same walk; returns sum over nonempty arrangements of (sa(length) - 1).
mpz_class brute_force_rps_weight_sum(unsigned n);

/// floor(e * n!) with MPFR at a working precision well above the size of n!.
mpz_class floor_e_times_factorial(unsigned n);

/// log2(x) through MPFR, rounded to double.
double log2(const mpz_class& x);

/// sqrt(2 pi n) (n/e)^n through MPFR; returns (mantissa, decimal exponent)
/// with mantissa in [1, 10).
std::pair<double, long> stirling_scientific(unsigned n);

/// Relative error (stirling - n!) / n! through MPFR.
double stirling_relative_error(unsigned n);

/// pi bracketed by Machin's formula 16 atan(1/5) - 4 atan(1/239) with
/// alternating-series tails; the interval has width below 1e-55.
std::pair<mpq_class, mpq_class> machin_pi();

/// MPFR e to `digits` significant decimal digits.
std::string e_digits(int digits);

}  // namespace oracle_ref

#endif  // RPSENT_TESTS_ORACLES_HPP
