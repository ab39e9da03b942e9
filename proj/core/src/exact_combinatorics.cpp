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

#include "rpsent/exact_combinatorics.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <string>

namespace rpsent::combinatorics {

namespace {
constexpr std::size_t kMantissaBits = 96;

// Values below 2^96, converted through two exact 48-bit halves.
long double to_long_double(const mpz_class& value) {
  const mpz_class hi = value >> 48;
  const mpz_class lo = value - (hi << 48);
  return static_cast<long double>(hi.get_d()) * 281474976710656.0L + static_cast<long double>(lo.get_d());
}
}  // namespace

// 0! and 1! are seeded, so a cold cache spends n - 1 multiplies on n!.
FactorialCache::FactorialCache(unsigned cap) : cap_(cap) {
  table_.emplace_back(1);
  table_.emplace_back(1);
}

const ExactNatural& FactorialCache::get(unsigned n) {
  if (n > cap_) {
    throw SizeError("factorial: n = " + std::to_string(n) + " exceeds the configured cap " + std::to_string(cap_));
  }
  {
    std::shared_lock lock(mutex_);
    if (n < table_.size()) return table_[n];
  }
  std::unique_lock lock(mutex_);
  while (table_.size() <= n) {
    const auto next = static_cast<std::uint64_t>(table_.size());
    table_.push_back(table_.back() * ExactNatural(next));
  }
  return table_[n];
}

FactorialCache& default_factorial_cache() {
  static FactorialCache cache;
  return cache;
}

ExactNatural factorial(unsigned n) { return default_factorial_cache().get(n); }

ExactNatural permutations(unsigned n, unsigned k) {
  if (k > n) {
    throw DomainError("permutations: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  }
  ExactNatural out(1);
  for (unsigned j = n - k + 1; j <= n; ++j) out *= ExactNatural(j);
  return out;
}

ExactNatural sa(unsigned n) {
  // Terms n!/(n-u)! for u = 0..n, each the previous one times (n-u+1).
  ExactNatural term(1);
  ExactNatural sum(1);
  for (unsigned u = 1; u <= n; ++u) {
    term *= ExactNatural(n - u + 1);
    sum += term;
  }
  return sum;
}

RationalInterval e_interval(unsigned terms) {
  if (terms < 2) throw DomainError("e_interval: need at least 2 terms");
  // numerator = sum_{k=0..M} M!/k! via Horner, denominator = M!.
  mpz_class numerator = 1;
  mpz_class denominator = 1;
  for (unsigned k = 1; k <= terms; ++k) {
    numerator = numerator * k + 1;
    denominator *= k;
  }
  Rational lo(numerator, denominator);
  Rational tail(mpz_class(1), denominator * terms);
  Rational hi = lo + tail;
  return {std::move(lo), std::move(hi)};
}

ExactNatural floor_e_times_factorial(unsigned n, unsigned max_refinements) {
  const Rational n_factorial(factorial(n));
  unsigned terms = n + 10;
  for (unsigned round = 0; round <= max_refinements; ++round, terms *= 2) {
    const RationalInterval e = e_interval(terms);
    mpz_class floor_lo = (e.lo() * n_factorial).floor();
    const mpz_class floor_hi = (e.hi() * n_factorial).floor();
    if (floor_lo == floor_hi) return ExactNatural::from_mpz(std::move(floor_lo));
  }
  throw PrecisionError("floor of e*n! undecided for n = " + std::to_string(n));
}

bool verify_floor_identity(unsigned n, unsigned max_refinements) {
  if (n < 1) throw DomainError("verify_floor_identity: n must be >= 1");
  return floor_e_times_factorial(n, max_refinements) == sa(n);
}

ExactNatural s_envelope(unsigned n) {
  if (n < 1) throw DomainError("s_envelope: n must be >= 1");
  ExactNatural arrangements(1);  // A(n, u)
  ExactNatural total(0);
  for (unsigned u = 1; u <= n; ++u) {
    arrangements *= ExactNatural(n - u + 1);
    total += arrangements * (sa(u) - ExactNatural(1));
  }
  return total;
}

Rational sum_ratio(unsigned n) {
  if (n < 1) throw DomainError("sum_ratio: n must be >= 1");
  Rational total(0);
  for (unsigned u = 1; u <= n; ++u) {
    total += Rational(factorial(u).mpz(), factorial(n - u).mpz());
  }
  return total;
}

double log2_of(const ExactNatural& x, int digits) {
  if (x.is_zero()) throw DomainError("log2_of: log of zero");
  if (digits < 1) throw DomainError("log2_of: digits must be positive");

  const std::size_t bits = x.bit_length();
  long double result = 0;
  if (bits <= kMantissaBits) {
    result = std::log2(to_long_double(x.mpz()));
  } else {
    const std::size_t shift = bits - kMantissaBits;
    const mpz_class top = x.mpz() >> static_cast<mp_bitcnt_t>(shift);
    result = static_cast<long double>(shift) + std::log2(to_long_double(top));
  }

  const auto out = static_cast<double>(result);
  const double half_ulp = (std::nextafter(out, std::numeric_limits<double>::infinity()) - out) / 2;
  if (half_ulp > std::pow(10.0, -digits)) {
    throw PrecisionError("log2_of: a double cannot carry " + std::to_string(digits) + " decimals at magnitude " +
                         std::to_string(out));
  }
  return out;
}

}  // namespace rpsent::combinatorics
