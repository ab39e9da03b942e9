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

#ifndef RPSENT_EXACT_COMBINATORICS_HPP
#define RPSENT_EXACT_COMBINATORICS_HPP

#include <deque>
#include <shared_mutex>

#include "rpsent/errors.hpp"
#include "rpsent/exact_number.hpp"

namespace rpsent::combinatorics {

inline constexpr unsigned kDefaultFactorialCap = 10000;

/// Append-only table of n! values. Concurrent readers share a lock; a miss
/// takes the exclusive lock and extends the table. References returned by
/// get() stay valid for the lifetime of the cache.
class FactorialCache {
 public:
  explicit FactorialCache(unsigned cap = kDefaultFactorialCap);

  /// Throws SizeError when n exceeds the cap.
  const ExactNatural& get(unsigned n);
  [[nodiscard]] unsigned cap() const noexcept { return cap_; }

 private:
  unsigned cap_;
  std::deque<ExactNatural> table_;
  std::shared_mutex mutex_;
};

/// Process-wide cache used by factorial().
FactorialCache& default_factorial_cache();

/// n!, memoized.
ExactNatural factorial(unsigned n);

/// A(n, k) = n!/(n-k)!. Throws DomainError when k > n.
ExactNatural permutations(unsigned n, unsigned k);

/// S_A(n) = sum over u of n!/(n-u)!, the number of permutation events on n
/// elements (empty event included). Exact integer summation.
ExactNatural sa(unsigned n);

/// Rational bracket [L, U] of e with L = sum_{k<=terms} 1/k! and
/// U = L + 1/(terms! * terms). Requires terms >= 2.
RationalInterval e_interval(unsigned terms);

/// floor(e * n!) decided rigorously: the e bracket is refined (term count
/// doubling from n + 10) until both endpoints give the same floor. Throws
/// PrecisionError after `max_refinements` doublings.
ExactNatural floor_e_times_factorial(unsigned n, unsigned max_refinements = 12);

/// floor(e * n!) == sa(n). Requires n >= 1 (at n = 0 the floor is 2, S_A is 1).
bool verify_floor_identity(unsigned n, unsigned max_refinements = 12);

/// S(n) = sum_{u=1..n} A(n,u) * (S_A(u) - 1), the RPS envelope. Requires n >= 1.
ExactNatural s_envelope(unsigned n);

/// sum_{u=1..n} u!/(n-u)! as an exact rational. Requires n >= 1.
Rational sum_ratio(unsigned n);

/// log2(x) from the bit length plus the top 96 bits. Throws DomainError for
/// x = 0, PrecisionError if a double cannot carry `digits` decimals at this
/// magnitude.
double log2_of(const ExactNatural& x, int digits = 12);

}  // namespace rpsent::combinatorics

#endif  // RPSENT_EXACT_COMBINATORICS_HPP
