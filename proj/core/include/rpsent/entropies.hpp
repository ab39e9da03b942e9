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

#ifndef RPSENT_ENTROPIES_HPP
#define RPSENT_ENTROPIES_HPP

#include <optional>
#include <span>
#include <string_view>

#include "rpsent/belief_structures.hpp"
#include "rpsent/exact_number.hpp"

namespace rpsent::entropy {

/// Entropy in bits (base 2 throughout).
struct EntropyValue {
  double bits = 0.0;

  friend auto operator<=>(const EntropyValue&, const EntropyValue&) = default;
};

/// The count inside the logarithm at maximum entropy.
struct EnvelopeValue {
  ExactNatural count;

  friend bool operator==(const EnvelopeValue&, const EnvelopeValue&) = default;
};

enum class Kind { shannon, deng, rps };

std::string_view to_string(Kind kind);
std::optional<Kind> parse_kind(std::string_view text);

/// -sum p log2 p with 0 log 0 = 0. Throws DomainError on a negative entry or a
/// sum off by more than 1e-9.
EntropyValue shannon_entropy(std::span<const double> distribution);

/// -sum m(A) log2(m(A) / (2^|A| - 1)). Throws DomainError for an invalid BPA.
EntropyValue deng_entropy(const belief::BPA& bpa);

/// -sum m(E) log2(m(E) / (S_A(|E|) - 1)). Throws DomainError for an invalid PMF.
EntropyValue rps_entropy(const belief::PMF& pmf);

/// Maximizer of Deng entropy: mass (2^|A| - 1) / (3^n - 2^n) on every nonempty subset.
belief::BPA max_deng_bpa(unsigned n, unsigned cap = belief::kDefaultEnumerationCap);

/// Maximizer of RPS entropy: mass (S_A(|E|) - 1) / S(n) on every nonempty permutation event.
belief::PMF max_rps_pmf(unsigned n, unsigned cap = belief::kDefaultEnumerationCap);

/// log2 of the envelope, from closed forms (no enumeration).
EntropyValue max_entropy_value(Kind kind, unsigned n);

/// n, 3^n - 2^n, or S(n).
EnvelopeValue envelope(Kind kind, unsigned n);

/// 3^n - 2^n.
ExactNatural deng_envelope(unsigned n);

}  // namespace rpsent::entropy

#endif  // RPSENT_ENTROPIES_HPP
