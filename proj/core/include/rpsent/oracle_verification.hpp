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

#ifndef RPSENT_ORACLE_VERIFICATION_HPP
#define RPSENT_ORACLE_VERIFICATION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rpsent/belief_structures.hpp"
#include "rpsent/entropies.hpp"

// Independent numeric checks that the closed-form maximizers really are
// maxima. Event spaces come from brute-force enumeration, never from the
// closed forms under test.

namespace rpsent::oracle {

inline constexpr const char* kRngAlgorithm = "mt19937_64";
inline constexpr double kEntropySlackBits = 1e-9;

struct PerturbationTrialReport {
  entropy::Kind kind = entropy::Kind::rps;
  unsigned n = 0;
  unsigned trials = 0;
  std::uint64_t seed = 0;
  std::string rng = kRngAlgorithm;
  double max_observed_entropy = 0.0;
  double closed_form_entropy = 0.0;
  unsigned violations = 0;

  friend bool operator==(const PerturbationTrialReport&, const PerturbationTrialReport&) = default;
};

/// Perturbs the closed-form maximizer `trials` times, each by moving up to
/// `step` mass between a random pair of events (projected back to the
/// simplex), and counts perturbed distributions whose entropy exceeds the
/// closed form by more than kEntropySlackBits. kind must be deng or rps;
/// step must lie in (0, 0.5).
PerturbationTrialReport perturb_and_compare(entropy::Kind kind, unsigned n, unsigned trials, double step,
                                            std::uint64_t seed, unsigned cap = belief::kDefaultEnumerationCap);

struct AscentResult {
  double entropy = 0.0;
  std::vector<double> distribution;  // over nonempty events in enumeration order
  unsigned iterations = 0;
  double closed_form_entropy = 0.0;
  double total_variation = 0.0;  // against the closed-form maximizer
};

/// Exponentiated-gradient ascent on the simplex from the uniform distribution.
/// Stops when the per-iteration gain drops below `tolerance`; throws
/// ConvergenceError after `max_iters`, and std::logic_error if an iteration
/// ever lowers the entropy.
AscentResult simplex_ascent_maxent(entropy::Kind kind, unsigned n, double tolerance, unsigned max_iters,
                                   unsigned cap = belief::kDefaultEnumerationCap);

/// True iff the enumerated event spaces agree with every closed form:
/// |PES| = S_A(n), |2^Omega| = 2^n, and the enumerated weight sum equals S(n).
bool enumeration_cross_check(unsigned n, unsigned cap = belief::kDefaultEnumerationCap);

/// Euclidean projection onto the probability simplex.
std::vector<double> project_to_simplex(std::span<const double> point);

/// Entropy in bits of `p` against per-event log2 weights.
double weighted_entropy_bits(std::span<const double> p, std::span<const double> log2_weights);

}  // namespace rpsent::oracle

#endif  // RPSENT_ORACLE_VERIFICATION_HPP
