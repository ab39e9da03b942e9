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

#ifndef RPSENT_BELIEF_STRUCTURES_HPP
#define RPSENT_BELIEF_STRUCTURES_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rpsent/exact_number.hpp"

namespace rpsent::belief {

inline constexpr unsigned kDefaultEnumerationCap = 8;

/// Frame of discernment: N >= 1 distinct labels.
class Frame {
 public:
  /// Throws DomainError on an empty list or repeated labels.
  explicit Frame(std::vector<std::string> labels);
  /// Frame with labels "x1" .. "xn".
  static Frame indexed(unsigned n);

  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] const std::string& label(std::size_t index) const { return labels_.at(index); }
  [[nodiscard]] std::optional<std::size_t> index_of(const std::string& label) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<std::string> labels_;
};

// Both event kinds order by length first, then lexicographically on indices.
// That is also the enumeration order.

/// Unordered event: member indices kept sorted. Repeated indices are
/// preserved so validation can report them.
class SubsetEvent {
 public:
  SubsetEvent() = default;
  explicit SubsetEvent(std::vector<std::size_t> members);

  [[nodiscard]] const std::vector<std::size_t>& members() const noexcept { return members_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
  /// Indices in range and strictly increasing.
  [[nodiscard]] bool well_formed(const Frame& frame) const;

  friend bool operator==(const SubsetEvent&, const SubsetEvent&) = default;
  friend std::strong_ordering operator<=>(const SubsetEvent& a, const SubsetEvent& b);

 private:
  std::vector<std::size_t> members_;
};

/// Ordered event; the order is the payload. The empty sequence is the empty event.
class PermutationEvent {
 public:
  PermutationEvent() = default;
  explicit PermutationEvent(std::vector<std::size_t> sequence) : sequence_(std::move(sequence)) {}

  [[nodiscard]] const std::vector<std::size_t>& sequence() const noexcept { return sequence_; }
  [[nodiscard]] std::size_t size() const noexcept { return sequence_.size(); }
  [[nodiscard]] bool empty() const noexcept { return sequence_.empty(); }
  /// Indices in range and pairwise distinct.
  [[nodiscard]] bool well_formed(const Frame& frame) const;
  /// The underlying unordered set.
  [[nodiscard]] SubsetEvent as_subset() const { return SubsetEvent(sequence_); }

  friend bool operator==(const PermutationEvent&, const PermutationEvent&) = default;
  friend std::strong_ordering operator<=>(const PermutationEvent& a, const PermutationEvent& b);

 private:
  std::vector<std::size_t> sequence_;
};

/// A mass value. `exact` is false when it came from a decimal literal, which
/// switches unit-sum checking from exact equality to a 1e-9 tolerance.
struct Mass {
  Rational value;
  bool exact = true;

  friend bool operator==(const Mass&, const Mass&) = default;
};

/// Sparse mass assignment; events absent from `masses` carry mass 0.
template <class Event>
struct MassAssignment {
  Frame frame;
  std::map<Event, Mass> masses;

  friend bool operator==(const MassAssignment&, const MassAssignment&) = default;
};

using BPA = MassAssignment<SubsetEvent>;
using PMF = MassAssignment<PermutationEvent>;

struct InvariantCheck {
  std::string name;  // "well_formed_events", "empty_event_mass", "nonnegative", "unit_sum"
  bool passed = true;
  std::vector<std::string> offending;
};

struct ValidationReport {
  std::vector<InvariantCheck> checks;

  [[nodiscard]] bool ok() const;
  /// One line per failed check.
  [[nodiscard]] std::string describe() const;
};

/// Rational tolerance applied to the unit sum when any mass was a decimal.
Rational unit_sum_tolerance();

std::vector<SubsetEvent> enumerate_power_set(const Frame& frame, unsigned cap = kDefaultEnumerationCap);
std::vector<PermutationEvent> enumerate_pes(const Frame& frame, unsigned cap = kDefaultEnumerationCap);

ValidationReport validate_bpa(const BPA& bpa);
ValidationReport validate_pmf(const PMF& pmf);

/// Collapses orderings onto their underlying subsets. Throws DomainError for an invalid PMF.
BPA project_pmf_to_bpa(const PMF& pmf);

/// Human-readable forms, e.g. "{a,b}" and "(b,a)".
std::string describe(const Frame& frame, const SubsetEvent& event);
std::string describe(const Frame& frame, const PermutationEvent& event);

}  // namespace rpsent::belief

#endif  // RPSENT_BELIEF_STRUCTURES_HPP
