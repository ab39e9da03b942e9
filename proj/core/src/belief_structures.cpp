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

#include "rpsent/belief_structures.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "rpsent/errors.hpp"

namespace rpsent::belief {

namespace {

std::strong_ordering length_then_lex(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

void check_cap(const Frame& frame, unsigned cap) {
  if (frame.size() > cap) {
    throw SizeError("enumeration: frame of size " + std::to_string(frame.size()) + " exceeds the cap " +
                    std::to_string(cap));
  }
}

std::string format_sum(const Rational& sum, bool exact) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", sum.to_double());
  if (exact) return sum.to_string() + " (" + buf + ")";
  return buf;
}

template <class Event>
ValidationReport validate_assignment(const MassAssignment<Event>& assignment) {
  InvariantCheck well_formed{"well_formed_events", true, {}};
  InvariantCheck empty_mass{"empty_event_mass", true, {}};
  InvariantCheck nonnegative{"nonnegative", true, {}};
  InvariantCheck unit_sum{"unit_sum", true, {}};

  Rational sum(0);
  bool all_exact = true;
  for (const auto& [event, mass] : assignment.masses) {
    const std::string name = describe(assignment.frame, event);
    if (!event.well_formed(assignment.frame)) {
      well_formed.passed = false;
      well_formed.offending.push_back(name + ": repeated or unknown element");
    }
    if (event.empty() && mass.value.sign() != 0) {
      empty_mass.passed = false;
      empty_mass.offending.push_back(name + " has mass " + mass.value.to_string());
    }
    if (mass.value.sign() < 0) {
      nonnegative.passed = false;
      nonnegative.offending.push_back(name + " has mass " + mass.value.to_string());
    }
    sum += mass.value;
    all_exact = all_exact && mass.exact;
  }

  Rational deviation = sum - Rational(1);
  if (deviation.sign() < 0) deviation = -deviation;
  const bool sum_ok = all_exact ? deviation.sign() == 0 : deviation <= unit_sum_tolerance();
  if (!sum_ok) {
    unit_sum.passed = false;
    unit_sum.offending.push_back("mass sum " + format_sum(sum, all_exact) +
                                 (all_exact ? " is not exactly 1" : " outside tolerance 1e-09"));
  }
  return {{std::move(well_formed), std::move(empty_mass), std::move(nonnegative), std::move(unit_sum)}};
}

}  // namespace

// ---------------------------------------------------------------------------

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw DomainError("frame: at least one element required");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw DomainError("frame: repeated label \"" + l + "\"");
  }
}

Frame Frame::indexed(unsigned n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (unsigned i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return Frame(std::move(labels));
}

std::optional<std::size_t> Frame::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

SubsetEvent::SubsetEvent(std::vector<std::size_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
}

bool SubsetEvent::well_formed(const Frame& frame) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] >= frame.size()) return false;
    if (i > 0 && members_[i] <= members_[i - 1]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const SubsetEvent& a, const SubsetEvent& b) {
  return length_then_lex(a.members_, b.members_);
}

bool PermutationEvent::well_formed(const Frame& frame) const {
  std::vector<bool> used(frame.size(), false);
  for (std::size_t index : sequence_) {
    if (index >= frame.size() || used[index]) return false;
    used[index] = true;
  }
  return true;
}

std::strong_ordering operator<=>(const PermutationEvent& a, const PermutationEvent& b) {
  return length_then_lex(a.sequence_, b.sequence_);
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.passed; });
}

std::string ValidationReport::describe() const {
  std::ostringstream os;
  for (const auto& check : checks) {
    if (check.passed) continue;
    os << check.name << ":";
    for (std::size_t i = 0; i < check.offending.size(); ++i) os << (i == 0 ? " " : "; ") << check.offending[i];
    os << "\n";
  }
  return os.str();
}

Rational unit_sum_tolerance() { return Rational(mpz_class(1), mpz_class(1000000000)); }

std::vector<SubsetEvent> enumerate_power_set(const Frame& frame, unsigned cap) {
  check_cap(frame, cap);
  const std::size_t n = frame.size();
  std::vector<SubsetEvent> out;
  out.reserve(std::size_t{1} << n);
  std::vector<std::size_t> current;
  // Combinations of each size in lexicographic order.
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t start, std::size_t remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t i = start; i + remaining <= n; ++i) {
      current.push_back(i);
      extend(i + 1, remaining - 1);
      current.pop_back();
    }
  };
  for (std::size_t k = 0; k <= n; ++k) extend(0, k);
  return out;
}

std::vector<PermutationEvent> enumerate_pes(const Frame& frame, unsigned cap) {
  check_cap(frame, cap);
  const std::size_t n = frame.size();
  std::vector<PermutationEvent> out;
  std::vector<std::size_t> current;
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> extend = [&](std::size_t remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      current.push_back(i);
      extend(remaining - 1);
      current.pop_back();
      used[i] = false;
    }
  };
  for (std::size_t k = 0; k <= n; ++k) extend(k);
  return out;
}

ValidationReport validate_bpa(const BPA& bpa) { return validate_assignment(bpa); }

ValidationReport validate_pmf(const PMF& pmf) { return validate_assignment(pmf); }

BPA project_pmf_to_bpa(const PMF& pmf) {
  if (auto report = validate_pmf(pmf); !report.ok()) {
    throw DomainError("project_pmf_to_bpa: invalid PMF\n" + report.describe());
  }
  BPA out{pmf.frame, {}};
  for (const auto& [event, mass] : pmf.masses) {
    auto [it, inserted] = out.masses.try_emplace(event.as_subset(), mass);
    if (!inserted) {
      it->second.value += mass.value;
      it->second.exact = it->second.exact && mass.exact;
    }
  }
  return out;
}

std::string describe(const Frame& frame, const SubsetEvent& event) {
  std::string out = "{";
  for (std::size_t i = 0; i < event.members().size(); ++i) {
    if (i > 0) out += ",";
    const std::size_t m = event.members()[i];
    out += m < frame.size() ? frame.label(m) : "#" + std::to_string(m);
  }
  return out + "}";
}

std::string describe(const Frame& frame, const PermutationEvent& event) {
  std::string out = "(";
  for (std::size_t i = 0; i < event.sequence().size(); ++i) {
    if (i > 0) out += ",";
    const std::size_t m = event.sequence()[i];
    out += m < frame.size() ? frame.label(m) : "#" + std::to_string(m);
  }
  return out + ")";
}

}  // namespace rpsent::belief
