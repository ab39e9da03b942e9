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

#include "rpsent/entropies.hpp"

#include <cmath>
#include <map>
#include <string>

#include "rpsent/errors.hpp"
#include "rpsent/exact_combinatorics.hpp"

namespace rpsent::entropy {

namespace {

constexpr int kLogDigits = 12;

ExactNatural power(unsigned base, unsigned exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return ExactNatural::from_mpz(out);
}

// Sum of m * (log2 w - log2 m) over positive masses, where log2 w depends only
// on the event length.
template <class Assignment, class LogWeight>
double weighted_entropy(const Assignment& assignment, LogWeight&& log_weight) {
  std::map<std::size_t, double> log_weight_by_length;
  double total = 0.0;
  for (const auto& [event, mass] : assignment.masses) {
    if (mass.value.sign() == 0) continue;
    auto [it, inserted] = log_weight_by_length.try_emplace(event.size(), 0.0);
    if (inserted) it->second = log_weight(static_cast<unsigned>(event.size()));
    const double m = mass.value.to_double();
    total += m * (it->second - std::log2(m));
  }
  return total;
}

}  // namespace

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::shannon:
      return "shannon";
    case Kind::deng:
      return "deng";
    case Kind::rps:
      return "rps";
  }
  return "unknown";
}

std::optional<Kind> parse_kind(std::string_view text) {
  if (text == "shannon") return Kind::shannon;
  if (text == "deng") return Kind::deng;
  if (text == "rps") return Kind::rps;
  return std::nullopt;
}

EntropyValue shannon_entropy(std::span<const double> distribution) {
  double sum = 0.0;
  for (double p : distribution) {
    if (!(p >= 0.0)) throw DomainError("shannon_entropy: negative or NaN probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DomainError("shannon_entropy: probabilities sum to " + std::to_string(sum));
  double h = 0.0;
  for (double p : distribution) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return {h};
}

EntropyValue deng_entropy(const belief::BPA& bpa) {
  if (auto report = belief::validate_bpa(bpa); !report.ok()) {
    throw DomainError("deng_entropy: invalid BPA\n" + report.describe());
  }
  return {weighted_entropy(bpa, [](unsigned size) {
    return combinatorics::log2_of(power(2, size) - ExactNatural(1), kLogDigits);
  })};
}

EntropyValue rps_entropy(const belief::PMF& pmf) {
  if (auto report = belief::validate_pmf(pmf); !report.ok()) {
    throw DomainError("rps_entropy: invalid PMF\n" + report.describe());
  }
  return {weighted_entropy(pmf, [](unsigned length) {
    return combinatorics::log2_of(combinatorics::sa(length) - ExactNatural(1), kLogDigits);
  })};
}

belief::BPA max_deng_bpa(unsigned n, unsigned cap) {
  const belief::Frame frame = belief::Frame::indexed(n);
  const auto events = belief::enumerate_power_set(frame, cap);
  const Rational total(deng_envelope(n));
  belief::BPA out{frame, {}};
  for (const auto& event : events) {
    if (event.empty()) continue;
    const Rational weight(power(2, static_cast<unsigned>(event.size())) - ExactNatural(1));
    out.masses.emplace(event, belief::Mass{weight / total, true});
  }
  return out;
}

belief::PMF max_rps_pmf(unsigned n, unsigned cap) {
  const belief::Frame frame = belief::Frame::indexed(n);
  const auto events = belief::enumerate_pes(frame, cap);
  const Rational total(combinatorics::s_envelope(n));
  std::vector<Rational> mass_by_length;
  for (unsigned len = 0; len <= n; ++len) {
    mass_by_length.push_back(Rational(combinatorics::sa(len) - ExactNatural(1)) / total);
  }
  belief::PMF out{frame, {}};
  for (const auto& event : events) {
    if (event.empty()) continue;
    out.masses.emplace(event, belief::Mass{mass_by_length[event.size()], true});
  }
  return out;
}

EntropyValue max_entropy_value(Kind kind, unsigned n) {
  return {combinatorics::log2_of(envelope(kind, n).count, kLogDigits)};
}

EnvelopeValue envelope(Kind kind, unsigned n) {
  if (n < 1) throw DomainError("envelope: n must be >= 1");
  switch (kind) {
    case Kind::shannon:
      return {ExactNatural(n)};
    case Kind::deng:
      return {deng_envelope(n)};
    case Kind::rps:
      return {combinatorics::s_envelope(n)};
  }
  throw DomainError("envelope: unknown kind");
}

ExactNatural deng_envelope(unsigned n) { return power(3, n) - power(2, n); }

}  // namespace rpsent::entropy
