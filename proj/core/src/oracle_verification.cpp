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

#include "rpsent/oracle_verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "rpsent/errors.hpp"
#include "rpsent/exact_combinatorics.hpp"

namespace rpsent::oracle {

namespace {

// Nonempty events of one kind: per-event log2 weight plus the closed-form
// maximizer's mass on that event.
struct EventSpace {
  std::vector<double> log2_weights;
  std::vector<double> closed_form;
};

EventSpace build_space(entropy::Kind kind, unsigned n, unsigned cap) {
  const belief::Frame frame = belief::Frame::indexed(n);
  EventSpace space;
  if (kind == entropy::Kind::deng) {
    const auto maximizer = entropy::max_deng_bpa(n, cap);
    for (const auto& event : belief::enumerate_power_set(frame, cap)) {
      if (event.empty()) continue;
      space.log2_weights.push_back(std::log2(std::ldexp(1.0, static_cast<int>(event.size())) - 1.0));
      space.closed_form.push_back(maximizer.masses.at(event).value.to_double());
    }
  } else if (kind == entropy::Kind::rps) {
    const auto maximizer = entropy::max_rps_pmf(n, cap);
    std::vector<double> log2_weight_by_length(n + 1, 0.0);
    for (unsigned len = 1; len <= n; ++len) {
      log2_weight_by_length[len] = combinatorics::log2_of(combinatorics::sa(len) - ExactNatural(1));
    }
    for (const auto& event : belief::enumerate_pes(frame, cap)) {
      if (event.empty()) continue;
      space.log2_weights.push_back(log2_weight_by_length[event.size()]);
      space.closed_form.push_back(maximizer.masses.at(event).value.to_double());
    }
  } else {
    throw DomainError("oracle: kind must be deng or rps");
  }
  return space;
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return sum / 2;
}

}  // namespace

std::vector<double> project_to_simplex(std::span<const double> point) {
  if (point.empty()) return {};
  std::vector<double> sorted(point.begin(), point.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double threshold = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cumulative += sorted[i];
    const double candidate = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (sorted[i] - candidate > 0) threshold = candidate;
  }
  std::vector<double> out(point.size());
  std::transform(point.begin(), point.end(), out.begin(), [&](double v) { return std::max(v - threshold, 0.0); });
  return out;
}

double weighted_entropy_bits(std::span<const double> p, std::span<const double> log2_weights) {
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0) h += p[i] * (log2_weights[i] - std::log2(p[i]));
  }
  return h;
}

PerturbationTrialReport perturb_and_compare(entropy::Kind kind, unsigned n, unsigned trials, double step,
                                            std::uint64_t seed, unsigned cap) {
  if (!(step > 0.0 && step < 0.5)) throw DomainError("perturb_and_compare: step must lie in (0, 0.5)");
  const EventSpace space = build_space(kind, n, cap);

  PerturbationTrialReport report;
  report.kind = kind;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.closed_form_entropy = entropy::max_entropy_value(kind, n).bits;
  report.max_observed_entropy = weighted_entropy_bits(space.closed_form, space.log2_weights);

  std::mt19937_64 rng(seed);
  const std::size_t size = space.closed_form.size();
  std::vector<double> p;
  for (unsigned t = 0; t < trials; ++t) {
    p = space.closed_form;
    if (size >= 2) {
      const std::size_t from = uniform_index(rng, size);
      std::size_t to = uniform_index(rng, size - 1);
      if (to >= from) ++to;
      const double delta = step * uniform01(rng);
      p[from] -= delta;
      p[to] += delta;
      if (p[from] < 0) p = project_to_simplex(p);
    }
    const double h = weighted_entropy_bits(p, space.log2_weights);
    report.max_observed_entropy = std::max(report.max_observed_entropy, h);
    if (h > report.closed_form_entropy + kEntropySlackBits) ++report.violations;
  }
  return report;
}

AscentResult simplex_ascent_maxent(entropy::Kind kind, unsigned n, double tolerance, unsigned max_iters,
                                   unsigned cap) {
  const EventSpace space = build_space(kind, n, cap);
  const std::size_t size = space.closed_form.size();

  // Work with log2 p. The update p <- sqrt(p * w), renormalized, is
  // exponentiated gradient with half the step at which it would jump
  // straight to the fixed point.
  std::vector<double> log_p(size, -std::log2(static_cast<double>(size)));
  std::vector<double> p(size, 1.0 / static_cast<double>(size));
  double h = weighted_entropy_bits(p, space.log2_weights);

  AscentResult result;
  result.closed_form_entropy = entropy::max_entropy_value(kind, n).bits;
  for (unsigned iter = 1; iter <= max_iters; ++iter) {
    double peak = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < size; ++i) {
      log_p[i] = 0.5 * (log_p[i] + space.log2_weights[i]);
      peak = std::max(peak, log_p[i]);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < size; ++i) norm += std::exp2(log_p[i] - peak);
    const double log_norm = peak + std::log2(norm);
    for (std::size_t i = 0; i < size; ++i) {
      log_p[i] -= log_norm;
      p[i] = std::exp2(log_p[i]);
    }

    const double next = weighted_entropy_bits(p, space.log2_weights);
    if (next < h - 1e-12) {
      throw std::logic_error("simplex_ascent_maxent: entropy decreased at iteration " + std::to_string(iter));
    }
    const double gain = next - h;
    h = next;
    if (gain < tolerance) {
      result.entropy = h;
      result.iterations = iter;
      result.total_variation = total_variation(p, space.closed_form);
      result.distribution = std::move(p);
      return result;
    }
  }
  throw ConvergenceError("simplex_ascent_maxent: no convergence within " + std::to_string(max_iters) +
                         " iterations");
}

bool enumeration_cross_check(unsigned n, unsigned cap) {
  const belief::Frame frame = belief::Frame::indexed(n);
  const auto pes = belief::enumerate_pes(frame, cap);
  const auto power_set = belief::enumerate_power_set(frame, cap);

  if (ExactNatural(pes.size()) != combinatorics::sa(n)) return false;
  if (power_set.size() != (std::size_t{1} << n)) return false;

  std::vector<ExactNatural> rps_weight(n + 1);
  for (unsigned len = 1; len <= n; ++len) rps_weight[len] = combinatorics::sa(len) - ExactNatural(1);
  ExactNatural rps_total(0);
  for (const auto& event : pes) {
    if (!event.empty()) rps_total += rps_weight[event.size()];
  }
  if (rps_total != combinatorics::s_envelope(n)) return false;

  ExactNatural deng_total(0);
  for (const auto& event : power_set) {
    if (!event.empty()) deng_total += ExactNatural((std::uint64_t{1} << event.size()) - 1);
  }
  return deng_total == entropy::deng_envelope(n);
}

}  // namespace rpsent::oracle
