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

#include "rpsent/validation_suite.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "rpsent/approximation.hpp"
#include "rpsent/errors.hpp"
#include "rpsent/exact_combinatorics.hpp"
#include "rpsent/oracle_verification.hpp"

namespace rpsent::report {

namespace {

class CheckBuilder {
 public:
  CheckBuilder(std::string name, unsigned first_n, unsigned last_n) {
    result_.name = std::move(name);
    result_.first_n = first_n;
    result_.last_n = last_n;
  }

  void fail(unsigned n, std::string detail) {
    if (result_.failures.size() < kMaxReportedFailures) result_.failures.push_back({n, std::move(detail)});
    ++result_.failure_count;
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string fmt(double value) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  return os.str();
}

std::string fmt(const approx::HighPrecision& value) { return value.str(20, std::ios_base::scientific); }

CheckResult lemma1(const ValidationOptions& options) {
  CheckBuilder check("lemma1_floor_identity", 1, options.n_max);
  for (unsigned n = 1; n <= options.n_max; ++n) {
    const ExactNatural floor = combinatorics::floor_e_times_factorial(n);
    const ExactNatural s_a = options.sa_override ? options.sa_override(n) : combinatorics::sa(n);
    if (floor != s_a) {
      check.fail(n, "floor(e*n!) = " + floor.to_string() + " but S_A(n) = " + s_a.to_string());
    }
  }
  return check.take();
}

CheckResult lemma2(const ValidationOptions& options) {
  CheckBuilder check("lemma2_sandwich", 1, options.n_max);
  for (unsigned n = 1; n <= options.n_max; ++n) {
    const approx::BoundsCheck bounds = approx::lemma2_bounds(n);
    if (bounds.verdict != approx::Verdict::holds) {
      check.fail(n, std::string("verdict ") + std::string(approx::to_string(bounds.verdict)) + ": lower in [" +
                        fmt(bounds.lower.lo().to_double()) + ", " + fmt(bounds.lower.hi().to_double()) +
                        "], S = " + bounds.value.to_string() + ", upper in [" + fmt(bounds.upper.lo().to_double()) +
                        ", " + fmt(bounds.upper.hi().to_double()) + "]");
    }
  }
  return check.take();
}

CheckResult lemma3(const ValidationOptions& options) {
  CheckBuilder check("lemma3_ratio", 3, options.n_max);
  std::optional<Rational> previous;
  for (unsigned n = 3; n <= options.n_max; ++n) {
    const approx::RatioCheck ratio = approx::lemma3_ratio(n);
    if (ratio.ratio_minus_one > ratio.proof_bound) {
      check.fail(n, "ratio - 1 = " + fmt(ratio.ratio_minus_one.to_double()) + " exceeds bound " +
                        fmt(ratio.proof_bound.to_double()));
    }
    const bool equal = ratio.ratio_minus_one == ratio.proof_bound;
    if (equal != (n == 3)) {
      check.fail(n, equal ? "unexpected equality with the bound" : "expected equality with the bound");
    }
    if (previous && !(ratio.ratio_minus_one < *previous)) {
      check.fail(n, "ratio - 1 = " + fmt(ratio.ratio_minus_one.to_double()) + " does not decrease (previous " +
                        fmt(previous->to_double()) + ")");
    }
    previous = ratio.ratio_minus_one;
  }
  return check.take();
}

// Relative error of e*(n!)^2 against S(n), in absolute value.
approx::HighPrecision limit_relative_error(unsigned n) {
  const auto s = approx::to_high_precision(combinatorics::s_envelope(n));
  const auto limit = approx::to_high_precision(approx::rps_envelope_limit(n).midpoint());
  return abs((limit - s) / s);
}

CheckResult theorem4(const ValidationOptions& options) {
  constexpr unsigned kFirst = 10;
  CheckBuilder check("theorem4_convergence", kFirst, std::max(kFirst, options.n_max));
  std::optional<approx::HighPrecision> previous;
  for (unsigned n = kFirst; n <= options.n_max; ++n) {
    const auto err = limit_relative_error(n);
    if (previous && !(err < *previous)) {
      check.fail(n, "relative error " + fmt(err) + " does not decrease (previous " + fmt(*previous) + ")");
    }
    previous = err;
  }
  return check.take();
}

CheckResult enumeration(const ValidationOptions& options) {
  CheckBuilder check("enumeration_cross_check", 1, options.enumeration_cap);
  for (unsigned n = 1; n <= options.enumeration_cap; ++n) {
    if (!oracle::enumeration_cross_check(n, options.enumeration_cap)) {
      check.fail(n, "enumerated event spaces disagree with the closed forms");
    }
  }
  return check.take();
}

CheckResult perturbation(const ValidationOptions& options) {
  CheckBuilder check("perturbation_maximality", 1, options.enumeration_cap);
  for (auto kind : {entropy::Kind::deng, entropy::Kind::rps}) {
    for (unsigned n = 1; n <= options.enumeration_cap; ++n) {
      const auto report =
          oracle::perturb_and_compare(kind, n, options.trials, options.step, options.seed, options.enumeration_cap);
      if (report.violations != 0) {
        check.fail(n, std::string(entropy::to_string(kind)) + ": " + std::to_string(report.violations) +
                          " trials exceeded the closed form; max observed " + fmt(report.max_observed_entropy) +
                          " vs " + fmt(report.closed_form_entropy));
      }
    }
  }
  return check.take();
}

CheckResult ascent(const ValidationOptions& options) {
  constexpr double kEntropyTolerance = 1e-6;
  constexpr double kTotalVariationTolerance = 1e-4;
  CheckBuilder check("simplex_ascent", 1, options.enumeration_cap);
  for (auto kind : {entropy::Kind::deng, entropy::Kind::rps}) {
    for (unsigned n = 1; n <= options.enumeration_cap; ++n) {
      const std::string label = std::string(entropy::to_string(kind)) + ": ";
      try {
        const auto result = oracle::simplex_ascent_maxent(kind, n, options.ascent_tolerance,
                                                          options.ascent_max_iters, options.enumeration_cap);
        const double gap = result.entropy - result.closed_form_entropy;
        if (std::abs(gap) > kEntropyTolerance || gap > oracle::kEntropySlackBits) {
          check.fail(n, label + "ascent entropy " + fmt(result.entropy) + " vs closed form " +
                            fmt(result.closed_form_entropy));
        }
        if (result.total_variation > kTotalVariationTolerance) {
          check.fail(n, label + "total variation " + fmt(result.total_variation));
        }
      } catch (const ConvergenceError& e) {
        check.fail(n, label + e.what());
      } catch (const std::logic_error& e) {
        check.fail(n, label + e.what());
      }
    }
  }
  return check.take();
}

}  // namespace

bool ValidationReport::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

ValidationReport run_validation(const ValidationOptions& options) {
  if (options.n_max < 3) throw DomainError("validate: n_max must be at least 3");
  ValidationReport report;
  report.n_max = options.n_max;
  report.enumeration_cap = options.enumeration_cap;
  report.seed = options.seed;
  report.checks.push_back(lemma1(options));
  report.checks.push_back(lemma2(options));
  report.checks.push_back(lemma3(options));
  report.checks.push_back(theorem4(options));
  report.checks.push_back(enumeration(options));
  report.checks.push_back(perturbation(options));
  report.checks.push_back(ascent(options));
  return report;
}

std::string to_json(const ValidationReport& report) {
  nlohmann::ordered_json doc;
  doc["ok"] = report.ok();
  doc["n_max"] = report.n_max;
  doc["enumeration_cap"] = report.enumeration_cap;
  doc["rng"] = oracle::kRngAlgorithm;
  doc["seed"] = report.seed;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& check : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = check.name;
    entry["passed"] = check.passed();
    entry["range"] = {check.first_n, check.last_n};
    entry["failure_count"] = check.failure_count;
    auto failures = nlohmann::ordered_json::array();
    for (const auto& failure : check.failures) failures.push_back({{"n", failure.n}, {"detail", failure.detail}});
    entry["failures"] = std::move(failures);
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

}  // namespace rpsent::report
