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

#include "rpsent/commands.hpp"

#include <fstream>
#include <ostream>
#include <vector>

#include "json.hpp"
#include "rpsent/belief_io.hpp"
#include "rpsent/bench.hpp"
#include "rpsent/errors.hpp"
#include "rpsent/exact_combinatorics.hpp"

namespace rpsent::report {

namespace {

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

template <class Event>
std::optional<std::vector<double>> singleton_masses(const belief::MassAssignment<Event>& assignment) {
  std::vector<double> p(assignment.frame.size(), 0.0);
  for (const auto& [event, mass] : assignment.masses) {
    if (mass.value.sign() == 0) continue;
    if (event.size() != 1) return std::nullopt;
    if constexpr (std::is_same_v<Event, belief::SubsetEvent>) {
      p[event.members().front()] += mass.value.to_double();
    } else {
      p[event.sequence().front()] += mass.value.to_double();
    }
  }
  return p;
}

std::string entropy_line(entropy::Kind kind, double bits) {
  return std::string(entropy::to_string(kind)) + " entropy: " + format_fixed(bits) + " bits";
}

ExactNatural binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return ExactNatural::from_mpz(out);
}

}  // namespace

int cmd_entropy(const std::filesystem::path& input, std::optional<entropy::Kind> kind, Io io) {
  return guarded(io.err, [&]() -> int {
    std::optional<belief::Document> loaded;
    try {
      loaded = belief::load_document(input);
    } catch (const ParseError& e) {
      io.err << "error: " << e.what() << '\n';
      return kExitFailure;
    }
    const belief::Document& doc = *loaded;

    const bool is_pmf = std::holds_alternative<belief::PMF>(doc);
    const belief::ValidationReport validation =
        is_pmf ? belief::validate_pmf(std::get<belief::PMF>(doc)) : belief::validate_bpa(std::get<belief::BPA>(doc));
    if (!validation.ok()) {
      io.err << "invalid " << (is_pmf ? "PMF" : "BPA") << " in " << input.string() << ":\n" << validation.describe();
      return kExitFailure;
    }

    const entropy::Kind primary = kind.value_or(is_pmf ? entropy::Kind::rps : entropy::Kind::deng);
    const std::size_t n = is_pmf ? std::get<belief::PMF>(doc).frame.size() : std::get<belief::BPA>(doc).frame.size();
    const auto singletons = is_pmf ? singleton_masses(std::get<belief::PMF>(doc))
                                   : singleton_masses(std::get<belief::BPA>(doc));

    double bits = 0.0;
    switch (primary) {
      case entropy::Kind::rps:
        if (!is_pmf) {
          io.err << "error: RPS entropy needs a PMF; " << input.string() << " holds a BPA\n";
          return kExitUsage;
        }
        bits = entropy::rps_entropy(std::get<belief::PMF>(doc)).bits;
        break;
      case entropy::Kind::deng:
        bits = entropy::deng_entropy(is_pmf ? belief::project_pmf_to_bpa(std::get<belief::PMF>(doc))
                                            : std::get<belief::BPA>(doc))
                   .bits;
        break;
      case entropy::Kind::shannon:
        if (!singletons) {
          io.err << "error: Shannon entropy needs mass on singletons only\n";
          return kExitUsage;
        }
        bits = entropy::shannon_entropy(*singletons).bits;
        break;
    }

    nlohmann::ordered_json record;
    record["kind"] = entropy::to_string(primary);
    record["n"] = n;
    record["entropy_bits"] = bits;
    io.out << entropy_line(primary, bits) << '\n';
    if (singletons && primary != entropy::Kind::shannon) {
      const double shannon = entropy::shannon_entropy(*singletons).bits;
      io.out << entropy_line(entropy::Kind::shannon, shannon) << '\n';
      record["shannon_bits"] = shannon;
    }
    io.out << record.dump() << '\n';
    return kExitOk;
  });
}

std::string per_length_maxent_json(entropy::Kind kind, unsigned n) {
  if (n < 1) throw DomainError("maxent: n must be at least 1");
  nlohmann::ordered_json doc;
  const belief::Frame frame = belief::Frame::indexed(n);
  doc["frame"] = frame.labels();
  auto lengths = nlohmann::ordered_json::array();
  if (kind == entropy::Kind::rps) {
    doc["kind"] = "pmf";
    const ExactNatural total = combinatorics::s_envelope(n);
    ExactNatural s_a = 1;  // S_A(0)
    for (unsigned len = 1; len <= n; ++len) {
      s_a *= ExactNatural(len);
      s_a += ExactNatural(1);
      const Rational mass(mpz_class(s_a.mpz() - 1), total.mpz());
      lengths.push_back({{"length", len},
                         {"events", combinatorics::permutations(n, len).to_string()},
                         {"mass", mass.to_string()}});
    }
  } else if (kind == entropy::Kind::deng) {
    doc["kind"] = "bpa";
    const ExactNatural total = entropy::deng_envelope(n);
    for (unsigned len = 1; len <= n; ++len) {
      mpz_class weight;
      mpz_ui_pow_ui(weight.get_mpz_t(), 2, len);
      weight -= 1;
      const Rational mass(weight, total.mpz());
      lengths.push_back(
          {{"length", len}, {"events", binomial(n, len).to_string()}, {"mass", mass.to_string()}});
    }
  } else {
    throw DomainError("maxent: kind must be deng or rps");
  }
  doc["per_length_masses"] = std::move(lengths);
  return doc.dump(2) + "\n";
}

int cmd_maxent(entropy::Kind kind, unsigned n, const std::optional<std::filesystem::path>& output, Io io) {
  return guarded(io.err, [&]() -> int {
    if (kind == entropy::Kind::shannon) throw DomainError("maxent: kind must be deng or rps");
    if (n < 1) throw DomainError("maxent: n must be at least 1");
    std::string text;
    if (n <= belief::kDefaultEnumerationCap) {
      text = kind == entropy::Kind::rps ? belief::to_json(entropy::max_rps_pmf(n)) : belief::to_json(entropy::max_deng_bpa(n));
    } else {
      io.err << "note: n = " << n << " exceeds the enumeration cap " << belief::kDefaultEnumerationCap
             << "; emitting per-length masses\n";
      text = per_length_maxent_json(kind, n);
    }
    if (output) {
      std::ofstream file(*output, std::ios::binary);
      if (!file) {
        io.err << "error: cannot open " << output->string() << " for writing\n";
        return kExitFailure;
      }
      file << text;
    } else {
      io.out << text;
    }
    return kExitOk;
  });
}

int cmd_tables(int which, const Range& range, Io io) {
  return guarded(io.err, [&]() -> int {
    const CsvTable table = make_table(which, range);
    write_csv(io.out, table);
    for (const auto& note : table.notes) io.err << "note: " << note << '\n';
    return kExitOk;
  });
}

int cmd_validate(const ValidationOptions& options, Io io) {
  return guarded(io.err, [&]() -> int {
    const ValidationReport report = run_validation(options);
    io.out << to_json(report);
    for (const auto& check : report.checks) {
      if (check.passed()) continue;
      io.err << "FAILED " << check.name << " at n = " << check.failures.front().n << ": "
             << check.failures.front().detail << '\n';
    }
    return report.ok() ? kExitOk : kExitFailure;
  });
}

int cmd_bench(const Range& range, Io io) {
  return guarded(io.err, [&]() -> int {
    write_bench_csv(io.out, run_bench(range));
    return kExitOk;
  });
}

}  // namespace rpsent::report
