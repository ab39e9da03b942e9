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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rpsent/bench.hpp"
#include "rpsent/commands.hpp"
#include "rpsent/exact_combinatorics.hpp"

namespace {

using rpsent::report::Range;


void add_range_options(CLI::App* cmd, std::optional<unsigned>& from, std::optional<unsigned>& to,
                       std::optional<unsigned>& step) {
  cmd->add_option("--from", from, "First N")->check(CLI::PositiveNumber);
  cmd->add_option("--to", to, "Last N")->check(CLI::PositiveNumber);
  cmd->add_option("--step", step, "N increment")->check(CLI::PositiveNumber);
}

Range resolve(Range range, const std::optional<unsigned>& from, const std::optional<unsigned>& to,
              const std::optional<unsigned>& step) {
  if (from) range.from = *from;
  if (to) range.to = *to;
  if (step) range.step = *step;
  if (from && !to && range.to < range.from) range.to = range.from;
  return range;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and limit maximum entropies of belief structures and random permutation sets"};
  app.require_subcommand(1);
  const rpsent::report::Io io{std::cout, std::cerr};
  int status = rpsent::report::kExitOk;

  auto* entropy = app.add_subcommand("entropy", "Entropy of a BPA or PMF JSON document");
  std::string input;
  std::string kind;
  entropy->add_option("file", input, "Input document")->required()->check(CLI::ExistingFile);
  entropy->add_option("--kind", kind, "Override the entropy kind")->check(CLI::IsMember({"shannon", "deng", "rps"}));
  entropy->callback([&] {
    status = rpsent::report::cmd_entropy(input, rpsent::entropy::parse_kind(kind), io);
  });

  auto* maxent = app.add_subcommand("maxent", "Emit the maximum-entropy distribution");
  std::string maxent_kind;
  unsigned maxent_n = 0;
  std::optional<std::string> output;
  maxent->add_option("kind", maxent_kind, "deng or rps")->required()->check(CLI::IsMember({"deng", "rps"}));
  maxent->add_option("n", maxent_n, "Frame size")->required()->check(CLI::PositiveNumber);
  maxent->add_option("-o,--output", output, "Write to this file instead of stdout");
  maxent->callback([&] {
    std::optional<std::filesystem::path> path;
    if (output) path = *output;
    status = rpsent::report::cmd_maxent(*rpsent::entropy::parse_kind(maxent_kind), maxent_n, path, io);
  });

  auto* tables = app.add_subcommand("tables", "Reproduce a results table as CSV");
  int which = 0;
  std::optional<unsigned> t_from, t_to, t_step;
  tables->add_option("which", which, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
  add_range_options(tables, t_from, t_to, t_step);
  tables->callback([&] {
    const Range range = resolve(rpsent::report::default_range(which), t_from, t_to, t_step);
    status = rpsent::report::cmd_tables(which, range, io);
  });

  auto* validate = app.add_subcommand("validate", "Run every identity, bound and oracle check");
  rpsent::report::ValidationOptions options;
  std::string fault;
  validate->add_option("--n-max", options.n_max, "Largest N for the analytic checks")->check(CLI::Range(3u, 100000u));
  validate->add_option("--seed", options.seed, "Perturbation seed");
  validate->add_option("--trials", options.trials, "Perturbations per (kind, N)");
  validate->add_option("--inject-fault", fault)->check(CLI::IsMember({"sa-off-by-one"}))->group("");
  validate->callback([&] {
    if (fault == "sa-off-by-one") {
      options.sa_override = [](unsigned n) {
        rpsent::ExactNatural wrong = rpsent::combinatorics::sa(n);
        wrong += rpsent::ExactNatural(1);
        return wrong;
      };
    }
    status = rpsent::report::cmd_validate(options, io);
  });

  auto* bench = app.add_subcommand("bench", "Multiplication counts: exact envelope vs limit");
  std::optional<unsigned> b_from, b_to, b_step;
  add_range_options(bench, b_from, b_to, b_step);
  bench->callback([&] {
    const Range range = resolve(rpsent::report::default_bench_range(), b_from, b_to, b_step);
    status = rpsent::report::cmd_bench(range, io);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rpsent::report::kExitUsage;
  }
  return status;
}
