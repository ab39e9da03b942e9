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

#ifndef RPSENT_COMMANDS_HPP
#define RPSENT_COMMANDS_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "rpsent/entropies.hpp"
#include "rpsent/tables.hpp"
#include "rpsent/validation_suite.hpp"

// Command bodies behind the rpsent executable. Each returns the process exit
// status and never throws.

namespace rpsent::report {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct Io {
  std::ostream& out;
  std::ostream& err;
};

/// BPA -> Deng, PMF -> RPS unless `kind` overrides. A PMF can be read as a BPA
/// (orderings collapsed); Shannon needs singleton-only mass.
int cmd_entropy(const std::filesystem::path& input, std::optional<entropy::Kind> kind, Io io);

/// Explicit maximizer up to the enumeration cap; per-length masses above it.
/// Writes to `output` when given, else to io.out.
int cmd_maxent(entropy::Kind kind, unsigned n, const std::optional<std::filesystem::path>& output, Io io);

/// Maximizer above the enumeration cap: one entry per event length.
std::string per_length_maxent_json(entropy::Kind kind, unsigned n);

int cmd_tables(int which, const Range& range, Io io);

int cmd_validate(const ValidationOptions& options, Io io);

int cmd_bench(const Range& range, Io io);

}  // namespace rpsent::report

#endif  // RPSENT_COMMANDS_HPP
