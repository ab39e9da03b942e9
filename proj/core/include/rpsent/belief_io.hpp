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

#ifndef RPSENT_BELIEF_IO_HPP
#define RPSENT_BELIEF_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "rpsent/belief_structures.hpp"

namespace rpsent::belief {

// Document layout:
//
//   { "frame": ["a", "b"],
//     "kind": "bpa" | "pmf",
//     "masses": [ { "event": ["a", "b"], "mass": "2/5" }, ... ] }
//
// BPA events are order-insensitive and canonicalized on load; PMF events keep
// their order. A mass is a decimal string or "p/q". Duplicate events (after
// canonicalization) are rejected. Parsing does not validate the mass
// invariants; call validate_bpa / validate_pmf for that.

using Document = std::variant<BPA, PMF>;

/// Throws ParseError.
Document parse_document(std::string_view json_text);
Document load_document(const std::filesystem::path& path);

/// Compact, deterministic serialization (two-space indent, events in canonical order).
std::string to_json(const BPA& bpa);
std::string to_json(const PMF& pmf);

/// Exact masses serialize as "p/q"; decimal-origin masses as their terminating
/// decimal expansion, so serialize -> parse is the identity.
std::string format_mass(const Mass& mass);

}  // namespace rpsent::belief

#endif  // RPSENT_BELIEF_IO_HPP
