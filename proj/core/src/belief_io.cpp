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

#include "rpsent/belief_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rpsent/errors.hpp"

namespace rpsent::belief {

namespace {

using nlohmann::ordered_json;

std::vector<std::size_t> resolve_event(const Frame& frame, const ordered_json& labels) {
  if (!labels.is_array()) throw ParseError("\"event\" must be an array of labels");
  std::vector<std::size_t> out;
  for (const auto& label : labels) {
    if (!label.is_string()) throw ParseError("event labels must be strings");
    auto index = frame.index_of(label.get<std::string>());
    if (!index) throw ParseError("event label \"" + label.get<std::string>() + "\" is not in the frame");
    out.push_back(*index);
  }
  return out;
}

Mass parse_mass(const ordered_json& value) {
  if (!value.is_string()) throw ParseError("\"mass\" must be a string (decimal or \"p/q\")");
  const auto text = value.get<std::string>();
  // Integers and p/q are exact; anything with a decimal point or exponent is not.
  return Mass{Rational::parse(text), text.find_first_of(".eE") == std::string::npos};
}

template <class Event>
MassAssignment<Event> parse_assignment(Frame frame, const ordered_json& masses) {
  MassAssignment<Event> out{std::move(frame), {}};
  for (const auto& entry : masses) {
    if (!entry.is_object() || !entry.contains("event") || !entry.contains("mass")) {
      throw ParseError("each mass entry needs \"event\" and \"mass\"");
    }
    Event event(resolve_event(out.frame, entry.at("event")));
    const std::string name = describe(out.frame, event);
    if (!out.masses.emplace(std::move(event), parse_mass(entry.at("mass"))).second) {
      throw ParseError("duplicate event " + name);
    }
  }
  return out;
}

// Rationals whose denominator is 2^a 5^b have a terminating expansion.
std::optional<std::string> terminating_decimal(const Rational& value) {
  mpz_class den = value.denominator();
  unsigned twos = 0;
  unsigned fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2) != 0) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5) != 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;
  const unsigned places = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class scaled = value.numerator() * scale / value.denominator();
  const bool negative = sgn(scaled) < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (places == 0) {
    digits += ".0";  // keeps the decimal origin visible on re-parse
  } else {
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
  }
  return (negative ? "-" : "") + digits;
}

template <class Event, class EventLabels>
std::string serialize(const MassAssignment<Event>& assignment, const char* kind, EventLabels&& event_indices) {
  ordered_json doc;
  doc["frame"] = assignment.frame.labels();
  doc["kind"] = kind;
  ordered_json masses = ordered_json::array();
  for (const auto& [event, mass] : assignment.masses) {
    ordered_json labels = ordered_json::array();
    for (std::size_t index : event_indices(event)) labels.push_back(assignment.frame.label(index));
    masses.push_back({{"event", std::move(labels)}, {"mass", format_mass(mass)}});
  }
  doc["masses"] = std::move(masses);
  return doc.dump(2) + "\n";
}

}  // namespace

Document parse_document(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  for (const char* key : {"frame", "kind", "masses"}) {
    if (!doc.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  }
  const auto& frame_json = doc.at("frame");
  if (!frame_json.is_array()) throw ParseError("\"frame\" must be an array of labels");
  std::vector<std::string> labels;
  for (const auto& label : frame_json) {
    if (!label.is_string()) throw ParseError("frame labels must be strings");
    labels.push_back(label.get<std::string>());
  }
  std::optional<Frame> frame;
  try {
    frame.emplace(std::move(labels));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  if (!doc.at("masses").is_array()) throw ParseError("\"masses\" must be an array");
  const auto& kind = doc.at("kind");
  if (kind == "bpa") return parse_assignment<SubsetEvent>(std::move(*frame), doc.at("masses"));
  if (kind == "pmf") return parse_assignment<PermutationEvent>(std::move(*frame), doc.at("masses"));
  throw ParseError("\"kind\" must be \"bpa\" or \"pmf\"");
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string format_mass(const Mass& mass) {
  if (!mass.exact) {
    if (auto decimal = terminating_decimal(mass.value)) return *decimal;
  }
  return mass.value.to_string();
}

std::string to_json(const BPA& bpa) {
  return serialize(bpa, "bpa", [](const SubsetEvent& e) { return e.members(); });
}

std::string to_json(const PMF& pmf) {
  return serialize(pmf, "pmf", [](const PermutationEvent& e) { return e.sequence(); });
}

}  // namespace rpsent::belief
