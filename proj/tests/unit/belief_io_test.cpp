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

#include <gtest/gtest.h>

#include "rpsent/entropies.hpp"
#include "rpsent/errors.hpp"

namespace rpsent::belief {
namespace {

const std::filesystem::path kData = RPSENT_TEST_DATA_DIR;

TEST(BeliefIo, LoadsPmfKeepingOrder) {
  const Document doc = load_document(kData / "max-RPS-N2.json");
  ASSERT_TRUE(std::holds_alternative<PMF>(doc));
  const PMF& pmf = std::get<PMF>(doc);
  EXPECT_EQ(pmf.masses.size(), 4u);
  EXPECT_EQ(pmf.masses.at(PermutationEvent({1, 0})).value, Rational(mpz_class(2), mpz_class(5)));
  EXPECT_TRUE(pmf.masses.at(PermutationEvent({1, 0})).exact);
}

TEST(BeliefIo, CanonicalizesBpaEvents) {
  const Document doc = parse_document(
      R"({"frame":["a","b"],"kind":"bpa","masses":[{"event":["b","a"],"mass":"1"}]})");
  const BPA& bpa = std::get<BPA>(doc);
  EXPECT_TRUE(bpa.masses.contains(SubsetEvent({0, 1})));
  EXPECT_TRUE(bpa.masses.begin()->second.exact);
}

TEST(BeliefIo, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_document("not json"), ParseError);
  EXPECT_THROW(parse_document(R"({"frame":["a"],"kind":"xyz","masses":[]})"), ParseError);
  EXPECT_THROW(parse_document(R"({"frame":["a"],"kind":"bpa"})"), ParseError);
  EXPECT_THROW(parse_document(R"({"frame":["a"],"kind":"bpa","masses":[{"event":["q"],"mass":"1"}]})"),
               ParseError);
  EXPECT_THROW(parse_document(R"({"frame":["a"],"kind":"bpa","masses":[{"event":["a"],"mass":1}]})"), ParseError);
  EXPECT_THROW(parse_document(R"({"frame":["a","a"],"kind":"bpa","masses":[]})"), ParseError);
  EXPECT_THROW(parse_document(
                   R"({"frame":["a","b"],"kind":"bpa","masses":[{"event":["a","b"],"mass":"1/2"},{"event":["b","a"],"mass":"1/2"}]})"),
               ParseError);
  EXPECT_THROW(load_document(kData / "does-not-exist.json"), ParseError);
}

TEST(BeliefIo, RoundTripsExactAndDecimalMasses) {
  const std::string text =
      R"({"frame":["a","b"],"kind":"pmf","masses":[{"event":["b"],"mass":"0.25"},{"event":["b","a"],"mass":"3/4"}]})";
  const PMF pmf = std::get<PMF>(parse_document(text));
  const std::string once = to_json(pmf);
  const PMF again = std::get<PMF>(parse_document(once));
  EXPECT_EQ(again, pmf);
  EXPECT_EQ(to_json(again), once);
  EXPECT_NE(once.find("\"0.25\""), std::string::npos);
  EXPECT_NE(once.find("\"3/4\""), std::string::npos);
}

TEST(BeliefIo, IntegerValuedDecimalKeepsDecimalOrigin) {
  EXPECT_EQ(format_mass({Rational(1), false}), "1.0");
  EXPECT_EQ(format_mass({Rational(1), true}), "1");
}

TEST(BeliefIo, MaximizerSerializationRoundTrips) {
  for (unsigned n = 1; n <= 4; ++n) {
    const PMF pmf = entropy::max_rps_pmf(n);
    EXPECT_EQ(std::get<PMF>(parse_document(to_json(pmf))), pmf);
    const BPA bpa = entropy::max_deng_bpa(n);
    EXPECT_EQ(std::get<BPA>(parse_document(to_json(bpa))), bpa);
  }
}

}  // namespace
}  // namespace rpsent::belief
