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

#include "rpsent/exact_number.hpp"

#include <gtest/gtest.h>

#include <random>

#include "rpsent/errors.hpp"

namespace rpsent {
namespace {

TEST(ExactNatural, ArithmeticAndOrdering) {
  ExactNatural a(12);
  ExactNatural b = ExactNatural::from_string("340282366920938463463374607431768211456");  // 2^128
  EXPECT_EQ(b.bit_length(), 129u);
  EXPECT_EQ(b.decimal_digits(), 39u);
  EXPECT_LT(a, b);
  EXPECT_EQ((b - a + a), b);
  EXPECT_EQ((a * a).to_string(), "144");
  EXPECT_TRUE(ExactNatural(0).is_zero());
}

TEST(ExactNatural, RejectsNegatives) {
  EXPECT_THROW(ExactNatural(3) - ExactNatural(4), DomainError);
  EXPECT_THROW(ExactNatural::from_mpz(mpz_class(-1)), DomainError);
  EXPECT_THROW(ExactNatural::from_string("12a"), ParseError);
}

TEST(ExactNatural, CountsMultipliesOnlyInsideScope) {
  OperationCounter counter;
  ExactNatural x(7);
  x *= ExactNatural(3);
  {
    CountingScope scope(counter);
    x *= ExactNatural(3);
    x *= ExactNatural(3);
    x += ExactNatural(1);
  }
  x *= ExactNatural(3);
  EXPECT_EQ(counter.multiplies, 2u);
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(Rational::parse("2/4"), Rational(mpz_class(1), mpz_class(2)));
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
  EXPECT_EQ(Rational::parse("0.25"), Rational(mpz_class(1), mpz_class(4)));
  EXPECT_EQ(Rational::parse("-1.5e-3"), Rational(mpz_class(-3), mpz_class(2000)));
  EXPECT_EQ(Rational::parse("1E2"), Rational(100));
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), DomainError);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, FloorAndFormatting) {
  EXPECT_EQ(Rational(mpz_class(7), mpz_class(2)).floor(), 3);
  EXPECT_EQ(Rational(mpz_class(-7), mpz_class(2)).floor(), -4);
  EXPECT_EQ(Rational(mpz_class(4), mpz_class(10)).to_string(), "2/5");
  EXPECT_EQ(Rational(5).to_string(), "5");
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}

TEST(RationalInterval, ScalingSwapsForNegativeFactor) {
  const RationalInterval i(Rational(1), Rational(3));
  const RationalInterval s = i.scaled(Rational(-2));
  EXPECT_EQ(s.lo(), Rational(-6));
  EXPECT_EQ(s.hi(), Rational(-2));
  EXPECT_EQ(i.shifted(Rational(1)).midpoint(), Rational(3));
  EXPECT_TRUE(i.contains(Rational(2)));
  EXPECT_FALSE(i.contains(Rational(4)));
  EXPECT_THROW(RationalInterval(Rational(2), Rational(1)), DomainError);
}

// Property: for random a, b, (a * b) / b == a and a + b - b == a.
TEST(Rational, FieldIdentitiesOnRandomValues) {
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 300; ++i) {
    const Rational a(mpz_class(static_cast<long>(rng() % 2000001) - 1000000), mpz_class(static_cast<long>(rng() % 9999 + 1)));
    const Rational b(mpz_class(static_cast<long>(rng() % 1000 + 1)), mpz_class(static_cast<long>(rng() % 777 + 1)));
    EXPECT_EQ(a * b / b, a);
    EXPECT_EQ(a + b - b, a);
    EXPECT_EQ(Rational::parse(a.to_string()), a);
  }
}

}  // namespace
}  // namespace rpsent
