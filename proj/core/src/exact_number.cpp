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

#include <cctype>
#include <ostream>
#include <string>

#include "rpsent/errors.hpp"

namespace rpsent {

namespace {
thread_local OperationCounter* active_counter = nullptr;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}
}  // namespace

CountingScope::CountingScope(OperationCounter& counter) : previous_(active_counter) {
  active_counter = &counter;
}

CountingScope::~CountingScope() { active_counter = previous_; }

void detail::count_multiply() noexcept {
  if (active_counter != nullptr) ++active_counter->multiplies;
}

// ---------------------------------------------------------------------------
// ExactNatural

ExactNatural::ExactNatural(std::uint64_t value) {
  mpz_import(value_.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
}

ExactNatural ExactNatural::from_mpz(mpz_class value) {
  if (sgn(value) < 0) throw DomainError("ExactNatural: negative value " + value.get_str());
  return ExactNatural(std::move(value));
}

ExactNatural ExactNatural::from_string(std::string_view digits) {
  if (!all_digits(digits)) throw ParseError("ExactNatural: not a digit string: " + std::string(digits));
  return ExactNatural(mpz_class(std::string(digits), 10));
}

std::size_t ExactNatural::bit_length() const noexcept {
  if (is_zero()) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

std::size_t ExactNatural::decimal_digits() const { return value_.get_str().size(); }

ExactNatural& ExactNatural::operator+=(const ExactNatural& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactNatural& ExactNatural::operator*=(const ExactNatural& rhs) {
  detail::count_multiply();
  value_ *= rhs.value_;
  return *this;
}

ExactNatural& ExactNatural::operator-=(const ExactNatural& rhs) {
  if (cmp(value_, rhs.value_) < 0) throw DomainError("ExactNatural: subtraction underflow");
  value_ -= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactNatural& x) { return os << x.value_.get_str(); }

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(const ExactNatural& value) : value_(value.mpz()) {}

Rational::Rational(mpz_class numerator, mpz_class denominator) {
  if (sgn(denominator) == 0) throw DomainError("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> ParseError { return ParseError("not a rational or decimal: \"" + original + "\""); };
  if (text.empty()) throw fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) throw fail();
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (sgn(d) == 0) throw fail();
    if (negative) n = -n;
    return Rational(n, d);
  }

  // Decimal: [sign] digits [. digits] [e|E [sign] digits]
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    text = text.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) throw fail();
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail();
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) throw fail();
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(text)) throw fail();
    digits = std::string(text);
  }
  mpz_class n(digits, 10);
  if (negative) n = -n;
  if (exponent >= 0) return Rational(n * pow10(static_cast<unsigned long>(exponent)), mpz_class(1));
  return Rational(n, pow10(static_cast<unsigned long>(-exponent)));
}

mpz_class Rational::floor() const {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  detail::count_multiply();
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) throw DomainError("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------
// RationalInterval

RationalInterval::RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw DomainError("RationalInterval: lo > hi");
}

RationalInterval RationalInterval::scaled(const Rational& factor) const {
  Rational a = lo_ * factor;
  Rational b = hi_ * factor;
  if (factor.sign() < 0) return {std::move(b), std::move(a)};
  return {std::move(a), std::move(b)};
}

RationalInterval RationalInterval::shifted(const Rational& offset) const { return {lo_ + offset, hi_ + offset}; }

}  // namespace rpsent
