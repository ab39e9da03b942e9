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

#ifndef RPSENT_EXACT_NUMBER_HPP
#define RPSENT_EXACT_NUMBER_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rpsent {

// Counts big-number multiplications on the current thread while a
// CountingScope is alive. Used by the complexity benchmark.
struct OperationCounter {
  std::uint64_t multiplies = 0;
};

class CountingScope {
 public:
  explicit CountingScope(OperationCounter& counter);
  ~CountingScope();
  CountingScope(const CountingScope&) = delete;
  CountingScope& operator=(const CountingScope&) = delete;

 private:
  OperationCounter* previous_;
};

namespace detail {
void count_multiply() noexcept;
}

/// Arbitrary-precision non-negative integer.
class ExactNatural {
 public:
  ExactNatural() = default;
  ExactNatural(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  /// Throws DomainError when `value` is negative.
  static ExactNatural from_mpz(mpz_class value);
  /// Parses a base-10 digit string.
  static ExactNatural from_string(std::string_view digits);

  [[nodiscard]] const mpz_class& mpz() const noexcept { return value_; }
  [[nodiscard]] bool is_zero() const noexcept { return sgn(value_) == 0; }
  [[nodiscard]] std::size_t bit_length() const noexcept;
  [[nodiscard]] std::size_t decimal_digits() const;
  [[nodiscard]] std::string to_string() const { return value_.get_str(); }
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  ExactNatural& operator+=(const ExactNatural& rhs);
  ExactNatural& operator*=(const ExactNatural& rhs);
  /// Throws DomainError if the result would be negative.
  ExactNatural& operator-=(const ExactNatural& rhs);

  friend ExactNatural operator+(ExactNatural lhs, const ExactNatural& rhs) { return lhs += rhs; }
  friend ExactNatural operator*(ExactNatural lhs, const ExactNatural& rhs) { return lhs *= rhs; }
  friend ExactNatural operator-(ExactNatural lhs, const ExactNatural& rhs) { return lhs -= rhs; }

  friend bool operator==(const ExactNatural& a, const ExactNatural& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const ExactNatural& a, const ExactNatural& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactNatural& x);

 private:
  explicit ExactNatural(mpz_class value) : value_(std::move(value)) {}
  mpz_class value_{0};
};

/// Exact rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(const ExactNatural& value);  // NOLINT(google-explicit-constructor)
  /// Throws DomainError on a zero denominator.
  Rational(mpz_class numerator, mpz_class denominator);
  explicit Rational(mpq_class value);

  /// Accepts "p/q", "p", or a decimal literal such as "0.25", "-1.5e-3".
  /// Decimals are converted exactly. Throws ParseError on anything else.
  static Rational parse(std::string_view text);

  [[nodiscard]] const mpq_class& mpq() const noexcept { return value_; }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] int sign() const noexcept { return sgn(value_); }
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  /// Largest integer not above the value.
  [[nodiscard]] mpz_class floor() const;
  /// "p/q", or "p" when the denominator is 1.
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

 private:
  mpq_class value_{0};
};

/// Closed interval [lo, hi] of exact rationals.
class RationalInterval {
 public:
  /// Throws DomainError if lo > hi.
  RationalInterval(Rational lo, Rational hi);
  explicit RationalInterval(const Rational& point) : lo_(point), hi_(point) {}

  [[nodiscard]] const Rational& lo() const noexcept { return lo_; }
  [[nodiscard]] const Rational& hi() const noexcept { return hi_; }
  [[nodiscard]] Rational width() const { return hi_ - lo_; }
  [[nodiscard]] Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
  [[nodiscard]] bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }

  /// Multiplication by an exact scalar; endpoints swap for negative scalars.
  [[nodiscard]] RationalInterval scaled(const Rational& factor) const;
  [[nodiscard]] RationalInterval shifted(const Rational& offset) const;

  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

}  // namespace rpsent

#endif  // RPSENT_EXACT_NUMBER_HPP
