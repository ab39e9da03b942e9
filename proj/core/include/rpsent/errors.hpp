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

#ifndef RPSENT_ERRORS_HPP
#define RPSENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rpsent {

/// Argument outside the mathematical domain of an operation (k > n, x = 0, bad distribution).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured size cap (factorial cap, enumeration cap) was exceeded.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A rigorous decision could not be reached within the refinement budget.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed belief-structure document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rpsent

#endif  // RPSENT_ERRORS_HPP
