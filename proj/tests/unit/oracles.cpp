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

#include "oracles.hpp"

#include <mpfr.h>

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle_ref {

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Calls visit(length) once per arrangement of every subset of {0..n-1}.
template <class F>
void walk_arrangements(unsigned n, F&& visit) {
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> items;
    for (unsigned i = 0; i < n; ++i) {
      if (mask & (1u << i)) items.push_back(static_cast<int>(i));
    }
    do {
      visit(items.size());
    } while (std::next_permutation(items.begin(), items.end()));
  }
}

}  // namespace

mpz_class factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class sa(unsigned n) {
  mpz_class total = 0;
  for (unsigned u = 0; u <= n; ++u) total += factorial(n) / factorial(n - u);
  return total;
}

mpz_class s_envelope(unsigned n) {
  mpz_class total = 0;
  for (unsigned u = 1; u <= n; ++u) total += factorial(n) / factorial(n - u) * (sa(u) - 1);
  return total;
}

std::uint64_t brute_force_pes_count(unsigned n) {
  std::uint64_t count = 0;
  walk_arrangements(n, [&count](std::size_t) { ++count; });
  return count;
}

mpz_class brute_force_rps_weight_sum(unsigned n) {
  std::vector<mpz_class> weight(n + 1);
  for (unsigned len = 1; len <= n; ++len) weight[len] = sa(len) - 1;
  mpz_class total = 0;
  walk_arrangements(n, [&](std::size_t len) {
    if (len > 0) total += weight[len];
  });
  return total;
}

mpz_class floor_e_times_factorial(unsigned n) {
  const mpz_class f = factorial(n);
  const auto bits = static_cast<mpfr_prec_t>(mpz_sizeinbase(f.get_mpz_t(), 2) + 128);
  Mpfr e(bits);
  Mpfr prod(bits);
  mpfr_set_ui(e.get(), 1, MPFR_RNDN);
  mpfr_exp(e.get(), e.get(), MPFR_RNDN);
  mpfr_mul_z(prod.get(), e.get(), f.get_mpz_t(), MPFR_RNDN);
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), prod.get(), MPFR_RNDD);
  return out;
}

double log2(const mpz_class& x) {
  Mpfr v(256);
  mpfr_set_z(v.get(), x.get_mpz_t(), MPFR_RNDN);
  mpfr_log2(v.get(), v.get(), MPFR_RNDN);
  return mpfr_get_d(v.get(), MPFR_RNDN);
}

namespace {

void stirling_into(Mpfr& out, unsigned n) {
  Mpfr t(256);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  mpfr_mul_ui(out.get(), out.get(), 2 * n, MPFR_RNDN);
  mpfr_sqrt(out.get(), out.get(), MPFR_RNDN);
  mpfr_set_ui(t.get(), 1, MPFR_RNDN);
  mpfr_exp(t.get(), t.get(), MPFR_RNDN);
  mpfr_ui_div(t.get(), n, t.get(), MPFR_RNDN);
  mpfr_pow_ui(t.get(), t.get(), n, MPFR_RNDN);
  mpfr_mul(out.get(), out.get(), t.get(), MPFR_RNDN);
}

}  // namespace

std::pair<double, long> stirling_scientific(unsigned n) {
  Mpfr s(256);
  stirling_into(s, n);
  Mpfr l(256);
  mpfr_log10(l.get(), s.get(), MPFR_RNDN);
  mpfr_floor(l.get(), l.get());
  const long exponent = mpfr_get_si(l.get(), MPFR_RNDN);
  Mpfr scale(256);
  mpfr_ui_pow_ui(scale.get(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent), MPFR_RNDN);
  if (exponent >= 0) {
    mpfr_div(s.get(), s.get(), scale.get(), MPFR_RNDN);
  } else {
    mpfr_mul(s.get(), s.get(), scale.get(), MPFR_RNDN);
  }
  return {mpfr_get_d(s.get(), MPFR_RNDN), exponent};
}

double stirling_relative_error(unsigned n) {
  Mpfr s(512);
  stirling_into(s, n);
  Mpfr f(512);
  mpfr_set_z(f.get(), factorial(n).get_mpz_t(), MPFR_RNDN);
  mpfr_sub(s.get(), s.get(), f.get(), MPFR_RNDN);
  mpfr_div(s.get(), s.get(), f.get(), MPFR_RNDN);
  return mpfr_get_d(s.get(), MPFR_RNDN);
}

namespace {

// Partial sums of atan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1)); the true value
// lies between consecutive partial sums.
std::pair<mpq_class, mpq_class> atan_inverse(unsigned x, unsigned terms) {
  mpq_class sum = 0;
  mpq_class previous = 0;
  mpz_class power = x;
  const mpz_class x2 = mpz_class(x) * x;
  for (unsigned k = 0; k < terms; ++k) {
    previous = sum;
    mpq_class term(1, mpz_class(2 * k + 1) * power);
    term.canonicalize();
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    power *= x2;
  }
  if (sum < previous) return {sum, previous};
  return {previous, sum};
}

}  // namespace

std::pair<mpq_class, mpq_class> machin_pi() {
  const auto [a_lo, a_hi] = atan_inverse(5, 60);
  const auto [b_lo, b_hi] = atan_inverse(239, 30);
  return {16 * a_lo - 4 * b_hi, 16 * a_hi - 4 * b_lo};
}

std::string e_digits(int digits) {
  Mpfr e(static_cast<mpfr_prec_t>(digits * 4 + 64));
  mpfr_set_ui(e.get(), 1, MPFR_RNDN);
  mpfr_exp(e.get(), e.get(), MPFR_RNDN);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 16);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", digits - 1, e.get());
  return buf.data();
}

}  // namespace oracle_ref
