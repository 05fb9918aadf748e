/*
 * Copyright 2026 The lucaspoly Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lucaspoly/oracles.hpp"

#include <stdexcept>
#include <vector>

namespace lucaspoly::oracles {

namespace {

void enumerate(unsigned remaining, TilingWeight weight, Polynomial& acc) {
  if (remaining == 0) {
    acc = acc + Polynomial::monomial(weight.monominoes, weight.dominoes);
    return;
  }
  enumerate(remaining - 1, {weight.monominoes + 1, weight.dominoes}, acc);
  if (remaining >= 2) enumerate(remaining - 2, {weight.monominoes, weight.dominoes + 1}, acc);
}

}  // namespace

Polynomial strip_tiling_poly(unsigned length) {
  if (length > kMaxStripLength) {
    throw RangeError("strip length " + std::to_string(length) + " exceeds enumeration guard " +
                     std::to_string(kMaxStripLength));
  }
  Polynomial acc;
  enumerate(length, {}, acc);
  return acc;
}

Integer catalan_number(unsigned n) {
  // C_k = C_{k-1} * 2(2k-1) / (k+1), exact at every step.
  Integer c = 1;
  for (unsigned k = 1; k <= n; ++k) {
    c *= 2 * (2 * k - 1);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1);
  }
  return c;
}

Integer fibonacci(unsigned n) {
  Integer a = 0, b = 1;
  for (unsigned i = 0; i < n; ++i) {
    Integer next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

Integer binomial(unsigned m, std::int64_t k) {
  if (k < 0 || k > m) return 0;
  std::vector<Integer> row{1};
  for (unsigned r = 1; r <= m; ++r) {
    std::vector<Integer> next(r + 1);
    next.front() = 1;
    next.back() = 1;
    for (unsigned j = 1; j < r; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

Integer gaussian_binomial_at(unsigned m, std::int64_t k, const Integer& q) {
  if (k < 0 || k > m) return 0;
  std::vector<Integer> row{1};
  for (unsigned r = 1; r <= m; ++r) {
    std::vector<Integer> next(r + 1);
    next.front() = 1;
    next.back() = 1;
    Integer q_pow = q;  // q^j
    for (unsigned j = 1; j < r; ++j) {
      next[j] = row[j - 1] + q_pow * row[j];
      q_pow *= q;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

Integer fibonomial_catalan(unsigned n) {
  Integer num = 1, den = 1;
  for (unsigned i = 1; i <= n; ++i) {
    num *= fibonacci(n + i);
    den *= fibonacci(i);
  }
  den *= fibonacci(n + 1);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("fibonomial Catalan quotient is not integral at n=" + std::to_string(n));
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

Integer q_catalan_at(unsigned n, const Integer& q) {
  // prod_{i=1..n} (q^{n+i} - 1) / (q^i - 1), then / (1 + q + ... + q^n).
  Integer num = 1, den = 1, q_pow;
  for (unsigned i = 1; i <= n; ++i) {
    mpz_pow_ui(q_pow.get_mpz_t(), q.get_mpz_t(), n + i);
    num *= q_pow - 1;
    mpz_pow_ui(q_pow.get_mpz_t(), q.get_mpz_t(), i);
    den *= q_pow - 1;
  }
  mpz_pow_ui(q_pow.get_mpz_t(), q.get_mpz_t(), n + 1);
  den *= q_pow - 1;
  den /= q - 1;
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("q-Catalan quotient is not integral at n=" + std::to_string(n));
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace lucaspoly::oracles
