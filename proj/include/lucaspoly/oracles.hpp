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

#ifndef LUCASPOLY_ORACLES_HPP
#define LUCASPOLY_ORACLES_HPP

// Brute-force and integer-only references. Nothing here multiplies or
// divides polynomials; the only polynomial operations used are construction
// and addition.

#include <cstdint>

#include "lucaspoly/poly.hpp"

namespace lucaspoly::oracles {

inline constexpr unsigned kMaxStripLength = 30;

struct TilingWeight {
  unsigned monominoes = 0;
  unsigned dominoes = 0;
};

/// Sum of s^monominoes t^dominoes over all tilings of a 1 x length strip,
/// enumerated depth-first. Throws RangeError above kMaxStripLength.
Polynomial strip_tiling_poly(unsigned length);

/// C(2n, n) / (n + 1).
Integer catalan_number(unsigned n);

/// F(0) = 0, F(1) = 1.
Integer fibonacci(unsigned n);

/// Ordinary binomial coefficient from the integer Pascal triangle.
Integer binomial(unsigned m, std::int64_t k);

/// Gaussian binomial [m choose k]_q at an integer q >= 2 via the q-Pascal
/// rule [m choose k] = [m-1 choose k-1] + q^k [m-1 choose k].
Integer gaussian_binomial_at(unsigned m, std::int64_t k, const Integer& q);

/// Fibonomial Catalan number: prod_{i=1..n} F(n+i)/F(i), divided by F(n+1).
Integer fibonomial_catalan(unsigned n);

/// q-Catalan value [2n choose n]_q / [n+1]_q at integer q >= 2, from the
/// product formula for the Gaussian binomial.
Integer q_catalan_at(unsigned n, const Integer& q);

}  // namespace lucaspoly::oracles

#endif  // LUCASPOLY_ORACLES_HPP
