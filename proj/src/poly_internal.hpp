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

#ifndef LUCASPOLY_SRC_POLY_INTERNAL_HPP
#define LUCASPOLY_SRC_POLY_INTERNAL_HPP

#include <algorithm>
#include <cstddef>

#include "lucaspoly/poly.hpp"

namespace lucaspoly {

// Back door for kernel code that already produces canonical term vectors.
struct PolynomialAccess {
  static Polynomial adopt(std::vector<Term> sorted_terms) {
    return Polynomial(std::move(sorted_terms), Polynomial::CanonicalTag{});
  }
  static const std::vector<Term>& raw(const Polynomial& f) { return f.terms_; }
};

inline bool term_order(const Term& a, const Term& b) noexcept {
  return canonical_before(a.s_exp, a.t_exp, b.s_exp, b.t_exp);
}

void check_exponent(Exponent e);

inline std::size_t bit_length(std::size_t n) {
  std::size_t bits = 0;
  while (n != 0) {
    ++bits;
    n >>= 1;
  }
  return bits;
}

// Chunk width, in limbs, for a Kronecker product whose operands have
// coefficients of wide_bits and narrow_bits bits, or 0 when chunking does not
// pay. Chunks are at least 256 bits and 8 times the narrow width.
inline std::size_t kronecker_chunk_limbs(std::size_t wide_bits, std::size_t narrow_bits, std::size_t narrow_terms) {
  const std::size_t chunk_bits = std::max<std::size_t>(256, 8 * (narrow_bits + bit_length(narrow_terms)));
  const std::size_t limbs = (chunk_bits + 63) / 64;
  return wide_bits > 2 * 64 * limbs ? limbs : 0;
}

}  // namespace lucaspoly

#endif  // LUCASPOLY_SRC_POLY_INTERNAL_HPP
