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

#ifndef LUCASPOLY_SRC_POLY_GRADED_HPP
#define LUCASPOLY_SRC_POLY_GRADED_HPP

#include <optional>
#include <vector>

#include "poly_internal.hpp"

namespace lucaspoly::detail {

/// Dense view of a polynomial whose terms all have the same weight
/// s_exp + 2*t_exp. coeffs[i] points at the coefficient of t^(b_lo+i), or is
/// null when that term is absent.
struct GradedView {
  Exponent weight = 0;
  Exponent b_lo = 0;
  Exponent b_hi = 0;
  std::vector<const Integer*> coeffs;

  std::size_t max_limbs() const;
  std::size_t nonzeros() const;
};

std::optional<GradedView> graded_view(const Polynomial& f);

Polynomial mul_graded(const GradedView& f, const GradedView& g);

/// Greedy leading-term division on dense graded operands. Same steps and
/// verdict as div_greedy.
std::optional<Polynomial> div_graded(const GradedView& f, const GradedView& g);

}  // namespace lucaspoly::detail

#endif  // LUCASPOLY_SRC_POLY_GRADED_HPP
