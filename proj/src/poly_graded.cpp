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

// Dense kernels for polynomials that are homogeneous in the grading
// deg(s) = 1, deg(t) = 2. Such a polynomial of weight w is determined by the
// coefficients of s^(w-2b) t^b, b = 0..w/2, and canonical order is ascending b.

#include "poly_graded.hpp"

namespace lucaspoly::detail {

std::optional<GradedView> graded_view(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  const auto terms = f.terms();
  GradedView view;
  view.weight = terms.front().s_exp + 2 * terms.front().t_exp;
  for (const auto& term : terms) {
    if (term.s_exp + 2 * term.t_exp != view.weight) return std::nullopt;
  }
  // Homogeneous, so descending s means ascending t.
  view.b_lo = terms.front().t_exp;
  view.b_hi = terms.back().t_exp;
  view.coeffs.assign(view.b_hi - view.b_lo + 1, nullptr);
  for (const auto& term : terms) view.coeffs[term.t_exp - view.b_lo] = &term.coeff;
  return view;
}

std::size_t GradedView::max_limbs() const {
  std::size_t limbs = 0;
  for (const Integer* c : coeffs) {
    if (c != nullptr) limbs = std::max(limbs, mpz_size(c->get_mpz_t()));
  }
  return limbs;
}

std::size_t GradedView::nonzeros() const {
  std::size_t n = 0;
  for (const Integer* c : coeffs) n += c != nullptr;
  return n;
}

namespace {

Polynomial assemble(Exponent weight, Exponent b_base, std::vector<Integer>& dense) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] == 0) continue;
    const Exponent b = b_base + i;
    out.push_back(Term{weight - 2 * b, b, std::move(dense[i])});
  }
  return PolynomialAccess::adopt(std::move(out));
}

}  // namespace

Polynomial mul_graded(const GradedView& f, const GradedView& g) {
  std::vector<Integer> acc(f.coeffs.size() + g.coeffs.size() - 1);
  for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
    const Integer* gc = g.coeffs[j];
    if (gc == nullptr) continue;
    const mpz_srcptr gz = gc->get_mpz_t();
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
      if (f.coeffs[i] == nullptr) continue;
      mpz_addmul(acc[i + j].get_mpz_t(), f.coeffs[i]->get_mpz_t(), gz);
    }
  }
  return assemble(f.weight + g.weight, f.b_lo + g.b_lo, acc);
}

std::optional<Polynomial> div_graded(const GradedView& f, const GradedView& g) {
  if (f.weight < g.weight) return std::nullopt;
  const Exponent wq = f.weight - g.weight;
  // Quotient terms s^(wq-2b) t^b need 0 <= b <= wq/2; the leading remainder
  // term sits at b + g.b_lo.
  if (f.b_lo < g.b_lo) return std::nullopt;
  const Exponent q_hi = wq / 2;

  // Steps can touch slots past the end of f; those must cancel too.
  const std::size_t reach = q_hi + g.b_hi >= f.b_lo ? q_hi + g.b_hi - f.b_lo + 1 : 0;
  std::vector<Integer> rem(std::max(f.coeffs.size(), reach));
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] != nullptr) rem[i] = *f.coeffs[i];
  }
  // rem[i] holds the coefficient at b = f.b_lo + i.
  const Integer& lead = *g.coeffs.front();
  const bool unit_lead = lead == 1;
  std::vector<Term> quotient;
  Integer qc;
  const Exponent bq_first = f.b_lo - g.b_lo;
  for (Exponent bq = bq_first; bq <= q_hi; ++bq) {
    const Exponent r_index = bq + g.b_lo - f.b_lo;
    if (r_index >= rem.size()) break;
    Integer& top = rem[r_index];
    if (top == 0) continue;
    if (unit_lead) {
      qc = top;
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
      mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    }
    top = 0;
    for (std::size_t j = 1; j < g.coeffs.size(); ++j) {
      if (g.coeffs[j] == nullptr) continue;
      mpz_submul(rem[r_index + j].get_mpz_t(), qc.get_mpz_t(), g.coeffs[j]->get_mpz_t());
    }
    quotient.push_back(Term{wq - 2 * bq, bq, qc});
  }
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return PolynomialAccess::adopt(std::move(quotient));
}

}  // namespace lucaspoly::detail
