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

#include "lucaspoly/poly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <unordered_map>
#include <utility>

#include "poly_graded.hpp"
#include "poly_internal.hpp"

namespace lucaspoly {

void check_exponent(Exponent e) {
  if (e > kMaxExponent) {
    throw RangeError("exponent " + std::to_string(e) + " exceeds 2^32");
  }
}

namespace {

// Sorts and merges duplicate exponent pairs, dropping zero sums.
std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_order);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& term : terms) {
    if (!out.empty() && out.back().s_exp == term.s_exp && out.back().t_exp == term.t_exp) {
      out.back().coeff += term.coeff;
      continue;
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    out.push_back(std::move(term));
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

// Merge of two canonical term lists, g scaled by sign (+1 or -1).
Polynomial merge(const Polynomial& f, const Polynomial& g, int sign) {
  const auto& a = PolynomialAccess::raw(f);
  const auto& b = PolynomialAccess::raw(g);
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && term_order(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_order(b[j], a[i])) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Integer c = sign < 0 ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back(Term{a[i].s_exp, a[i].t_exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return PolynomialAccess::adopt(std::move(out));
}

struct PairHash {
  std::size_t operator()(const std::pair<Exponent, Exponent>& p) const noexcept {
    return std::hash<Exponent>{}(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
  }
};

double log2_of(double x) { return x > 2.0 ? std::log2(x) : 1.0; }

double limbs_of(const Polynomial& p) { return 1.0 + static_cast<double>(p.max_coeff_bits()) / 64.0; }

// Slots in a Kronecker image: t-range times weighted-degree range.
double kronecker_slots(const Polynomial& p, double e) {
  Exponent wmin = ~Exponent{0}, wmax = 0;
  for (const auto& term : p) {
    const Exponent w = term.s_exp + 2 * term.t_exp;
    wmin = std::min(wmin, w);
    wmax = std::max(wmax, w);
  }
  return e * static_cast<double>(wmax - wmin) + static_cast<double>(p.degree_t()) + 1.0;
}

// Rough limb-operation counts used to pick an algorithm. The constants were
// fitted against GMP's schoolbook and FFT ranges on central lucanomials.
constexpr double kKroneckerMulWeight = 24.0;
constexpr double kKroneckerChunkWeight = 16.0;
constexpr double kKroneckerDivWeight = 130.0;

double kronecker_cost(double slots_big, double slots_small, double slot_limbs, double weight) {
  const double small = std::max(1.0, slots_small * slot_limbs);
  return weight * slots_big * slot_limbs * log2_of(small);
}

}  // namespace

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  for (const auto& term : terms) {
    check_exponent(term.s_exp);
    check_exponent(term.t_exp);
  }
  return Polynomial(canonicalize(std::move(terms)), CanonicalTag{});
}

Polynomial Polynomial::constant(const Integer& c) { return monomial(0, 0, c); }

Polynomial Polynomial::monomial(Exponent s_exp, Exponent t_exp, const Integer& c) {
  check_exponent(s_exp);
  check_exponent(t_exp);
  if (c == 0) return {};
  return Polynomial({Term{s_exp, t_exp, c}}, CanonicalTag{});
}

Integer Polynomial::coeff(Exponent s_exp, Exponent t_exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{s_exp, t_exp, 0}, term_order);
  if (it != terms_.end() && it->s_exp == s_exp && it->t_exp == t_exp) return it->coeff;
  return 0;
}

Exponent Polynomial::degree_s() const noexcept { return terms_.empty() ? 0 : terms_.front().s_exp; }

Exponent Polynomial::degree_t() const noexcept {
  Exponent d = 0;
  for (const auto& term : terms_) d = std::max(d, term.t_exp);
  return d;
}

Exponent Polynomial::total_degree() const noexcept {
  Exponent d = 0;
  for (const auto& term : terms_) d = std::max(d, term.s_exp + term.t_exp);
  return d;
}

std::size_t Polynomial::max_coeff_bits() const noexcept {
  std::size_t bits = 0;
  for (const auto& term : terms_) bits = std::max(bits, mpz_sizeinbase(term.coeff.get_mpz_t(), 2));
  return bits;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) { return merge(f, g, +1); }
Polynomial operator-(const Polynomial& f, const Polynomial& g) { return merge(f, g, -1); }
Polynomial operator-(const Polynomial& f) { return scale(f, -1); }
Polynomial operator*(const Polynomial& f, const Polynomial& g) { return mul(f, g); }

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }

Polynomial mul(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  check_exponent(f.degree_s() + g.degree_s());
  check_exponent(f.degree_t() + g.degree_t());
  if (f.size() == 1 && f.leading().s_exp == 0 && f.leading().t_exp == 0) return scale(g, f.leading().coeff);
  if (g.size() == 1 && g.leading().s_exp == 0 && g.leading().t_exp == 0) return scale(f, g.leading().coeff);

  const double lf = limbs_of(f), lg = limbs_of(g);
  const double schoolbook = static_cast<double>(f.size()) * static_cast<double>(g.size()) * lf * lg;
  const double e = static_cast<double>(f.degree_t() + g.degree_t() + 1);
  const double sf = kronecker_slots(f, e), sg = kronecker_slots(g, e);
  double kronecker = kronecker_cost(std::max(sf, sg), std::min(sf, sg), lf + lg + 1.0, kKroneckerMulWeight);
  const bool f_wider = lf >= lg;
  if (const auto chunk = kronecker_chunk_limbs((f_wider ? f : g).max_coeff_bits(),
                                               (f_wider ? g : f).max_coeff_bits(), (f_wider ? g : f).size())) {
    // Chunked image: the wide operand spread over ceil(width / chunk) blocks
    // with slots of chunk plus narrow width.
    const double chunks = std::ceil(std::max(lf, lg) / static_cast<double>(chunk));
    const double slot = static_cast<double>(chunk) + std::min(lf, lg) + 1.0;
    const double big = f_wider ? sf : sg, narrow = f_wider ? sg : sf;
    const double chunked = kKroneckerChunkWeight * big * chunks * slot * log2_of(std::max(1.0, narrow * slot));
    kronecker = std::min(kronecker, chunked);
  }
  if (schoolbook > 4096.0 && kronecker < schoolbook) return detail::mul_kronecker(f, g);
  const auto fv = detail::graded_view(f);
  const auto gv = fv ? detail::graded_view(g) : std::nullopt;
  if (fv && gv) return detail::mul_graded(*fv, *gv);
  return detail::mul_schoolbook(f, g);
}

Polynomial scale(const Polynomial& f, const Integer& c) {
  if (c == 0) return {};
  std::vector<Term> out(f.begin(), f.end());
  for (auto& term : out) term.coeff *= c;
  return PolynomialAccess::adopt(std::move(out));
}

Polynomial shift(const Polynomial& f, Exponent s_exp, Exponent t_exp) {
  std::vector<Term> out(f.begin(), f.end());
  for (auto& term : out) {
    term.s_exp += s_exp;
    term.t_exp += t_exp;
    check_exponent(term.s_exp);
    check_exponent(term.t_exp);
  }
  return PolynomialAccess::adopt(std::move(out));
}

std::optional<Polynomial> try_exact_div(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DivisionByZero();
  if (f.is_zero()) return Polynomial{};
  if (g.degree_s() > f.degree_s() || g.degree_t() > f.degree_t()) return std::nullopt;

  const auto fv = detail::graded_view(f);
  const auto gv = fv ? detail::graded_view(g) : std::nullopt;
  if (fv && gv) {
    const double lf = limbs_of(f), lg = limbs_of(g);
    const double q_len = static_cast<double>(fv->coeffs.size());
    const double greedy = q_len * static_cast<double>(gv->nonzeros()) * lf * lg;
    const double kronecker = kronecker_cost(static_cast<double>(fv->coeffs.size()),
                                            static_cast<double>(gv->coeffs.size()), lf + lg + 1.0,
                                            kKroneckerDivWeight);
    if (greedy <= kronecker) return detail::div_graded(*fv, *gv);
  }
  Polynomial q;
  switch (detail::div_kronecker(f, g, q)) {
    case detail::KroneckerDivOutcome::kQuotient:
      return q;
    case detail::KroneckerDivOutcome::kNonDivisible:
      return std::nullopt;
    case detail::KroneckerDivOutcome::kInconclusive:
      break;
  }
  return detail::div_greedy(f, g);
}

Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
  auto q = try_exact_div(f, g);
  if (!q) throw NonDivisible("(" + format(f) + ") is not divisible by (" + format(g) + ")");
  return std::move(*q);
}

Integer evaluate(const Polynomial& f, const Integer& s_val, const Integer& t_val) {
  // Horner in s over the canonical (descending s) order. Within that order the
  // t exponent usually grows, so t powers are advanced incrementally.
  Integer acc = 0;
  Integer power, t_power = 1, step;
  Exponent current_s = f.is_zero() ? 0 : f.leading().s_exp;
  Exponent current_t = 0;
  for (const auto& term : f) {
    if (term.s_exp != current_s) {
      mpz_pow_ui(power.get_mpz_t(), s_val.get_mpz_t(), current_s - term.s_exp);
      acc *= power;
      current_s = term.s_exp;
    }
    if (term.t_exp >= current_t) {
      mpz_pow_ui(step.get_mpz_t(), t_val.get_mpz_t(), term.t_exp - current_t);
      t_power *= step;
    } else {
      mpz_pow_ui(t_power.get_mpz_t(), t_val.get_mpz_t(), term.t_exp);
    }
    current_t = term.t_exp;
    acc += term.coeff * t_power;
  }
  mpz_pow_ui(power.get_mpz_t(), s_val.get_mpz_t(), current_s);
  return acc * power;
}

PositivityVerdict check_positive(const Polynomial& f) {
  PositivityVerdict verdict;
  if (f.is_zero()) {
    verdict.zero_polynomial = true;
    return verdict;
  }
  for (const auto& term : f) {
    if (sgn(term.coeff) <= 0) {
      verdict.offending = term;
      return verdict;
    }
  }
  verdict.positive = true;
  return verdict;
}

namespace detail {

Polynomial mul_schoolbook(const Polynomial& f, const Polynomial& g) {
  std::unordered_map<std::pair<Exponent, Exponent>, Integer, PairHash> acc;
  acc.reserve(f.size() * g.size());
  for (const auto& a : f) {
    for (const auto& b : g) {
      Integer& slot = acc[{a.s_exp + b.s_exp, a.t_exp + b.t_exp}];
      mpz_addmul(slot.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [key, c] : acc) {
    if (c != 0) out.push_back(Term{key.first, key.second, std::move(c)});
  }
  std::sort(out.begin(), out.end(), term_order);
  return PolynomialAccess::adopt(std::move(out));
}

std::optional<Polynomial> div_greedy(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DivisionByZero();
  if (f.is_zero()) return Polynomial{};
  if (const auto fv = graded_view(f)) {
    if (const auto gv = graded_view(g)) return div_graded(*fv, *gv);
  }
  using Key = std::pair<Exponent, Exponent>;
  auto before = [](const Key& a, const Key& b) { return canonical_before(a.first, a.second, b.first, b.second); };
  std::map<Key, Integer, decltype(before)> rem(before);
  for (const auto& term : f) rem.emplace(Key{term.s_exp, term.t_exp}, term.coeff);

  const Term& lead = g.leading();
  std::vector<Term> quotient;
  Integer qc;
  while (!rem.empty()) {
    auto top = rem.begin();
    const auto [rs, rt] = top->first;
    if (rs < lead.s_exp || rt < lead.t_exp) return std::nullopt;
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lead.coeff.get_mpz_t());
    const Exponent qs = rs - lead.s_exp;
    const Exponent qt = rt - lead.t_exp;
    rem.erase(top);
    for (const auto& term : g.terms().subspan(1)) {
      auto [it, inserted] = rem.try_emplace(Key{term.s_exp + qs, term.t_exp + qt});
      mpz_submul(it->second.get_mpz_t(), qc.get_mpz_t(), term.coeff.get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back(Term{qs, qt, qc});
  }
  // Leading terms of the remainder strictly decrease, so the quotient is
  // already in canonical order.
  return PolynomialAccess::adopt(std::move(quotient));
}

}  // namespace detail

}  // namespace lucaspoly
