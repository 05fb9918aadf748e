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

#ifndef LUCASPOLY_POLY_HPP
#define LUCASPOLY_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lucaspoly {

using Integer = mpz_class;
using Exponent = std::uint64_t;

/// Largest exponent a term may carry.
inline constexpr Exponent kMaxExponent = Exponent{1} << 32;

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by the zero polynomial") {}
};

class NonDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// One monomial coeff * s^s_exp * t^t_exp. Stored coefficients are never zero.
struct Term {
  Exponent s_exp = 0;
  Exponent t_exp = 0;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Canonical order: descending s exponent, then descending t exponent.
/// This is pure lex with s > t, and the order every Polynomial iterates in.
constexpr bool canonical_before(Exponent s1, Exponent t1, Exponent s2, Exponent t2) noexcept {
  return s1 != s2 ? s1 > s2 : t1 > t2;
}

/// Immutable sparse element of Z[s,t].
///
/// Terms are kept in a vector sorted in canonical order with unique exponent
/// pairs and nonzero coefficients; the zero polynomial has no terms. All
/// arithmetic returns fresh values, so instances can be shared freely between
/// threads.
class Polynomial {
 public:
  Polynomial() = default;

  /// Builds a polynomial from arbitrary terms: merges duplicates, drops
  /// zeros and sorts. Throws RangeError for exponents above kMaxExponent.
  static Polynomial from_terms(std::vector<Term> terms);

  static Polynomial constant(const Integer& c);
  static Polynomial monomial(Exponent s_exp, Exponent t_exp, const Integer& c = 1);
  static Polynomial s() { return monomial(1, 0); }
  static Polynomial t() { return monomial(0, 1); }
  static Polynomial one() { return constant(1); }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  /// Leading term under the canonical order. Precondition: nonzero.
  const Term& leading() const { return terms_.front(); }

  /// Coefficient of s^s_exp t^t_exp (zero when absent).
  Integer coeff(Exponent s_exp, Exponent t_exp) const;

  Exponent degree_s() const noexcept;
  Exponent degree_t() const noexcept;
  Exponent total_degree() const noexcept;
  /// Largest bit length of any coefficient magnitude (0 for the zero polynomial).
  std::size_t max_coeff_bits() const noexcept;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

 private:
  struct CanonicalTag {};
  Polynomial(std::vector<Term> sorted_terms, CanonicalTag) : terms_(std::move(sorted_terms)) {}

  friend struct PolynomialAccess;

  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);

/// Multiplies every coefficient by c.
Polynomial scale(const Polynomial& f, const Integer& c);

/// Multiplies by the monomial s^s_exp t^t_exp.
Polynomial shift(const Polynomial& f, Exponent s_exp, Exponent t_exp);

/// Exact quotient f / g in Z[s,t], or nullopt if g does not divide f.
/// Throws DivisionByZero when g is zero.
std::optional<Polynomial> try_exact_div(const Polynomial& f, const Polynomial& g);

/// Like try_exact_div but throws NonDivisible when no quotient exists.
Polynomial exact_div(const Polynomial& f, const Polynomial& g);

/// Exact integer value of f at (s, t).
Integer evaluate(const Polynomial& f, const Integer& s_val, const Integer& t_val);

struct PositivityVerdict {
  bool positive = false;
  bool zero_polynomial = false;
  /// First term in canonical order with a coefficient <= 0, when one exists.
  std::optional<Term> offending;

  explicit operator bool() const noexcept { return positive; }
};

/// Positive iff f is nonzero and every coefficient is strictly positive.
PositivityVerdict check_positive(const Polynomial& f);

/// Canonical text, e.g. "s^4 + 3*s^2*t + 2*t^2".
std::string format(const Polynomial& f);

/// Parses the text grammar; throws ParseError carrying the byte offset.
Polynomial parse(std::string_view text);

/// JSON form: [[s_exp, t_exp, "coeff"], ...] in canonical order.
std::string to_json(const Polynomial& f);
Polynomial from_json(std::string_view json);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

namespace detail {

// Exposed so tests can cross-check the individual algorithms.

Polynomial mul_schoolbook(const Polynomial& f, const Polynomial& g);
Polynomial mul_kronecker(const Polynomial& f, const Polynomial& g);

/// Greedy leading-term cancellation under lex order with s > t.
std::optional<Polynomial> div_greedy(const Polynomial& f, const Polynomial& g);

enum class KroneckerDivOutcome { kQuotient, kNonDivisible, kInconclusive };

/// Exact division through big-integer division of Kronecker images. The
/// quotient is only reported when a coefficient bound certifies g*q == f;
/// kInconclusive means the caller must fall back to div_greedy.
KroneckerDivOutcome div_kronecker(const Polynomial& f, const Polynomial& g, Polynomial& quotient);

}  // namespace detail

}  // namespace lucaspoly

#endif  // LUCASPOLY_POLY_HPP
