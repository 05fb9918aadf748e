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

// Kronecker substitution for Z[s,t].
//
// A monomial s^a t^b is sent to the slot index  b + E*(a + 2b),  where E
// exceeds every t exponent involved. The map is additive and injective on
// exponents with b < E, and it lays out polynomials that are homogeneous in
// the grading deg(s)=1, deg(t)=2 (Lucas polynomials and everything built from
// them) in consecutive slots. Each slot holds one coefficient in balanced
// form, B = 64*L bits wide, and the whole image is one GMP integer, so
// polynomial products and exact quotients become single big-integer
// operations.

#include <algorithm>
#include <cstring>
#include <limits>
#include <optional>

#include "lucaspoly/poly.hpp"
#include "poly_internal.hpp"

namespace lucaspoly::detail {

namespace {

// Upper bound on the packed image size, in limbs (1 GiB).
constexpr std::size_t kMaxPackedLimbs = std::size_t{1} << 27;

struct KeyRange {
  Exponent lo = std::numeric_limits<Exponent>::max();
  Exponent hi = 0;
};

// Slot index of a monomial; false on 64-bit overflow.
bool slot_key(Exponent a, Exponent b, Exponent e, Exponent& key) {
  const Exponent w = a + 2 * b;
  if (e != 0 && w > (std::numeric_limits<Exponent>::max() - b) / e) return false;
  key = b + e * w;
  return true;
}

bool key_range(const Polynomial& f, Exponent e, KeyRange& range) {
  for (const auto& term : f) {
    Exponent key = 0;
    if (!slot_key(term.s_exp, term.t_exp, e, key)) return false;
    range.lo = std::min(range.lo, key);
    range.hi = std::max(range.hi, key);
  }
  return true;
}

bool fits(Exponent slots, std::size_t slot_limbs) {
  return slots <= kMaxPackedLimbs / slot_limbs;
}

// Image of f: sum of coeff * 2^(B*(key - base)).
Integer pack(const Polynomial& f, Exponent e, Exponent base, Exponent slots, std::size_t slot_limbs) {
  const std::size_t n = static_cast<std::size_t>(slots) * slot_limbs;
  Integer pos, neg;
  mp_limb_t* p = mpz_limbs_write(pos.get_mpz_t(), static_cast<mp_size_t>(n));
  std::fill(p, p + n, mp_limb_t{0});
  mp_limb_t* q = nullptr;
  for (const auto& term : f) {
    Exponent key = 0;
    slot_key(term.s_exp, term.t_exp, e, key);
    const std::size_t offset = static_cast<std::size_t>(key - base) * slot_limbs;
    const mpz_srcptr c = term.coeff.get_mpz_t();
    mp_limb_t* dst = p;
    if (sgn(term.coeff) < 0) {
      if (q == nullptr) {
        q = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(n));
        std::fill(q, q + n, mp_limb_t{0});
      }
      dst = q;
    }
    const std::size_t len = mpz_size(c);
    std::memcpy(dst + offset, mpz_limbs_read(c), len * sizeof(mp_limb_t));
  }
  mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(n));
  if (q == nullptr) return pos;
  mpz_limbs_finish(neg.get_mpz_t(), static_cast<mp_size_t>(n));
  return pos - neg;
}

// Walks the balanced B-bit digits of z from the least significant slot and
// calls fn(slot, digit) for each nonzero digit. Stops early if fn returns false.
template <typename Fn>
bool for_each_digit(const Integer& z, std::size_t slot_limbs, Fn&& fn) {
  const int sign = sgn(z);
  if (sign == 0) return true;
  const mpz_srcptr zp = z.get_mpz_t();
  const mp_limb_t* limbs = mpz_limbs_read(zp);
  const std::size_t n = mpz_size(zp);
  const std::size_t slots = (n + slot_limbs - 1) / slot_limbs;
  const std::size_t bits = slot_limbs * 64;

  Integer half, full, v;
  mpz_setbit(half.get_mpz_t(), bits - 1);
  mpz_setbit(full.get_mpz_t(), bits);

  bool carry = false;
  for (std::size_t i = 0; i < slots || carry; ++i) {
    const std::size_t lo = i * slot_limbs;
    const std::size_t len = lo >= n ? 0 : std::min(slot_limbs, n - lo);
    mp_limb_t* w = mpz_limbs_write(v.get_mpz_t(), static_cast<mp_size_t>(slot_limbs));
    if (len > 0) std::memcpy(w, limbs + lo, len * sizeof(mp_limb_t));
    std::fill(w + len, w + slot_limbs, mp_limb_t{0});
    mpz_limbs_finish(v.get_mpz_t(), static_cast<mp_size_t>(len));
    if (carry) v += 1;
    if (v >= half) {
      v -= full;
      carry = true;
    } else {
      carry = false;
    }
    if (v == 0) continue;
    if (sign < 0) v = -v;
    if (!fn(i, v)) return false;
  }
  return true;
}

// Inverse of pack. Reads balanced B-bit digits of z starting at slot `base`.
// Returns false if a nonzero digit lands on a key that is not a valid
// monomial or beyond max_key.
bool unpack(const Integer& z, Exponent e, Exponent base, Exponent max_key, std::size_t slot_limbs,
            std::vector<Term>& out) {
  return for_each_digit(z, slot_limbs, [&](std::size_t i, const Integer& v) {
    const Exponent key = base + i;
    const Exponent b = key % e;
    const Exponent w_deg = key / e;
    if (key > max_key || w_deg < 2 * b) return false;
    out.push_back(Term{w_deg - 2 * b, b, v});
    return true;
  });
}

Polynomial from_slot_order(std::vector<Term> terms) {
  // Slot order is ascending in (weighted degree, t); for homogeneous inputs
  // its reverse is already canonical.
  std::reverse(terms.begin(), terms.end());
  if (!std::is_sorted(terms.begin(), terms.end(), term_order)) {
    std::sort(terms.begin(), terms.end(), term_order);
  }
  return PolynomialAccess::adopt(std::move(terms));
}

// Product of `big` and `small` when the coefficients of `big` are much wider.
// Each coefficient of big is cut into C chunks of K = 64*chunk_limbs bits,
// giving big = sum_c big_c 2^(cK). All big_c are packed into one integer in
// consecutive blocks of `stride` slots, so a single product with the image
// of `small` yields every big_c * small, and slots only need to hold
// K + (bits of small) bits instead of the full coefficient width.
std::optional<Polynomial> mul_chunked(const Polynomial& big, const Polynomial& small, Exponent e,
                                      std::size_t chunk_limbs) {
  KeyRange rf, rg;
  if (!key_range(big, e, rf) || !key_range(small, e, rg) ||
      rf.hi > std::numeric_limits<Exponent>::max() - rg.hi) {
    return std::nullopt;
  }
  std::size_t big_limbs = 0;
  for (const auto& term : big) big_limbs = std::max(big_limbs, mpz_size(term.coeff.get_mpz_t()));
  const std::size_t chunks = (big_limbs + chunk_limbs - 1) / chunk_limbs;
  const std::size_t bound_bits =
      64 * chunk_limbs + small.max_coeff_bits() + bit_length(std::min(big.size(), small.size())) + 2;
  const std::size_t slot_limbs = (bound_bits + 63) / 64;
  const Exponent span_f = rf.hi - rf.lo + 1, span_g = rg.hi - rg.lo + 1;
  const Exponent stride = span_f + span_g - 1;
  if (chunks > kMaxPackedLimbs || !fits(stride * chunks, slot_limbs)) return std::nullopt;

  // Image of the chunked operand, split by sign as in pack().
  const std::size_t n = static_cast<std::size_t>(stride) * chunks * slot_limbs;
  Integer pos, neg;
  mp_limb_t* p = mpz_limbs_write(pos.get_mpz_t(), static_cast<mp_size_t>(n));
  std::fill(p, p + n, mp_limb_t{0});
  mp_limb_t* q = nullptr;
  for (const auto& term : big) {
    Exponent key = 0;
    slot_key(term.s_exp, term.t_exp, e, key);
    const mpz_srcptr c = term.coeff.get_mpz_t();
    mp_limb_t* dst = p;
    if (sgn(term.coeff) < 0) {
      if (q == nullptr) {
        q = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(n));
        std::fill(q, q + n, mp_limb_t{0});
      }
      dst = q;
    }
    const mp_limb_t* src = mpz_limbs_read(c);
    const std::size_t len = mpz_size(c);
    for (std::size_t j = 0; j * chunk_limbs < len; ++j) {
      const std::size_t slot = j * static_cast<std::size_t>(stride) + static_cast<std::size_t>(key - rf.lo);
      std::memcpy(dst + slot * slot_limbs, src + j * chunk_limbs,
                  std::min(chunk_limbs, len - j * chunk_limbs) * sizeof(mp_limb_t));
    }
  }
  mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(n));
  if (q != nullptr) {
    mpz_limbs_finish(neg.get_mpz_t(), static_cast<mp_size_t>(n));
    pos -= neg;
  }
  neg = Integer{};
  const Integer z = pos * pack(small, e, rg.lo, span_g, slot_limbs);
  pos = Integer{};

  // Recombine sum_c digit(c, off) 2^(cK) per output slot in two's complement.
  const std::size_t width = chunks * chunk_limbs + slot_limbs + 1;
  std::vector<mp_limb_t> acc(static_cast<std::size_t>(stride) * width, 0);
  const bool ok = for_each_digit(z, slot_limbs, [&](std::size_t i, const Integer& v) {
    const std::size_t c = i / static_cast<std::size_t>(stride);
    const std::size_t off = i % static_cast<std::size_t>(stride);
    if (c >= chunks) return false;
    mp_limb_t* cell = acc.data() + off * width;
    const std::size_t at = c * chunk_limbs;
    const mp_size_t len = static_cast<mp_size_t>(mpz_size(v.get_mpz_t()));
    const mp_limb_t* src = mpz_limbs_read(v.get_mpz_t());
    if (sgn(v) > 0) {
      mp_limb_t carry = mpn_add_n(cell + at, cell + at, src, len);
      for (std::size_t j = at + static_cast<std::size_t>(len); carry != 0 && j < width; ++j) carry = ++cell[j] == 0;
    } else {
      mp_limb_t borrow = mpn_sub_n(cell + at, cell + at, src, len);
      for (std::size_t j = at + static_cast<std::size_t>(len); borrow != 0 && j < width; ++j) borrow = cell[j]-- == 0;
    }
    return true;
  });
  if (!ok) return std::nullopt;

  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>(stride));
  std::vector<mp_limb_t> magnitude(width);
  for (std::size_t off = 0; off < static_cast<std::size_t>(stride); ++off) {
    const mp_limb_t* cell = acc.data() + off * width;
    const bool negative = (cell[width - 1] >> 63) != 0;
    if (negative) {
      mpn_neg(magnitude.data(), cell, static_cast<mp_size_t>(width));
    } else {
      std::copy(cell, cell + width, magnitude.begin());
    }
    std::size_t len = width;
    while (len > 0 && magnitude[len - 1] == 0) --len;
    if (len == 0) continue;
    Integer coeff;
    mp_limb_t* w = mpz_limbs_write(coeff.get_mpz_t(), static_cast<mp_size_t>(len));
    std::copy(magnitude.begin(), magnitude.begin() + static_cast<std::ptrdiff_t>(len), w);
    mpz_limbs_finish(coeff.get_mpz_t(), negative ? -static_cast<mp_size_t>(len) : static_cast<mp_size_t>(len));
    const Exponent key = rf.lo + rg.lo + off;
    const Exponent b = key % e;
    const Exponent w_deg = key / e;
    if (w_deg < 2 * b) return std::nullopt;
    terms.push_back(Term{w_deg - 2 * b, b, std::move(coeff)});
  }
  return from_slot_order(std::move(terms));
}

}  // namespace

Polynomial mul_kronecker(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const Exponent e = f.degree_t() + g.degree_t() + 1;
  const bool f_wider = f.max_coeff_bits() >= g.max_coeff_bits();
  const Polynomial& big = f_wider ? f : g;
  const Polynomial& small = f_wider ? g : f;
  const std::size_t chunk_limbs = kronecker_chunk_limbs(big.max_coeff_bits(), small.max_coeff_bits(), small.size());
  if (chunk_limbs != 0) {
    if (auto product = mul_chunked(big, small, e, chunk_limbs)) return std::move(*product);
  }
  KeyRange rf, rg;
  const std::size_t bound_bits =
      f.max_coeff_bits() + g.max_coeff_bits() + bit_length(std::min(f.size(), g.size())) + 2;
  const std::size_t slot_limbs = (bound_bits + 63) / 64;
  if (!key_range(f, e, rf) || !key_range(g, e, rg) || rf.hi > std::numeric_limits<Exponent>::max() - rg.hi ||
      !fits(rf.hi - rf.lo + 1, slot_limbs) || !fits(rg.hi - rg.lo + 1, slot_limbs)) {
    return mul_schoolbook(f, g);
  }
  const Integer x = pack(f, e, rf.lo, rf.hi - rf.lo + 1, slot_limbs);
  const Integer y = pack(g, e, rg.lo, rg.hi - rg.lo + 1, slot_limbs);
  const Integer z = x * y;
  std::vector<Term> terms;
  terms.reserve(f.size() + g.size());
  unpack(z, e, rf.lo + rg.lo, rf.hi + rg.hi, slot_limbs, terms);
  return from_slot_order(std::move(terms));
}

KroneckerDivOutcome div_kronecker(const Polynomial& f, const Polynomial& g, Polynomial& quotient) {
  if (g.is_zero()) throw DivisionByZero();
  if (f.is_zero()) {
    quotient = Polynomial{};
    return KroneckerDivOutcome::kQuotient;
  }
  // Degree bookkeeping: every bound below holds for any exact quotient.
  if (g.degree_t() > f.degree_t() || g.degree_s() > f.degree_s()) return KroneckerDivOutcome::kNonDivisible;
  const Exponent e = f.degree_t() + 1;
  KeyRange rf, rg;
  if (!key_range(f, e, rf) || !key_range(g, e, rg)) return KroneckerDivOutcome::kInconclusive;
  if (rf.lo < rg.lo || rf.hi < rg.hi || rf.hi - rg.hi < rf.lo - rg.lo) return KroneckerDivOutcome::kNonDivisible;
  const Exponent q_lo = rf.lo - rg.lo;
  const Exponent q_hi = rf.hi - rg.hi;

  const std::size_t f_bits = f.max_coeff_bits();
  const std::size_t g_bits = g.max_coeff_bits();
  const std::size_t slot_limbs = (f_bits + g_bits + bit_length(g.size()) + 4 + 63) / 64;
  const std::size_t slot_bits = slot_limbs * 64;
  if (!fits(rf.hi - rf.lo + 1, slot_limbs)) return KroneckerDivOutcome::kInconclusive;

  const Integer x = pack(f, e, rf.lo, rf.hi - rf.lo + 1, slot_limbs);
  const Integer y = pack(g, e, rg.lo, rg.hi - rg.lo + 1, slot_limbs);
  // g | f in Z[s,t] implies y | x, whatever the slot width.
  if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t())) return KroneckerDivOutcome::kNonDivisible;
  Integer z;
  mpz_divexact(z.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());

  std::vector<Term> terms;
  terms.reserve(f.size());
  if (!unpack(z, e, q_lo, q_hi, slot_limbs, terms)) return KroneckerDivOutcome::kInconclusive;
  Polynomial q = from_slot_order(std::move(terms));

  // Certificate: x = y*z as integers. If every coefficient of g*q and of f
  // fits in a balanced slot, the base-2^B digits agree and g*q == f exactly.
  if (q.is_zero() || q.degree_t() + g.degree_t() >= e) return KroneckerDivOutcome::kInconclusive;
  const std::size_t product_bits = g_bits + q.max_coeff_bits() + bit_length(std::min(g.size(), q.size()));
  if (product_bits + 1 >= slot_bits || f_bits + 1 >= slot_bits) return KroneckerDivOutcome::kInconclusive;
  quotient = std::move(q);
  return KroneckerDivOutcome::kQuotient;
}

}  // namespace lucaspoly::detail
