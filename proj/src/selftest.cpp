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

#include "lucaspoly/selftest.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lucaspoly {

namespace {

// Keeps the first draw of each monomial so coefficients stay within the
// drawn range instead of summing.
Polynomial distinct_monomials(std::vector<Term> terms) {
  std::vector<Term> kept;
  for (auto& term : terms) {
    const bool seen = std::any_of(kept.begin(), kept.end(), [&](const Term& k) {
      return k.s_exp == term.s_exp && k.t_exp == term.t_exp;
    });
    if (!seen) kept.push_back(std::move(term));
  }
  return Polynomial::from_terms(std::move(kept));
}

}  // namespace

Integer PolyGenerator::integer(unsigned max_bits) {
  const unsigned bits = static_cast<unsigned>(below(max_bits + 1));
  if (bits == 0) return 0;
  std::vector<std::uint64_t> limbs((bits + 63) / 64);
  for (auto& limb : limbs) limb = next();
  if (bits % 64 != 0) limbs.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
  Integer out;
  mpz_import(out.get_mpz_t(), limbs.size(), -1, sizeof(std::uint64_t), 0, 0, limbs.data());
  if (next() & 1) out = -out;
  return out;
}

Integer PolyGenerator::bounded(std::uint64_t bound) {
  const std::uint64_t magnitude = below(bound + 1);
  Integer out = static_cast<unsigned long>(magnitude);
  return (next() & 1) ? Integer(-out) : out;
}

Polynomial PolyGenerator::sparse(unsigned max_terms, Exponent max_exp, unsigned max_bits) {
  const auto count = below(max_terms + 1);
  std::vector<Term> terms;
  for (std::uint64_t i = 0; i < count; ++i) terms.push_back({below(max_exp), below(max_exp), integer(max_bits)});
  return distinct_monomials(std::move(terms));
}

Polynomial PolyGenerator::sparse_bounded(unsigned max_terms, Exponent max_exp, std::uint64_t bound) {
  const auto count = below(max_terms + 1);
  std::vector<Term> terms;
  for (std::uint64_t i = 0; i < count; ++i) terms.push_back({below(max_exp), below(max_exp), bounded(bound)});
  return distinct_monomials(std::move(terms));
}

Polynomial PolyGenerator::graded(Exponent max_weight, unsigned max_bits) {
  const Exponent weight = below(max_weight + 1);
  std::vector<Term> terms;
  for (Exponent b = 0; 2 * b <= weight; ++b) {
    if (below(4) != 0) terms.push_back({weight - 2 * b, b, integer(max_bits)});
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial PolyGenerator::nonzero(unsigned max_terms, Exponent max_exp, unsigned max_bits) {
  for (;;) {
    Polynomial p = (next() & 1) ? sparse(max_terms, max_exp, max_bits) : graded(2 * max_exp, max_bits);
    if (!p.is_zero()) return p;
  }
}

bool SelftestReport::ok() const noexcept {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

namespace {

using CaseFn = std::function<std::optional<std::string>(PolyGenerator&, unsigned)>;

SuiteResult run_suite(const std::string& name, std::uint64_t seed, unsigned cases, const CaseFn& fn) {
  SuiteResult result;
  result.name = name;
  PolyGenerator gen(seed);
  for (unsigned i = 0; i < cases; ++i) {
    ++result.cases;
    std::optional<std::string> failure;
    try {
      failure = fn(gen, i);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      ++result.failures;
      if (!result.first_failure) result.first_failure = "case " + std::to_string(i) + ": " + *failure;
    }
  }
  return result;
}

std::string show(const Polynomial& p) {
  std::string text = format(p);
  return text.size() > 400 ? text.substr(0, 400) + "..." : text;
}

// Most cases use exponents <= 12 and coefficients in [-10^6, 10^6]. Every
// 4th case uses wide coefficients and every 16th is large enough to reach the
// Kronecker and dense paths.
struct Size {
  unsigned terms;
  Exponent exp;
  unsigned bits;  // 0: coefficients bounded by 10^6
};

Size size_for(unsigned i) {
  if (i % 16 == 15) return {40, 24, 700};
  if (i % 4 == 3) return {8, 13, 130};
  return {8, 13, 0};
}

constexpr std::uint64_t kSmallBound = 1000000;

Polynomial draw_sparse(PolyGenerator& gen, const Size& z) {
  return z.bits == 0 ? gen.sparse_bounded(z.terms, z.exp, kSmallBound) : gen.sparse(z.terms, z.exp, z.bits);
}

Polynomial draw_graded(PolyGenerator& gen, const Size& z) { return gen.graded(2 * z.exp, z.bits == 0 ? 20 : z.bits); }

std::optional<std::string> ring_axioms(PolyGenerator& gen, unsigned i) {
  const Size z = size_for(i);
  const Polynomial a = draw_sparse(gen, z);
  const Polynomial b = draw_sparse(gen, z);
  const Polynomial c = draw_sparse(gen, z);
  const Polynomial zero, one = Polynomial::one();
  auto fail = [&](const char* law) {
    return std::optional<std::string>(std::string(law) + " with a=" + show(a) + ", b=" + show(b) + ", c=" + show(c));
  };
  if (!(a + b == b + a)) return fail("additive commutativity");
  if (!((a + b) + c == a + (b + c))) return fail("additive associativity");
  if (!(a * b == b * a)) return fail("multiplicative commutativity");
  if (!((a * b) * c == a * (b * c))) return fail("multiplicative associativity");
  if (!(a * (b + c) == a * b + a * c)) return fail("distributivity");
  if (!(a + zero == a) || !(a * one == a) || !(a * zero == zero)) return fail("identities");
  if (!(a - a == zero) || !(a + (-a) == zero)) return fail("additive inverse");
  return std::nullopt;
}

std::optional<std::string> mul_paths(PolyGenerator& gen, unsigned i) {
  const Size z = size_for(i);
  Polynomial a = (i & 1) ? draw_graded(gen, z) : draw_sparse(gen, z);
  Polynomial b = (i & 2) ? draw_graded(gen, z) : draw_sparse(gen, z);
  if (i % 16 == 7) {
    // Lopsided widths take the chunked Kronecker path.
    a = (i & 16) ? gen.graded(40, 2500) : gen.sparse(20, 16, 2500);
    b = (i & 32) ? gen.graded(12, 24) : gen.sparse(8, 16, 24);
  }
  const Polynomial reference = detail::mul_schoolbook(a, b);
  if (!(detail::mul_kronecker(a, b) == reference) || !(a * b == reference)) {
    return "multiplication paths disagree for a=" + show(a) + ", b=" + show(b);
  }
  return std::nullopt;
}

std::optional<std::string> division_round_trip(PolyGenerator& gen, unsigned i) {
  const Size z = size_for(i);
  const Polynomial a = (i & 1) ? draw_graded(gen, z) : draw_sparse(gen, z);
  const Polynomial b = gen.nonzero(z.terms, z.exp, z.bits == 0 ? 20 : z.bits);
  const Polynomial f = a * b;
  auto fail = [&](const std::string& what) {
    return std::optional<std::string>(what + " for a=" + show(a) + ", b=" + show(b));
  };
  if (!(exact_div(f, b) == a)) return fail("exact_div(a*b, b) != a");
  const auto greedy = detail::div_greedy(f, b);
  if (!greedy || !(*greedy == a)) return fail("greedy division lost the quotient");
  Polynomial q;
  switch (detail::div_kronecker(f, b, q)) {
    case detail::KroneckerDivOutcome::kNonDivisible:
      return fail("Kronecker division reported a multiple as non-divisible");
    case detail::KroneckerDivOutcome::kQuotient:
      if (!(q == a)) return fail("Kronecker division returned a wrong quotient");
      break;
    case detail::KroneckerDivOutcome::kInconclusive:
      break;
  }
  // b divides a*b + 1 only if b is a unit.
  const bool unit = b.size() == 1 && b.leading().s_exp == 0 && b.leading().t_exp == 0 &&
                    abs(b.leading().coeff) == 1;
  if (!unit && try_exact_div(f + Polynomial::one(), b)) return fail("a*b + 1 reported divisible by b");
  return std::nullopt;
}

std::optional<std::string> evaluation(PolyGenerator& gen, unsigned i) {
  const Size z = size_for(i);
  const Polynomial a = draw_sparse(gen, z);
  const Polynomial b = draw_sparse(gen, z);
  const Integer s = gen.integer(8), t = gen.integer(8);
  if (evaluate(a * b, s, t) != evaluate(a, s, t) * evaluate(b, s, t) ||
      evaluate(a + b, s, t) != evaluate(a, s, t) + evaluate(b, s, t)) {
    return "evaluation at (" + s.get_str() + "," + t.get_str() + ") is not a ring map for a=" + show(a) +
           ", b=" + show(b);
  }
  return std::nullopt;
}

std::optional<std::string> text_round_trip(PolyGenerator& gen, unsigned i) {
  const Size z = size_for(i);
  const Polynomial a = (i & 1) ? draw_graded(gen, z) : draw_sparse(gen, z);
  if (!(parse(format(a)) == a)) return "parse(format(a)) != a for a=" + show(a);
  if (!(from_json(to_json(a)) == a)) return "from_json(to_json(a)) != a for a=" + show(a);
  return std::nullopt;
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed, unsigned cases) {
  SelftestReport report;
  report.seed = seed;
  // Each suite draws from its own stream so suites stay independent of each other.
  const std::pair<const char*, CaseFn> suites[] = {
      {"ring_axioms", ring_axioms},
      {"mul_paths", mul_paths},
      {"division_round_trip", division_round_trip},
      {"evaluation_homomorphism", evaluation},
      {"text_round_trip", text_round_trip},
  };
  std::uint64_t stream = seed;
  for (const auto& [name, fn] : suites) {
    report.suites.push_back(run_suite(name, stream, cases, fn));
    stream = stream * 6364136223846793005ULL + 1442695040888963407ULL;
  }
  return report;
}

std::string render_selftest(const SelftestReport& report) {
  std::ostringstream out;
  for (const auto& suite : report.suites) {
    out << (suite.ok() ? "PASS " : "FAIL ") << suite.name << " cases=" << suite.cases
        << " failures=" << suite.failures;
    if (suite.first_failure) out << " first=" << *suite.first_failure;
    out << "\n";
  }
  out << "selftest seed=" << report.seed << (report.ok() ? " all suites pass" : " FAILED") << "\n";
  return out.str();
}

}  // namespace lucaspoly
