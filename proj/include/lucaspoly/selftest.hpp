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

#ifndef LUCASPOLY_SELFTEST_HPP
#define LUCASPOLY_SELFTEST_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lucaspoly/poly.hpp"

namespace lucaspoly {

/// Seeded generator of random polynomials. Built on std::mt19937_64, whose
/// output is fixed by the standard, so a seed names the same cases everywhere.
class PolyGenerator {
 public:
  explicit PolyGenerator(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : rng_() % bound; }

  /// Signed integer with up to max_bits bits; zero is possible.
  Integer integer(unsigned max_bits);

  /// Uniform in [-bound, bound].
  Integer bounded(std::uint64_t bound);

  /// Up to max_terms terms with exponents below max_exp.
  Polynomial sparse(unsigned max_terms, Exponent max_exp, unsigned max_bits);

  /// As sparse(), with coefficients uniform in [-bound, bound].
  Polynomial sparse_bounded(unsigned max_terms, Exponent max_exp, std::uint64_t bound);

  /// Homogeneous for deg s = 1, deg t = 2, at weight <= max_weight.
  Polynomial graded(Exponent max_weight, unsigned max_bits);

  /// Nonzero version of either shape.
  Polynomial nonzero(unsigned max_terms, Exponent max_exp, unsigned max_bits);

 private:
  std::mt19937_64 rng_;
};

struct SuiteResult {
  std::string name;
  unsigned cases = 0;
  unsigned failures = 0;
  std::optional<std::string> first_failure;

  bool ok() const noexcept { return failures == 0; }
};

struct SelftestReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool ok() const noexcept;
};

/// Ring axioms, multiplication-path agreement, division round trip,
/// evaluation homomorphism and text/JSON round trip, `cases` each.
SelftestReport run_selftest(std::uint64_t seed, unsigned cases = 1000);

/// One line per suite, then a summary line.
std::string render_selftest(const SelftestReport& report);

}  // namespace lucaspoly

#endif  // LUCASPOLY_SELFTEST_HPP
