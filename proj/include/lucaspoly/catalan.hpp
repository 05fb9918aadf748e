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

#ifndef LUCASPOLY_CATALAN_HPP
#define LUCASPOLY_CATALAN_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "lucaspoly/lucanomial.hpp"

namespace lucaspoly {

/// {2n choose n} / {n+1}. Throws InternalNonDivisible if the quotient is not
/// a polynomial.
Polynomial catalan_via_division(LucanomialEngine& engine, Index n);

/// {2n-1 choose n-1} + t{2n-1 choose n-2}; the second term is 0 for n = 1.
Polynomial catalan_via_identity(LucanomialEngine& engine, Index n);

/// The identity route given {2n-1 choose n-1}, using
/// {2n-1 choose n-2} = {2n-1 choose n-1}{n-1} / {n+1}.
Polynomial catalan_via_identity_from(LucasCache& cache, Index n, const Polynomial& near_central);

struct CheckSet {
  bool identity = true;
  bool positivity = true;
  bool lemma21 = true;
  bool specializations = true;

  bool any() const noexcept { return identity || positivity || lemma21 || specializations; }
};

/// Parses a comma-separated subset of {identity, positivity, lemma21,
/// specializations}. Throws std::invalid_argument on unknown or empty input.
CheckSet parse_checks(const std::string& text);

struct SpecPoint {
  Integer s;
  Integer t;
};

/// Parses "S,T" with signed decimal integers.
SpecPoint parse_spec_point(const std::string& text);

/// Fixed-size summary of a polynomial too large to print.
struct PolyDigest {
  std::size_t term_count = 0;
  Exponent total_degree = 0;
  std::size_t max_coeff_bits = 0;
  /// FNV-1a 64 over (s, t, sign, magnitude bytes) of every term in canonical order.
  std::uint64_t content_hash = 0;
  Exponent s_min = 0, s_max = 0, t_min = 0, t_max = 0;
};

PolyDigest digest(const Polynomial& f);

struct VerifyOptions {
  CheckSet checks;
  std::size_t term_cutoff = 64;
  std::optional<SpecPoint> spec_point;
};

/// Per-n outcome. Flags of unselected checks stay true.
struct VerificationReport {
  Index n = 0;
  bool division_ok = false;
  bool identity_ok = true;
  bool positivity_ok = true;
  /// lemma21 and specialization checks, when selected.
  bool extra_ok = true;
  PolyDigest catalan_digest;
  /// The quotient itself when it has at most term_cutoff terms.
  std::optional<Polynomial> catalan_poly;
  /// Value at the configured point, if any.
  std::optional<Integer> spec_value;
  std::optional<std::string> failure;

  bool all_ok() const noexcept { return division_ok && identity_ok && positivity_ok && extra_ok; }
};

VerificationReport verify_n(LucanomialEngine& engine, Index n, const VerifyOptions& options);

enum class OutputFormat { kText, kJson, kCsv };

OutputFormat parse_format(const std::string& text);

struct SweepConfig {
  Index max_n = 1;
  VerifyOptions options;
  unsigned jobs = 1;
  OutputFormat format = OutputFormat::kText;
  std::uint64_t seed = 0;
};

struct SweepSummary {
  Index total = 0;
  Index passed = 0;

  bool all_ok() const noexcept { return passed == total; }
};

using ReportSink = std::function<void(const VerificationReport&)>;

/// Verifies 1..max_n. The central chain advances on the calling thread; the
/// per-n checks run on up to `jobs` workers. `sink` is called in order of n
/// on the calling thread.
SweepSummary sweep(LucanomialEngine& engine, const SweepConfig& config, const ReportSink& sink);

std::string render_text(const VerificationReport& report);
std::string render_json(const VerificationReport& report);
std::string render_csv_header();
std::string render_csv(const VerificationReport& report);
std::string render_summary(const SweepSummary& summary);

/// Digest as a JSON object.
std::string digest_json(const PolyDigest& d);

}  // namespace lucaspoly

#endif  // LUCASPOLY_CATALAN_HPP
