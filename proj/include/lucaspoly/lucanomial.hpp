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

#ifndef LUCASPOLY_LUCANOMIAL_HPP
#define LUCASPOLY_LUCANOMIAL_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lucaspoly/lucas.hpp"

namespace lucaspoly {

/// An exact division that must succeed did not. Always a defect (or a
/// counterexample to integrality); never swallowed.
class InternalNonDivisible : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Lucanomials {m choose k} = {m}! / ({k}! {m-k}!), zero for k < 0 or k > m.
///
/// Two independent routes are provided: the lucastorial quotient and the
/// addition rule
///
///   {m choose k} = {k+1}{m-1 choose k} + t{m-k-1}{m-1 choose k-1},
///
/// which follows from {m} = {k+1}{m-k} + t{k}{m-k-1}. Both memoize per
/// (m, k). For large central indices, central() and near_central() walk
/// single-step lucastorial ratios and keep only the current frontier.
class LucanomialEngine {
 public:
  explicit LucanomialEngine(LucasCache& cache) : cache_(cache) {}

  LucanomialEngine(const LucanomialEngine&) = delete;
  LucanomialEngine& operator=(const LucanomialEngine&) = delete;

  LucasCache& cache() noexcept { return cache_; }

  /// Throws InternalNonDivisible if an exact division fails.
  Polynomial binom_factorial(Index m, std::int64_t k);
  Polynomial binom_recurrence(Index m, std::int64_t k);

  /// {m choose k} == {m choose m-k} for every 0 <= k <= m.
  IdentityVerdict symmetry_check(Index m);

  /// {2n choose n}.
  Polynomial central(Index n);

  /// {2n-1 choose n-1}, n >= 1.
  Polynomial near_central(Index n);

  /// {2n choose n} / {n+1}, n >= 1. The chain needs this quotient anyway,
  /// so it is kept alongside the frontier.
  Polynomial central_quotient(Index n);

 private:
  // Walk along the central column of the triangle, one lucastorial ratio at a
  // time. Only the current position is kept: these entries get large.
  struct Frontier {
    Index n = 1;
    Polynomial value = Polynomial::one();   // {2n-1 choose n-1}
    std::optional<Polynomial> central;      // {2n choose n}, once computed
    std::optional<Polynomial> quotient;     // {2n choose n} / {n+1}
  };

  const Polynomial& advance_to(Index n);
  const Polynomial& central_at_frontier();
  const Polynomial& quotient_at_frontier();

  LucasCache& cache_;
  std::mutex memo_mutex_;
  std::map<std::pair<Index, Index>, Polynomial> factorial_memo_;
  std::vector<std::vector<Polynomial>> recurrence_rows_;
  std::mutex chain_mutex_;
  Frontier frontier_;
};

std::string binom_label(Index m, std::int64_t k);

/// Exact quotient that reports failure as InternalNonDivisible with both
/// operands serialized.
Polynomial certified_div(const Polynomial& f, const Polynomial& g, const std::string& context);

}  // namespace lucaspoly

#endif  // LUCASPOLY_LUCANOMIAL_HPP
