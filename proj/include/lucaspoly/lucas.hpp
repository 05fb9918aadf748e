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

#ifndef LUCASPOLY_LUCAS_HPP
#define LUCASPOLY_LUCAS_HPP

#include <cstdint>
#include <deque>
#include <mutex>
#include <string>

#include "lucaspoly/poly.hpp"

namespace lucaspoly {

using Index = std::uint32_t;

/// Outcome of a polynomial identity check. The two sides are only rendered
/// when the identity fails.
struct IdentityVerdict {
  bool holds = false;
  std::string lhs;
  std::string rhs;

  explicit operator bool() const noexcept { return holds; }
};

IdentityVerdict compare_sides(const Polynomial& lhs, const Polynomial& rhs);

/// Memoized Lucas polynomials {n} and lucastorials {n}!.
///
///   {0} = 0, {1} = 1, {n} = s{n-1} + t{n-2}
///   {0}! = 1, {n}! = {n}{n-1}!
///
/// Both tables grow monotonically and bottom-up; growth is guarded by a
/// mutex and entries never move once written, so references returned to
/// concurrent readers stay valid for the lifetime of the cache.
class LucasCache {
 public:
  LucasCache();

  LucasCache(const LucasCache&) = delete;
  LucasCache& operator=(const LucasCache&) = delete;

  const Polynomial& lucas(Index n);
  const Polynomial& lucastorial(Index n);

  /// Number of Lucas polynomials currently cached.
  std::size_t lucas_size() const;

 private:
  mutable std::mutex mutex_;
  std::deque<Polynomial> lucas_;
  std::deque<Polynomial> lucastorial_;
};

/// {2n} == {n+1}{n} + t{n-1}{n}. Precondition n >= 1.
IdentityVerdict product_identity_check(LucasCache& cache, Index n);

/// {m+n} == {m+1}{n} + t{m}{n-1}. Preconditions m >= 1, n >= 1.
IdentityVerdict lemma21_check(LucasCache& cache, Index m, Index n);

}  // namespace lucaspoly

#endif  // LUCASPOLY_LUCAS_HPP
