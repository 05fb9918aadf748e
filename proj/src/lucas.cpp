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

#include "lucaspoly/lucas.hpp"

#include <stdexcept>

namespace lucaspoly {

IdentityVerdict compare_sides(const Polynomial& lhs, const Polynomial& rhs) {
  IdentityVerdict verdict;
  verdict.holds = lhs == rhs;
  if (!verdict.holds) {
    verdict.lhs = format(lhs);
    verdict.rhs = format(rhs);
  }
  return verdict;
}

LucasCache::LucasCache() {
  lucas_.push_back(Polynomial{});
  lucas_.push_back(Polynomial::one());
  lucastorial_.push_back(Polynomial::one());
}

const Polynomial& LucasCache::lucas(Index n) {
  std::lock_guard lock(mutex_);
  while (lucas_.size() <= n) {
    const std::size_t k = lucas_.size();
    lucas_.push_back(shift(lucas_[k - 1], 1, 0) + shift(lucas_[k - 2], 0, 1));
  }
  return lucas_[n];
}

const Polynomial& LucasCache::lucastorial(Index n) {
  lucas(n);
  std::lock_guard lock(mutex_);
  while (lucastorial_.size() <= n) {
    const std::size_t k = lucastorial_.size();
    lucastorial_.push_back(lucas_[k] * lucastorial_[k - 1]);
  }
  return lucastorial_[n];
}

std::size_t LucasCache::lucas_size() const {
  std::lock_guard lock(mutex_);
  return lucas_.size();
}

IdentityVerdict product_identity_check(LucasCache& cache, Index n) {
  if (n < 1) throw std::invalid_argument("product identity needs n >= 1");
  const Polynomial& mid = cache.lucas(n);
  const Polynomial rhs = cache.lucas(n + 1) * mid + shift(cache.lucas(n - 1) * mid, 0, 1);
  return compare_sides(cache.lucas(2 * n), rhs);
}

IdentityVerdict lemma21_check(LucasCache& cache, Index m, Index n) {
  if (m < 1 || n < 1) throw std::invalid_argument("lemma check needs m, n >= 1");
  const Polynomial rhs = cache.lucas(m + 1) * cache.lucas(n) + shift(cache.lucas(m) * cache.lucas(n - 1), 0, 1);
  return compare_sides(cache.lucas(m + n), rhs);
}

}  // namespace lucaspoly
