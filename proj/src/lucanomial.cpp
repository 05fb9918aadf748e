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

#include "lucaspoly/lucanomial.hpp"

namespace lucaspoly {

Polynomial certified_div(const Polynomial& f, const Polynomial& g, const std::string& context) {
  auto q = try_exact_div(f, g);
  if (!q) {
    throw InternalNonDivisible(context + ": exact division failed; dividend " + to_json(f) + ", divisor " +
                               to_json(g));
  }
  return std::move(*q);
}

std::string binom_label(Index m, std::int64_t k) {
  return "{" + std::to_string(m) + " choose " + std::to_string(k) + "}";
}

Polynomial LucanomialEngine::binom_factorial(Index m, std::int64_t k) {
  if (k < 0 || k > m) return {};
  const auto kk = static_cast<Index>(k);
  const std::pair key{m, kk};
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = factorial_memo_.find(key); it != factorial_memo_.end()) return it->second;
  }
  const std::string context = binom_label(m, k);
  Polynomial partial = certified_div(cache_.lucastorial(m), cache_.lucastorial(kk), context);
  Polynomial result = certified_div(partial, cache_.lucastorial(m - kk), context);
  std::lock_guard lock(memo_mutex_);
  return factorial_memo_.emplace(key, std::move(result)).first->second;
}

Polynomial LucanomialEngine::binom_recurrence(Index m, std::int64_t k) {
  if (k < 0 || k > m) return {};
  std::lock_guard lock(memo_mutex_);
  while (recurrence_rows_.size() <= m) {
    const auto row = static_cast<Index>(recurrence_rows_.size());
    std::vector<Polynomial> next(row + 1);
    next.front() = Polynomial::one();
    next.back() = Polynomial::one();
    const auto& prev = row > 0 ? recurrence_rows_[row - 1] : next;
    for (Index j = 1; j < row; ++j) {
      // Second term vanishes at j = row - 1 because {0} = 0.
      next[j] = cache_.lucas(j + 1) * prev[j] + shift(cache_.lucas(row - j - 1) * prev[j - 1], 0, 1);
    }
    recurrence_rows_.push_back(std::move(next));
  }
  return recurrence_rows_[m][static_cast<std::size_t>(k)];
}

IdentityVerdict LucanomialEngine::symmetry_check(Index m) {
  for (Index k = 0; k <= m; ++k) {
    auto verdict = compare_sides(binom_factorial(m, k), binom_factorial(m, m - k));
    if (!verdict) return verdict;
  }
  return IdentityVerdict{true, {}, {}};
}

const Polynomial& LucanomialEngine::advance_to(Index n) {
  // frontier_ holds {2j-1 choose j-1}. Steps:
  //   {2j choose j}     = {2j-1 choose j-1} * ({2j} / {j})
  //   {2j+1 choose j}   = ({2j choose j} / {j+1}) * {2j+1}
  if (frontier_.n > n) frontier_ = Frontier{};
  while (frontier_.n < n) {
    const Index j = frontier_.n;
    Polynomial next = quotient_at_frontier() * cache_.lucas(2 * j + 1);
    frontier_ = Frontier{j + 1, std::move(next), std::nullopt, std::nullopt};
  }
  return frontier_.value;
}

const Polynomial& LucanomialEngine::quotient_at_frontier() {
  if (!frontier_.quotient) {
    const Index j = frontier_.n;
    frontier_.quotient = certified_div(central_at_frontier(), cache_.lucas(j + 1), binom_label(2 * j, j));
  }
  return *frontier_.quotient;
}

const Polynomial& LucanomialEngine::central_at_frontier() {
  if (!frontier_.central) {
    const Index j = frontier_.n;
    const Polynomial ratio = certified_div(cache_.lucas(2 * j), cache_.lucas(j), "{2n}/{n}");
    frontier_.central = frontier_.value * ratio;
  }
  return *frontier_.central;
}

Polynomial LucanomialEngine::central(Index n) {
  if (n == 0) return Polynomial::one();
  std::lock_guard lock(chain_mutex_);
  advance_to(n);
  return central_at_frontier();
}

Polynomial LucanomialEngine::near_central(Index n) {
  if (n < 1) throw std::invalid_argument("near_central needs n >= 1");
  std::lock_guard lock(chain_mutex_);
  return advance_to(n);
}

Polynomial LucanomialEngine::central_quotient(Index n) {
  if (n < 1) throw std::invalid_argument("central_quotient needs n >= 1");
  std::lock_guard lock(chain_mutex_);
  advance_to(n);
  return quotient_at_frontier();
}

}  // namespace lucaspoly
