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

#include <gtest/gtest.h>

#include "lucaspoly/lucas.hpp"
#include "lucaspoly/oracles.hpp"
#include "reference.hpp"

namespace lucaspoly::oracles {
namespace {

TEST(Oracles, StripTilings) {
  EXPECT_EQ(format(strip_tiling_poly(0)), "1");
  EXPECT_EQ(format(strip_tiling_poly(1)), "s");
  EXPECT_EQ(format(strip_tiling_poly(2)), "s^2 + t");
  EXPECT_EQ(format(strip_tiling_poly(3)), "s^3 + 2*s*t");
  EXPECT_THROW(strip_tiling_poly(kMaxStripLength + 1), RangeError);
}

TEST(Oracles, StripTilingsMatchLucas) {
  LucasCache cache;
  for (unsigned n = 1; n <= 25; ++n) EXPECT_EQ(strip_tiling_poly(n - 1), cache.lucas(n)) << n;
}

TEST(Oracles, CatalanNumbers) {
  EXPECT_EQ(catalan_number(0), 1);
  EXPECT_EQ(catalan_number(3), 5);
  EXPECT_EQ(catalan_number(10), 16796);
  EXPECT_EQ(catalan_number(30), mpz_class("3814986502092304"));
  for (unsigned n = 0; n <= 60; ++n) ASSERT_EQ(catalan_number(n), reference::catalan(n)) << n;
}

TEST(Oracles, Fibonacci) {
  EXPECT_EQ(fibonacci(0), 0);
  EXPECT_EQ(fibonacci(10), 55);
  for (unsigned n = 0; n <= 200; ++n) ASSERT_EQ(fibonacci(n), reference::fibonacci(n));
}

TEST(Oracles, Binomials) {
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
  for (unsigned m = 0; m <= 60; ++m) {
    for (unsigned k = 0; k <= m; ++k) ASSERT_EQ(binomial(m, k), reference::binomial(m, k));
  }
}

TEST(Oracles, GaussianBinomials) {
  EXPECT_EQ(gaussian_binomial_at(4, 2, 2), 35);
  EXPECT_EQ(gaussian_binomial_at(1, -1, 3), 0);
  for (long q : {2L, 3L, 7L}) {
    for (unsigned m = 0; m <= 30; ++m) {
      for (unsigned k = 0; k <= m; ++k) ASSERT_EQ(gaussian_binomial_at(m, k, q), reference::gaussian(m, k, q));
    }
  }
}

TEST(Oracles, FibonomialCatalan) {
  const long expect[] = {1, 1, 3, 20, 364};
  for (unsigned n = 0; n < 5; ++n) EXPECT_EQ(fibonomial_catalan(n), expect[n]) << n;
}

TEST(Oracles, QCatalan) {
  EXPECT_EQ(q_catalan_at(0, 2), 1);
  EXPECT_EQ(q_catalan_at(2, 2), 1 + 4);  // 1 + q^2
  for (long q : {2L, 3L}) {
    for (unsigned n = 0; n <= 20; ++n) {
      ASSERT_EQ(q_catalan_at(n, q) * reference::q_integer(n + 1, q), reference::gaussian(2 * n, n, q));
    }
  }
}

}  // namespace
}  // namespace lucaspoly::oracles
