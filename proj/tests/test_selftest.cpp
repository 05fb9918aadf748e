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

#include "lucaspoly/selftest.hpp"

namespace lucaspoly {
namespace {

TEST(Selftest, AllSuitesPassWithThousandCases) {
  const auto report = run_selftest(1, 1000);
  ASSERT_EQ(report.suites.size(), 5u);
  for (const auto& suite : report.suites) {
    EXPECT_EQ(suite.cases, 1000u) << suite.name;
    EXPECT_TRUE(suite.ok()) << suite.name << ": " << suite.first_failure.value_or("");
  }
  EXPECT_TRUE(report.ok());
}

TEST(Selftest, SameSeedSameReport) {
  EXPECT_EQ(render_selftest(run_selftest(42, 50)), render_selftest(run_selftest(42, 50)));
}

TEST(Selftest, RenderShape) {
  const auto text = render_selftest(run_selftest(7, 5));
  EXPECT_EQ(text.rfind("PASS ring_axioms cases=5 failures=0\n", 0), 0u) << text;
  EXPECT_NE(text.find("selftest seed=7 all suites pass\n"), std::string::npos);
}

TEST(Selftest, GeneratorIsDeterministic) {
  PolyGenerator a(9), b(9);
  for (int i = 0; i < 50; ++i) ASSERT_EQ(a.sparse(6, 10, 200), b.sparse(6, 10, 200));
}

TEST(Selftest, GeneratorBounds) {
  PolyGenerator gen(3);
  for (int i = 0; i < 500; ++i) {
    const auto p = gen.sparse_bounded(8, 13, 1000000);
    for (const auto& term : p) {
      ASSERT_LT(term.s_exp, 13u);
      ASSERT_LT(term.t_exp, 13u);
      ASSERT_LE(abs(term.coeff), 1000000);
    }
    const auto g = gen.graded(30, 64);
    for (const auto& term : g) ASSERT_EQ(term.s_exp + 2 * term.t_exp, g.leading().s_exp + 2 * g.leading().t_exp);
  }
}

}  // namespace
}  // namespace lucaspoly
