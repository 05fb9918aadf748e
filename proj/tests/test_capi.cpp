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

#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "lucaspoly/lucaspoly.h"

namespace {

struct PolyDeleter {
  void operator()(lp_poly* p) const { lp_poly_free(p); }
};
using Poly = std::unique_ptr<lp_poly, PolyDeleter>;

struct ContextDeleter {
  void operator()(lp_context* c) const { lp_context_free(c); }
};

std::string take(char* s) {
  std::string out = s;
  lp_string_free(s);
  return out;
}

Poly parse(const char* text) {
  lp_poly* p = nullptr;
  EXPECT_EQ(lp_poly_parse(text, &p), LP_OK) << lp_last_error();
  return Poly(p);
}

std::string text(const lp_poly* p) {
  char* s = nullptr;
  EXPECT_EQ(lp_poly_format(p, &s), LP_OK);
  return take(s);
}

class CapiTest : public ::testing::Test {
 protected:
  void SetUp() override {
    lp_context* c = nullptr;
    ASSERT_EQ(lp_context_new(&c), LP_OK);
    ctx.reset(c);
  }
  std::unique_ptr<lp_context, ContextDeleter> ctx;
};

void collect(lp_line_kind kind, const char* line, void* user) {
  static_cast<std::vector<std::pair<lp_line_kind, std::string>>*>(user)->emplace_back(kind, line);
}

TEST(Capi, VersionAndNames) {
  EXPECT_STREQ(lp_version(), "1.0.0");
  EXPECT_STREQ(lp_status_name(LP_OK), "ok");
  EXPECT_STRNE(lp_status_name(LP_ERR_NOT_DIVISIBLE), lp_status_name(LP_ERR_PARSE));
}

TEST(Capi, Arithmetic) {
  auto a = parse("s + t"), b = parse("s - t");
  lp_poly* raw = nullptr;
  ASSERT_EQ(lp_poly_mul(a.get(), b.get(), &raw), LP_OK);
  Poly prod(raw);
  EXPECT_EQ(text(prod.get()), "s^2 - t^2");
  ASSERT_EQ(lp_poly_exact_div(prod.get(), a.get(), &raw), LP_OK);
  Poly quot(raw);
  EXPECT_EQ(lp_poly_equal(quot.get(), b.get()), 1);
  ASSERT_EQ(lp_poly_add(a.get(), b.get(), &raw), LP_OK);
  Poly sum(raw);
  EXPECT_EQ(text(sum.get()), "2*s");
  ASSERT_EQ(lp_poly_sub(a.get(), a.get(), &raw), LP_OK);
  Poly zero(raw);
  EXPECT_EQ(lp_poly_term_count(zero.get()), 0u);
  ASSERT_EQ(lp_poly_clone(a.get(), &raw), LP_OK);
  Poly copy(raw);
  EXPECT_EQ(lp_poly_equal(copy.get(), a.get()), 1);
}

TEST(Capi, ErrorCodes) {
  lp_poly* raw = nullptr;
  EXPECT_EQ(lp_poly_parse("s^-1", &raw), LP_ERR_PARSE);
  EXPECT_EQ(raw, nullptr);
  EXPECT_NE(std::string(lp_last_error()).find("byte 2"), std::string::npos) << lp_last_error();
  EXPECT_EQ(lp_poly_parse(nullptr, &raw), LP_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(lp_poly_parse("s^4294967297", &raw), LP_ERR_PARSE);
  auto s = parse("s"), t = parse("t"), zero = parse("0");
  EXPECT_EQ(lp_poly_exact_div(s.get(), t.get(), &raw), LP_ERR_NOT_DIVISIBLE);
  EXPECT_EQ(lp_poly_exact_div(s.get(), zero.get(), &raw), LP_ERR_DIVISION_BY_ZERO);
  auto big = parse("s^4294967296");
  EXPECT_EQ(lp_poly_mul(big.get(), s.get(), &raw), LP_ERR_RANGE);
}

TEST(Capi, JsonEvalPositivityDigest) {
  lp_poly* raw = nullptr;
  ASSERT_EQ(lp_poly_from_json(R"([[3,0,"1"],[1,1,"2"]])", &raw), LP_OK);
  Poly p(raw);
  char* out = nullptr;
  ASSERT_EQ(lp_poly_to_json(p.get(), &out), LP_OK);
  EXPECT_EQ(take(out), R"([[3,0,"1"],[1,1,"2"]])");
  ASSERT_EQ(lp_poly_eval(p.get(), "2", "-1", &out), LP_OK);
  EXPECT_EQ(take(out), "4");
  EXPECT_EQ(lp_poly_eval(p.get(), "x", "1", &out), LP_ERR_INVALID_ARGUMENT);
  int positive = 0;
  ASSERT_EQ(lp_poly_is_positive(p.get(), &positive), LP_OK);
  EXPECT_EQ(positive, 1);
  lp_digest d{};
  ASSERT_EQ(lp_poly_digest(p.get(), &d), LP_OK);
  EXPECT_EQ(d.term_count, 2u);
  EXPECT_EQ(d.total_degree, 3u);
  EXPECT_EQ(d.s_max, 3u);
  EXPECT_EQ(d.t_max, 1u);
}

TEST_F(CapiTest, LucasFamily) {
  lp_poly* raw = nullptr;
  ASSERT_EQ(lp_lucas(ctx.get(), 3, &raw), LP_OK);
  EXPECT_EQ(text(Poly(raw).get()), "s^2 + t");
  ASSERT_EQ(lp_lucas(ctx.get(), 0, &raw), LP_OK);
  EXPECT_EQ(text(Poly(raw).get()), "0");
  ASSERT_EQ(lp_lucastorial(ctx.get(), 3, &raw), LP_OK);
  EXPECT_EQ(text(Poly(raw).get()), "s^3 + s*t");
  for (auto route : {LP_BINOM_FACTORIAL, LP_BINOM_RECURRENCE}) {
    ASSERT_EQ(lp_binom(ctx.get(), 4, 2, route, &raw), LP_OK);
    EXPECT_EQ(text(Poly(raw).get()), "s^4 + 3*s^2*t + 2*t^2");
    ASSERT_EQ(lp_binom(ctx.get(), 2, 5, route, &raw), LP_OK);
    EXPECT_EQ(text(Poly(raw).get()), "0");
  }
  for (auto method : {LP_CATALAN_DIVISION, LP_CATALAN_IDENTITY}) {
    ASSERT_EQ(lp_catalan(ctx.get(), 2, method, &raw), LP_OK);
    EXPECT_EQ(text(Poly(raw).get()), "s^2 + 2*t");
  }
  EXPECT_EQ(lp_catalan(ctx.get(), 0, LP_CATALAN_DIVISION, &raw), LP_ERR_INVALID_ARGUMENT);
  int holds = 0;
  ASSERT_EQ(lp_product_identity_check(ctx.get(), 10, &holds), LP_OK);
  EXPECT_EQ(holds, 1);
  ASSERT_EQ(lp_lemma21_check(ctx.get(), 4, 7, &holds), LP_OK);
  EXPECT_EQ(holds, 1);
}

TEST_F(CapiTest, VerifyStreamsLines) {
  lp_sweep_config config;
  lp_sweep_config_init(&config);
  config.max_n = 5;
  ASSERT_EQ(lp_parse_checks("identity,positivity", &config.checks), LP_OK);
  std::vector<std::pair<lp_line_kind, std::string>> lines;
  int all_ok = 0;
  ASSERT_EQ(lp_verify(ctx.get(), &config, collect, &lines, &all_ok), LP_OK) << lp_last_error();
  EXPECT_EQ(all_ok, 1);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[1].first, LP_LINE_REPORT);
  EXPECT_EQ(lines[1].second, "PASS n=2 catalan=s^2 + 2*t");
  EXPECT_EQ(lines.back().first, LP_LINE_SUMMARY);
  unsigned mask = 0;
  EXPECT_EQ(lp_parse_checks("nope", &mask), LP_ERR_INVALID_ARGUMENT);
  config.jobs = 0;
  EXPECT_EQ(lp_verify(ctx.get(), &config, collect, &lines, &all_ok), LP_ERR_INVALID_ARGUMENT);
}

TEST_F(CapiTest, VerifyCsvHasHeader) {
  lp_sweep_config config;
  lp_sweep_config_init(&config);
  config.max_n = 2;
  config.format = LP_FORMAT_CSV;
  std::vector<std::pair<lp_line_kind, std::string>> lines;
  int all_ok = 0;
  ASSERT_EQ(lp_verify(ctx.get(), &config, collect, &lines, &all_ok), LP_OK);
  ASSERT_GE(lines.size(), 3u);
  EXPECT_EQ(lines[0].first, LP_LINE_HEADER);
  EXPECT_EQ(lines[0].second, "n,term_count,total_degree,max_coeff_bits,all_ok");
}

TEST(Capi, Selftest) {
  std::vector<std::pair<lp_line_kind, std::string>> lines;
  int all_ok = 0;
  ASSERT_EQ(lp_selftest(5, 20, collect, &lines, &all_ok), LP_OK);
  EXPECT_EQ(all_ok, 1);
  EXPECT_EQ(lines.size(), 6u);
}

TEST_F(CapiTest, SharedContextAcrossThreads) {
  std::vector<std::thread> threads;
  std::vector<int> bad(4, 0);
  for (int w = 0; w < 4; ++w) {
    threads.emplace_back([&, w] {
      for (uint32_t n = 1; n <= 20; ++n) {
        lp_poly* a = nullptr;
        lp_poly* b = nullptr;
        if (lp_catalan(ctx.get(), n, LP_CATALAN_DIVISION, &a) != LP_OK ||
            lp_catalan(ctx.get(), n, LP_CATALAN_IDENTITY, &b) != LP_OK || lp_poly_equal(a, b) != 1) {
          ++bad[w];
        }
        lp_poly_free(a);
        lp_poly_free(b);
      }
    });
  }
  for (auto& t : threads) t.join();
  for (int b : bad) EXPECT_EQ(b, 0);
}

}  // namespace
