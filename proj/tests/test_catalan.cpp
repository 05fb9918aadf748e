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

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "lucaspoly/catalan.hpp"
#include "reference.hpp"

namespace lucaspoly {
namespace {

class CatalanTest : public ::testing::Test {
 protected:
  LucasCache cache;
  LucanomialEngine engine{cache};

  std::vector<std::string> run(const SweepConfig& config, SweepSummary* summary = nullptr) {
    std::vector<std::string> lines;
    const auto s = sweep(engine, config, [&](const VerificationReport& r) { lines.push_back(render_text(r)); });
    if (summary) *summary = s;
    return lines;
  }
};

TEST_F(CatalanTest, Examples) {
  EXPECT_EQ(format(catalan_via_division(engine, 1)), "1");
  EXPECT_EQ(format(catalan_via_identity(engine, 1)), "1");
  EXPECT_EQ(format(catalan_via_division(engine, 2)), "s^2 + 2*t");
  EXPECT_EQ(format(catalan_via_identity(engine, 2)), "s^2 + 2*t");
  EXPECT_EQ(evaluate(catalan_via_division(engine, 5), 2, -1), 42);
}

TEST_F(CatalanTest, RoutesAgreeAndArePositive) {
  for (Index n = 1; n <= 60; ++n) {
    const auto d = catalan_via_division(engine, n);
    const auto i = catalan_via_identity(engine, n);
    ASSERT_EQ(d, i) << n;
    ASSERT_TRUE(check_positive(d).positive) << n;
    ASSERT_EQ(i * cache.lucas(n + 1), engine.binom_factorial(2 * n, n)) << n;
  }
}

TEST_F(CatalanTest, SpecializeToCatalanNumbers) {
  for (Index n = 1; n <= 30; ++n) {
    ASSERT_EQ(evaluate(catalan_via_division(engine, n), 2, -1), reference::catalan(n)) << n;
  }
  EXPECT_EQ(evaluate(catalan_via_division(engine, 30), 2, -1), mpz_class("3814986502092304"));
}

TEST_F(CatalanTest, SpecializeToFibonomialCatalan) {
  for (Index n = 1; n <= 25; ++n) {
    mpz_class num = 1, den = reference::fibonacci(n + 1);
    for (Index i = 1; i <= n; ++i) {
      num *= reference::fibonacci(n + i);
      den *= reference::fibonacci(i);
    }
    ASSERT_EQ(evaluate(catalan_via_division(engine, n), 1, 1), num / den) << n;
  }
}

TEST_F(CatalanTest, VerifyReports) {
  const VerifyOptions options;
  const auto r1 = verify_n(engine, 1, options);
  EXPECT_TRUE(r1.all_ok());
  EXPECT_EQ(render_text(r1), "PASS n=1 catalan=1");
  const auto r2 = verify_n(engine, 2, options);
  EXPECT_EQ(render_text(r2), "PASS n=2 catalan=s^2 + 2*t");
  const auto r30 = verify_n(engine, 30, options);
  EXPECT_TRUE(r30.all_ok()) << render_text(r30);
  EXPECT_EQ(r30.catalan_digest.term_count, catalan_via_division(engine, 30).size());
}

TEST_F(CatalanTest, TermCutoffSwitchesToDigest) {
  VerifyOptions options;
  options.term_cutoff = 2;
  const auto r = verify_n(engine, 4, options);
  EXPECT_FALSE(r.catalan_poly.has_value());
  const auto expect = catalan_via_division(engine, 4);
  const std::string prefix = "PASS n=4 catalan=[terms=" + std::to_string(expect.size()) +
                             " total_degree=" + std::to_string(expect.total_degree()) + " ";
  EXPECT_EQ(render_text(r).rfind(prefix, 0), 0u) << render_text(r);
}

TEST_F(CatalanTest, SpecPointValue) {
  VerifyOptions options;
  options.spec_point = parse_spec_point("2,-1");
  const auto r = verify_n(engine, 5, options);
  ASSERT_TRUE(r.spec_value.has_value());
  EXPECT_EQ(*r.spec_value, 42);
  EXPECT_NE(render_text(r).find(" value=42"), std::string::npos);
}

TEST_F(CatalanTest, SweepEmitsOneLinePerN) {
  SweepConfig config;
  config.max_n = 50;
  config.options.checks = parse_checks("identity,positivity");
  SweepSummary summary;
  const auto lines = run(config, &summary);
  ASSERT_EQ(lines.size(), 50u);
  for (Index n = 1; n <= 50; ++n) {
    EXPECT_EQ(lines[n - 1].rfind("PASS n=" + std::to_string(n) + " ", 0), 0u) << lines[n - 1];
  }
  EXPECT_TRUE(summary.all_ok());
  EXPECT_EQ(render_summary(summary), "summary: 50/50 passed, all checks hold");
}

TEST_F(CatalanTest, SweepIsDeterministicAcrossJobs) {
  SweepConfig config;
  config.max_n = 50;
  config.options.term_cutoff = 8;
  const auto serial = run(config);
  LucasCache other_cache;
  LucanomialEngine other(other_cache);
  config.jobs = 8;
  std::vector<std::string> parallel;
  sweep(other, config, [&](const VerificationReport& r) { parallel.push_back(render_text(r)); });
  EXPECT_EQ(serial, parallel);
}

TEST_F(CatalanTest, JsonReportSchema) {
  VerifyOptions options;
  options.spec_point = SpecPoint{1, 1};
  const auto doc = nlohmann::json::parse(render_json(verify_n(engine, 3, options)));
  EXPECT_EQ(doc["n"], 3);
  EXPECT_EQ(doc["division_ok"], true);
  EXPECT_EQ(doc["identity_ok"], true);
  EXPECT_EQ(doc["positivity_ok"], true);
  EXPECT_EQ(doc["extra_ok"], true);
  EXPECT_TRUE(doc["failure"].is_null());
  EXPECT_EQ(doc["value"], "20");
  ASSERT_TRUE(doc["catalan"].is_array());
  EXPECT_EQ(from_json(doc["catalan"].dump()), catalan_via_division(engine, 3));

  options.term_cutoff = 1;
  const auto digest_doc = nlohmann::json::parse(render_json(verify_n(engine, 3, options)));
  const auto& d = digest_doc["catalan"]["digest"];
  EXPECT_EQ(d["term_count"], catalan_via_division(engine, 3).size());
  EXPECT_TRUE(d["support"]["s"].is_array());
}

TEST_F(CatalanTest, CsvRows) {
  EXPECT_EQ(render_csv_header(), "n,term_count,total_degree,max_coeff_bits,all_ok");
  EXPECT_EQ(render_csv(verify_n(engine, 2, {})), "2,2,2,2,true");
}

TEST(CatalanParsing, Checks) {
  const auto all = parse_checks("identity,positivity,lemma21,specializations");
  EXPECT_TRUE(all.identity && all.positivity && all.lemma21 && all.specializations);
  const auto one = parse_checks(" positivity ");
  EXPECT_TRUE(one.positivity);
  EXPECT_FALSE(one.identity);
  EXPECT_THROW(parse_checks("identity,bogus"), std::invalid_argument);
  EXPECT_THROW(parse_checks(""), std::invalid_argument);
}

TEST(CatalanParsing, SpecPointAndFormat) {
  const auto p = parse_spec_point("2,-1");
  EXPECT_EQ(p.s, 2);
  EXPECT_EQ(p.t, -1);
  EXPECT_THROW(parse_spec_point("2"), std::invalid_argument);
  EXPECT_THROW(parse_spec_point("1,2,3"), std::invalid_argument);
  EXPECT_THROW(parse_spec_point("a,1"), std::invalid_argument);
  EXPECT_EQ(parse_format("csv"), OutputFormat::kCsv);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(CatalanDigest, DistinguishesPolynomials) {
  const auto a = digest(parse("s^2 + 2*t"));
  const auto b = digest(parse("s^2 - 2*t"));
  const auto c = digest(parse("s^2 + 2*t"));
  EXPECT_NE(a.content_hash, b.content_hash);
  EXPECT_EQ(a.content_hash, c.content_hash);
  EXPECT_EQ(a.s_max, 2u);
  EXPECT_EQ(a.t_max, 1u);
  EXPECT_EQ(a.max_coeff_bits, 2u);
}

}  // namespace
}  // namespace lucaspoly
