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

// Acceptance run. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Usage: acceptance [path-to-lucaspoly-cli]

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lucaspoly/catalan.hpp"
#include "lucaspoly/oracles.hpp"
#include "lucaspoly/selftest.hpp"

namespace {

using namespace lucaspoly;

constexpr Index kRouteMaxN = 200;
constexpr double kRouteTargetSeconds = 120.0;

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what << " [" << detail << "]" << std::endl;
}

std::string seconds(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(1) << s << " s";
  return out.str();
}

// Criteria 1 and 2 share one pass over n.
void routes_and_positivity() {
  LucasCache cache;
  LucanomialEngine engine(cache);
  Index mismatch = 0, non_positive = 0, first_bad = 0;
  const auto start = std::chrono::steady_clock::now();
  for (Index n = 1; n <= kRouteMaxN; ++n) {
    const Polynomial division = catalan_via_division(engine, n);
    const Polynomial identity = catalan_via_identity_from(cache, n, engine.near_central(n));
    if (!(division == identity)) {
      ++mismatch;
      if (first_bad == 0) first_bad = n;
    }
    if (!check_positive(division).positive) ++non_positive;
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool fast = elapsed < kRouteTargetSeconds;
  std::ostringstream detail;
  detail << "mismatches=" << mismatch;
  if (first_bad != 0) detail << " first=" << first_bad;
  detail << " runtime=" << seconds(elapsed) << " target<" << seconds(kRouteTargetSeconds);
  if (!fast) detail << " runtime target missed";
  report(1, mismatch == 0 && fast, "catalan_via_division == catalan_via_identity for 1<=n<=200", detail.str());
  report(2, non_positive == 0, "Catalan polynomial positive for 1<=n<=200",
         "non_positive=" + std::to_string(non_positive));
}

void addition_rule() {
  LucasCache cache;
  unsigned bad_grid = 0, bad_diagonal = 0;
  for (Index m = 1; m <= 50; ++m) {
    for (Index n = 1; n <= 50; ++n) bad_grid += lemma21_check(cache, m, n).holds ? 0 : 1;
  }
  for (Index n = 1; n <= 200; ++n) {
    const bool diagonal = lemma21_check(cache, n, n).holds;
    const bool product = product_identity_check(cache, n).holds;
    bad_diagonal += (diagonal && product) ? 0 : 1;
  }
  report(3, bad_grid == 0 && bad_diagonal == 0,
         "lemma21_check for 1<=m,n<=50; diagonal agrees with product_identity_check for n<=200",
         "grid_failures=" + std::to_string(bad_grid) + " diagonal_failures=" + std::to_string(bad_diagonal));
}

void catalan_numbers() {
  LucasCache cache;
  LucanomialEngine engine(cache);
  unsigned bad = 0;
  Integer last;
  for (Index n = 1; n <= 30; ++n) {
    last = evaluate(catalan_via_division(engine, n), 2, -1);
    bad += last == oracles::catalan_number(n) ? 0 : 1;
  }
  const bool c30 = last == Integer("3814986502092304");
  report(4, bad == 0 && c30, "(2,-1) specialization gives Catalan numbers up to C_30",
         "mismatches=" + std::to_string(bad) + " C_30=" + last.get_str());
}

void lucanomial_routes() {
  LucasCache cache;
  LucanomialEngine engine(cache);
  unsigned mismatch = 0, non_divisible = 0;
  for (Index m = 0; m <= 60; ++m) {
    for (Index k = 0; k <= m; ++k) {
      try {
        mismatch += engine.binom_factorial(m, k) == engine.binom_recurrence(m, k) ? 0 : 1;
      } catch (const InternalNonDivisible&) {
        ++non_divisible;
      }
    }
  }
  report(5, mismatch == 0 && non_divisible == 0, "factorial and recurrence routes agree for 0<=k<=m<=60",
         "mismatches=" + std::to_string(mismatch) + " non_divisible=" + std::to_string(non_divisible));
}

void tilings_and_gaussian() {
  LucasCache cache;
  LucanomialEngine engine(cache);
  unsigned bad_tiling = 0, bad_gaussian = 0;
  for (unsigned n = 1; n <= 25; ++n) bad_tiling += oracles::strip_tiling_poly(n - 1) == cache.lucas(n) ? 0 : 1;
  for (long q : {2L, 3L}) {
    for (Index m = 0; m <= 30; ++m) {
      for (Index k = 0; k <= m; ++k) {
        const Integer value = evaluate(engine.binom_recurrence(m, k), q + 1, -q);
        bad_gaussian += value == oracles::gaussian_binomial_at(m, k, q) ? 0 : 1;
      }
    }
  }
  report(6, bad_tiling == 0 && bad_gaussian == 0,
         "tilings equal lucas(n) for n<=25; q=2,3 specialization matches q-Pascal for m<=30",
         "tiling_mismatches=" + std::to_string(bad_tiling) + " gaussian_mismatches=" + std::to_string(bad_gaussian));
}

void property_suites() {
  const auto result = run_selftest(20260101, 1000);
  bool ok = result.ok();
  std::string detail;
  for (const auto& suite : result.suites) {
    ok = ok && suite.cases >= 1000;
    if (!detail.empty()) detail += ' ';
    detail += suite.name + "=" + std::to_string(suite.cases - suite.failures) + "/" + std::to_string(suite.cases);
  }
  report(7, ok, "ring axioms, division round trip and parse/format suites pass >=1000 seeded cases", detail);
}

struct Run {
  int status = -1;
  std::string out;
};

Run capture(const std::string& command) {
  Run run;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return run;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) run.out.append(buffer.data(), got);
  const int raw = pclose(pipe);
  run.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return run;
}

void verify_determinism(const std::string& cli) {
  const Run serial = capture("'" + cli + "' verify --max-n 50 --jobs 1");
  const Run parallel = capture("'" + cli + "' verify --max-n 50 --jobs 8");
  const bool same = serial.out == parallel.out;
  report(8, serial.status == 0 && parallel.status == 0 && same && !serial.out.empty(),
         "verify --max-n 50 output byte-identical for jobs 1 and 8",
         "exit=" + std::to_string(serial.status) + "," + std::to_string(parallel.status) +
             " bytes=" + std::to_string(serial.out.size()) + "," + std::to_string(parallel.out.size()) +
             " identical=" + (same ? "true" : "false"));
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : LUCASPOLY_CLI_PATH;
  routes_and_positivity();
  addition_rule();
  catalan_numbers();
  lucanomial_routes();
  tilings_and_gaussian();
  property_suites();
  verify_determinism(cli);
  std::cout << "acceptance: " << 8 - failures << " of 8 criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
