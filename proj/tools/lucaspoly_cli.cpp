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

// Command-line front end. Talks to the library only through lucaspoly.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lucaspoly/lucaspoly.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr unsigned kMaxJobs = 1024;

// Carries an exit code out of nested helpers.
struct Exit {
  int code;
};

struct PolyDeleter {
  void operator()(lp_poly* p) const { lp_poly_free(p); }
};
using Poly = std::unique_ptr<lp_poly, PolyDeleter>;

struct StringDeleter {
  void operator()(char* s) const { lp_string_free(s); }
};
using String = std::unique_ptr<char, StringDeleter>;

struct ContextDeleter {
  void operator()(lp_context* c) const { lp_context_free(c); }
};
using Context = std::unique_ptr<lp_context, ContextDeleter>;

int exit_code_for(lp_status status) {
  switch (status) {
    case LP_OK: return kExitOk;
    case LP_ERR_INVALID_ARGUMENT:
    case LP_ERR_PARSE:
    case LP_ERR_RANGE: return kExitUsage;
    default: return kExitFalsified;
  }
}

void check(lp_status status) {
  if (status == LP_OK) return;
  std::cerr << "error: " << lp_status_name(status) << ": " << lp_last_error() << "\n";
  throw Exit{exit_code_for(status)};
}

Context make_context() {
  lp_context* ctx = nullptr;
  check(lp_context_new(&ctx));
  return Context(ctx);
}

std::string take(char* s) { return String(s).get(); }

// "S,T" split for lp_poly_eval; the library validates the numbers.
std::pair<std::string, std::string> split_point(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos || spec.find(',', comma + 1) != std::string::npos) {
    std::cerr << "error: --spec expects S,T, got '" << spec << "'\n";
    throw Exit{kExitUsage};
  }
  return {spec.substr(0, comma), spec.substr(comma + 1)};
}

void print_poly(const lp_poly* p, const std::string& format, const std::optional<std::string>& spec) {
  if (spec) {
    const auto [s, t] = split_point(*spec);
    char* value = nullptr;
    check(lp_poly_eval(p, s.c_str(), t.c_str(), &value));
    const std::string v = take(value);
    if (format == "json") {
      std::cout << "{\"s\":\"" << s << "\",\"t\":\"" << t << "\",\"value\":\"" << v << "\"}\n";
    } else if (format == "csv") {
      std::cout << "s,t,value\n" << s << "," << t << "," << v << "\n";
    } else {
      std::cout << v << "\n";
    }
    return;
  }
  char* out = nullptr;
  if (format == "text") {
    check(lp_poly_format(p, &out));
    std::cout << take(out) << "\n";
    return;
  }
  check(lp_poly_to_json(p, &out));
  const std::string json = take(out);
  if (format == "json") {
    std::cout << json << "\n";
    return;
  }
  // csv: one row per term, read back from the JSON rendering.
  std::cout << "s_exp,t_exp,coeff\n";
  std::size_t pos = 0;
  while ((pos = json.find('[', pos + 1)) != std::string::npos) {
    const auto end = json.find(']', pos);
    std::string row = json.substr(pos + 1, end - pos - 1);
    std::string cleaned;
    for (char c : row) {
      if (c != '"') cleaned += c;
    }
    std::cout << cleaned << "\n";
    pos = end;
  }
}

int cmd_lucas(std::uint32_t n, const std::string& format, const std::optional<std::string>& spec) {
  auto ctx = make_context();
  lp_poly* p = nullptr;
  check(lp_lucas(ctx.get(), n, &p));
  print_poly(Poly(p).get(), format, spec);
  return kExitOk;
}

int cmd_binom(std::uint32_t m, std::int64_t k, const std::string& format, const std::optional<std::string>& spec) {
  auto ctx = make_context();
  lp_poly *by_factorial = nullptr, *by_recurrence = nullptr;
  check(lp_binom(ctx.get(), m, k, LP_BINOM_FACTORIAL, &by_factorial));
  Poly factorial(by_factorial);
  check(lp_binom(ctx.get(), m, k, LP_BINOM_RECURRENCE, &by_recurrence));
  Poly recurrence(by_recurrence);
  if (!lp_poly_equal(factorial.get(), recurrence.get())) {
    char *a = nullptr, *b = nullptr;
    check(lp_poly_format(factorial.get(), &a));
    check(lp_poly_format(recurrence.get(), &b));
    std::cout << "routes disagree for {" << m << " choose " << k << "}\n"
              << "factorial:  " << take(a) << "\nrecurrence: " << take(b) << "\n";
    return kExitFalsified;
  }
  print_poly(factorial.get(), format, spec);
  return kExitOk;
}

int cmd_catalan(std::uint32_t n, const std::string& method, bool require_positive, const std::string& format,
                const std::optional<std::string>& spec) {
  auto ctx = make_context();
  auto compute = [&](lp_catalan_method which) {
    lp_poly* p = nullptr;
    check(lp_catalan(ctx.get(), n, which, &p));
    return Poly(p);
  };
  Poly result = compute(method == "identity" ? LP_CATALAN_IDENTITY : LP_CATALAN_DIVISION);
  bool ok = true;
  std::optional<bool> agree;
  if (method == "both") {
    agree = lp_poly_equal(result.get(), compute(LP_CATALAN_IDENTITY).get()) != 0;
    ok = *agree;
  }
  print_poly(result.get(), format, spec);
  if (agree) std::cout << "agree=" << (*agree ? "true" : "false") << "\n";
  if (require_positive) {
    int positive = 0;
    check(lp_poly_is_positive(result.get(), &positive));
    std::cout << "positive=" << (positive ? "true" : "false") << "\n";
    ok = ok && positive;
  }
  return ok ? kExitOk : kExitFalsified;
}

void print_line(lp_line_kind kind, const char* line, void* user) {
  const bool summary_to_stderr = *static_cast<const bool*>(user);
  if (kind == LP_LINE_SUMMARY && summary_to_stderr) {
    std::cerr << line << "\n";
  } else {
    std::cout << line << "\n";
  }
}

int cmd_verify(lp_sweep_config config, const std::string& checks) {
  check(lp_parse_checks(checks.c_str(), &config.checks));
  auto ctx = make_context();
  // Machine-readable formats keep stdout to the table itself.
  bool summary_to_stderr = config.format != LP_FORMAT_TEXT;
  int all_ok = 0;
  check(lp_verify(ctx.get(), &config, print_line, &summary_to_stderr, &all_ok));
  std::cout.flush();
  return all_ok ? kExitOk : kExitFalsified;
}

int cmd_selftest(std::uint64_t seed, unsigned cases) {
  bool summary_to_stderr = false;
  int all_ok = 0;
  check(lp_selftest(seed, cases, print_line, &summary_to_stderr, &all_ok));
  return all_ok ? kExitOk : kExitFalsified;
}

unsigned jobs_from_environment() {
  const char* value = std::getenv("LUCASPOLY_JOBS");
  if (value == nullptr || *value == '\0') return 1;
  const std::string text = value;
  if (text.size() <= 4 && text.find_first_not_of("0123456789") == std::string::npos) {
    const unsigned jobs = static_cast<unsigned>(std::stoul(text));
    if (jobs >= 1 && jobs <= kMaxJobs) return jobs;
  }
  std::cerr << "error: LUCASPOLY_JOBS must be an integer in [1, " << kMaxJobs << "], got '" << text << "'\n";
  throw Exit{kExitUsage};
}

lp_format format_code(const std::string& format) {
  if (format == "json") return LP_FORMAT_JSON;
  if (format == "csv") return LP_FORMAT_CSV;
  return LP_FORMAT_TEXT;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lucas polynomials, lucanomials and Lucas-Catalan polynomials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lp_version()));

  const auto formats = CLI::IsMember({"text", "json", "csv"});
  std::string format = "text";
  std::optional<std::string> spec;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(formats)->capture_default_str();
    sub->add_option("--spec", spec, "Evaluate at the integer point S,T instead of printing symbolically");
  };

  std::uint32_t n = 0, m = 0;
  std::int64_t k = 0;

  auto* lucas = app.add_subcommand("lucas", "Print the Lucas polynomial {n}");
  lucas->add_option("--n", n, "Index")->required();
  add_common(lucas);

  auto* binom = app.add_subcommand("binom", "Print the lucanomial {m choose k}, checked by two routes");
  binom->add_option("--m", m, "Upper index")->required();
  binom->add_option("--k", k, "Lower index; out of range gives 0")->required();
  add_common(binom);

  std::string method = "division";
  bool require_positive = false;
  auto* catalan = app.add_subcommand("catalan", "Print the Lucas-Catalan polynomial {2n choose n}/{n+1}");
  catalan->add_option("--n", n, "Index, at least 1")->required()->check(CLI::Range(1u, UINT32_MAX));
  catalan->add_option("--method", method, "Route")
      ->check(CLI::IsMember({"division", "identity", "both"}))
      ->capture_default_str();
  catalan->add_flag("--require-positive", require_positive, "Fail unless every coefficient is positive");
  add_common(catalan);

  lp_sweep_config config;
  lp_sweep_config_init(&config);
  std::uint32_t max_n = 1;
  unsigned jobs = 1;
  std::size_t cutoff = config.term_cutoff;
  std::string checks = "identity,positivity,lemma21,specializations";
  auto* verify = app.add_subcommand("verify", "Verify both routes, positivity and side identities for n <= max-n");
  verify->add_option("--max-n", max_n, "Largest n")->required()->check(CLI::Range(1u, UINT32_MAX));
  verify->add_option("--checks", checks, "Comma-separated subset of identity,positivity,lemma21,specializations")
      ->capture_default_str();
  auto* jobs_option = verify->add_option("--jobs", jobs, "Worker threads; default from LUCASPOLY_JOBS, else 1")
                          ->check(CLI::Range(1u, kMaxJobs));
  verify->add_option("--term-cutoff", cutoff, "Largest polynomial printed in full; bigger ones get a digest")
      ->capture_default_str();
  add_common(verify);

  std::uint64_t seed = 1;
  unsigned cases = 1000;
  auto* selftest = app.add_subcommand("selftest", "Run the randomized property suites");
  selftest->add_option("--seed", seed, "Seed")->capture_default_str();
  selftest->add_option("--cases", cases, "Cases per suite")->check(CLI::Range(1u, 100000000u))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*lucas) return cmd_lucas(n, format, spec);
    if (*binom) return cmd_binom(m, k, format, spec);
    if (*catalan) return cmd_catalan(n, method, require_positive, format, spec);
    if (*verify) {
      if (jobs_option->count() == 0) jobs = jobs_from_environment();
      config.max_n = max_n;
      config.jobs = jobs;
      config.format = format_code(format);
      config.term_cutoff = cutoff;
      config.spec_point = spec ? spec->c_str() : nullptr;
      return cmd_verify(config, checks);
    }
    if (*selftest) return cmd_selftest(seed, cases);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}
