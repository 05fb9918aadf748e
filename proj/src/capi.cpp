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

#include "lucaspoly/lucaspoly.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "lucaspoly/catalan.hpp"
#include "lucaspoly/selftest.hpp"

struct lp_poly {
  lucaspoly::Polynomial value;
};

struct lp_context {
  lucaspoly::LucasCache cache;
  lucaspoly::LucanomialEngine engine{cache};
};

namespace {

thread_local std::string last_error;

lp_status fail(lp_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Fn>
lp_status guarded(Fn&& fn) noexcept {
  try {
    return fn();
  } catch (const lucaspoly::ParseError& e) {
    return fail(LP_ERR_PARSE, e.what());
  } catch (const lucaspoly::RangeError& e) {
    return fail(LP_ERR_RANGE, e.what());
  } catch (const lucaspoly::DivisionByZero& e) {
    return fail(LP_ERR_DIVISION_BY_ZERO, e.what());
  } catch (const lucaspoly::NonDivisible& e) {
    return fail(LP_ERR_NOT_DIVISIBLE, e.what());
  } catch (const lucaspoly::InternalNonDivisible& e) {
    return fail(LP_ERR_FALSIFIED, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(LP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LP_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(LP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LP_ERR_INTERNAL, "unknown error");
  }
}

lp_status null_argument(const char* name) { return fail(LP_ERR_INVALID_ARGUMENT, std::string(name) + " is null"); }

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lp_status emit_poly(lucaspoly::Polynomial value, lp_poly** out) {
  *out = new lp_poly{std::move(value)};
  return LP_OK;
}

lucaspoly::Integer parse_decimal(const char* text, const char* name) {
  lucaspoly::Integer value;
  const char* digits = (text[0] == '+') ? text + 1 : text;
  if (digits[0] == '\0' || value.set_str(digits, 10) != 0) {
    throw std::invalid_argument(std::string(name) + " is not a decimal integer: '" + text + "'");
  }
  return value;
}

template <typename Op>
lp_status binary(const lp_poly* a, const lp_poly* b, lp_poly** out, Op op) {
  if (!a || !b) return null_argument("operand");
  if (!out) return null_argument("out");
  return guarded([&] { return emit_poly(op(a->value, b->value), out); });
}

}  // namespace

extern "C" {

const char* lp_version(void) { return "1.0.0"; }

const char* lp_status_name(lp_status status) {
  switch (status) {
    case LP_OK: return "ok";
    case LP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LP_ERR_PARSE: return "parse error";
    case LP_ERR_RANGE: return "range error";
    case LP_ERR_DIVISION_BY_ZERO: return "division by zero";
    case LP_ERR_NOT_DIVISIBLE: return "not divisible";
    case LP_ERR_FALSIFIED: return "falsified";
    case LP_ERR_OUT_OF_MEMORY: return "out of memory";
    case LP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lp_last_error(void) { return last_error.c_str(); }

void lp_string_free(char* str) { std::free(str); }

lp_status lp_poly_parse(const char* text, lp_poly** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] {
    try {
      return emit_poly(lucaspoly::parse(text), out);
    } catch (const lucaspoly::ParseError& e) {
      return fail(LP_ERR_PARSE, std::string(e.what()) + " at offset " + std::to_string(e.offset()));
    }
  });
}

lp_status lp_poly_from_json(const char* json, lp_poly** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] { return emit_poly(lucaspoly::from_json(json), out); });
}

lp_status lp_poly_clone(const lp_poly* p, lp_poly** out) {
  if (!p) return null_argument("p");
  if (!out) return null_argument("out");
  return guarded([&] { return emit_poly(p->value, out); });
}

void lp_poly_free(lp_poly* p) { delete p; }

lp_status lp_poly_format(const lp_poly* p, char** out) {
  if (!p) return null_argument("p");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = copy_string(lucaspoly::format(p->value));
    return LP_OK;
  });
}

lp_status lp_poly_to_json(const lp_poly* p, char** out) {
  if (!p) return null_argument("p");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = copy_string(lucaspoly::to_json(p->value));
    return LP_OK;
  });
}

lp_status lp_poly_add(const lp_poly* a, const lp_poly* b, lp_poly** out) {
  return binary(a, b, out, [](const auto& x, const auto& y) { return x + y; });
}

lp_status lp_poly_sub(const lp_poly* a, const lp_poly* b, lp_poly** out) {
  return binary(a, b, out, [](const auto& x, const auto& y) { return x - y; });
}

lp_status lp_poly_mul(const lp_poly* a, const lp_poly* b, lp_poly** out) {
  return binary(a, b, out, [](const auto& x, const auto& y) { return x * y; });
}

lp_status lp_poly_exact_div(const lp_poly* f, const lp_poly* g, lp_poly** out) {
  return binary(f, g, out, [](const auto& x, const auto& y) { return lucaspoly::exact_div(x, y); });
}

int lp_poly_equal(const lp_poly* a, const lp_poly* b) { return a && b && a->value == b->value ? 1 : 0; }

size_t lp_poly_term_count(const lp_poly* p) { return p ? p->value.size() : 0; }

lp_status lp_poly_eval(const lp_poly* p, const char* s, const char* t, char** out) {
  if (!p) return null_argument("p");
  if (!s || !t) return null_argument("point");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto value = lucaspoly::evaluate(p->value, parse_decimal(s, "s"), parse_decimal(t, "t"));
    *out = copy_string(value.get_str());
    return LP_OK;
  });
}

lp_status lp_poly_is_positive(const lp_poly* p, int* out) {
  if (!p) return null_argument("p");
  if (!out) return null_argument("out");
  *out = lucaspoly::check_positive(p->value).positive ? 1 : 0;
  return LP_OK;
}

lp_status lp_poly_digest(const lp_poly* p, lp_digest* out) {
  if (!p) return null_argument("p");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto d = lucaspoly::digest(p->value);
    *out = lp_digest{d.term_count, d.total_degree, d.max_coeff_bits, d.content_hash,
                     d.s_min,      d.s_max,        d.t_min,          d.t_max};
    return LP_OK;
  });
}

lp_status lp_context_new(lp_context** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new lp_context;
    return LP_OK;
  });
}

void lp_context_free(lp_context* ctx) { delete ctx; }

lp_status lp_lucas(lp_context* ctx, uint32_t n, lp_poly** out) {
  if (!ctx) return null_argument("ctx");
  if (!out) return null_argument("out");
  return guarded([&] { return emit_poly(ctx->cache.lucas(n), out); });
}

lp_status lp_lucastorial(lp_context* ctx, uint32_t n, lp_poly** out) {
  if (!ctx) return null_argument("ctx");
  if (!out) return null_argument("out");
  return guarded([&] { return emit_poly(ctx->cache.lucastorial(n), out); });
}

lp_status lp_binom(lp_context* ctx, uint32_t m, int64_t k, lp_binom_route route, lp_poly** out) {
  if (!ctx) return null_argument("ctx");
  if (!out) return null_argument("out");
  return guarded([&] {
    switch (route) {
      case LP_BINOM_FACTORIAL: return emit_poly(ctx->engine.binom_factorial(m, k), out);
      case LP_BINOM_RECURRENCE: return emit_poly(ctx->engine.binom_recurrence(m, k), out);
    }
    return fail(LP_ERR_INVALID_ARGUMENT, "unknown lucanomial route");
  });
}

lp_status lp_catalan(lp_context* ctx, uint32_t n, lp_catalan_method method, lp_poly** out) {
  if (!ctx) return null_argument("ctx");
  if (!out) return null_argument("out");
  return guarded([&] {
    switch (method) {
      case LP_CATALAN_DIVISION: return emit_poly(lucaspoly::catalan_via_division(ctx->engine, n), out);
      case LP_CATALAN_IDENTITY: return emit_poly(lucaspoly::catalan_via_identity(ctx->engine, n), out);
    }
    return fail(LP_ERR_INVALID_ARGUMENT, "unknown Catalan method");
  });
}

lp_status lp_product_identity_check(lp_context* ctx, uint32_t n, int* holds) {
  if (!ctx) return null_argument("ctx");
  if (!holds) return null_argument("holds");
  return guarded([&] {
    *holds = lucaspoly::product_identity_check(ctx->cache, n).holds ? 1 : 0;
    return LP_OK;
  });
}

lp_status lp_lemma21_check(lp_context* ctx, uint32_t m, uint32_t n, int* holds) {
  if (!ctx) return null_argument("ctx");
  if (!holds) return null_argument("holds");
  return guarded([&] {
    *holds = lucaspoly::lemma21_check(ctx->cache, m, n).holds ? 1 : 0;
    return LP_OK;
  });
}

void lp_sweep_config_init(lp_sweep_config* config) {
  if (!config) return;
  *config = lp_sweep_config{1, LP_CHECK_ALL, 1, LP_FORMAT_TEXT, 64, nullptr};
}

lp_status lp_parse_checks(const char* text, unsigned* mask) {
  if (!text) return null_argument("text");
  if (!mask) return null_argument("mask");
  return guarded([&] {
    const auto set = lucaspoly::parse_checks(text);
    unsigned bits = 0;
    if (set.identity) bits |= LP_CHECK_IDENTITY;
    if (set.positivity) bits |= LP_CHECK_POSITIVITY;
    if (set.lemma21) bits |= LP_CHECK_LEMMA21;
    if (set.specializations) bits |= LP_CHECK_SPECIALIZATIONS;
    *mask = bits;
    return LP_OK;
  });
}

lp_status lp_verify(lp_context* ctx, const lp_sweep_config* config, lp_line_callback callback, void* user,
                    int* all_ok) {
  if (!ctx) return null_argument("ctx");
  if (!config) return null_argument("config");
  if (!callback) return null_argument("callback");
  if (!all_ok) return null_argument("all_ok");
  if (config->max_n < 1) return fail(LP_ERR_INVALID_ARGUMENT, "max_n must be at least 1");
  if (config->jobs < 1) return fail(LP_ERR_INVALID_ARGUMENT, "jobs must be at least 1");
  if ((config->checks & LP_CHECK_ALL) == 0 || (config->checks & ~LP_CHECK_ALL) != 0) {
    return fail(LP_ERR_INVALID_ARGUMENT, "check mask must be a nonzero subset of LP_CHECK_ALL");
  }
  return guarded([&] {
    lucaspoly::SweepConfig sweep;
    sweep.max_n = config->max_n;
    sweep.jobs = config->jobs;
    sweep.options.checks = {(config->checks & LP_CHECK_IDENTITY) != 0, (config->checks & LP_CHECK_POSITIVITY) != 0,
                            (config->checks & LP_CHECK_LEMMA21) != 0,
                            (config->checks & LP_CHECK_SPECIALIZATIONS) != 0};
    sweep.options.term_cutoff = config->term_cutoff;
    if (config->spec_point) sweep.options.spec_point = lucaspoly::parse_spec_point(config->spec_point);
    switch (config->format) {
      case LP_FORMAT_TEXT: sweep.format = lucaspoly::OutputFormat::kText; break;
      case LP_FORMAT_JSON: sweep.format = lucaspoly::OutputFormat::kJson; break;
      case LP_FORMAT_CSV: sweep.format = lucaspoly::OutputFormat::kCsv; break;
      default: return fail(LP_ERR_INVALID_ARGUMENT, "unknown output format");
    }
    if (sweep.format == lucaspoly::OutputFormat::kCsv) {
      callback(LP_LINE_HEADER, lucaspoly::render_csv_header().c_str(), user);
    }
    const auto summary = lucaspoly::sweep(ctx->engine, sweep, [&](const lucaspoly::VerificationReport& r) {
      std::string line;
      switch (sweep.format) {
        case lucaspoly::OutputFormat::kText: line = lucaspoly::render_text(r); break;
        case lucaspoly::OutputFormat::kJson: line = lucaspoly::render_json(r); break;
        case lucaspoly::OutputFormat::kCsv: line = lucaspoly::render_csv(r); break;
      }
      callback(LP_LINE_REPORT, line.c_str(), user);
    });
    callback(LP_LINE_SUMMARY, lucaspoly::render_summary(summary).c_str(), user);
    *all_ok = summary.all_ok() ? 1 : 0;
    return LP_OK;
  });
}

lp_status lp_selftest(uint64_t seed, unsigned cases, lp_line_callback callback, void* user, int* all_ok) {
  if (!callback) return null_argument("callback");
  if (!all_ok) return null_argument("all_ok");
  return guarded([&] {
    const auto report = lucaspoly::run_selftest(seed, cases);
    std::istringstream lines(lucaspoly::render_selftest(report));
    std::string line;
    std::size_t index = 0;
    while (std::getline(lines, line)) {
      callback(index++ < report.suites.size() ? LP_LINE_REPORT : LP_LINE_SUMMARY, line.c_str(), user);
    }
    *all_ok = report.ok() ? 1 : 0;
    return LP_OK;
  });
}

}  // extern "C"
