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

/*
 * C interface to lucaspoly.
 *
 * Every fallible call returns an lp_status. On failure, lp_last_error()
 * describes the error; the message is thread-local and stays valid until
 * the next failing call on the same thread. Output handles and strings are
 * owned by the caller: release them with lp_poly_free and lp_string_free.
 * Output pointers are left untouched on failure.
 */

#ifndef LUCASPOLY_H
#define LUCASPOLY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LP_API __declspec(dllexport)
#elif defined(__GNUC__)
#define LP_API __attribute__((visibility("default")))
#else
#define LP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lp_status {
  LP_OK = 0,
  LP_ERR_INVALID_ARGUMENT = 1,
  LP_ERR_PARSE = 2,
  LP_ERR_RANGE = 3,
  LP_ERR_DIVISION_BY_ZERO = 4,
  /* The dividend is not a multiple of the divisor. */
  LP_ERR_NOT_DIVISIBLE = 5,
  /* A division that must be exact was not: a counterexample or a defect. */
  LP_ERR_FALSIFIED = 6,
  LP_ERR_OUT_OF_MEMORY = 7,
  LP_ERR_INTERNAL = 8
} lp_status;

typedef struct lp_poly lp_poly;
typedef struct lp_context lp_context;

LP_API const char* lp_version(void);
LP_API const char* lp_status_name(lp_status status);
LP_API const char* lp_last_error(void);
LP_API void lp_string_free(char* str);

/* Polynomials in Z[s,t]. */

LP_API lp_status lp_poly_parse(const char* text, lp_poly** out);
LP_API lp_status lp_poly_from_json(const char* json, lp_poly** out);
LP_API lp_status lp_poly_clone(const lp_poly* p, lp_poly** out);
LP_API void lp_poly_free(lp_poly* p);

/* Canonical text such as "s^4 + 3*s^2*t + 2*t^2". */
LP_API lp_status lp_poly_format(const lp_poly* p, char** out);
/* [[s_exp, t_exp, "coeff"], ...] in canonical order. */
LP_API lp_status lp_poly_to_json(const lp_poly* p, char** out);

LP_API lp_status lp_poly_add(const lp_poly* a, const lp_poly* b, lp_poly** out);
LP_API lp_status lp_poly_sub(const lp_poly* a, const lp_poly* b, lp_poly** out);
LP_API lp_status lp_poly_mul(const lp_poly* a, const lp_poly* b, lp_poly** out);
/* LP_ERR_NOT_DIVISIBLE when no polynomial quotient exists. */
LP_API lp_status lp_poly_exact_div(const lp_poly* f, const lp_poly* g, lp_poly** out);

LP_API int lp_poly_equal(const lp_poly* a, const lp_poly* b);
LP_API size_t lp_poly_term_count(const lp_poly* p);

/* Value at integer (s, t), both given and returned in decimal. */
LP_API lp_status lp_poly_eval(const lp_poly* p, const char* s, const char* t, char** out);

/* *out = 1 iff p is nonzero and every coefficient is positive. */
LP_API lp_status lp_poly_is_positive(const lp_poly* p, int* out);

typedef struct lp_digest {
  uint64_t term_count;
  uint64_t total_degree;
  uint64_t max_coeff_bits;
  uint64_t content_hash;
  uint64_t s_min, s_max, t_min, t_max;
} lp_digest;

LP_API lp_status lp_poly_digest(const lp_poly* p, lp_digest* out);

/* Shared memo of Lucas polynomials and lucanomials. Calls on one context
 * may come from several threads. */

LP_API lp_status lp_context_new(lp_context** out);
LP_API void lp_context_free(lp_context* ctx);

LP_API lp_status lp_lucas(lp_context* ctx, uint32_t n, lp_poly** out);
LP_API lp_status lp_lucastorial(lp_context* ctx, uint32_t n, lp_poly** out);

typedef enum lp_binom_route { LP_BINOM_FACTORIAL = 0, LP_BINOM_RECURRENCE = 1 } lp_binom_route;

/* {m choose k}; zero outside 0 <= k <= m. */
LP_API lp_status lp_binom(lp_context* ctx, uint32_t m, int64_t k, lp_binom_route route, lp_poly** out);

typedef enum lp_catalan_method { LP_CATALAN_DIVISION = 0, LP_CATALAN_IDENTITY = 1 } lp_catalan_method;

/* {2n choose n} / {n+1} by the chosen route, n >= 1. */
LP_API lp_status lp_catalan(lp_context* ctx, uint32_t n, lp_catalan_method method, lp_poly** out);

LP_API lp_status lp_product_identity_check(lp_context* ctx, uint32_t n, int* holds);
LP_API lp_status lp_lemma21_check(lp_context* ctx, uint32_t m, uint32_t n, int* holds);

/* Verification sweeps. */

enum {
  LP_CHECK_IDENTITY = 1u << 0,
  LP_CHECK_POSITIVITY = 1u << 1,
  LP_CHECK_LEMMA21 = 1u << 2,
  LP_CHECK_SPECIALIZATIONS = 1u << 3,
  LP_CHECK_ALL = 0xFu
};

typedef enum lp_format { LP_FORMAT_TEXT = 0, LP_FORMAT_JSON = 1, LP_FORMAT_CSV = 2 } lp_format;

typedef struct lp_sweep_config {
  uint32_t max_n;
  unsigned checks;    /* LP_CHECK_* mask, nonzero */
  unsigned jobs;      /* >= 1 */
  lp_format format;
  size_t term_cutoff; /* polynomials with more terms are reported as a digest */
  const char* spec_point; /* "S,T" or NULL */
} lp_sweep_config;

/* max_n 1, all checks, one job, text, cutoff 64, no point. */
LP_API void lp_sweep_config_init(lp_sweep_config* config);

/* Comma-separated subset of identity, positivity, lemma21, specializations. */
LP_API lp_status lp_parse_checks(const char* text, unsigned* mask);

typedef enum lp_line_kind { LP_LINE_HEADER = 0, LP_LINE_REPORT = 1, LP_LINE_SUMMARY = 2 } lp_line_kind;

/* Receives one rendered line at a time, without a trailing newline. */
typedef void (*lp_line_callback)(lp_line_kind kind, const char* line, void* user);

/* Streams a CSV header (csv only), one report per n in increasing n, then a
 * summary line. *all_ok = 1 iff every check of every n passed. */
LP_API lp_status lp_verify(lp_context* ctx, const lp_sweep_config* config, lp_line_callback callback,
                           void* user, int* all_ok);

/* Randomized property suites: one report line per suite and a summary. */
LP_API lp_status lp_selftest(uint64_t seed, unsigned cases, lp_line_callback callback, void* user,
                             int* all_ok);

#ifdef __cplusplus
}
#endif

#endif /* LUCASPOLY_H */
