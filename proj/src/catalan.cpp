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

#include "lucaspoly/catalan.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "lucaspoly/oracles.hpp"

namespace lucaspoly {

namespace {

// Everything the checks need for one n, produced by the central chain.
struct ChainOutput {
  Index n = 0;
  std::optional<Polynomial> near_central;  // {2n-1 choose n-1}
  std::optional<Polynomial> quotient;      // {2n choose n} / {n+1}
  std::optional<Polynomial> central;       // {2n choose n}, only for lemma21
  std::vector<std::string> failures;
};

ChainOutput run_chain(LucanomialEngine& engine, Index n, const VerifyOptions& options) {
  ChainOutput out;
  out.n = n;
  try {
    out.near_central = engine.near_central(n);
    if (options.checks.lemma21) out.central = engine.central(n);
    out.quotient = engine.central_quotient(n);
  } catch (const InternalNonDivisible& e) {
    out.failures.emplace_back(e.what());
  }
  return out;
}

std::string term_text(const Term& term) {
  return format(Polynomial::monomial(term.s_exp, term.t_exp, term.coeff));
}

std::string point_text(const Integer& s, const Integer& t) {
  return "(" + s.get_str() + "," + t.get_str() + ")";
}

void check_value(const Polynomial& f, const Integer& s, const Integer& t, const Integer& expected,
                 const char* oracle, std::vector<std::string>& failures) {
  const Integer got = evaluate(f, s, t);
  if (got != expected) {
    failures.push_back("value at " + point_text(s, t) + " is " + got.get_str() + ", " + oracle +
                       " oracle gives " + expected.get_str());
  }
}

bool run_lemma21(LucasCache& cache, const ChainOutput& chain, const Polynomial* identity,
                 std::vector<std::string>& failures) {
  const Index n = chain.n;
  bool ok = true;
  auto record = [&](const IdentityVerdict& v, const std::string& what) {
    if (v) return;
    ok = false;
    failures.push_back(what + " fails: " + v.lhs + " != " + v.rhs);
  };
  const auto product = product_identity_check(cache, n);
  const auto diagonal = lemma21_check(cache, n, n);
  record(product, "product identity at n=" + std::to_string(n));
  record(diagonal, "lemma at (" + std::to_string(n) + "," + std::to_string(n) + ")");
  if (product.holds != diagonal.holds) {
    ok = false;
    failures.push_back("lemma diagonal and product identity disagree at n=" + std::to_string(n));
  }
  // Rows and columns up to the diagonal cover the grid [1, 50]^2 once max_n >= 50.
  if (n <= 50) {
    for (Index m = 1; m < n; ++m) {
      record(lemma21_check(cache, m, n), "lemma at (" + std::to_string(m) + "," + std::to_string(n) + ")");
      record(lemma21_check(cache, n, m), "lemma at (" + std::to_string(n) + "," + std::to_string(m) + ")");
    }
  }
  if (identity && chain.central) {
    if (!(*identity * cache.lucas(n + 1) == *chain.central)) {
      ok = false;
      failures.push_back("identity route times {n+1} does not reproduce {2n choose n} at n=" +
                         std::to_string(n));
    }
  }
  return ok;
}

bool run_specializations(const Polynomial& catalan, Index n, std::vector<std::string>& failures) {
  const std::size_t before = failures.size();
  check_value(catalan, 2, -1, oracles::catalan_number(n), "Catalan", failures);
  check_value(catalan, 1, 1, oracles::fibonomial_catalan(n), "Fibonomial-Catalan", failures);
  for (int q : {2, 3}) check_value(catalan, q + 1, -q, oracles::q_catalan_at(n, q), "q-Catalan", failures);
  return failures.size() == before;
}

VerificationReport finish(LucasCache& cache, ChainOutput chain, const VerifyOptions& options) {
  VerificationReport report;
  report.n = chain.n;
  std::vector<std::string> failures = std::move(chain.failures);
  report.division_ok = chain.quotient.has_value();

  try {
    std::optional<Polynomial> identity;
    if (options.checks.identity || options.checks.lemma21) {
      if (chain.near_central) {
        try {
          identity = catalan_via_identity_from(cache, chain.n, *chain.near_central);
        } catch (const InternalNonDivisible& e) {
          failures.emplace_back(e.what());
        }
      }
    }
    if (options.checks.identity) {
      report.identity_ok = identity && chain.quotient && *identity == *chain.quotient;
      if (identity && chain.quotient && !report.identity_ok) {
        const Polynomial diff = *chain.quotient - *identity;
        failures.push_back("division and identity routes differ in " + std::to_string(diff.size()) +
                           " terms; leading difference " + term_text(diff.leading()));
      } else if (!identity) {
        report.identity_ok = false;
      }
    }
    if (options.checks.positivity) {
      if (chain.quotient) {
        const auto verdict = check_positive(*chain.quotient);
        report.positivity_ok = verdict.positive;
        if (verdict.zero_polynomial) {
          failures.emplace_back("quotient is the zero polynomial");
        } else if (verdict.offending) {
          failures.push_back("nonpositive coefficient in term " + term_text(*verdict.offending));
        }
      } else {
        report.positivity_ok = false;
      }
    }
    if (options.checks.lemma21) {
      report.extra_ok = run_lemma21(cache, chain, identity ? &*identity : nullptr, failures) && report.extra_ok;
    }
    if (options.checks.specializations && chain.quotient) {
      report.extra_ok = run_specializations(*chain.quotient, chain.n, failures) && report.extra_ok;
    }
  } catch (const std::exception& e) {
    report.extra_ok = false;
    failures.emplace_back(e.what());
  }

  if (chain.quotient) {
    report.catalan_digest = digest(*chain.quotient);
    if (options.spec_point) report.spec_value = evaluate(*chain.quotient, options.spec_point->s, options.spec_point->t);
    if (chain.quotient->size() <= options.term_cutoff) report.catalan_poly = std::move(chain.quotient);
  }
  if (!report.all_ok() || !failures.empty()) {
    if (failures.empty()) failures.emplace_back("check failed without detail");
    std::string joined;
    for (const auto& f : failures) joined += (joined.empty() ? "" : "; ") + f;
    report.failure = std::move(joined);
    // A failure message always means some flag is false.
    if (report.all_ok()) report.extra_ok = false;
  }
  return report;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Integer parse_integer(const std::string& text) {
  const std::string s = trim(text);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size() || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                                    [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

void fnv1a(std::uint64_t& h, const unsigned char* p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
}

void fnv1a_u64(std::uint64_t& h, std::uint64_t v) {
  unsigned char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(v >> (8 * i));
  fnv1a(h, bytes, 8);
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<std::size_t>(i)] = digits[v & 0xF];
  return out;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          out += "\\u00";
          out += hex64(static_cast<unsigned char>(c)).substr(14);
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

Polynomial catalan_via_division(LucanomialEngine& engine, Index n) {
  if (n < 1) throw std::invalid_argument("catalan_via_division needs n >= 1");
  return engine.central_quotient(n);
}

Polynomial catalan_via_identity(LucanomialEngine& engine, Index n) {
  if (n < 1) throw std::invalid_argument("catalan_via_identity needs n >= 1");
  return catalan_via_identity_from(engine.cache(), n, engine.near_central(n));
}

Polynomial catalan_via_identity_from(LucasCache& cache, Index n, const Polynomial& near_central) {
  if (n < 2) return near_central;
  const Polynomial second = certified_div(near_central * cache.lucas(n - 1), cache.lucas(n + 1),
                                          binom_label(2 * n - 1, static_cast<std::int64_t>(n) - 2));
  return near_central + shift(second, 0, 1);
}

CheckSet parse_checks(const std::string& text) {
  CheckSet set{false, false, false, false};
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item == "identity") set.identity = true;
    else if (item == "positivity") set.positivity = true;
    else if (item == "lemma21") set.lemma21 = true;
    else if (item == "specializations") set.specializations = true;
    else throw std::invalid_argument("unknown check '" + item + "'");
  }
  if (!set.any()) throw std::invalid_argument("no checks selected");
  return set;
}

SpecPoint parse_spec_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw std::invalid_argument("expected S,T but got '" + text + "'");
  }
  return {parse_integer(text.substr(0, comma)), parse_integer(text.substr(comma + 1))};
}

OutputFormat parse_format(const std::string& text) {
  if (text == "text") return OutputFormat::kText;
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  throw std::invalid_argument("unknown format '" + text + "'");
}

PolyDigest digest(const Polynomial& f) {
  PolyDigest d;
  d.term_count = f.size();
  d.total_degree = f.total_degree();
  d.max_coeff_bits = f.max_coeff_bits();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  std::vector<unsigned char> bytes;
  bool first = true;
  for (const auto& term : f) {
    fnv1a_u64(h, term.s_exp);
    fnv1a_u64(h, term.t_exp);
    const unsigned char sign = sgn(term.coeff) < 0 ? 1 : 0;
    fnv1a(h, &sign, 1);
    const std::size_t len = (mpz_sizeinbase(term.coeff.get_mpz_t(), 2) + 7) / 8;
    bytes.resize(len);
    std::size_t written = 0;
    mpz_export(bytes.data(), &written, 1, 1, 1, 0, term.coeff.get_mpz_t());
    fnv1a_u64(h, written);
    fnv1a(h, bytes.data(), written);
    if (first) {
      d.s_min = d.s_max = term.s_exp;
      d.t_min = d.t_max = term.t_exp;
      first = false;
    } else {
      d.s_min = std::min(d.s_min, term.s_exp);
      d.s_max = std::max(d.s_max, term.s_exp);
      d.t_min = std::min(d.t_min, term.t_exp);
      d.t_max = std::max(d.t_max, term.t_exp);
    }
  }
  d.content_hash = h;
  return d;
}

VerificationReport verify_n(LucanomialEngine& engine, Index n, const VerifyOptions& options) {
  if (n < 1) throw std::invalid_argument("verify_n needs n >= 1");
  return finish(engine.cache(), run_chain(engine, n, options), options);
}

SweepSummary sweep(LucanomialEngine& engine, const SweepConfig& config, const ReportSink& sink) {
  if (config.max_n < 1) throw std::invalid_argument("max_n must be at least 1");
  if (config.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  if (!config.options.checks.any()) throw std::invalid_argument("no checks selected");

  SweepSummary summary;
  auto emit = [&](const VerificationReport& report) {
    ++summary.total;
    if (report.all_ok()) ++summary.passed;
    sink(report);
  };
  LucasCache& cache = engine.cache();
  std::deque<std::future<VerificationReport>> inflight;
  for (Index n = 1; n <= config.max_n; ++n) {
    ChainOutput chain = run_chain(engine, n, config.options);
    if (config.jobs == 1) {
      emit(finish(cache, std::move(chain), config.options));
      continue;
    }
    inflight.push_back(std::async(std::launch::async, [&cache, &config, c = std::move(chain)]() mutable {
      return finish(cache, std::move(c), config.options);
    }));
    while (inflight.size() >= config.jobs) {
      emit(inflight.front().get());
      inflight.pop_front();
    }
  }
  while (!inflight.empty()) {
    emit(inflight.front().get());
    inflight.pop_front();
  }
  return summary;
}

std::string digest_json(const PolyDigest& d) {
  std::ostringstream out;
  out << "{\"term_count\":" << d.term_count << ",\"total_degree\":" << d.total_degree
      << ",\"max_coeff_bits\":" << d.max_coeff_bits << ",\"hash\":\"" << hex64(d.content_hash)
      << "\",\"support\":{\"s\":[" << d.s_min << "," << d.s_max << "],\"t\":[" << d.t_min << "," << d.t_max
      << "]}}";
  return out.str();
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  out << (report.all_ok() ? "PASS" : "FAIL") << " n=" << report.n;
  if (report.catalan_poly) {
    out << " catalan=" << format(*report.catalan_poly);
  } else if (report.division_ok) {
    const auto& d = report.catalan_digest;
    out << " catalan=[terms=" << d.term_count << " total_degree=" << d.total_degree
        << " max_coeff_bits=" << d.max_coeff_bits << " hash=" << hex64(d.content_hash) << "]";
  }
  if (report.spec_value) out << " value=" << report.spec_value->get_str();
  if (!report.all_ok()) {
    out << " division_ok=" << flag(report.division_ok) << " identity_ok=" << flag(report.identity_ok)
        << " positivity_ok=" << flag(report.positivity_ok) << " extra_ok=" << flag(report.extra_ok);
  }
  if (report.failure) out << " failure=" << *report.failure;
  return out.str();
}

std::string render_json(const VerificationReport& report) {
  std::string out = "{\"n\":" + std::to_string(report.n) + ",\"division_ok\":" + flag(report.division_ok) +
                    ",\"identity_ok\":" + flag(report.identity_ok) +
                    ",\"positivity_ok\":" + flag(report.positivity_ok) + ",\"catalan\":";
  if (report.catalan_poly) {
    out += to_json(*report.catalan_poly);
  } else if (report.division_ok) {
    out += "{\"digest\":" + digest_json(report.catalan_digest) + "}";
  } else {
    out += "null";
  }
  out += ",\"failure\":" + (report.failure ? json_string(*report.failure) : std::string("null"));
  out += ",\"extra_ok\":" + std::string(flag(report.extra_ok));
  if (report.spec_value) out += ",\"value\":\"" + report.spec_value->get_str() + "\"";
  return out + "}";
}

std::string render_csv_header() { return "n,term_count,total_degree,max_coeff_bits,all_ok"; }

std::string render_csv(const VerificationReport& report) {
  const auto& d = report.catalan_digest;
  return std::to_string(report.n) + "," + std::to_string(d.term_count) + "," + std::to_string(d.total_degree) +
         "," + std::to_string(d.max_coeff_bits) + "," + flag(report.all_ok());
}

std::string render_summary(const SweepSummary& summary) {
  return "summary: " + std::to_string(summary.passed) + "/" + std::to_string(summary.total) + " passed, " +
         (summary.all_ok() ? "all checks hold" : std::to_string(summary.total - summary.passed) + " failed");
}

}  // namespace lucaspoly
