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

#include <cctype>
#include <ostream>

#include <json.hpp>

#include "lucaspoly/poly.hpp"
#include "poly_internal.hpp"

namespace lucaspoly {

namespace {

std::string power(char var, Exponent e) {
  return e == 1 ? std::string(1, var) : std::string(1, var) + '^' + std::to_string(e);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty input");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    for (skip_ws(); !at_end(); skip_ws()) {
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(op == '-'));
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected unsigned integer");
    return text_.substr(start, pos_ - start);
  }

  Exponent exponent() {
    const std::size_t start = (skip_ws(), pos_);
    const auto d = digits();
    if (d.size() > 11) {
      pos_ = start;
      fail("exponent out of range");
    }
    const Exponent e = std::stoull(std::string(d));
    if (e > kMaxExponent) {
      pos_ = start;
      fail("exponent out of range");
    }
    return e;
  }

  Term term(bool negative) {
    Term out{0, 0, negative ? -1 : 1};
    factor(out);
    for (skip_ws(); !at_end() && peek() == '*'; skip_ws()) {
      ++pos_;
      factor(out);
    }
    return out;
  }

  void factor(Term& out) {
    skip_ws();
    if (at_end()) fail("expected factor");
    const char c = peek();
    if (c == 's' || c == 't') {
      ++pos_;
      Exponent e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        e = exponent();
      }
      Exponent& slot = c == 's' ? out.s_exp : out.t_exp;
      if (slot + e > kMaxExponent) fail("exponent out of range");
      slot += e;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      out.coeff *= Integer(std::string(digits()));
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& term : f) {
    const bool negative = sgn(term.coeff) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Integer magnitude = abs(term.coeff);
    std::string body;
    if (magnitude != 1 || (term.s_exp == 0 && term.t_exp == 0)) body = magnitude.get_str();
    for (const auto& [var, e] : {std::pair{'s', term.s_exp}, std::pair{'t', term.t_exp}}) {
      if (e == 0) continue;
      if (!body.empty()) body += '*';
      body += power(var, e);
    }
    out += body;
  }
  return out;
}

Polynomial parse(std::string_view text) { return Parser(text).run(); }

std::string to_json(const Polynomial& f) {
  std::string out = "[";
  bool first = true;
  for (const auto& term : f) {
    if (!first) out += ',';
    first = false;
    out += '[';
    out += std::to_string(term.s_exp);
    out += ',';
    out += std::to_string(term.t_exp);
    out += ",\"";
    out += term.coeff.get_str();
    out += "\"]";
  }
  out += ']';
  return out;
}

Polynomial from_json(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON", e.byte == 0 ? 0 : e.byte - 1);
  }
  if (!doc.is_array()) throw ParseError("expected a JSON array of terms", 0);
  std::vector<Term> terms;
  terms.reserve(doc.size());
  for (const auto& entry : doc) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_unsigned() ||
        !entry[1].is_number_unsigned() || !entry[2].is_string()) {
      throw ParseError("expected [s_exp, t_exp, \"coeff\"]", 0);
    }
    const auto& text = entry[2].get_ref<const std::string&>();
    Integer c;
    const bool digits_only = !text.empty() && text.find_first_not_of("0123456789", text[0] == '-' ? 1 : 0) == std::string::npos &&
                             text != "-";
    if (!digits_only || c.set_str(text, 10) != 0) throw ParseError("bad coefficient \"" + text + "\"", 0);
    const auto s_exp = entry[0].get<Exponent>();
    const auto t_exp = entry[1].get<Exponent>();
    if (s_exp > kMaxExponent || t_exp > kMaxExponent) throw ParseError("exponent out of range", 0);
    terms.push_back(Term{s_exp, t_exp, std::move(c)});
  }
  return Polynomial::from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << format(f); }

}  // namespace lucaspoly
