#include "wwlab/series_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace wwlab {

namespace {

std::string term_text(const Monomial& m, std::int64_t c) {
  if (m.is_one()) return std::to_string(c);
  std::string out;
  if (c == -1) out = "-";
  else if (c != 1) out = std::to_string(c) + "*";
  bool first = true;
  for (Var v : kAllVars) {
    const int e = m[v];
    if (e == 0) continue;
    if (!first) out += '*';
    first = false;
    out += var_letter(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Minimal cursor over the text formats.
class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    skip_ws();
    if (s_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

// term := [int '*'] factor ('*' factor)* | int ; factor := var ['^' int]
CoeffPoly::Term parse_term(Cursor& cur, int sign) {
  std::int64_t coeff = sign;
  Monomial m;
  bool need_factor = true;
  if (cur.at_digit()) {
    coeff *= cur.integer();
    if (!cur.accept('*')) return {m, coeff};
  }
  while (need_factor) {
    const char ch = cur.peek();
    if (ch < 'a' || ch > 'd') cur.fail("expected colour variable");
    cur.accept(ch);
    int e = 1;
    if (cur.accept('^')) e = static_cast<int>(cur.integer());
    m = m * Monomial::of(static_cast<Var>(ch - 'a'), e);
    need_factor = cur.accept('*');
  }
  return {m, coeff};
}

CoeffPoly parse_poly(Cursor& cur) {
  std::vector<CoeffPoly::Term> terms;
  int sign = cur.accept('-') ? -1 : 1;
  terms.push_back(parse_term(cur, sign));
  for (;;) {
    if (cur.accept('+')) sign = 1;
    else if (cur.accept('-')) sign = -1;
    else break;
    terms.push_back(parse_term(cur, sign));
  }
  return CoeffPoly::from_terms(std::move(terms));
}

}  // namespace

std::string to_text(const CoeffPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    std::string t = term_text(m, c);
    if (!out.empty() && t.front() != '-') out += '+';
    out += t;
  }
  return out;
}

CoeffPoly parse_coeff_poly(std::string_view text) {
  Cursor cur(text);
  if (cur.accept('0') && cur.done()) return {};
  Cursor fresh(text);
  CoeffPoly p = parse_poly(fresh);
  if (!fresh.done()) fresh.fail("trailing characters");
  return p;
}

std::string to_text(const QSeries& s) {
  std::ostringstream out;
  for (std::size_t n = 0; n < s.trunc(); ++n) {
    const CoeffPoly& c = s[n];
    if (c.is_zero()) continue;
    if (n == 0 && c.is_monomial()) out << to_text(c);
    else out << '(' << to_text(c) << ')';
    if (n == 1) out << "*q";
    else if (n > 1) out << "*q^" << n;
    out << " + ";
  }
  out << "O(q^" << s.trunc() << ')';
  return out.str();
}

QSeries parse_series(std::string_view text) {
  Cursor cur(text);
  std::vector<std::pair<std::size_t, CoeffPoly>> pieces;
  for (;;) {
    if (cur.accept("O(")) {
      cur.expect('q');
      long trunc = 1;
      if (cur.accept('^')) trunc = cur.integer();
      cur.expect(')');
      if (!cur.done()) cur.fail("trailing characters after O(...)");
      if (trunc < 0) cur.fail("negative truncation order");
      std::vector<CoeffPoly> coeffs(static_cast<std::size_t>(trunc));
      for (auto& [n, c] : pieces) {
        if (n >= coeffs.size()) cur.fail("term beyond truncation order");
        coeffs[n] += c;
      }
      return QSeries(static_cast<std::size_t>(trunc), std::move(coeffs));
    }
    CoeffPoly c;
    std::size_t n = 0;
    if (cur.accept('(')) {
      c = parse_poly(cur);
      cur.expect(')');
      if (cur.accept('*')) {
        cur.expect('q');
        n = 1;
        if (cur.accept('^')) {
          const long e = cur.integer();
          if (e < 0) cur.fail("negative q-exponent");
          n = static_cast<std::size_t>(e);
        }
      }
    } else {
      c = CoeffPoly::from_terms({parse_term(cur, cur.accept('-') ? -1 : 1)});
    }
    pieces.emplace_back(n, std::move(c));
    cur.expect('+');
  }
}

nlohmann::json to_json(const QSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, v] : c.terms()) terms.push_back({m.exponents(), v});
    coeffs.push_back(std::move(terms));
  }
  return {{"trunc", s.trunc()}, {"coeffs", std::move(coeffs)}};
}

QSeries series_from_json(const nlohmann::json& j) {
  try {
    const auto trunc = j.at("trunc").get<std::size_t>();
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != trunc) throw std::invalid_argument("series JSON: coeffs length differs from trunc");
    std::vector<CoeffPoly> out;
    out.reserve(trunc);
    for (const auto& terms : coeffs) {
      std::vector<CoeffPoly::Term> ts;
      for (const auto& t : terms)
        ts.emplace_back(Monomial(t.at(0).get<Monomial::Exponents>()), t.at(1).get<std::int64_t>());
      out.push_back(CoeffPoly::from_terms(std::move(ts)));
    }
    return QSeries(trunc, std::move(out));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("series JSON: ") + e.what());
  }
}

}  // namespace wwlab
