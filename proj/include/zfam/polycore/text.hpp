#pragma once

// Canonical ASCII form of polynomials: variables v0..v{N-1}, integer or num/den
// coefficients, '^' powers, '*' products, '+'/'-' between terms.

#include <zfam/polycore/poly.hpp>

#include <cctype>
#include <sstream>

namespace zfam {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(line ? msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")" : msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

namespace detail {

inline std::string monomial_text(const Monomial& m, const std::string& prefix = "v") {
  std::string s;
  for (auto [v, e] : m.entries()) {
    if (!s.empty()) s += '*';
    s += prefix + std::to_string(v);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

/// Joins signed terms "c*m" into "a - b + c" form.
inline void append_term(std::string& out, const Coefficient& c, const std::string& mono) {
  const bool neg = c.sign() < 0;
  Coefficient mag = neg ? -c : c;
  std::string coeff = mag.to_string();
  std::string body;
  if (mono.empty()) body = coeff;
  else if (mag.is_one()) body = mono;
  else body = coeff + "*" + mono;
  if (out.empty()) out = neg ? "-" + body : body;
  else out += (neg ? " - " : " + ") + body;
}

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i_;
      return true;
    }
    return false;
  }
  bool accept(const std::string& word) {
    skip_ws();
    if (s_.compare(i_, word.size(), word) == 0) {
      i_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  mpz_class number() {
    skip_ws();
    std::size_t j = i_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    if (j == i_) fail("expected a number");
    mpz_class z(s_.substr(i_, j - i_));
    i_ = j;
    return z;
  }
  std::uint32_t small_number() {
    mpz_class z = number();
    if (!z.fits_uint_p()) fail("number too large");
    return static_cast<std::uint32_t>(z.get_ui());
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  std::size_t pos() const { return i_; }
  void advance(std::size_t n) { i_ = std::min(i_ + n, s_.size()); }
  const std::string& text() const { return s_; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(i_) + " in \"" + s_ + "\"");
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Render with terms descending under the order.
inline std::string to_string(const Poly& p, const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.sorted_terms(order)) detail::append_term(out, c, detail::monomial_text(m));
  return out;
}

/// Parse a polynomial in `arity` variables with coefficients mapped into `domain`.
inline Poly parse_poly(const std::string& text, std::uint32_t arity, const Domain& domain) {
  detail::Cursor cur(text);
  Poly p(arity, domain);
  if (cur.done()) cur.fail("empty polynomial");
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (cur.accept('+')) {
    } else if (cur.accept('-')) sign = -1;
    else if (!first) cur.fail("expected '+' or '-'");
    first = false;
    mpq_class coeff = sign;
    Monomial mono;
    bool factor_seen = false;
    do {
      if (cur.at_digit()) {
        mpq_class q(cur.number());
        if (cur.accept('/')) {
          mpz_class den = cur.number();
          if (den == 0) cur.fail("zero denominator");
          q /= den;
        }
        coeff *= q;
      } else if (cur.accept('v')) {
        if (!cur.at_digit()) cur.fail("expected variable index");
        std::uint32_t v = cur.small_number();
        if (v >= arity) cur.fail("variable v" + std::to_string(v) + " out of range for arity " + std::to_string(arity));
        std::uint32_t e = 1;
        if (cur.accept('^')) e = cur.small_number();
        mono = mono * Monomial::variable(v, e);
      } else {
        cur.fail("expected a coefficient or variable");
      }
      factor_seen = true;
    } while (cur.accept('*'));
    if (!factor_seen) cur.fail("empty term");
    coeff.canonicalize();
    p.add_term(mono, Coefficient::from_rational(coeff, domain));
  }
  return p;
}

}  // namespace zfam
