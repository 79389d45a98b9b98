#pragma once

// Generic parser for noncommutative polynomial text: signed terms of
// '*'-separated factors, each a rational number or a symbol with optional '^k'.
// Factor order is preserved; interpretation is left to the caller.

#include <zfam/polycore/text.hpp>

namespace zfam::nc {

struct WordFactor {
  std::string symbol;
  unsigned power = 1;
  friend bool operator==(const WordFactor&, const WordFactor&) = default;
};

struct WordTerm {
  mpq_class coeff = 1;
  std::vector<WordFactor> factors;
};

namespace detail {

inline bool symbol_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
inline bool symbol_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '.' || c == '_'; }

}  // namespace detail

inline std::vector<WordTerm> parse_words(const std::string& text) {
  zfam::detail::Cursor cur(text);
  std::vector<WordTerm> out;
  if (cur.done()) cur.fail("empty expression");
  bool first = true;
  while (!cur.done()) {
    WordTerm t;
    if (cur.accept('+')) {
    } else if (cur.accept('-')) t.coeff = -1;
    else if (!first) cur.fail("expected '+' or '-'");
    first = false;
    do {
      if (cur.at_digit()) {
        mpq_class q(cur.number());
        if (cur.accept('/')) {
          mpz_class den = cur.number();
          if (den == 0) cur.fail("zero denominator");
          q /= den;
        }
        t.coeff *= q;
      } else if (detail::symbol_start(cur.peek())) {
        const auto& s = cur.text();
        std::size_t j = cur.pos();
        while (j < s.size() && detail::symbol_char(s[j])) ++j;
        WordFactor f{s.substr(cur.pos(), j - cur.pos()), 1};
        cur.advance(j - cur.pos());
        if (cur.accept('^')) f.power = cur.small_number();
        t.factors.push_back(std::move(f));
      } else {
        cur.fail("expected a coefficient or symbol");
      }
    } while (cur.accept('*'));
    t.coeff.canonicalize();
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace zfam::nc
