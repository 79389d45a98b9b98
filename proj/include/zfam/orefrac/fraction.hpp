#pragma once

// Left fractions b^{-1} a in the skew field of fractions.

#include <zfam/orefrac/ore.hpp>

namespace zfam::ore {

class Fraction {
 public:
  /// b^{-1} a.
  Fraction(AlgebraElement den, AlgebraElement num) : den_(std::move(den)), num_(std::move(num)) {
    den_.check_compatible(num_);
    if (den_.is_zero()) throw std::invalid_argument("fraction with zero denominator");
  }
  /// 1^{-1} a.
  static Fraction embed(const AlgebraElement& a) { return Fraction(AlgebraElement::one(a.instance()), a); }
  static Fraction scalar(const FamilyInstance& inst, long c) { return embed(AlgebraElement::scalar(inst, c)); }

  const AlgebraElement& den() const { return den_; }
  const AlgebraElement& num() const { return num_; }
  const FamilyInstance& instance() const { return den_.instance(); }
  bool is_zero() const { return num_.is_zero(); }

  Fraction operator-() const { return Fraction(den_, -num_); }

  /// "inv(b) * (a)".
  std::string to_string() const { return "inv(" + den_.to_string() + ") * (" + num_.to_string() + ")"; }

  /// Same fraction over another domain.
  Fraction converted(const Domain& d) const { return Fraction(den_.converted(d), num_.converted(d)); }

 private:
  AlgebraElement den_, num_;
};

/// Zero -> 1^{-1} 0; exact left division b^{-1} (b q) -> 1^{-1} q; otherwise a
/// monic denominator over fields.
inline Fraction normalize(const Fraction& f) {
  const auto& inst = f.instance();
  if (f.num().is_zero()) return Fraction::embed(AlgebraElement(inst));
  if (auto q = exact_quotient(f.num(), f.den())) return Fraction::embed(*q);
  if (!inst.domain.is_field()) return f;
  Coefficient lc = f.den().leading().second.inverse();
  return Fraction(f.den().scaled(lc), f.num().scaled(lc));
}

inline Fraction frac_add(const Fraction& u, const Fraction& v, const OreBounds& bounds = {}) {
  u.den().check_compatible(v.den());
  // x b_u = y b_v: b_u^{-1} a_u + b_v^{-1} a_v = (x b_u)^{-1} (x a_u + y a_v)
  auto s = solve_ore(u.den(), v.den(), bounds);
  return normalize(Fraction(s.c * u.den(), s.c * u.num() + s.d * v.num()));
}

inline Fraction frac_sub(const Fraction& u, const Fraction& v, const OreBounds& bounds = {}) { return frac_add(u, -v, bounds); }

inline Fraction frac_mul(const Fraction& u, const Fraction& v, const OreBounds& bounds = {}) {
  u.den().check_compatible(v.den());
  if (u.is_zero() || v.is_zero()) return Fraction::embed(AlgebraElement(u.instance()));
  // a d^{-1} = d'^{-1} a' with d' a = a' d; then b^{-1} a d^{-1} c = (d' b)^{-1} (a' c)
  auto s = solve_ore(u.num(), v.den(), bounds);
  return normalize(Fraction(s.c * u.den(), s.d * v.num()));
}

/// Exact: x b_u = y b_v, then u = v iff x a_u = y a_v.
inline bool frac_eq(const Fraction& u, const Fraction& v, const OreBounds& bounds = {}) {
  u.den().check_compatible(v.den());
  auto s = solve_ore(u.den(), v.den(), bounds);
  return s.c * u.num() == s.d * v.num();
}

inline Fraction frac_commutator(const Fraction& u, const Fraction& v, const OreBounds& bounds = {}) {
  return frac_sub(frac_mul(u, v, bounds), frac_mul(v, u, bounds), bounds);
}

inline Fraction frac_pow(const Fraction& u, unsigned e, const OreBounds& bounds = {}) {
  Fraction r = Fraction::scalar(u.instance(), 1);
  for (unsigned i = 0; i < e; ++i) r = frac_mul(r, u, bounds);
  return r;
}

/// Parses "inv(<element>) * (<element>)" or a bare element (denominator 1).
inline Fraction parse_fraction(const std::string& text, const FamilyInstance& inst,
                               const std::vector<AlgebraElement>& centers = {}) {
  std::size_t i = text.find_first_not_of(" \t\n");
  if (i == std::string::npos) throw ParseError("empty fraction literal");
  if (text.compare(i, 4, "inv(") != 0) return Fraction::embed(nc::parse_element(text, inst, centers));
  auto closing = [&](std::size_t open) {
    int depth = 0;
    for (std::size_t k = open; k < text.size(); ++k) {
      if (text[k] == '(') ++depth;
      else if (text[k] == ')' && --depth == 0) return k;
    }
    throw ParseError("unbalanced parentheses in \"" + text + "\"");
  };
  std::size_t open1 = i + 3, close1 = closing(open1);
  std::size_t star = text.find_first_not_of(" \t\n", close1 + 1);
  if (star == std::string::npos || text[star] != '*') throw ParseError("expected '*' after inv(...) in \"" + text + "\"");
  std::size_t open2 = text.find_first_not_of(" \t\n", star + 1);
  if (open2 == std::string::npos || text[open2] != '(') throw ParseError("expected '(' before the numerator in \"" + text + "\"");
  std::size_t close2 = closing(open2);
  if (text.find_first_not_of(" \t\n", close2 + 1) != std::string::npos) throw ParseError("trailing text in \"" + text + "\"");
  auto den = nc::parse_element(text.substr(open1 + 1, close1 - open1 - 1), inst, centers);
  auto num = nc::parse_element(text.substr(open2 + 1, close2 - open2 - 1), inst, centers);
  if (den.is_zero()) throw ParseError("zero denominator in \"" + text + "\"");
  return Fraction(den, num);
}

}  // namespace zfam::ore
