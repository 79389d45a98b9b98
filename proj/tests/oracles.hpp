#pragma once

// Test-only oracles, independent of the library code paths they check.

#include <zfam/polycore.hpp>

#include <random>

namespace zfam::oracle {

/// GF(25) = GF(5)[s]/(s^2 - 2); elements a + b*s.
struct F25 {
  int a = 0, b = 0;
  friend F25 operator+(F25 x, F25 y) { return {(x.a + y.a) % 5, (x.b + y.b) % 5}; }
  friend F25 operator*(F25 x, F25 y) {
    // (a + bs)(c + ds) = ac + 2bd + (ad + bc)s
    return {(x.a * y.a + 2 * x.b * y.b) % 5, (x.a * y.b + x.b * y.a) % 5};
  }
  bool zero() const { return a == 0 && b == 0; }
};

inline F25 eval_f25(const Poly& p, const std::vector<F25>& pt) {
  F25 acc;
  for (const auto& [m, c] : p.terms()) {
    F25 t{static_cast<int>(c.residue_value()), 0};
    for (auto [v, e] : m.entries())
      for (std::uint32_t k = 0; k < e; ++k) t = t * pt[v];
    acc = acc + t;
  }
  return acc;
}

/// Exhaustive search for a point of a GF(5) locally closed system over GF(5)
/// (subfield_only) or GF(25).
inline bool has_point(const LocallyClosedSystem& sys, bool subfield_only) {
  const int q = subfield_only ? 5 : 25;
  std::vector<F25> pt(sys.arity);
  std::vector<int> idx(sys.arity, 0);
  while (true) {
    for (std::uint32_t v = 0; v < sys.arity; ++v) pt[v] = F25{idx[v] % 5, idx[v] / 5};
    bool ok = true;
    for (const auto& f : sys.equations)
      if (!eval_f25(f, pt).zero()) {
        ok = false;
        break;
      }
    if (ok) {
      bool some = sys.inequations.empty();
      for (const auto& g : sys.inequations)
        if (!eval_f25(g, pt).zero()) some = true;
      if (some) return true;
    }
    std::uint32_t v = 0;
    while (v < sys.arity && ++idx[v] == q) idx[v++] = 0;
    if (v == sys.arity) return false;
  }
}

// Dense univariate polynomials over QQ, lowest degree first.
using UPoly = std::vector<mpq_class>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly urem(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return a;
}

inline UPoly ugcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = urem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline UPoly uderiv(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

inline UPoly uquot(UPoly a, const UPoly& b) {
  trim(a);
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return q;
}

inline UPoly to_upoly(const Poly& p) {
  UPoly u(p.total_degree() + 1, 0);
  for (const auto& [m, c] : p.terms()) u[m.degree()] = c.as_rational();
  trim(u);
  return u;
}

/// Nonemptiness of a univariate QQ system by gcd / squarefree analysis.
inline bool univariate_nonempty(const LocallyClosedSystem& sys) {
  UPoly g;  // gcd of equations; empty = zero polynomial
  for (const auto& f : sys.equations) g = ugcd(g, to_upoly(f));
  if (sys.inequations.empty()) return g.size() != 1;  // zero or nonconstant
  for (const auto& h : sys.inequations) {
    UPoly hv = to_upoly(h);
    if (hv.empty()) continue;
    if (g.empty()) return true;
    if (g.size() == 1) continue;  // no points
    UPoly rad = uquot(g, ugcd(g, uderiv(g)));
    if (!urem(hv, rad).empty()) return true;
  }
  return false;
}

inline Poly random_poly(std::mt19937& rng, std::uint32_t arity, const Domain& d, unsigned max_deg, unsigned max_terms,
                        int coeff_range = 4) {
  Poly p(arity, d);
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::uniform_int_distribution<unsigned> var(0, arity ? arity - 1 : 0);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  const unsigned n = nterms(rng);
  for (unsigned t = 0; t < n; ++t) {
    Monomial m;
    const unsigned dd = deg(rng);
    for (unsigned k = 0; k < dd && arity; ++k) m = m * Monomial::variable(var(rng));
    p.add_term(m, Coefficient::from_integer(static_cast<long>(coeff(rng)), d));
  }
  return p;
}

}  // namespace zfam::oracle
