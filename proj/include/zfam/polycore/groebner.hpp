#pragma once

// Buchberger's algorithm with the Gebauer-Moeller pair criteria, multivariate
// division, and reduced bases.

#include <zfam/polycore/poly.hpp>

#include <chrono>
#include <cstddef>
#include <list>
#include <optional>

namespace zfam {

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caps on a single Groebner computation. Zero means unlimited.
struct GroebnerLimits {
  std::size_t max_pairs = 0;
  std::size_t max_basis = 0;
  double max_seconds = 0;
};

namespace detail {

/// Polynomial with its terms kept sorted descending under a fixed order.
struct OrderedPoly {
  struct Cmp {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->less(b, a); }
  };
  using Terms = std::map<Monomial, Coefficient, Cmp>;

  Terms terms;

  explicit OrderedPoly(const MonomialOrder& o) : terms(Cmp{&o}) {}
  OrderedPoly(const Poly& p, const MonomialOrder& o) : terms(Cmp{&o}) {
    for (const auto& [m, c] : p.terms()) terms.emplace(m, c);
  }

  bool empty() const { return terms.empty(); }
  const Monomial& lm() const { return terms.begin()->first; }
  const Coefficient& lc() const { return terms.begin()->second; }

  void add(const Monomial& m, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  /// this -= c * mono * g
  void sub_multiple(const OrderedPoly& g, const Monomial& mono, const Coefficient& c) {
    for (const auto& [m, k] : g.terms) add(m * mono, -(k * c));
  }

  Poly to_poly(std::uint32_t arity, const Domain& d) const {
    Poly p(arity, d);
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
  }
};

/// Full reduction of f by the list G (all elements nonzero, any leading coefficients).
inline OrderedPoly reduce_full(OrderedPoly f, const std::vector<const OrderedPoly*>& G, const MonomialOrder& order) {
  OrderedPoly rem(order);
  while (!f.empty()) {
    const Monomial lm = f.lm();
    const Coefficient lc = f.lc();
    const OrderedPoly* divisor = nullptr;
    for (const auto* g : G)
      if (g->lm().divides(lm)) {
        divisor = g;
        break;
      }
    if (!divisor) {
      rem.terms.emplace(lm, lc);
      f.terms.erase(f.terms.begin());
      continue;
    }
    f.sub_multiple(*divisor, lm.divide(divisor->lm()), lc / divisor->lc());
  }
  return rem;
}

inline void make_monic(OrderedPoly& f) {
  if (f.empty() || f.lc().is_one()) return;
  Coefficient inv = f.lc().inverse();
  for (auto& [m, c] : f.terms) c *= inv;
}

}  // namespace detail

/// Remainder of multivariate division of f by basis under order. For a Groebner
/// basis, zero exactly when f lies in the ideal.
inline Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order) {
  if (!f.domain().is_field()) throw DomainError("normal_form requires field coefficients");
  std::vector<detail::OrderedPoly> G;
  for (const auto& g : basis) {
    f.check_compatible(g);
    if (!g.is_zero()) G.emplace_back(g, order);
  }
  std::vector<const detail::OrderedPoly*> ptrs;
  for (const auto& g : G) ptrs.push_back(&g);
  return detail::reduce_full(detail::OrderedPoly(f, order), ptrs, order).to_poly(f.arity(), f.domain());
}

/// Reduced Groebner basis (monic, pairwise reduced, sorted descending by leading
/// monomial). The zero ideal gives an empty basis.
inline std::vector<Poly> groebner_basis(const std::vector<Poly>& ideal, const MonomialOrder& order,
                                        const GroebnerLimits& limits = {}) {
  if (ideal.empty()) throw std::invalid_argument("groebner_basis needs at least one generator");
  const std::uint32_t arity = ideal.front().arity();
  const Domain domain = ideal.front().domain();
  if (!domain.is_field()) throw DomainError("groebner_basis requires field coefficients (QQ or GF(p)), got " + domain.name());
  for (const auto& g : ideal) ideal.front().check_compatible(g);

  const auto start = std::chrono::steady_clock::now();
  auto check_time = [&] {
    if (limits.max_seconds > 0) {
      std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
      if (el.count() > limits.max_seconds) throw ResourceLimit("groebner basis time limit exceeded");
    }
  };

  // all polynomials ever added; `active` marks the current basis G
  std::vector<detail::OrderedPoly> polys;
  polys.reserve(ideal.size() * 4);
  std::vector<bool> active;
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::list<Pair> pairs;

  auto active_ptrs = [&] {
    std::vector<const detail::OrderedPoly*> out;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) out.push_back(&polys[k]);
    return out;
  };

  bool unit = false;
  auto update = [&](std::size_t h) {
    const Monomial& lh = polys[h].lm();
    if (lh.is_one()) unit = true;
    // candidate new pairs {g, h}
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> C;
    for (std::size_t g = 0; g < h; ++g)
      if (active[g]) C.push_back({g, lcm(polys[g].lm(), lh), coprime(polys[g].lm(), lh)});
    std::vector<Cand> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      bool keep = C[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(C[a].lcm)) keep = false;
        for (const auto& d : D)
          if (keep && d.lcm.divides(C[a].lcm)) keep = false;
      }
      if (keep) D.push_back(C[a]);
    }
    std::vector<Cand> E;
    for (auto& d : D)
      if (!d.coprime) E.push_back(d);
    for (auto it = pairs.begin(); it != pairs.end();) {
      if (lh.divides(it->lcm) && !(lcm(polys[it->i].lm(), lh) == it->lcm) &&
          !(lcm(polys[it->j].lm(), lh) == it->lcm))
        it = pairs.erase(it);
      else ++it;
    }
    for (auto& e : E) pairs.push_back({e.g, h, e.lcm});
    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && lh.divides(polys[g].lm())) active[g] = false;
    active[h] = true;
  };

  auto add_poly = [&](detail::OrderedPoly p) {
    detail::make_monic(p);
    polys.push_back(std::move(p));
    active.push_back(false);
    update(polys.size() - 1);
    if (limits.max_basis && polys.size() > limits.max_basis) throw ResourceLimit("groebner basis size limit exceeded");
  };

  for (const auto& f : ideal) {
    if (f.is_zero()) continue;
    auto r = detail::reduce_full(detail::OrderedPoly(f, order), active_ptrs(), order);
    if (!r.empty()) add_poly(std::move(r));
    if (unit) break;
  }

  std::size_t processed = 0;
  while (!pairs.empty() && !unit) {
    check_time();
    auto best = pairs.begin();
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it)
      if (order.less(it->lcm, best->lcm)) best = it;
    Pair pr = *best;
    pairs.erase(best);
    if (limits.max_pairs && ++processed > limits.max_pairs) throw ResourceLimit("groebner pair limit exceeded");

    const auto& f = polys[pr.i];
    const auto& g = polys[pr.j];
    detail::OrderedPoly s(order);
    Coefficient one = Coefficient::one(domain);
    Monomial uf = pr.lcm.divide(f.lm()), ug = pr.lcm.divide(g.lm());
    for (const auto& [m, c] : f.terms) s.add(m * uf, c / f.lc());
    s.sub_multiple(g, ug, one / g.lc());
    auto r = detail::reduce_full(std::move(s), active_ptrs(), order);
    if (!r.empty()) add_poly(std::move(r));
  }

  // interreduce the minimal basis
  std::vector<detail::OrderedPoly> minimal;
  if (unit) {
    detail::OrderedPoly one(order);
    one.add(Monomial{}, Coefficient::one(domain));
    return {one.to_poly(arity, domain)};
  }
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) minimal.push_back(polys[k]);
  std::vector<Poly> out;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const detail::OrderedPoly*> others;
    for (std::size_t o = 0; o < minimal.size(); ++o)
      if (o != k) others.push_back(&minimal[o]);
    // leading term is irreducible by the others; reduce the tail
    detail::OrderedPoly tail = minimal[k];
    Monomial lm = tail.lm();
    Coefficient lc = tail.lc();
    tail.terms.erase(tail.terms.begin());
    auto red = detail::reduce_full(std::move(tail), others, order);
    red.add(lm, lc);
    detail::make_monic(red);
    out.push_back(red.to_poly(arity, domain));
  }
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
    return order.less(b.leading(order).first, a.leading(order).first);
  });
  return out;
}

/// Whether f lies in the ideal generated by gens.
inline bool in_ideal(const Poly& f, const std::vector<Poly>& gens, const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (f.is_zero()) return true;
  bool all_zero = std::all_of(gens.begin(), gens.end(), [](const Poly& g) { return g.is_zero(); });
  if (gens.empty() || all_zero) return false;
  return normal_form(f, groebner_basis(gens, order), order).is_zero();
}

}  // namespace zfam
