#pragma once

#include <zfam/polycore/coefficient.hpp>
#include <zfam/polycore/monomial.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace zfam {

/// Multivariate commutative polynomial over one coefficient Domain.
/// Terms with zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Monomial, Coefficient>;

  Poly() = default;
  Poly(std::uint32_t arity, Domain domain) : arity_(arity), domain_(domain) {}

  static Poly constant(std::uint32_t arity, const Coefficient& c) {
    Poly p(arity, c.domain());
    p.add_term(Monomial{}, c);
    return p;
  }
  static Poly variable(std::uint32_t arity, Domain d, std::uint32_t var) {
    Poly p(arity, d);
    p.add_term(Monomial::variable(var), Coefficient::one(d));
    return p;
  }

  std::uint32_t arity() const { return arity_; }
  const Domain& domain() const { return domain_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  Coefficient constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Coefficient::zero(domain_) : it->second;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  void add_term(const Monomial& m, const Coefficient& c) {
    if (c.domain() != domain_) throw DomainError("coefficient domain " + c.domain().name() + " in a " + domain_.name() + " polynomial");
    if (m.min_arity() > arity_) throw std::invalid_argument("monomial exceeds polynomial arity");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Coefficient coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coefficient::zero(domain_) : it->second;
  }

  /// Leading monomial and coefficient under the given order; requires nonzero.
  std::pair<Monomial, Coefficient> leading(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
      if (order.less(best->first, it->first)) best = it;
    return *best;
  }

  /// Terms sorted descending under the order.
  std::vector<std::pair<Monomial, Coefficient>> sorted_terms(const MonomialOrder& order) const {
    std::vector<std::pair<Monomial, Coefficient>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
    return v;
  }

  Poly operator-() const {
    Poly r(arity_, domain_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Poly& operator+=(const Poly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly r(a.arity_, a.domain_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Coefficient& c) const {
    Poly r(arity_, domain_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
  }
  Poly times_monomial(const Monomial& mono, const Coefficient& c) const {
    Poly r(arity_, domain_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m * mono, k * c);
    return r;
  }

  Poly pow(unsigned e) const {
    Poly r = constant(arity_, Coefficient::one(domain_));
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  /// Same terms in a larger ambient ring.
  Poly with_arity(std::uint32_t arity) const {
    Poly r(arity, domain_);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
  }

  /// Coefficients mapped into another domain (e.g. Z -> F_p).
  Poly converted(const Domain& d) const {
    Poly r(arity_, d);
    for (const auto& [m, c] : terms_) r.add_term(m, convert(c, d));
    return r;
  }

  /// Divide by the leading coefficient (fields only).
  Poly monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    return scaled(leading(order).second.inverse());
  }

  /// Evaluate at a point given as coefficients in the polynomial's domain.
  Coefficient evaluate(const std::vector<Coefficient>& point) const {
    if (point.size() < arity_) throw std::invalid_argument("evaluation point has too few coordinates");
    Coefficient acc = Coefficient::zero(domain_);
    for (const auto& [m, c] : terms_) {
      Coefficient t = c;
      for (auto [v, e] : m.entries())
        for (std::uint32_t k = 0; k < e; ++k) t *= point[v];
      acc += t;
    }
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.arity_ == b.arity_ && a.domain_ == b.domain_ && a.terms_ == b.terms_;
  }

  void check_compatible(const Poly& o) const {
    if (arity_ != o.arity_)
      throw std::invalid_argument("arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(o.arity_));
    if (domain_ != o.domain_) throw DomainError("mixed coefficient domains " + domain_.name() + " and " + o.domain_.name());
  }

 private:
  std::uint32_t arity_ = 0;
  Domain domain_;
  TermMap terms_;
};

enum class ArithKind { Add, Sub, Mul };

inline Poly poly_arith(const Poly& a, const Poly& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::Add: return a + b;
    case ArithKind::Sub: return a - b;
    case ArithKind::Mul: return a * b;
  }
  return {};
}

}  // namespace zfam
