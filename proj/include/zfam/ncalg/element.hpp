#pragma once

// Elements of a family instance, stored in normal form.

#include <zfam/ncalg/family.hpp>
#include <zfam/ncalg/words.hpp>

namespace zfam::nc {

class AlgebraElement {
 public:
  using TermMap = std::map<NcMono, Coefficient, MonoLess>;

  explicit AlgebraElement(FamilyInstance inst) : inst_(std::move(inst)) {}

  static AlgebraElement scalar(const FamilyInstance& inst, const Coefficient& c) {
    AlgebraElement a(inst);
    a.add_term(NcMono(inst->num_generators(), 0), c);
    return a;
  }
  static AlgebraElement scalar(const FamilyInstance& inst, long c) {
    return scalar(inst, Coefficient::from_integer(c, inst.domain));
  }
  static AlgebraElement one(const FamilyInstance& inst) { return scalar(inst, 1L); }
  static AlgebraElement monomial(const FamilyInstance& inst, const NcMono& m) {
    AlgebraElement a(inst);
    a.add_term(m, Coefficient::one(inst.domain));
    return a;
  }
  static AlgebraElement generator(const FamilyInstance& inst, std::size_t i) {
    return monomial(inst, inst->generator_mono(i));
  }

  const FamilyInstance& instance() const { return inst_; }
  const Family& family() const { return *inst_.family; }
  const Domain& domain() const { return inst_.domain; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Filtration degree; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(mono_degree(terms_.rbegin()->first)); }
  /// Largest monomial under MonoLess and its coefficient.
  const std::pair<const NcMono, Coefficient>& leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    return *terms_.rbegin();
  }
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0); }
  Coefficient scalar_part() const {
    auto it = terms_.find(NcMono(family().num_generators(), 0));
    return it == terms_.end() ? Coefficient::zero(domain()) : it->second;
  }

  Coefficient coefficient(const NcMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coefficient::zero(domain()) : it->second;
  }

  void add_term(const NcMono& m, const Coefficient& c) {
    if (m.size() != family().num_generators()) throw std::invalid_argument("monomial arity mismatch");
    if (c.domain() != domain()) throw DomainError("coefficient domain " + c.domain().name() + " differs from " + domain().name());
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void check_compatible(const AlgebraElement& o) const {
    if (!(inst_ == o.inst_))
      throw FamilyError("elements of " + family().label() + " over " + domain().name() + " and " + o.family().label() +
                        " over " + o.domain().name() + " cannot be combined");
  }

  AlgebraElement operator+(const AlgebraElement& o) const {
    check_compatible(o);
    AlgebraElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  AlgebraElement operator-() const {
    AlgebraElement r(inst_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  AlgebraElement operator-(const AlgebraElement& o) const { return *this + (-o); }
  AlgebraElement operator*(const AlgebraElement& o) const {
    check_compatible(o);
    AlgebraElement r(inst_);
    const Family& fam = family();
    for (const auto& [u, cu] : terms_)
      for (const auto& [v, cv] : o.terms_) {
        Coefficient c = cu * cv;
        for (const auto& [w, k] : fam.mono_mul(u, v)) r.add_term(w, c * Coefficient::from_integer(k, domain()));
      }
    return r;
  }
  AlgebraElement scaled(const Coefficient& s) const {
    AlgebraElement r(inst_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
  }
  AlgebraElement pow(unsigned e) const {
    AlgebraElement r = one(inst_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  /// Scaled so the leading coefficient is 1 (fields only).
  AlgebraElement monic() const {
    if (is_zero()) return *this;
    return scaled(leading().second.inverse());
  }

  /// Same element over another domain (mapping the coefficients).
  AlgebraElement converted(const Domain& d) const {
    AlgebraElement r(FamilyInstance{inst_.family, d});
    for (const auto& [m, c] : terms_) r.add_term(m, convert(c, d));
    return r;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.inst_ == b.inst_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  FamilyInstance inst_;
  TermMap terms_;
};

inline AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) { return a * b - b * a; }

/// Monomial text in generator names, e.g. "x1^2*y1" or "e.1*h.1".
inline std::string mono_text(const Family& fam, const NcMono& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += fam.generator_names()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

inline std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    zfam::detail::append_term(out, it->second, mono_text(family(), it->first));
  return out;
}

/// Parses element text; products are taken in written order, so "y1*x1" is
/// straightened to "x1*y1 + 1". Symbols z1..zl resolve through `centers`.
inline AlgebraElement parse_element(const std::string& text, const FamilyInstance& inst,
                                    const std::vector<AlgebraElement>& centers = {}) {
  AlgebraElement out(inst);
  for (const auto& term : parse_words(text)) {
    AlgebraElement t = AlgebraElement::scalar(inst, Coefficient::from_rational(term.coeff, inst.domain));
    for (const auto& f : term.factors) {
      AlgebraElement base(inst);
      int g = inst->generator_index(f.symbol);
      if (g >= 0) base = AlgebraElement::generator(inst, static_cast<std::size_t>(g));
      else if (f.symbol.size() > 1 && f.symbol[0] == 'z') {
        std::size_t k = 0;
        try {
          k = std::stoul(f.symbol.substr(1));
        } catch (const std::exception&) {
          throw ParseError("unknown symbol '" + f.symbol + "' in \"" + text + "\"");
        }
        if (k < 1 || k > centers.size())
          throw ParseError("central variable " + f.symbol + " is not defined (have " + std::to_string(centers.size()) + ")");
        base = centers[k - 1];
      } else {
        throw ParseError("unknown generator '" + f.symbol + "' for " + inst->label() + " in \"" + text + "\"");
      }
      t = t * base.pow(f.power);
    }
    out = out + t;
  }
  return out;
}

}  // namespace zfam::nc
