#pragma once

// Interpretations of the construction: symbolic (equations over Z, or only
// the unknown count) and concrete (a certificate evaluated exactly).

#include <zfam/sentc/construct.hpp>

namespace zfam::sent {

struct Variable {
  std::string name;
  std::string role;
  std::vector<int> index;
  friend bool operator==(const Variable&, const Variable&) = default;
};

namespace detail {

/// Coordinate basis of the level-d piece: monomials, or the invariant basis.
class PieceBases {
 public:
  explicit PieceBases(FamilyInstance zinst) : zinst_(std::move(zinst)) {}

  const std::vector<AlgebraElement>& basis(int d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    std::vector<AlgebraElement> out;
    if (zinst_->is_invariant()) out = nc::filtration_piece(zinst_, d).basis;
    else
      for (const auto& m : nc::monomials_up_to(zinst_->num_generators(), static_cast<unsigned>(d)))
        out.push_back(AlgebraElement::monomial(zinst_, m));
    return cache_.emplace(d, std::move(out)).first->second;
  }

  std::size_t dim(int d) {
    if (zinst_->is_invariant()) return basis(d).size();
    return nc::full_piece_dimension(zinst_->num_generators(), static_cast<unsigned>(d)).get_ui();
  }

  std::size_t monomial_count(int d) const {
    return nc::full_piece_dimension(zinst_->num_generators(), static_cast<unsigned>(d)).get_ui();
  }

 private:
  FamilyInstance zinst_;
  std::map<int, std::vector<AlgebraElement>> cache_;
};

}  // namespace detail

/// Element with polynomial coordinates on the monomial basis.
using SymElem = std::map<NcMono, Poly, nc::MonoLess>;

/// Symbolic interpretation. With count_only set, only the catalogue is built.
class SymbolicCtx {
 public:
  struct Val {
    const SymbolicCtx* ctx = nullptr;
    SymElem expr;
    int bound = 0;
    std::optional<std::pair<std::uint32_t, std::size_t>> vars;  // first variable, dimension (plain unknowns)

    friend Val operator+(const Val& x, const Val& y) { return x.ctx->combine(x, y, 1); }
    friend Val operator-(const Val& x, const Val& y) { return x.ctx->combine(x, y, -1); }
    friend Val operator*(const Val& x, const Val& y) { return x.ctx->multiply(x, y); }
  };

  SymbolicCtx(const Plan& plan, bool count_only, std::uint32_t arity)
      : plan_(plan), count_only_(count_only), arity_(arity), bases_(plan.zinst) {}

  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Poly>& equations() const { return eqs_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Element arithmetic behind Val's operators.
  Val combine(const Val& x, const Val& y, int sign) const {
    Val out{this, x.expr, std::max(x.bound, y.bound), {}};
    if (count_only_) return out;
    for (const auto& [m, p] : y.expr) {
      auto [it, fresh] = out.expr.emplace(m, Poly(arity_, Domain::integers()));
      if (sign > 0) it->second += p;
      else it->second -= p;
    }
    prune(out.expr);
    return out;
  }

  Val multiply(const Val& x, const Val& y) const {
    Val out{this, {}, x.bound + y.bound, {}};
    if (count_only_) return out;
    const auto& fam = *plan_.zinst.family;
    for (const auto& [mx, px] : x.expr)
      for (const auto& [my, py] : y.expr) {
        Poly prod = px * py;
        if (prod.is_zero()) continue;
        for (const auto& [mono, c] : fam.mono_mul(mx, my)) {
          auto [it, fresh] = out.expr.emplace(mono, Poly(arity_, Domain::integers()));
          it->second += prod.scaled(Coefficient::integer(c));
        }
      }
    prune(out.expr);
    return out;
  }

  Val zero() const { return Val{this, {}, 0, {}}; }
  Val one() const { return fixed(AlgebraElement::one(plan_.zinst)); }

  Val fixed(const AlgebraElement& z) const {
    Val v{this, {}, std::max(z.degree(), 0), {}};
    if (!count_only_)
      for (const auto& [m, c] : z.terms()) v.expr[m] = Poly::constant(arity_, c);
    return v;
  }

  Val input(const SymbolInfo& s, int bound, const InputKey&) { return unknown(s, bound); }

  Val scalar(const SymbolInfo& s, const InputKey&) {
    const auto id = allocate(s.name, s.role, s.index);
    Val v{this, {}, 0, {}};
    if (!count_only_) v.expr[NcMono(plan_.zinst->num_generators(), 0)] = Poly::variable(arity_, Domain::integers(), id);
    return v;
  }

  std::pair<Val, Val> ore(const SymbolInfo& c, const SymbolInfo& d, const Val&, const Val&, ore::Side) {
    Val vc = unknown(c, plan_.profile.degree(c.name));
    Val vd = unknown(d, plan_.profile.degree(d.name));
    return {vc, vd};
  }

  Val define(const SymbolInfo& s, const Val& expr) {
    Val v = unknown(s, expr.bound);
    equal(v, expr, "def " + s.name);
    return v;
  }

  void equal(const Val& lhs, const Val& rhs, const std::string& label) {
    if (count_only_) return;
    SymElem diff = lhs.expr;
    for (const auto& [m, p] : rhs.expr) {
      auto [it, fresh] = diff.emplace(m, Poly(arity_, Domain::integers()));
      it->second -= p;
    }
    for (const auto& [m, p] : diff) {
      if (p.is_zero()) continue;
      eqs_.push_back(p);
      labels_.push_back(label + " @ " + (nc::mono_degree(m) ? nc::mono_text(*plan_.zinst, m) : std::string("1")));
    }
  }

  /// Linear encoding of v != 0: fresh scalars t with sum t_c v_c = 1.
  void nonzero(const std::string& label, const Val& v) {
    std::vector<Poly> coords;
    std::size_t n = v.vars ? v.vars->second : bases_.monomial_count(v.bound);
    const std::uint32_t first = static_cast<std::uint32_t>(vars_.size());
    for (std::size_t c = 0; c < n; ++c) allocate("t[" + label + "]_" + std::to_string(c + 1), "t", {static_cast<int>(c + 1)});
    if (count_only_) return;
    Poly eq = Poly::constant(arity_, Coefficient::integer(-1));
    if (v.vars) {
      for (std::size_t c = 0; c < n; ++c)
        eq += Poly::variable(arity_, Domain::integers(), first + c) * Poly::variable(arity_, Domain::integers(), v.vars->first + c);
    } else {
      const auto monos = nc::monomials_up_to(plan_.zinst->num_generators(), static_cast<unsigned>(v.bound));
      for (std::size_t c = 0; c < n; ++c)
        if (auto it = v.expr.find(monos[c]); it != v.expr.end())
          eq += Poly::variable(arity_, Domain::integers(), first + c) * it->second;
    }
    eqs_.push_back(eq);
    labels_.push_back("nonzero " + label);
  }

 private:
  std::uint32_t allocate(const std::string& name, const std::string& role, std::vector<int> index) {
    vars_.push_back({name, role, std::move(index)});
    if (vars_.size() > plan_.profile.cap)
      throw SentenceError("the sentence needs more than " + std::to_string(plan_.profile.cap) + " unknowns (cap)");
    return static_cast<std::uint32_t>(vars_.size() - 1);
  }

  Val unknown(const SymbolInfo& s, int bound) {
    const std::size_t dim = bases_.dim(bound);
    const auto first = static_cast<std::uint32_t>(vars_.size());
    for (std::size_t c = 0; c < dim; ++c) {
      auto idx = s.index;
      idx.push_back(static_cast<int>(c + 1));
      allocate(s.name + "[" + std::to_string(c + 1) + "]", s.role, idx);
    }
    Val v{this, {}, bound, std::make_pair(first, dim)};
    if (count_only_) return v;
    const auto& basis = bases_.basis(bound);
    for (std::size_t c = 0; c < dim; ++c) {
      Poly var = Poly::variable(arity_, Domain::integers(), first + static_cast<std::uint32_t>(c));
      for (const auto& [m, k] : basis[c].terms()) {
        auto [it, fresh] = v.expr.emplace(m, Poly(arity_, Domain::integers()));
        it->second += var.scaled(k);
      }
    }
    return v;
  }

  static void prune(SymElem& e) {
    for (auto it = e.begin(); it != e.end();) it = it->second.is_zero() ? e.erase(it) : std::next(it);
  }

  const Plan& plan_;
  bool count_only_;
  std::uint32_t arity_;
  mutable detail::PieceBases bases_;
  std::vector<Variable> vars_;
  std::vector<Poly> eqs_;
  std::vector<std::string> labels_;
};

class BoundsMismatch : public SentenceError {
 public:
  using SentenceError::SentenceError;
};

/// Certificate data consumed by the concrete interpretation.
struct CertificateData {
  std::vector<ore::Fraction> witnesses;
  std::vector<AlgebraElement> centers;  // as given (not rescaled)
  // (word ordinal j, generator k, center exponents) -> coefficient
  std::map<std::tuple<int, int, NcMono>, mpq_class> lambda, mu;
  ore::OreBounds bounds;
};

/// Concrete interpretation over QQ. With a profile, coordinates are recorded
/// against its bounds; without, the bound of each unknown is its actual degree.
class ConcreteCtx {
 public:
  struct Val {
    AlgebraElement value;
    int bound = 0;
    std::optional<std::string> symbol;

    friend Val operator+(const Val& x, const Val& y) { return {x.value + y.value, std::max(x.bound, y.bound), {}}; }
    friend Val operator-(const Val& x, const Val& y) { return {x.value - y.value, std::max(x.bound, y.bound), {}}; }
    friend Val operator*(const Val& x, const Val& y) { return {x.value * y.value, x.bound + y.bound, {}}; }
  };

  ConcreteCtx(const Plan& plan, const CertificateData& data, bool use_profile)
      : plan_(plan), data_(data), use_profile_(use_profile), bases_(plan.zinst) {}

  /// Variable values in catalogue order.
  const std::vector<std::pair<std::string, mpq_class>>& values() const { return values_; }
  /// Actual degrees of the profile-bounded unknowns (inputs and Ore multipliers).
  const std::map<std::string, int>& degrees() const { return degrees_; }

  Val zero() const { return {AlgebraElement(plan_.qinst), 0, {}}; }
  Val one() const { return {AlgebraElement::one(plan_.qinst), 0, {}}; }
  Val fixed(const AlgebraElement& z) const { return {z.converted(Domain::rationals()), std::max(z.degree(), 0), {}}; }

  Val input(const SymbolInfo& s, int bound, const InputKey& key) {
    AlgebraElement v(plan_.qinst);
    switch (key.kind) {
      case InputKey::Kind::WitnessNum: v = data_.witnesses.at(key.i).num(); break;
      case InputKey::Kind::WitnessDen: v = data_.witnesses.at(key.i).den(); break;
      case InputKey::Kind::Center: v = data_.centers.at(key.i); break;
      default: throw std::logic_error("scalar key used for an element");
    }
    return record(s, v, use_profile_ ? bound : std::max(v.degree(), 0), true);
  }

  Val scalar(const SymbolInfo& s, const InputKey& key) {
    const auto& table = key.kind == InputKey::Kind::Lambda ? data_.lambda : data_.mu;
    mpq_class c = 0;
    if (auto it = table.find({key.i, key.k, key.n}); it != table.end()) c = it->second;
    // the sentence uses integral center generators z' = s z
    for (std::size_t i = 0; i < key.n.size() && plan_.centers_fixed; ++i)
      for (int e = 0; e < key.n[i]; ++e) c /= plan_.center_scale[i];
    values_.push_back({s.name, c});
    return {AlgebraElement::scalar(plan_.qinst, Coefficient::rational(c)), 0, {}};
  }

  std::pair<Val, Val> ore(const SymbolInfo& c, const SymbolInfo& d, const Val& X, const Val& Y, ore::Side side) {
    AlgebraElement vc = AlgebraElement::one(plan_.qinst), vd(plan_.qinst);
    if (Y.value.is_zero()) throw std::logic_error("Ore data with a zero denominator side");
    if (!X.value.is_zero()) {
      auto s = ore::solve_ore(X.value, Y.value, data_.bounds, side);
      vc = s.c;
      vd = s.d;
    }
    Val rc = record(c, vc, bound_for(c.name, vc), true);
    Val rd = record(d, vd, bound_for(d.name, vd), true);
    return {rc, rd};
  }

  Val define(const SymbolInfo& s, const Val& expr) { return record(s, expr.value, expr.bound, false); }

  void equal(const Val& lhs, const Val& rhs, const std::string& label) const {
    if (!(lhs.value == rhs.value)) throw std::logic_error("certificate data violates " + label);
  }

  void nonzero(const std::string& label, const Val& v) {
    std::vector<mpq_class> coords;
    if (v.symbol) coords = coordinates(*v.symbol, v.value, v.bound);
    else {
      for (const auto& m : nc::monomials_up_to(plan_.zinst->num_generators(), static_cast<unsigned>(v.bound)))
        coords.push_back(v.value.coefficient(m).as_rational());
    }
    bool done = false;
    for (std::size_t c = 0; c < coords.size(); ++c) {
      mpq_class t = 0;
      if (!done && coords[c] != 0) {
        t = 1 / coords[c];
        done = true;
      }
      values_.push_back({"t[" + label + "]_" + std::to_string(c + 1), t});
    }
    if (!done) throw SentenceError("element " + label + " vanishes, but the sentence requires it nonzero");
  }

 private:
  int bound_for(const std::string& name, const AlgebraElement& v) const {
    return use_profile_ ? plan_.profile.degree(name) : std::max(v.degree(), 0);
  }

  std::vector<mpq_class> coordinates(const std::string& name, const AlgebraElement& v, int bound) {
    std::vector<mpq_class> out;
    if (v.degree() > bound)
      throw BoundsMismatch(name + " = " + v.to_string() + " has degree " + std::to_string(v.degree()) + " > bound " +
                           std::to_string(bound));
    if (!plan_.zinst->is_invariant()) {
      for (const auto& m : nc::monomials_up_to(plan_.zinst->num_generators(), static_cast<unsigned>(bound)))
        out.push_back(v.coefficient(m).as_rational());
      return out;
    }
    const auto& basis = bases_.basis(bound);
    std::map<NcMono, std::uint32_t, nc::MonoLess> rows;
    auto row_of = [&](const NcMono& m) { return rows.emplace(m, static_cast<std::uint32_t>(rows.size())).first->second; };
    std::vector<SparseRow> cols;
    for (const auto& b : basis) {
      SparseRow col;
      for (const auto& [m, c] : b.terms()) col.emplace(row_of(m), convert(c, Domain::rationals()));
      cols.push_back(std::move(col));
    }
    SparseRow target;
    for (const auto& [m, c] : v.terms()) target.emplace(row_of(m), c);
    auto x = solve_in_span(cols, target, Domain::rationals());
    if (!x) throw BoundsMismatch(name + " = " + v.to_string() + " is not in the invariant piece of level " + std::to_string(bound));
    for (const auto& c : *x) out.push_back(c.as_rational());
    return out;
  }

  Val record(const SymbolInfo& s, const AlgebraElement& v, int bound, bool bounded_by_profile) {
    if (bounded_by_profile) degrees_[s.name] = std::max(v.degree(), 0);
    auto coords = coordinates(s.name, v, bound);
    for (std::size_t c = 0; c < coords.size(); ++c) values_.push_back({s.name + "[" + std::to_string(c + 1) + "]", coords[c]});
    return {v, bound, s.name};
  }

  const Plan& plan_;
  const CertificateData& data_;
  bool use_profile_;
  detail::PieceBases bases_;
  std::vector<std::pair<std::string, mpq_class>> values_;
  std::map<std::string, int> degrees_;
};

}  // namespace zfam::sent
