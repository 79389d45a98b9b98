#pragma once

// Z-compatible algebra families: Weyl algebras A_n, their Weyl-group invariants,
// enveloping algebras of split simple Lie algebras, and commutative polynomial
// rings (toy family). Structure constants live over Z and are shared by every
// coefficient domain.

#include <zfam/polycore/coefficient.hpp>
#include <zfam/rootsys.hpp>

#include <memory>
#include <mutex>
#include <optional>

namespace zfam::nc {

/// Exponent vector over the ordered generators of a family.
using NcMono = std::vector<std::uint16_t>;
/// Integer combination of normal-form monomials.
using IntComb = std::vector<std::pair<NcMono, mpz_class>>;

inline unsigned mono_degree(const NcMono& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

/// Degree first, then lexicographic on exponents.
struct MonoLess {
  bool operator()(const NcMono& a, const NcMono& b) const {
    unsigned da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Family {
 public:
  enum class Kind { WeylFull, WeylInvariants, Enveloping, Commutative };

  Kind kind() const { return kind_; }
  /// "weylFull(2)", "weylInvariants(A1)", "enveloping(A1)", "commutative(1)".
  const std::string& label() const { return label_; }
  std::size_t num_generators() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  /// Weyl rank n for Weyl-type families.
  int weyl_rank() const { return weyl_rank_; }
  const std::optional<roots::RootSystem>& root_system() const { return rs_; }
  const roots::ChevalleyBasis& chevalley() const { return *cb_; }
  const std::vector<roots::IntMatrix>& group() const { return group_; }
  std::size_t group_order() const { return group_.size(); }
  /// Matrices of the simple reflections (generate the group).
  const std::vector<roots::IntMatrix>& group_generators() const { return group_gens_; }
  /// Number of central variables adjoined (l).
  int central_count() const { return central_count_; }
  /// Filtration level whose basis supplies the algebra generators x_1..x_n.
  int generator_level() const { return kind_ == Kind::WeylInvariants ? 2 : 1; }
  std::string sign_convention() const { return kind_ == Kind::Enveloping ? roots::kSignConvention : ""; }
  bool is_invariant() const { return kind_ == Kind::WeylInvariants; }
  bool is_commutative() const { return kind_ == Kind::Commutative; }
  /// dim of the associated Lie algebra / number of Bernstein generators.
  std::size_t tdeg() const {
    switch (kind_) {
      case Kind::WeylFull:
      case Kind::WeylInvariants: return 2 * static_cast<std::size_t>(weyl_rank_);
      case Kind::Enveloping:
      case Kind::Commutative: return names_.size();
    }
    return 0;
  }

  /// Index of a generator name, or -1.
  int generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return -1;
  }

  NcMono generator_mono(std::size_t i, std::uint16_t e = 1) const {
    NcMono m(names_.size(), 0);
    m[i] = e;
    return m;
  }

  /// Normal form of the product u * v over Z.
  const IntComb& mono_mul(const NcMono& u, const NcMono& v) const;

  friend std::shared_ptr<const Family> make_weyl(int n);
  friend std::shared_ptr<const Family> make_weyl_invariants(const roots::RootSystem& rs);
  friend std::shared_ptr<const Family> make_enveloping(const roots::RootSystem& rs);
  friend std::shared_ptr<const Family> make_commutative(int n);

 private:
  const IntComb& mul_gen_right(const NcMono& u, std::size_t g) const;
  IntComb weyl_mul(const NcMono& u, const NcMono& v) const;

  Kind kind_ = Kind::WeylFull;
  std::string label_;
  std::vector<std::string> names_;
  int weyl_rank_ = 0;
  int central_count_ = 0;
  std::optional<roots::RootSystem> rs_;
  std::shared_ptr<const roots::ChevalleyBasis> cb_;
  std::vector<roots::IntMatrix> group_, group_gens_;

  mutable std::recursive_mutex mutex_;
  mutable std::map<std::pair<NcMono, NcMono>, IntComb> product_cache_;
  mutable std::map<std::pair<NcMono, std::size_t>, IntComb> straighten_cache_;
};

namespace detail {

inline void add_into(std::map<NcMono, mpz_class>& acc, const NcMono& m, const mpz_class& c) {
  auto [it, fresh] = acc.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

inline IntComb to_comb(std::map<NcMono, mpz_class>&& acc) {
  IntComb out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.emplace_back(m, std::move(c));
  return out;
}

inline mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace detail

inline IntComb Family::weyl_mul(const NcMono& u, const NcMono& v) const {
  // (x^a y^b)(x^c y^d): y_i^b x_i^c = sum_k C(b,k) C(c,k) k! x_i^(c-k) y_i^(b-k)
  const int n = weyl_rank_;
  std::map<NcMono, mpz_class> acc;
  std::vector<unsigned> kmax(n), k(n, 0);
  for (int i = 0; i < n; ++i) kmax[i] = std::min<unsigned>(u[n + i], v[i]);
  while (true) {
    mpz_class c = 1;
    NcMono w(2 * n, 0);
    for (int i = 0; i < n; ++i) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), k[i]);
      c *= detail::binomial(u[n + i], k[i]) * detail::binomial(v[i], k[i]) * f;
      w[i] = static_cast<std::uint16_t>(u[i] + v[i] - k[i]);
      w[n + i] = static_cast<std::uint16_t>(u[n + i] + v[n + i] - k[i]);
    }
    detail::add_into(acc, w, c);
    int i = 0;
    while (i < n && k[i] == kmax[i]) k[i++] = 0;
    if (i == n) break;
    ++k[i];
  }
  return detail::to_comb(std::move(acc));
}

inline const IntComb& Family::mul_gen_right(const NcMono& u, std::size_t g) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(u, g);
  if (auto it = straighten_cache_.find(key); it != straighten_cache_.end()) return it->second;
  std::size_t t = u.size();
  for (std::size_t i = u.size(); i-- > 0;)
    if (u[i]) {
      t = i;
      break;
    }
  IntComb out;
  if (t == u.size() || t <= g) {
    NcMono w = u;
    ++w[g];
    out.emplace_back(std::move(w), mpz_class(1));
  } else {
    // u = u0 t with t > g:  u0 t g = (u0 g) t + u0 [t, g]
    NcMono u0 = u;
    --u0[t];
    std::map<NcMono, mpz_class> acc;
    IntComb first = mul_gen_right(u0, g);
    for (const auto& [w, c] : first)
      for (const auto& [w2, c2] : mul_gen_right(w, t)) detail::add_into(acc, w2, c * c2);
    for (auto [s, c] : cb_->bracket(static_cast<int>(t), static_cast<int>(g)))
      for (const auto& [w2, c2] : mul_gen_right(u0, static_cast<std::size_t>(s))) detail::add_into(acc, w2, c * c2);
    out = detail::to_comb(std::move(acc));
  }
  return straighten_cache_.emplace(std::move(key), std::move(out)).first->second;
}

inline const IntComb& Family::mono_mul(const NcMono& u, const NcMono& v) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(u, v);
  if (auto it = product_cache_.find(key); it != product_cache_.end()) return it->second;
  IntComb out;
  switch (kind_) {
    case Kind::Commutative: {
      NcMono w = u;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<std::uint16_t>(w[i] + v[i]);
      out.emplace_back(std::move(w), mpz_class(1));
      break;
    }
    case Kind::WeylFull:
    case Kind::WeylInvariants: out = weyl_mul(u, v); break;
    case Kind::Enveloping: {
      std::map<NcMono, mpz_class> cur{{u, 1}};
      for (std::size_t g = 0; g < v.size(); ++g)
        for (unsigned r = 0; r < v[g]; ++r) {
          std::map<NcMono, mpz_class> next;
          for (const auto& [w, c] : cur)
            for (const auto& [w2, c2] : mul_gen_right(w, g)) detail::add_into(next, w2, c * c2);
          cur = std::move(next);
        }
      out = detail::to_comb(std::move(cur));
      break;
    }
  }
  return product_cache_.emplace(std::move(key), std::move(out)).first->second;
}

inline std::shared_ptr<const Family> make_weyl(int n) {
  // rank 0 (the scalars) is used internally for m = 0 witness algebras
  if (n < 0 || n > 8) throw FamilyError("Weyl algebra rank must be between 0 and 8");
  auto f = std::make_shared<Family>();
  f->kind_ = Family::Kind::WeylFull;
  f->label_ = "weylFull(" + std::to_string(n) + ")";
  f->weyl_rank_ = n;
  for (int i = 1; i <= n; ++i) f->names_.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) f->names_.push_back("y" + std::to_string(i));
  return f;
}

inline std::shared_ptr<const Family> make_weyl_invariants(const roots::RootSystem& rs) {
  auto base = make_weyl(rs.rank());
  auto f = std::make_shared<Family>();
  f->kind_ = Family::Kind::WeylInvariants;
  f->label_ = "weylInvariants(" + rs.label() + ")";
  f->weyl_rank_ = rs.rank();
  f->names_ = base->names_;
  f->rs_ = rs;
  f->group_ = roots::crystallographic_matrices(roots::weyl_group(rs));
  for (int j = 0; j < rs.rank(); ++j) f->group_gens_.push_back(roots::simple_reflection(rs, j));
  return f;
}

inline std::shared_ptr<const Family> make_enveloping(const roots::RootSystem& rs) {
  auto f = std::make_shared<Family>();
  f->kind_ = Family::Kind::Enveloping;
  f->label_ = "enveloping(" + rs.label() + ")";
  f->rs_ = rs;
  f->cb_ = std::make_shared<roots::ChevalleyBasis>(roots::chevalley_constants(rs));
  for (int i = 0; i < f->cb_->dimension(); ++i) f->names_.push_back(f->cb_->name(i));
  f->central_count_ = rs.rank();
  return f;
}

inline std::shared_ptr<const Family> make_commutative(int n) {
  if (n < 1 || n > 16) throw FamilyError("commutative family needs 1..16 variables");
  auto f = std::make_shared<Family>();
  f->kind_ = Family::Kind::Commutative;
  f->label_ = "commutative(" + std::to_string(n) + ")";
  for (int i = 1; i <= n; ++i) f->names_.push_back("x" + std::to_string(i));
  return f;
}

/// Parses a family label as produced by Family::label().
inline std::shared_ptr<const Family> make_family(const std::string& label) {
  auto open = label.find('('), close = label.rfind(')');
  if (open == std::string::npos || close != label.size() - 1 || close <= open + 1)
    throw FamilyError("malformed family descriptor '" + label + "'");
  std::string kind = label.substr(0, open), arg = label.substr(open + 1, close - open - 1);
  auto integer_arg = [&]() {
    try {
      std::size_t used = 0;
      int v = std::stoi(arg, &used);
      if (used == arg.size()) return v;
    } catch (const std::exception&) {
    }
    throw FamilyError("expected an integer in '" + label + "'");
  };
  try {
    if (kind == "weylFull") return make_weyl(integer_arg());
    if (kind == "commutative") return make_commutative(integer_arg());
    if (kind == "weylInvariants") return make_weyl_invariants(roots::build_root_system(arg));
    if (kind == "enveloping") return make_enveloping(roots::build_root_system(arg));
  } catch (const roots::InvalidDatum& e) {
    throw FamilyError(std::string("invalid root datum in '") + label + "': " + e.what());
  }
  throw FamilyError("unknown family kind '" + kind + "'");
}

/// A family together with a coefficient domain.
struct FamilyInstance {
  std::shared_ptr<const Family> family;
  Domain domain;

  const Family& operator*() const { return *family; }
  const Family* operator->() const { return family.get(); }
  friend bool operator==(const FamilyInstance& a, const FamilyInstance& b) {
    return a.domain == b.domain && (a.family == b.family || a.family->label() == b.family->label());
  }
};

}  // namespace zfam::nc
