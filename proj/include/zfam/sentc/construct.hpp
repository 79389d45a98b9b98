#pragma once

// The algebraic data behind the sentence, built once and interpreted three
// ways: counting unknowns, emitting polynomial equations over Z, and
// evaluating a certificate (Ore chains solved exactly).
//
// Unknown elements and their identities:
//   w_i = b_i^{-1} a_i                                    witnesses
//   b_{i,j} a_i = a_{i,j} b_j                             swap a_i past b_j
//   D_{i,j} = c_{i,j} b_{i,j} b_i = d_{i,j} b_{j,i} b_j   common denominator, i < j
//   d_{i,j} a_{j,i} a_i - c_{i,j} a_{i,j} a_j = k D_{i,j} [w_j, w_i] = k
//   b_t A_{t'} = a_t b_{i(k)}                             word chain, t = t' + (i(k))
//   A_t x_k f_{j;k} = B_t e_{j;k}                         move x_k right
//   u_j L_{j-1} = v_j B_j,  R_{j-1;k} g_{j;k} = f_{j;k} h_{j;k}   chained denominators
//   N_{r;k} R_{r;k} = L_r P_{r;k}                         q_k x_k = p_k cleared
// with words B_t^{-1} A_t = w_{i(1)} ... w_{i(k)}, Lam = lambda A, Psi = mu e,
// N_j = u_j N_{j-1} + v_j Lam_j and P_j = P_{j-1} g_j + Psi_j h_j.
// In commutative families every Ore multiplier has a canonical value
// (b_{i,j} = b_j, c = d = 1, ...), which is used instead of an unknown.

#include <zfam/sentc/profile.hpp>
#include <zfam/orefrac.hpp>

namespace zfam::sent {

using nc::AlgebraElement;
using nc::FamilyInstance;
using nc::NcMono;

/// Name, role and integer indices of an unknown element or scalar.
struct SymbolInfo {
  std::string name;
  std::string role;
  std::vector<int> index;
};

/// Certificate datum feeding an input symbol.
struct InputKey {
  enum class Kind { WitnessNum, WitnessDen, Center, Lambda, Mu } kind;
  int i = 0;    // witness/center index, or word ordinal j
  int k = 0;    // generator index for Lambda/Mu
  NcMono n;     // center exponents for Lambda/Mu
};

struct Plan {
  FamilyInstance zinst, qinst;
  BoundProfile profile;
  std::vector<Tuple> tuples;
  std::vector<AlgebraElement> generators;  // over Z
  bool centers_fixed = true;
  std::vector<AlgebraElement> centers;     // over Z, when fixed
  std::vector<mpq_class> center_scale;     // integral center = scale * given center
  std::vector<NcMono> center_monos;        // exponents n with |n| <= center_degree
  int center_bound = 0;                    // filtration degree bound of unknown centers

  bool commutative() const { return zinst->is_commutative(); }
  int m() const { return profile.m; }
  int l() const { return profile.l; }
};

inline std::string idx_name(const std::string& base, const std::vector<int>& idx, char sep = ',') {
  std::string out = base + "_{";
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(idx[i]);
  return out + "}";
}

inline std::string exps_text(const NcMono& n) {
  std::string out = "(";
  for (std::size_t i = 0; i < n.size(); ++i) out += (i ? "," : "") + std::to_string(n[i]);
  return out + ")";
}

namespace detail {

/// Integral primitive multiple of a rational element and the factor used.
inline std::pair<AlgebraElement, mpq_class> integral_multiple(const AlgebraElement& a, const FamilyInstance& zinst) {
  mpz_class den = 1, g = 0;
  for (const auto& [m, c] : a.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.as_rational().get_den_mpz_t());
  for (const auto& [m, c] : a.terms()) {
    mpz_class v = mpq_class(c.as_rational() * den).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g == 0) g = 1;
  mpq_class scale(den, g);
  scale.canonicalize();
  AlgebraElement out(zinst);
  for (const auto& [m, c] : a.terms()) out.add_term(m, Coefficient::integer(mpq_class(c.as_rational() * scale).get_num()));
  return {out, scale};
}

inline AlgebraElement integral_element(const std::string& text, const FamilyInstance& qinst, const FamilyInstance& zinst,
                                       const std::string& what) {
  AlgebraElement a = nc::parse_element(text, qinst);
  AlgebraElement out(zinst);
  for (const auto& [m, c] : a.terms()) {
    if (c.as_rational().get_den() != 1) throw SentenceError(what + " \"" + text + "\" is not in the Z-form");
    out.add_term(m, Coefficient::integer(c.as_rational().get_num()));
  }
  return out;
}

}  // namespace detail

inline Plan make_plan(const std::string& family, const BoundProfile& profile) {
  profile.validate();
  auto fam = nc::make_family(family);
  Plan p{{fam, Domain::integers()}, {fam, Domain::rationals()}, profile, {}, {}, true, {}, {}, {}, 0};
  if (static_cast<std::size_t>(2 * profile.m + profile.l) != fam->tdeg())
    throw SentenceError("2m + l = " + std::to_string(2 * profile.m + profile.l) + " but " + fam->label() + " has Tdeg " +
                        std::to_string(fam->tdeg()));
  p.tuples = profile.word_tuples();
  std::sort(p.tuples.begin(), p.tuples.end(), tuple_less);
  if (p.tuples.empty()) throw SentenceError("the profile admits no words");

  if (profile.generators.empty()) {
    p.generators = nc::algebra_generators(p.zinst);
  } else {
    for (const auto& g : profile.generators) p.generators.push_back(detail::integral_element(g, p.qinst, p.zinst, "generator"));
    if (p.generators.size() != nc::algebra_generators(p.zinst).size())
      throw SentenceError("the profile lists " + std::to_string(p.generators.size()) + " generators, expected " +
                          std::to_string(nc::algebra_generators(p.zinst).size()));
  }

  std::vector<AlgebraElement> given;
  if (!profile.centers.empty()) {
    if (static_cast<int>(profile.centers.size()) != profile.l) throw SentenceError("the profile must list l center generators");
    for (const auto& c : profile.centers) given.push_back(nc::parse_element(c, p.qinst));
  } else if (profile.l > 0) {
    if (fam->kind() == nc::Family::Kind::Enveloping && profile.l == 1 && fam->root_system()->label() == "A1") {
      given.push_back(nc::casimir(p.qinst));
    } else if (fam->is_commutative()) {
      p.centers_fixed = false;
    } else {
      throw SentenceError("the profile must list the center generators of " + fam->label());
    }
  }
  for (const auto& c : given) {
    for (std::size_t g = 0; g < fam->num_generators(); ++g)
      if (!nc::commutator(c, AlgebraElement::generator(p.qinst, g)).is_zero())
        throw SentenceError("center generator " + c.to_string() + " is not central");
    auto [z, s] = detail::integral_multiple(c, p.zinst);
    p.centers.push_back(z);
    p.center_scale.push_back(s);
  }
  p.center_bound = profile.degree("phi");
  if (profile.l == 0) p.center_monos = {NcMono{}};
  else p.center_monos = nc::monomials_up_to(static_cast<std::size_t>(profile.l), static_cast<unsigned>(profile.center_degree));
  return p;
}

/// Builds all symbols and identities through the context.
template <class Ctx>
void construct(Ctx& ctx, const Plan& P) {
  using V = typename Ctx::Val;
  const int m = P.m(), l = P.l(), n2 = 2 * m;
  const bool comm = P.commutative();
  auto info = [](const std::string& base, std::vector<int> idx, const std::string& role, char sep = ',') {
    return SymbolInfo{idx_name(base, idx, sep), role, std::move(idx)};
  };

  // centers
  std::vector<V> phi;
  for (int i = 0; i < l; ++i) {
    if (P.centers_fixed) phi.push_back(ctx.fixed(P.centers[i]));
    else phi.push_back(ctx.input(info("phi", {i + 1}, "phi"), P.center_bound, {InputKey::Kind::Center, i, 0, {}}));
  }
  if (!P.centers_fixed)
    for (int i = 0; i < l; ++i)
      for (std::size_t g = 0; g < P.zinst->num_generators(); ++g) {
        V x = ctx.fixed(AlgebraElement::generator(P.zinst, g));
        ctx.equal(phi[i] * x, x * phi[i], "center phi_" + std::to_string(i + 1));
      }

  // witnesses
  std::vector<V> a, b;
  for (int i = 0; i < n2; ++i) {
    a.push_back(ctx.input(info("a", {i + 1}, "a"), P.profile.degree(idx_name("a", {i + 1})), {InputKey::Kind::WitnessNum, i, 0, {}}));
    b.push_back(ctx.input(info("b", {i + 1}, "b"), P.profile.degree(idx_name("b", {i + 1})), {InputKey::Kind::WitnessDen, i, 0, {}}));
    ctx.nonzero(idx_name("b", {i + 1}), b[i]);
  }

  // swaps for every ordered pair of witnesses and every word start
  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j)
      if (i != j) pairs.insert({i, j});
  for (const auto& t : P.tuples)
    if (t.size() >= 2) pairs.insert({t[0] - 1, t[1] - 1});
  std::map<std::pair<int, int>, std::pair<V, V>> pd;  // (b_{i,j}, a_{i,j})
  for (auto [i, j] : pairs) {
    const std::string tag = "swap b_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
    if (comm) {
      pd.emplace(std::make_pair(i, j), std::make_pair(b[j], a[i]));
      continue;
    }
    auto [bij, aij] = ctx.ore(info("b", {i + 1, j + 1}, "b_pair"), info("a", {i + 1, j + 1}, "a_pair"), a[i], b[j], ore::Side::Left);
    ctx.equal(bij * a[i], aij * b[j], tag);
    ctx.nonzero(idx_name("b", {i + 1, j + 1}), bij);
    pd.emplace(std::make_pair(i, j), std::make_pair(bij, aij));
  }

  // commutators: [w_j, w_i] = 1 if j = i + m, else 0
  for (int i = 0; i < n2; ++i)
    for (int j = i + 1; j < n2; ++j) {
      const auto& [bij, aij] = pd.at({i, j});
      const auto& [bji, aji] = pd.at({j, i});
      const std::vector<int> ij{i + 1, j + 1};
      V c = ctx.one(), d = ctx.one();
      if (!comm) std::tie(c, d) = ctx.ore(info("c", ij, "c"), info("d", ij, "d"), bij * b[i], bji * b[j], ore::Side::Left);
      V D = ctx.define(info("D", ij, "D"), c * (bij * b[i]));
      ctx.equal(D, d * (bji * b[j]), "denominator D" + idx_name("", ij).substr(1));
      ctx.nonzero(idx_name("D", ij), D);
      V lhs = d * (aji * a[i]) - c * (aij * a[j]);
      if (j == i + m) ctx.equal(lhs, D, "[w_" + std::to_string(j + 1) + ", w_" + std::to_string(i + 1) + "] = 1");
      else ctx.equal(lhs, ctx.zero(), "[w_" + std::to_string(j + 1) + ", w_" + std::to_string(i + 1) + "] = 0");
    }

  // words B_t^{-1} A_t
  std::map<Tuple, std::pair<V, V>> words;
  auto word = [&](auto&& self, const Tuple& t) -> std::pair<V, V> {
    if (auto it = words.find(t); it != words.end()) return it->second;
    std::pair<V, V> out{ctx.one(), ctx.one()};
    if (t.size() == 1) {
      out = {b[t[0] - 1], a[t[0] - 1]};
    } else if (t.size() == 2) {
      const auto& [bij, aij] = pd.at({t[0] - 1, t[1] - 1});
      out = {ctx.define(info("B", t, "word_B"), bij * b[t[0] - 1]), ctx.define(info("A", t, "word_A"), aij * a[t[1] - 1])};
    } else if (t.size() > 2) {
      Tuple prev(t.begin(), t.end() - 1);
      auto [Bp, Ap] = self(self, prev);
      const int ik = t.back() - 1;
      V beta = b[ik], alpha = Ap;
      if (!comm) {
        std::tie(beta, alpha) = ctx.ore(info("b", t, "b_chain"), info("a", t, "a_chain"), Ap, b[ik], ore::Side::Left);
        ctx.equal(beta * Ap, alpha * b[ik], "word b" + idx_name("", t).substr(1));
        ctx.nonzero(idx_name("b", t), beta);
      }
      out = {ctx.define(info("B", t, "word_B"), beta * Bp), ctx.define(info("A", t, "word_A"), alpha * a[ik])};
    }
    words.emplace(t, out);
    return out;
  };
  const int r = static_cast<int>(P.tuples.size());
  std::vector<V> B, A;
  for (const auto& t : P.tuples) {
    auto [Bt, At] = word(word, t);
    B.push_back(Bt);
    A.push_back(At);
  }

  // left chain, shared by all generators
  std::vector<V> L{B[0]}, U{ctx.one()}, Vv{ctx.one()};
  for (int j = 1; j < r; ++j) {
    V u = B[j], v = L[j - 1];
    if (!comm) {
      std::tie(u, v) = ctx.ore(info("u", {j + 1}, "u"), info("v", {j + 1}, "v"), L[j - 1], B[j], ore::Side::Left);
      ctx.equal(u * L[j - 1], v * B[j], "left chain u_{" + std::to_string(j + 1) + "}");
      ctx.nonzero(idx_name("u", {j + 1}), u);
    }
    U.push_back(u);
    Vv.push_back(v);
    L.push_back(ctx.define(info("L", {j + 1}, "L"), u * L[j - 1]));
  }

  for (int k = 0; k < static_cast<int>(P.generators.size()); ++k) {
    V x = ctx.fixed(P.generators[k]);
    std::vector<V> Lam, Psi, F;
    for (int j = 0; j < r; ++j) {
      const std::vector<int> jk{j + 1, k + 1};
      // 
      V f = B[j], e = A[j] * x;
      if (!comm) {
        std::tie(f, e) = ctx.ore(info("f", jk, "f", ';'), info("e", jk, "e", ';'), A[j] * x, B[j], ore::Side::Right);
        ctx.equal(A[j] * x * f, B[j] * e, "move x e" + idx_name("", jk, ';').substr(1));
        ctx.nonzero(idx_name("f", jk, ';'), f);
      }
      F.push_back(f);
      V lam = ctx.zero(), mu = ctx.zero();
      for (const auto& n : P.center_monos) {
        V power = ctx.one();
        for (int c = 0; c < l; ++c)
          for (int e2 = 0; e2 < n[c]; ++e2) power = power * phi[c];
        auto sname = [&](const char* base) {
          return SymbolInfo{std::string(base) + "_{" + std::to_string(j + 1) + "," + std::to_string(k + 1) + "}" + exps_text(n),
                            base, [&] {
                              std::vector<int> idx{j + 1, k + 1};
                              idx.insert(idx.end(), n.begin(), n.end());
                              return idx;
                            }()};
        };
        lam = lam + ctx.scalar(sname("lambda"), {InputKey::Kind::Lambda, j, k, n}) * power;
        mu = mu + ctx.scalar(sname("mu"), {InputKey::Kind::Mu, j, k, n}) * power;
      }
      Lam.push_back(ctx.define(info("Lam", jk, "Lam", ';'), lam * A[j]));
      Psi.push_back(ctx.define(info("Psi", jk, "Psi", ';'), mu * e));
    }
    // right chain and the accumulated numerators
    V N = Lam[0], R = F[0], Pn = Psi[0];
    for (int j = 1; j < r; ++j) {
      const std::vector<int> jk{j + 1, k + 1};
      N = ctx.define(info("N", jk, "N", ';'), U[j] * N + Vv[j] * Lam[j]);
      V g = F[j], h = R;
      if (!comm) {
        std::tie(g, h) = ctx.ore(info("g", jk, "g", ';'), info("h", jk, "h", ';'), R, F[j], ore::Side::Right);
        ctx.equal(R * g, F[j] * h, "right chain g" + idx_name("", jk, ';').substr(1));
        ctx.nonzero(idx_name("g", jk, ';'), g);
      }
      Pn = ctx.define(info("P", jk, "P", ';'), Pn * g + Psi[j] * h);
      R = ctx.define(info("R", jk, "R", ';'), R * g);
    }
    // p_k = L^{-1} N equals q_k x_k = P R^{-1}, with q_k != 0
    ctx.equal(N * R, L.back() * Pn, "recovery x_" + std::to_string(k + 1));
    ctx.nonzero("q_" + std::to_string(k + 1), Pn);
  }
}

}  // namespace zfam::sent
