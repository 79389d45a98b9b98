#pragma once

// Ore-condition solving by exact linear algebra on filtration pieces.

#include <zfam/ncalg.hpp>

namespace zfam::ore {

using nc::AlgebraElement;
using nc::FamilyInstance;

class NoSolutionAtBound : public std::runtime_error {
 public:
  explicit NoSolutionAtBound(int bound, const std::string& what = "")
      : std::runtime_error("no Ore solution with degrees <= " + std::to_string(bound) + (what.empty() ? "" : ": " + what)),
        bound_(bound) {}
  int bound() const { return bound_; }

 private:
  int bound_;
};

/// c * b1 = d * b2 (left) or b1 * c = b2 * d (right), both nonzero.
struct OreSolution {
  AlgebraElement c, d;
  int bound = 0;
};

/// Initial bound and escalation ceiling; bounds double until the ceiling.
struct OreBounds {
  int initial = 2;
  int ceiling = 16;
};

enum class Side { Left, Right };

namespace detail {

inline Domain work_domain(const Domain& d) { return d.is_field() ? d : Domain::rationals(); }

/// Nonzero (c, d) with deg c = s, deg d = t on the given side, or nullopt.
inline std::optional<OreSolution> solve_at(const AlgebraElement& b1, const AlgebraElement& b2, int s, int t, Side side) {
  const FamilyInstance& inst = b1.instance();
  const FamilyInstance work{inst.family, work_domain(inst.domain)};
  const AlgebraElement w1 = b1.converted(work.domain), w2 = b2.converted(work.domain);
  auto cb = nc::filtration_piece(work, s).basis, db = nc::filtration_piece(work, t).basis;
  // columns: c-basis then d-basis; entries: coefficients of c_k*b1 and -(d_k*b2)
  std::map<nc::NcMono, std::uint32_t, nc::MonoLess> rows_index;
  std::vector<AlgebraElement> cols;
  for (const auto& v : cb) cols.push_back(side == Side::Left ? v * w1 : w1 * v);
  for (const auto& v : db) cols.push_back(-(side == Side::Left ? v * w2 : w2 * v));
  std::map<std::uint32_t, SparseRow> rows;
  for (std::uint32_t k = 0; k < cols.size(); ++k)
    for (const auto& [m, c] : cols[k].terms()) {
      auto [it, fresh] = rows_index.emplace(m, static_cast<std::uint32_t>(rows_index.size()));
      rows[it->second].emplace(k, c);
    }
  EchelonForm ef(work.domain, static_cast<std::uint32_t>(cols.size()));
  for (const auto& [r, row] : rows) ef.add_row(row);
  auto free = ef.free_columns();
  if (free.empty()) return std::nullopt;
  auto x = ef.kernel_vector(free.front());
  AlgebraElement c(work), d(work);
  for (std::size_t k = 0; k < cb.size(); ++k)
    if (!x[k].is_zero()) c = c + cb[k].scaled(x[k]);
  for (std::size_t k = 0; k < db.size(); ++k)
    if (!x[cb.size() + k].is_zero()) d = d + db[k].scaled(x[cb.size() + k]);
  if (c.is_zero() || d.is_zero()) throw std::logic_error("Ore kernel vector with a zero side: not a domain?");
  if (!inst.domain.is_field()) {
    // clear denominators into a primitive integer pair
    mpz_class den = 1;
    for (const auto* e : {&c, &d})
      for (const auto& [m, v] : e->terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.as_rational().get_den_mpz_t());
    auto to_int = [&](const AlgebraElement& e) {
      AlgebraElement out(inst);
      for (const auto& [m, v] : e.terms()) out.add_term(m, Coefficient::integer(mpq_class(v.as_rational() * den).get_num()));
      return out;
    };
    return OreSolution{to_int(c), to_int(d), std::max(s, t)};
  }
  return OreSolution{std::move(c), std::move(d), std::max(s, t)};
}

}  // namespace detail

/// Nonzero (c, d) with c * b1 = d * b2 (Side::Left) or b1 * c = b2 * d
/// (Side::Right) and deg c, deg d <= bound. The search runs over increasing
/// deg c; the first kernel direction at the smallest degree is returned, which
/// makes the answer deterministic. The identity is re-verified before return.
inline OreSolution solve_ore(const AlgebraElement& b1, const AlgebraElement& b2, int bound, Side side = Side::Left) {
  b1.check_compatible(b2);
  if (b1.is_zero() || b2.is_zero()) throw std::invalid_argument("Ore condition needs nonzero elements");
  const int d1 = b1.degree(), d2 = b2.degree();
  for (int s = std::max(0, d2 - d1); s <= bound; ++s) {
    const int t = s + d1 - d2;
    if (t > bound) break;
    auto sol = detail::solve_at(b1, b2, s, t, side);
    if (!sol) continue;
    const bool ok = side == Side::Left ? sol->c * b1 == sol->d * b2 : b1 * sol->c == b2 * sol->d;
    if (!ok) throw std::logic_error("Ore solution failed re-verification");
    return *sol;
  }
  throw NoSolutionAtBound(bound);
}

/// solve_ore with bound escalation: initial, 2*initial, ... up to the ceiling.
inline OreSolution solve_ore(const AlgebraElement& b1, const AlgebraElement& b2, const OreBounds& bounds, Side side = Side::Left) {
  int bound = std::max({1, bounds.initial, std::max(b1.degree(), b2.degree())});
  while (true) {
    try {
      return solve_ore(b1, b2, std::min(bound, bounds.ceiling), side);
    } catch (const NoSolutionAtBound&) {
      if (bound >= bounds.ceiling) throw NoSolutionAtBound(bounds.ceiling, "ceiling reached");
      bound *= 2;
    }
  }
}

/// q with b * q = a (Side::Left: a = b q) or q * b = a (Side::Right), if it exists.
inline std::optional<AlgebraElement> exact_quotient(const AlgebraElement& a, const AlgebraElement& b, Side side = Side::Left) {
  a.check_compatible(b);
  if (b.is_zero()) throw std::invalid_argument("division by zero");
  if (a.is_zero()) return AlgebraElement(a.instance());
  const int dq = a.degree() - b.degree();
  if (dq < 0 || !a.domain().is_field()) return std::nullopt;
  if (b.is_scalar()) return a.scaled(b.scalar_part().inverse());
  auto basis = nc::filtration_piece(a.instance(), dq).basis;
  std::map<nc::NcMono, std::uint32_t, nc::MonoLess> idx;
  auto index_of = [&](const nc::NcMono& m) { return idx.emplace(m, static_cast<std::uint32_t>(idx.size())).first->second; };
  std::vector<SparseRow> cols;
  for (const auto& v : basis) {
    SparseRow col;
    const AlgebraElement prod = side == Side::Left ? b * v : v * b;
    for (const auto& [m, c] : prod.terms()) col.emplace(index_of(m), c);
    cols.push_back(std::move(col));
  }
  SparseRow target;
  for (const auto& [m, c] : a.terms()) target.emplace(index_of(m), c);
  auto x = solve_in_span(cols, target, a.domain());
  if (!x) return std::nullopt;
  AlgebraElement q(a.instance());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!(*x)[k].is_zero()) q = q + basis[k].scaled((*x)[k]);
  if (!((side == Side::Left ? b * q : q * b) == a)) return std::nullopt;
  return q;
}

}  // namespace zfam::ore
