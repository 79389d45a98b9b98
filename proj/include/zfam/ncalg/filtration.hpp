#pragma once

// Filtration pieces: total degree <= j in the ordered generators (Bernstein
// filtration for Weyl algebras, PBW degree for enveloping algebras). For
// invariant families the piece is the W-fixed subspace.

#include <zfam/ncalg/action.hpp>
#include <zfam/polycore/linalg.hpp>

namespace zfam::nc {

enum class InvariantMethod { Solve, Average };

struct FiltrationPiece {
  int level = 0;
  std::vector<AlgebraElement> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// Exponent vectors in g variables of total degree exactly d, ascending.
inline std::vector<NcMono> monomials_of_degree(std::size_t g, unsigned d) {
  std::vector<NcMono> out;
  NcMono cur(g, 0);
  // recursive fill over positions
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (g == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    if (pos + 1 == g) {
      cur[pos] = static_cast<std::uint16_t>(left);
      out.push_back(cur);
      cur[pos] = 0;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[pos] = static_cast<std::uint16_t>(e);
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), MonoLess{});
  return out;
}

inline std::vector<NcMono> monomials_up_to(std::size_t g, unsigned j) {
  std::vector<NcMono> out;
  for (unsigned d = 0; d <= j; ++d) {
    auto part = monomials_of_degree(g, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline mpz_class full_piece_dimension(std::size_t g, unsigned j) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), j + g, g);
  return r;
}

class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Coordinates of elements of one homogeneous degree, indexed by position in `monos`.
inline SparseRow coordinates(const AlgebraElement& a, const std::map<NcMono, std::uint32_t>& index, std::uint32_t offset = 0) {
  SparseRow row;
  for (const auto& [m, c] : a.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw std::logic_error("element leaves the expected monomial range");
    row.emplace(it->second + offset, c);
  }
  return row;
}

inline std::vector<AlgebraElement> fixed_in_degree(const FamilyInstance& inst, unsigned d, InvariantMethod method) {
  const Family& fam = *inst.family;
  const Domain work = inst.domain.is_field() ? inst.domain : Domain::rationals();
  FamilyInstance winst{inst.family, work};
  auto monos = monomials_of_degree(fam.num_generators(), d);
  std::map<NcMono, std::uint32_t> index;
  for (std::uint32_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
  const auto ncols = static_cast<std::uint32_t>(monos.size());
  std::vector<std::vector<Coefficient>> vectors;

  if (method == InvariantMethod::Solve) {
    std::vector<GroupAction> gens;
    for (const auto& m : fam.group_generators()) gens.push_back(make_action(winst, m));
    // columns: monomials; rows: (generator, output monomial)
    std::map<std::uint32_t, SparseRow> rows;
    for (std::uint32_t c = 0; c < ncols; ++c) {
      AlgebraElement mono = AlgebraElement::monomial(winst, monos[c]);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        AlgebraElement diff = act(gens[k], mono) - mono;
        for (const auto& [m, v] : diff.terms())
          rows[static_cast<std::uint32_t>(k * ncols + index.at(m))].emplace(c, v);
      }
    }
    EchelonForm ef(work, ncols);
    for (const auto& [r, row] : rows) ef.add_row(row);
    for (auto c : ef.free_columns()) vectors.push_back(ef.kernel_vector(c));
  } else {
    const std::uint64_t p = work.characteristic();
    if (p && fam.group_order() % p == 0)
      throw InvariantError("averaging over W needs |W| = " + std::to_string(fam.group_order()) +
                           " invertible, but the characteristic is " + std::to_string(p));
    std::vector<GroupAction> all;
    for (const auto& m : fam.group()) all.push_back(make_action(winst, m));
    Coefficient inv_order = Coefficient::from_integer(static_cast<long>(fam.group_order()), work).inverse();
    EchelonForm ef(work, ncols);
    for (std::uint32_t c = 0; c < ncols; ++c) {
      AlgebraElement mono = AlgebraElement::monomial(winst, monos[c]);
      AlgebraElement avg(winst);
      for (const auto& g : all) avg = avg + act(g, mono);
      avg = avg.scaled(inv_order);
      SparseRow row = coordinates(avg, index);
      if (ef.add_row(row)) {
        std::vector<Coefficient> v(ncols, Coefficient::zero(work));
        for (const auto& [k, x] : row) v[k] = x;
        vectors.push_back(std::move(v));
      }
    }
  }

  std::vector<AlgebraElement> out;
  for (auto& v : vectors) {
    AlgebraElement a(winst);
    for (std::uint32_t c = 0; c < ncols; ++c) a.add_term(monos[c], v[c]);
    if (!inst.domain.is_field()) {
      // primitive integer representative
      mpz_class den = 1, g = 0;
      for (const auto& [m, c] : a.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.as_rational().get_den_mpz_t());
      AlgebraElement z(inst);
      for (const auto& [m, c] : a.terms()) {
        mpq_class q = c.as_rational() * den;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
      }
      for (const auto& [m, c] : a.terms()) {
        mpq_class q = c.as_rational() * den / g;
        z.add_term(m, Coefficient::integer(q.get_num()));
      }
      a = std::move(z);
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace detail

/// Basis of the degree-d part of the fixed subspace (invariant families) or all
/// degree-d monomials (other families).
inline std::vector<AlgebraElement> graded_basis(const FamilyInstance& inst, unsigned d,
                                                InvariantMethod method = InvariantMethod::Solve) {
  if (inst->is_invariant()) {
    static std::mutex mutex;
    static std::map<std::tuple<std::string, std::string, unsigned, int>, std::vector<AlgebraElement>> cache;
    auto key = std::make_tuple(inst->label(), inst.domain.name(), d, static_cast<int>(method));
    {
      std::lock_guard lock(mutex);
      if (auto it = cache.find(key); it != cache.end()) {
        std::vector<AlgebraElement> out;
        for (const auto& a : it->second) {
          AlgebraElement b(inst);
          for (const auto& [m, c] : a.terms()) b.add_term(m, c);
          out.push_back(std::move(b));
        }
        return out;
      }
    }
    auto basis = detail::fixed_in_degree(inst, d, method);
    std::lock_guard lock(mutex);
    cache.emplace(key, basis);
    return basis;
  }
  std::vector<AlgebraElement> out;
  for (const auto& m : monomials_of_degree(inst->num_generators(), d)) out.push_back(AlgebraElement::monomial(inst, m));
  return out;
}

inline FiltrationPiece filtration_piece(const FamilyInstance& inst, int j, InvariantMethod method = InvariantMethod::Solve) {
  if (j < 0) throw std::invalid_argument("filtration level must be nonnegative");
  FiltrationPiece piece{j, {}};
  for (unsigned d = 0; d <= static_cast<unsigned>(j); ++d) {
    auto part = graded_basis(inst, d, method);
    piece.basis.insert(piece.basis.end(), part.begin(), part.end());
  }
  return piece;
}

inline mpz_class piece_dimension(const FamilyInstance& inst, int j) {
  if (!inst->is_invariant()) return full_piece_dimension(inst->num_generators(), static_cast<unsigned>(j));
  mpz_class total = 0;
  for (unsigned d = 0; d <= static_cast<unsigned>(j); ++d) total += graded_basis(inst, d).size();
  return total;
}

/// Whether g(a) = a for every group generator (always true for non-invariant families).
inline bool is_invariant_element(const AlgebraElement& a) {
  if (!a.family().is_invariant()) return true;
  for (const auto& m : a.family().group_generators())
    if (!(act(m, a) == a)) return false;
  return true;
}

/// The generators x_1..x_n drawn from the Z-form: the basis of the generator
/// level without scalars.
inline std::vector<AlgebraElement> algebra_generators(const FamilyInstance& inst) {
  std::vector<AlgebraElement> out;
  for (unsigned d = 1; d <= static_cast<unsigned>(inst->generator_level()); ++d)
    for (auto& a : graded_basis(inst, d)) out.push_back(std::move(a));
  return out;
}

}  // namespace zfam::nc
