#pragma once

// Chevalley basis structure constants over Z.

#include <zfam/rootsys/root_system.hpp>

#include <gmpxx.h>

namespace zfam::roots {

/// Sign convention recorded in certificates: extraspecial pairs (positive roots
/// ordered by height then lex) get N = +(p+1); N_{-a,-b} = -N_{a,b}.
inline constexpr const char* kSignConvention = "extraspecial-height-lex/v1";

class ChevalleyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Sparse integer combination of basis elements.
using BasisCombination = std::vector<std::pair<int, long>>;

/// Basis e_1..e_N, h_1..h_n, f_1..f_N (indices 0..2N+n-1) with its bracket table.
class ChevalleyBasis {
 public:
  const RootSystem& root_system() const { return rs_; }
  int dimension() const { return static_cast<int>(rs_.lie_dimension()); }
  int num_positive() const { return static_cast<int>(rs_.num_positive()); }
  int rank() const { return rs_.rank(); }

  int e_index(int k) const { return k; }
  int h_index(int i) const { return num_positive() + i; }
  int f_index(int k) const { return num_positive() + rank() + k; }

  /// "e.<k>", "h.<i>", "f.<k>" with 1-based indices.
  std::string name(int idx) const {
    const int N = num_positive(), n = rank();
    if (idx < N) return "e." + std::to_string(idx + 1);
    if (idx < N + n) return "h." + std::to_string(idx - N + 1);
    return "f." + std::to_string(idx - N - n + 1);
  }

  /// Root of a root vector (e or f), empty for h's.
  IntVector root_of(int idx) const {
    const int N = num_positive(), n = rank();
    if (idx < N) return rs_.positive_roots()[idx];
    if (idx < N + n) return {};
    return RootSystem::negate(rs_.positive_roots()[idx - N - n]);
  }

  const BasisCombination& bracket(int a, int b) const { return table_[a][b]; }

  /// Structure constant N_{a,b} for roots a, b with a+b a root.
  long structure_constant(const IntVector& a, const IntVector& b) const { return n_const(a, b); }

  /// Coroot of alpha in the basis of simple coroots h_1..h_n.
  IntVector coroot(const IntVector& alpha) const {
    IntVector out(rank(), 0);
    const long aa = rs_.inner(alpha, alpha);
    for (int i = 0; i < rank(); ++i) {
      long num = alpha[i] * rs_.gram()[i][i];
      if (num % aa) throw ChevalleyError("non-integral coroot");
      out[i] = num / aa;
    }
    return out;
  }

  /// Bracket table with constants reduced into [0, p); zero entries dropped.
  std::vector<std::vector<BasisCombination>> reduced_table(long p) const {
    if (p < 2) throw std::invalid_argument("modulus must be at least 2");
    auto out = table_;
    for (auto& row : out)
      for (auto& cell : row) {
        BasisCombination kept;
        for (auto [idx, c] : cell)
          if (long r = ((c % p) + p) % p) kept.push_back({idx, r});
        cell = std::move(kept);
      }
    return out;
  }

  /// Every Jacobi sum [x,[y,z]] + [y,[z,x]] + [z,[x,y]] on basis triples; returns
  /// the number of triples checked and throws on the first violation.
  std::size_t verify_jacobi() const {
    const int d = dimension();
    std::size_t count = 0;
    auto bracket_comb = [&](int x, const BasisCombination& v, std::vector<long>& acc, long scale) {
      for (auto [y, c] : v)
        for (auto [z, k] : table_[x][y]) acc[z] += scale * c * k;
    };
    for (int x = 0; x < d; ++x)
      for (int y = x + 1; y < d; ++y)
        for (int z = y + 1; z < d; ++z) {
          std::vector<long> acc(d, 0);
          bracket_comb(x, table_[y][z], acc, 1);
          bracket_comb(y, table_[z][x], acc, 1);
          bracket_comb(z, table_[x][y], acc, 1);
          for (int t = 0; t < d; ++t)
            if (acc[t] != 0)
              throw ChevalleyError("Jacobi identity fails on (" + name(x) + ", " + name(y) + ", " + name(z) + ")");
          ++count;
        }
    return count;
  }

  friend ChevalleyBasis chevalley_constants(const RootSystem& rs);

 private:
  long n_positive(const IntVector& a, const IntVector& b) const;
  long n_const(const IntVector& a, const IntVector& b) const;
  long string_p(const IntVector& a, const IntVector& b) const {
    long p = 0;
    IntVector v = b;
    while (true) {
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= a[i];
      if (!rs_.is_root(v)) return p;
      ++p;
    }
  }
  static IntVector add(const IntVector& a, const IntVector& b) {
    IntVector s = a;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
    return s;
  }
  static bool positive(const IntVector& v) {
    for (auto x : v)
      if (x != 0) return x > 0;
    return false;
  }
  long norm(const IntVector& v) const { return rs_.inner(v, v); }
  static mpq_class ratio(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  RootSystem rs_;
  std::vector<std::vector<BasisCombination>> table_;
  mutable std::map<std::pair<IntVector, IntVector>, long> memo_;
};

inline long ChevalleyBasis::n_const(const IntVector& a, const IntVector& b) const {
  IntVector s = add(a, b);
  if (!rs_.is_root(s)) return 0;
  auto key = std::make_pair(a, b);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  long value = 0;
  const bool pa = positive(a), pb = positive(b);
  if (pa && pb) value = n_positive(a, b);
  else if (!pa && !pb) value = -n_const(RootSystem::negate(a), RootSystem::negate(b));
  else {
    // a + b + c = 0: N_{a,b}/|c|^2 = N_{b,c}/|a|^2 = N_{c,a}/|b|^2
    IntVector c = RootSystem::negate(s);
    mpq_class v;
    if (positive(c) == pb) v = ratio(norm(c), norm(a)) * n_const(b, c);
    else v = ratio(norm(c), norm(b)) * n_const(c, a);
    if (v.get_den() != 1) throw ChevalleyError("non-integral structure constant");
    value = v.get_num().get_si();
  }
  memo_.emplace(key, value);
  return value;
}

inline long ChevalleyBasis::n_positive(const IntVector& a, const IntVector& b) const {
  const int ia = rs_.positive_index(a), ib = rs_.positive_index(b);
  if (ia > ib) return -n_const(b, a);
  const IntVector xi = add(a, b);
  // extraspecial pair: smallest g with xi - g a positive root
  IntVector g, d;
  for (const auto& r : rs_.positive_roots()) {
    IntVector rest = xi;
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= r[i];
    if (rs_.positive_index(rest) >= 0) {
      g = r;
      d = rest;
      break;
    }
  }
  if (g == a) return string_p(a, b) + 1;
  // Four roots g + d - a - b = 0:
  // N_{g,d} N_{-a,-b}/|xi|^2 + N_{d,-a} N_{g,-b}/|d-a|^2 + N_{-a,g} N_{d,-b}/|g-a|^2 = 0
  const IntVector na = RootSystem::negate(a), nb = RootSystem::negate(b);
  mpq_class rhs = 0;
  IntVector da = add(d, na), ga = add(g, na);
  if (rs_.is_root(da)) rhs += ratio(n_const(d, na) * n_const(g, nb), norm(da));
  if (rs_.is_root(ga)) rhs += ratio(n_const(na, g) * n_const(d, nb), norm(ga));
  // N_{-a,-b} = -N_{a,b}
  mpq_class v = rhs * norm(xi) / n_const(g, d);
  if (v.get_den() != 1) throw ChevalleyError("non-integral structure constant");
  return v.get_num().get_si();
}

inline ChevalleyBasis chevalley_constants(const RootSystem& rs) {
  ChevalleyBasis cb;
  cb.rs_ = rs;
  const int d = cb.dimension(), N = cb.num_positive(), n = cb.rank();
  cb.table_.assign(d, std::vector<BasisCombination>(d));
  auto root_basis_index = [&](const IntVector& r) {
    int k = rs.positive_index(r);
    if (k >= 0) return cb.e_index(k);
    return cb.f_index(rs.positive_index(RootSystem::negate(r)));
  };
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      BasisCombination out;
      const bool hx = x >= N && x < N + n, hy = y >= N && y < N + n;
      if (hx && hy) {
      } else if (hx) {
        long c = rs.pairing(cb.root_of(y), rs.positive_roots()[x - N]);
        if (c) out.push_back({y, c});
      } else if (hy) {
        long c = rs.pairing(cb.root_of(x), rs.positive_roots()[y - N]);
        if (c) out.push_back({x, -c});
      } else {
        IntVector a = cb.root_of(x), b = cb.root_of(y);
        IntVector s = ChevalleyBasis::add(a, b);
        if (std::all_of(s.begin(), s.end(), [](long v) { return v == 0; })) {
          // [e_a, e_{-a}] = h_a
          IntVector co = cb.coroot(a);
          for (int i = 0; i < n; ++i)
            if (co[i]) out.push_back({cb.h_index(i), co[i]});
        } else if (rs.is_root(s)) {
          out.push_back({root_basis_index(s), cb.n_const(a, b)});
        }
      }
      std::sort(out.begin(), out.end());
      cb.table_[x][y] = std::move(out);
    }
  return cb;
}

}  // namespace zfam::roots
