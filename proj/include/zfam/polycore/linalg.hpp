#pragma once

// Exact sparse linear algebra over QQ and GF(p). Rational systems are
// eliminated fraction-free on primitive integer rows.

#include <zfam/polycore/coefficient.hpp>

#include <map>
#include <optional>
#include <vector>

namespace zfam {

using SparseRow = std::map<std::uint32_t, Coefficient>;

namespace detail {

using IntRow = std::vector<std::pair<std::uint32_t, mpz_class>>;
using ModRow = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

inline IntRow to_int_row(const SparseRow& r) {
  mpz_class den = 1;
  for (const auto& [c, v] : r) {
    mpq_class q = v.as_rational();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  IntRow out;
  for (const auto& [c, v] : r) {
    mpq_class q = v.as_rational() * den;
    if (q != 0) out.push_back({c, q.get_num()});
  }
  return out;
}

inline void make_primitive(IntRow& r) {
  if (r.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (r.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// r := a*r - b*p with a = p_lead/g, b = r_lead/g; kills r's leading entry.
inline IntRow combine(const IntRow& r, const IntRow& p) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r.front().second.get_mpz_t(), p.front().second.get_mpz_t());
  mpz_class a = p.front().second / g, b = r.front().second / g;
  IntRow out;
  out.reserve(r.size() + p.size());
  auto i = r.begin() + 1, j = p.begin() + 1;
  while (i != r.end() || j != p.end()) {
    if (j == p.end() || (i != r.end() && i->first < j->first)) {
      out.push_back({i->first, a * i->second});
      ++i;
    } else if (i == r.end() || j->first < i->first) {
      out.push_back({j->first, -b * j->second});
      ++j;
    } else {
      mpz_class v = a * i->second - b * j->second;
      if (v != 0) out.push_back({i->first, std::move(v)});
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

inline ModRow combine_mod(const ModRow& r, const ModRow& p, std::uint64_t q) {
  // p is monic; r -= r_lead * p
  const std::uint64_t f = r.front().second;
  ModRow out;
  out.reserve(r.size() + p.size());
  auto i = r.begin() + 1, j = p.begin() + 1;
  while (i != r.end() || j != p.end()) {
    if (j == p.end() || (i != r.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == r.end() || j->first < i->first) {
      out.push_back({j->first, (q - f * j->second % q) % q});
      ++j;
    } else {
      std::uint64_t v = (i->second + q - f * j->second % q) % q;
      if (v) out.push_back({i->first, v});
      ++i;
      ++j;
    }
  }
  if (!out.empty() && out.front().second != 1) {
    std::uint64_t inv = mod_pow(out.front().second, q - 2, q);
    for (auto& [c, v] : out) v = v * inv % q;
  }
  return out;
}

}  // namespace detail

/// Row echelon form keyed by pivot column, built incrementally.
class EchelonForm {
 public:
  EchelonForm(Domain d, std::uint32_t ncols) : domain_(d), ncols_(ncols) {
    if (!d.is_field()) throw DomainError("linear algebra requires a field");
  }

  const Domain& domain() const { return domain_; }
  std::uint32_t ncols() const { return ncols_; }
  std::size_t rank() const { return domain_.kind == Domain::Kind::Rational ? int_rows_.size() : mod_rows_.size(); }

  /// Adds a row; returns false if it was dependent on the rows so far.
  bool add_row(const SparseRow& row) {
    if (domain_.kind == Domain::Kind::Rational) {
      auto r = detail::to_int_row(row);
      detail::make_primitive(r);
      while (!r.empty()) {
        auto it = int_rows_.find(r.front().first);
        if (it == int_rows_.end()) {
          int_rows_.emplace(r.front().first, std::move(r));
          return true;
        }
        r = detail::combine(r, it->second);
      }
      return false;
    }
    const std::uint64_t q = domain_.prime;
    detail::ModRow r;
    for (const auto& [c, v] : row)
      if (!v.is_zero()) r.push_back({c, v.residue_value()});
    if (!r.empty() && r.front().second != 1) {
      std::uint64_t inv = detail::mod_pow(r.front().second, q - 2, q);
      for (auto& [c, v] : r) v = v * inv % q;
    }
    while (!r.empty()) {
      auto it = mod_rows_.find(r.front().first);
      if (it == mod_rows_.end()) {
        mod_rows_.emplace(r.front().first, std::move(r));
        return true;
      }
      r = detail::combine_mod(r, it->second, q);
    }
    return false;
  }

  bool is_pivot(std::uint32_t col) const {
    return domain_.kind == Domain::Kind::Rational ? int_rows_.count(col) > 0 : mod_rows_.count(col) > 0;
  }

  /// Kernel vector with x[free_col] = 1 and every other free column 0.
  std::vector<Coefficient> kernel_vector(std::uint32_t free_col) const {
    if (is_pivot(free_col)) throw std::logic_error("kernel_vector on a pivot column");
    std::vector<Coefficient> x(ncols_, Coefficient::zero(domain_));
    x[free_col] = Coefficient::one(domain_);
    if (domain_.kind == Domain::Kind::Rational) {
      std::vector<mpq_class> xv(ncols_, 0);
      xv[free_col] = 1;
      for (auto it = int_rows_.rbegin(); it != int_rows_.rend(); ++it) {
        if (it->first > free_col) continue;
        mpq_class s = 0;
        const auto& row = it->second;
        for (std::size_t k = 1; k < row.size(); ++k)
          if (xv[row[k].first] != 0) s += mpq_class(row[k].second) * xv[row[k].first];
        xv[it->first] = -s / mpq_class(row.front().second);
      }
      for (std::uint32_t c = 0; c < ncols_; ++c) x[c] = Coefficient::rational(xv[c]);
      return x;
    }
    const std::uint64_t q = domain_.prime;
    std::vector<std::uint64_t> xv(ncols_, 0);
    xv[free_col] = 1;
    for (auto it = mod_rows_.rbegin(); it != mod_rows_.rend(); ++it) {
      if (it->first > free_col) continue;
      std::uint64_t s = 0;
      for (std::size_t k = 1; k < it->second.size(); ++k) s = (s + it->second[k].second * xv[it->second[k].first]) % q;
      xv[it->first] = (q - s) % q;
    }
    for (std::uint32_t c = 0; c < ncols_; ++c) x[c] = Coefficient::residue(static_cast<std::int64_t>(xv[c]), q);
    return x;
  }

  std::vector<std::uint32_t> free_columns() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < ncols_; ++c)
      if (!is_pivot(c)) out.push_back(c);
    return out;
  }

 private:
  Domain domain_;
  std::uint32_t ncols_;
  std::map<std::uint32_t, detail::IntRow> int_rows_;
  std::map<std::uint32_t, detail::ModRow> mod_rows_;
};

/// Basis of the null space of the given rows, one vector per free column.
inline std::vector<std::vector<Coefficient>> kernel_basis(const std::vector<SparseRow>& rows, std::uint32_t ncols, const Domain& d) {
  EchelonForm ef(d, ncols);
  for (const auto& r : rows) ef.add_row(r);
  std::vector<std::vector<Coefficient>> out;
  for (auto c : ef.free_columns()) out.push_back(ef.kernel_vector(c));
  return out;
}

/// Coordinates x with sum_k x[k] * columns[k] == target, if they exist.
/// Vectors are sparse maps from row index to value; the basis must be independent
/// for the answer to be unique.
inline std::optional<std::vector<Coefficient>> solve_in_span(const std::vector<SparseRow>& columns, const SparseRow& target,
                                                             const Domain& d) {
  const auto k = static_cast<std::uint32_t>(columns.size());
  std::map<std::uint32_t, SparseRow> rows;
  for (std::uint32_t c = 0; c < k; ++c)
    for (const auto& [r, v] : columns[c]) rows[r][c] = v;
  for (const auto& [r, v] : target) rows[r][k] = v;
  EchelonForm ef(d, k + 1);
  for (const auto& [r, row] : rows) ef.add_row(row);
  if (ef.is_pivot(k)) return std::nullopt;
  auto x = ef.kernel_vector(k);
  x.pop_back();
  for (auto& v : x) v = -v;
  return x;
}

}  // namespace zfam
