#pragma once

// Weyl group acting on A_n by x -> M x, y -> M^{-T} y (the contragredient rule
// keeps [y_i, x_j] = delta_ij).

#include <zfam/ncalg/element.hpp>

namespace zfam::nc {

class ActionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline roots::IntMatrix integer_inverse(const roots::IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw ActionError("singular action matrix");
    std::swap(a[p], a[c]);
    mpq_class piv = a[c][c];
    for (auto& v : a[c]) v /= piv;
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && a[r][c] != 0) {
        mpq_class f = a[r][c];
        for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
      }
  }
  roots::IntMatrix inv(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& v = a[i][n + j];
      if (v.get_den() != 1) throw ActionError("action matrix is not invertible over Z");
      inv[i][j] = v.get_num().get_si();
    }
  return inv;
}

}  // namespace detail

/// Images of x_1..x_n, y_1..y_n under one group element.
struct GroupAction {
  roots::IntMatrix matrix;
  std::vector<AlgebraElement> images;
};

inline GroupAction make_action(const FamilyInstance& inst, const roots::IntMatrix& m) {
  const auto k = inst->kind();
  if (k != Family::Kind::WeylFull && k != Family::Kind::WeylInvariants)
    throw ActionError("no Weyl group action on " + inst->label());
  const int n = inst->weyl_rank();
  if (static_cast<int>(m.size()) != n) throw ActionError("action matrix has the wrong size");
  roots::IntMatrix inv = detail::integer_inverse(m);
  GroupAction act{m, {}};
  // x_i -> sum_j M[j][i] x_j ; y_i -> sum_j (M^{-T})[j][i] y_j = sum_j inv[i][j] y_j
  for (int i = 0; i < n; ++i) {
    AlgebraElement img(inst);
    for (int j = 0; j < n; ++j)
      if (m[j][i]) img.add_term(inst->generator_mono(j), Coefficient::from_integer(m[j][i], inst.domain));
    act.images.push_back(std::move(img));
  }
  for (int i = 0; i < n; ++i) {
    AlgebraElement img(inst);
    for (int j = 0; j < n; ++j)
      if (inv[i][j]) img.add_term(inst->generator_mono(n + j), Coefficient::from_integer(inv[i][j], inst.domain));
    act.images.push_back(std::move(img));
  }
  // the images must satisfy the defining relations
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      AlgebraElement c = commutator(act.images[i], act.images[j]);
      long expect = (i >= n && j == i - n) ? 1 : (j >= n && i == j - n) ? -1 : 0;
      if (!(c == AlgebraElement::scalar(inst, expect))) throw ActionError("action does not preserve the Weyl relations");
    }
  return act;
}

inline AlgebraElement act(const GroupAction& g, const AlgebraElement& a) {
  AlgebraElement out(a.instance());
  for (const auto& [m, c] : a.terms()) {
    AlgebraElement t = AlgebraElement::scalar(a.instance(), c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t = t * g.images[i].pow(m[i]);
    out = out + t;
  }
  return out;
}

inline AlgebraElement act(const roots::IntMatrix& m, const AlgebraElement& a) { return act(make_action(a.instance(), m), a); }

}  // namespace zfam::nc
