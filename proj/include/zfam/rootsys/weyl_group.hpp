#pragma once

// Weyl group enumeration by breadth-first closure over simple reflections.

#include <zfam/rootsys/root_system.hpp>

namespace zfam::roots {

class GroupTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultWeylCap = 1000000;

/// Matrix on the simple-root lattice (column i = image of alpha_i) and a word
/// (j1, ..., jk) with matrix = s_j1 * ... * s_jk; 0-based reflection indices.
struct WeylGroupElement {
  IntMatrix matrix;
  std::vector<int> word;

  IntVector apply(const IntVector& v) const {
    IntVector out(v.size(), 0);
    for (std::size_t i = 0; i < matrix.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) out[i] += matrix[i][j] * v[j];
    return out;
  }
};

inline IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t])
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
  return c;
}

/// Matrix of the simple reflection s_j.
inline IntMatrix simple_reflection(const RootSystem& rs, int j) {
  const int n = rs.rank();
  IntMatrix m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    IntVector img = rs.reflect(e, j);
    for (int r = 0; r < n; ++r) m[r][i] = img[r];
  }
  return m;
}

/// All elements, identity first, in breadth-first (length) order.
inline std::vector<WeylGroupElement> weyl_group(const RootSystem& rs, std::size_t cap = kDefaultWeylCap) {
  const int n = rs.rank();
  std::vector<IntMatrix> gens;
  for (int j = 0; j < n; ++j) gens.push_back(simple_reflection(rs, j));
  std::vector<WeylGroupElement> out{{identity_matrix(n), {}}};
  std::set<IntMatrix> seen{out[0].matrix};
  for (std::size_t head = 0; head < out.size(); ++head)
    for (int j = 0; j < n; ++j) {
      IntMatrix m = mat_mul(gens[j], out[head].matrix);
      if (!seen.insert(m).second) continue;
      if (out.size() >= cap)
        throw GroupTooLarge("Weyl group of " + rs.label() + " exceeds the cap of " + std::to_string(cap) + " elements");
      std::vector<int> word{j};
      word.insert(word.end(), out[head].word.begin(), out[head].word.end());
      out.push_back({std::move(m), std::move(word)});
    }
  return out;
}

inline std::vector<IntMatrix> crystallographic_matrices(const std::vector<WeylGroupElement>& group) {
  std::vector<IntMatrix> out;
  out.reserve(group.size());
  for (const auto& g : group) out.push_back(g.matrix);
  return out;
}

}  // namespace zfam::roots
