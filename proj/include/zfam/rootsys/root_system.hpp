#pragma once

// Crystallographic root systems of types A-G, generated from the Cartan matrix
// by closing the simple roots under simple reflections.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace zfam::roots {

using IntVector = std::vector<long>;
using IntMatrix = std::vector<std::vector<long>>;

class InvalidDatum : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxRank = 8;

/// Root system with roots in coordinates over the simple roots.
/// cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
class RootSystem {
 public:
  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

  const IntMatrix& cartan() const { return cartan_; }
  /// Symmetric invariant form on simple roots, scaled so short roots have (a,a) = 2.
  const IntMatrix& gram() const { return gram_; }

  /// Positive roots ordered by height, then lexicographically.
  const std::vector<IntVector>& positive_roots() const { return positive_; }
  /// All roots: positive roots followed by their negatives.
  std::vector<IntVector> roots() const {
    std::vector<IntVector> all = positive_;
    for (const auto& r : positive_) all.push_back(negate(r));
    return all;
  }
  std::size_t num_positive() const { return positive_.size(); }
  std::size_t num_roots() const { return 2 * positive_.size(); }
  std::size_t lie_dimension() const { return 2 * positive_.size() + static_cast<std::size_t>(rank_); }

  bool is_root(const IntVector& v) const { return positive_index(v) >= 0 || positive_index(negate(v)) >= 0; }
  /// Index in positive_roots() or -1.
  int positive_index(const IntVector& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
  }

  /// (a, b) under the invariant form.
  long inner(const IntVector& a, const IntVector& b) const {
    long s = 0;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) s += a[i] * gram_[i][j] * b[j];
    return s;
  }
  /// <a, b^vee> = 2 (a,b) / (b,b).
  long pairing(const IntVector& a, const IntVector& b) const { return 2 * inner(a, b) / inner(b, b); }

  /// Reflection in simple root j.
  IntVector reflect(const IntVector& v, int j) const {
    long c = 0;
    for (int i = 0; i < rank_; ++i) c += v[i] * cartan_[i][j];
    IntVector out = v;
    out[j] -= c;
    return out;
  }

  static IntVector negate(IntVector v) {
    for (auto& x : v) x = -x;
    return v;
  }
  static long height(const IntVector& v) {
    long h = 0;
    for (auto x : v) h += x;
    return h;
  }

  friend RootSystem build_root_system(char type, int rank);

 private:
  char type_ = 'A';
  int rank_ = 0;
  IntMatrix cartan_, gram_;
  std::vector<IntVector> positive_;
  std::map<IntVector, int> index_;
};

namespace detail {

inline IntMatrix gram_matrix(char type, int n) {
  IntMatrix B(n, std::vector<long>(n, 0));
  auto chain = [&](int upto, long diag, long off) {
    for (int i = 0; i < upto; ++i) B[i][i] = diag;
    for (int i = 0; i + 1 < upto; ++i) B[i][i + 1] = B[i + 1][i] = off;
  };
  switch (type) {
    case 'A':
      if (n < 1) throw InvalidDatum("type A needs rank >= 1");
      chain(n, 2, -1);
      break;
    case 'B':
      // alpha_n short
      if (n < 2) throw InvalidDatum("type B needs rank >= 2");
      chain(n, 4, -2);
      B[n - 1][n - 1] = 2;
      break;
    case 'C':
      // alpha_n long
      if (n < 2) throw InvalidDatum("type C needs rank >= 2");
      chain(n, 2, -1);
      B[n - 1][n - 1] = 4;
      B[n - 2][n - 1] = B[n - 1][n - 2] = -2;
      break;
    case 'D':
      if (n < 4) throw InvalidDatum("type D needs rank >= 4");
      chain(n - 1, 2, -1);
      B[n - 1][n - 1] = 2;
      B[n - 3][n - 1] = B[n - 1][n - 3] = -1;
      break;
    case 'E': {
      if (n < 6 || n > 8) throw InvalidDatum("type E needs rank 6, 7 or 8");
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
      for (int i = 0; i < n; ++i) B[i][i] = 2;
      auto link = [&](int a, int b) { B[a - 1][b - 1] = B[b - 1][a - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int k = 4; k < n; ++k) link(k, k + 1);
      break;
    }
    case 'F':
      if (n != 4) throw InvalidDatum("type F needs rank 4");
      chain(4, 4, -2);
      B[2][2] = B[3][3] = 2;
      B[2][3] = B[3][2] = -1;
      break;
    case 'G':
      // alpha_1 short, alpha_2 long
      if (n != 2) throw InvalidDatum("type G needs rank 2");
      B = {{2, -3}, {-3, 6}};
      break;
    default: throw InvalidDatum(std::string("unknown Dynkin type '") + type + "'");
  }
  return B;
}

}  // namespace detail

inline RootSystem build_root_system(char type, int rank) {
  if (rank < 1 || rank > kMaxRank) throw InvalidDatum("rank must be between 1 and " + std::to_string(kMaxRank));
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.gram_ = detail::gram_matrix(type, rank);
  rs.cartan_.assign(rank, std::vector<long>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.cartan_[i][j] = 2 * rs.gram_[i][j] / rs.gram_[j][j];

  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  for (int i = 0; i < rank; ++i) {
    IntVector e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector v = queue.front();
    queue.pop_front();
    for (int j = 0; j < rank; ++j) {
      IntVector w = rs.reflect(v, j);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  for (const auto& v : seen)
    if (std::all_of(v.begin(), v.end(), [](long x) { return x >= 0; })) rs.positive_.push_back(v);
  std::sort(rs.positive_.begin(), rs.positive_.end(), [](const IntVector& a, const IntVector& b) {
    long ha = RootSystem::height(a), hb = RootSystem::height(b);
    return ha != hb ? ha < hb : std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  for (int k = 0; k < static_cast<int>(rs.positive_.size()); ++k) rs.index_[rs.positive_[k]] = k;
  if (seen.size() != 2 * rs.positive_.size()) throw std::logic_error("root closure is not symmetric");
  return rs;
}

/// Parses "A2", "g2", "B3".
inline RootSystem build_root_system(const std::string& label) {
  if (label.size() < 2) throw InvalidDatum("expected <type><rank>, got '" + label + "'");
  char t = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  int r = 0;
  try {
    std::size_t used = 0;
    r = std::stoi(label.substr(1), &used);
    if (used != label.size() - 1) throw InvalidDatum("bad rank");
  } catch (const std::exception&) {
    throw InvalidDatum("expected <type><rank>, got '" + label + "'");
  }
  return build_root_system(t, r);
}

}  // namespace zfam::roots
