#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zfam {

/// Commutative monomial stored sparsely: (variable id, exponent) pairs sorted by
/// id with nonzero exponents, plus the cached total degree.
class Monomial {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;

  static Monomial variable(std::uint32_t var, std::uint32_t exp = 1) {
    Monomial m;
    if (exp) {
      m.entries_.push_back({var, exp});
      m.degree_ = exp;
    }
    return m;
  }

  /// From a dense exponent vector.
  static Monomial from_exponents(const std::vector<std::uint32_t>& exps) {
    Monomial m;
    for (std::uint32_t v = 0; v < exps.size(); ++v)
      if (exps[v]) {
        m.entries_.push_back({v, exps[v]});
        m.degree_ += exps[v];
      }
    return m;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return entries_.empty(); }

  std::uint32_t exponent(std::uint32_t var) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{var, 0},
                               [](const Entry& a, const Entry& b) { return a.first < b.first; });
    return (it != entries_.end() && it->first == var) ? it->second : 0;
  }

  /// One past the largest variable id used.
  std::uint32_t min_arity() const { return entries_.empty() ? 0 : entries_.back().first + 1; }

  std::vector<std::uint32_t> dense(std::uint32_t arity) const {
    std::vector<std::uint32_t> out(arity, 0);
    for (auto [v, e] : entries_) out.at(v) = e;
    return out;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.entries_.reserve(a.entries_.size() + b.entries_.size());
    auto i = a.entries_.begin(), j = b.entries_.begin();
    while (i != a.entries_.end() || j != b.entries_.end()) {
      if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) r.entries_.push_back(*i++);
      else if (i == a.entries_.end() || j->first < i->first) r.entries_.push_back(*j++);
      else {
        r.entries_.push_back({i->first, i->second + j->second});
        ++i;
        ++j;
      }
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    auto j = other.entries_.begin();
    for (auto [v, e] : entries_) {
      while (j != other.entries_.end() && j->first < v) ++j;
      if (j == other.entries_.end() || j->first != v || j->second < e) return false;
    }
    return true;
  }

  /// this / other; requires other | this.
  Monomial divide(const Monomial& other) const {
    Monomial r;
    auto j = other.entries_.begin();
    for (auto [v, e] : entries_) {
      std::uint32_t sub = 0;
      if (j != other.entries_.end() && j->first == v) sub = (j++)->second;
      if (sub > e) throw std::logic_error("monomial division is not exact");
      if (e - sub) r.entries_.push_back({v, e - sub});
    }
    if (j != other.entries_.end()) throw std::logic_error("monomial division is not exact");
    r.degree_ = degree_ - other.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.entries_.begin(), j = b.entries_.begin();
    while (i != a.entries_.end() || j != b.entries_.end()) {
      if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) r.entries_.push_back(*i++);
      else if (i == a.entries_.end() || j->first < i->first) r.entries_.push_back(*j++);
      else {
        r.entries_.push_back({i->first, std::max(i->second, j->second)});
        ++i;
        ++j;
      }
    }
    r.degree_ = 0;
    for (auto [v, e] : r.entries_) r.degree_ += e;
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    auto i = a.entries_.begin(), j = b.entries_.begin();
    while (i != a.entries_.end() && j != b.entries_.end()) {
      if (i->first == j->first) return false;
      if (i->first < j->first) ++i;
      else ++j;
    }
    return true;
  }

  /// Relabel variable v as map[v].
  Monomial rename(const std::vector<std::uint32_t>& map) const {
    Monomial r;
    for (auto [v, e] : entries_) r.entries_.push_back({map.at(v), e});
    std::sort(r.entries_.begin(), r.entries_.end());
    r.degree_ = degree_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }

  /// Storage order (not a monomial order): used only as a map key.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Entry> entries_;
  std::uint64_t degree_ = 0;
};

/// Lexicographic or degree-reverse-lexicographic order, after permuting the
/// variables: rank[v] is the position of v, position 0 being the largest.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { Lex, DegRevLex };

  MonomialOrder() = default;
  explicit MonomialOrder(Kind k) : kind_(k) {}
  MonomialOrder(Kind k, std::vector<std::uint32_t> precedence) : kind_(k) {
    // precedence lists variables from largest to smallest
    rank_.assign(precedence.size(), 0);
    std::vector<bool> seen(precedence.size(), false);
    for (std::uint32_t pos = 0; pos < precedence.size(); ++pos) {
      auto v = precedence[pos];
      if (v >= precedence.size() || seen[v]) throw std::invalid_argument("precedence is not a permutation");
      seen[v] = true;
      rank_[v] = pos;
    }
  }

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::DegRevLex); }

  Kind kind() const { return kind_; }

  std::uint32_t rank(std::uint32_t v) const { return v < rank_.size() ? rank_[v] : v; }

  /// Three-way comparison: negative if a < b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (rank_.empty()) return compare_ranked(a.entries(), b.entries());
    return compare_ranked(ranked(a), ranked(b));
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_;
  }

 private:
  int compare_ranked(const std::vector<Monomial::Entry>& ea, const std::vector<Monomial::Entry>& eb) const {
    if (kind_ == Kind::DegRevLex) {
      std::uint64_t da = 0, db = 0;
      for (const auto& e : ea) da += e.second;
      for (const auto& e : eb) db += e.second;
      if (da != db) return da < db ? -1 : 1;
      // smallest variable with differing exponent decides; larger exponent is smaller
      auto i = ea.rbegin(), j = eb.rbegin();
      while (i != ea.rend() || j != eb.rend()) {
        bool has_i = i != ea.rend(), has_j = j != eb.rend();
        if (has_i && (!has_j || i->first > j->first)) return -1;
        if (has_j && (!has_i || j->first > i->first)) return 1;
        if (i->second != j->second) return i->second > j->second ? -1 : 1;
        ++i;
        ++j;
      }
      return 0;
    }
    auto i = ea.begin(), j = eb.begin();
    while (i != ea.end() || j != eb.end()) {
      bool has_i = i != ea.end(), has_j = j != eb.end();
      if (has_i && (!has_j || i->first < j->first)) return 1;
      if (has_j && (!has_i || j->first < i->first)) return -1;
      if (i->second != j->second) return i->second > j->second ? 1 : -1;
      ++i;
      ++j;
    }
    return 0;
  }

  std::vector<Monomial::Entry> ranked(const Monomial& m) const {
    std::vector<Monomial::Entry> out;
    out.reserve(m.entries().size());
    for (auto [v, e] : m.entries()) out.push_back({rank(v), e});
    std::sort(out.begin(), out.end());
    return out;
  }

  Kind kind_ = Kind::DegRevLex;
  std::vector<std::uint32_t> rank_;
};

}  // namespace zfam
