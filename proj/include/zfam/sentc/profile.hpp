#pragma once

// Degree bounds at which the existential sentence is emitted.

#include <zfam/ncalg.hpp>

#include <json.hpp>

#include <fstream>

namespace zfam::sent {

class SentenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nondecreasing sequence of witness indices (1-based) naming the word
/// w_{i(1)} ... w_{i(k)}.
using Tuple = std::vector<int>;

inline std::string tuple_text(const Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

/// Admissible tuples: nondecreasing, entries in 1..2m, length <= max_len;
/// ordered by length, then lexicographically.
inline std::vector<Tuple> default_tuples(int m, int max_len) {
  std::vector<Tuple> out{{}};
  std::vector<Tuple> layer{{}};
  for (int len = 1; len <= max_len && m > 0; ++len) {
    std::vector<Tuple> next;
    for (const auto& t : layer)
      for (int i = t.empty() ? 1 : t.back(); i <= 2 * m; ++i) {
        Tuple u = t;
        u.push_back(i);
        next.push_back(u);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline bool tuple_less(const Tuple& a, const Tuple& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; }

struct BoundProfile {
  int m = 0, l = 0;
  int M = 1;           // bound on the degree of recovery polynomials in the w's
  int tuple_cap = 3;   // longest word allowed in the chain construction
  int center_degree = 1;
  int default_degree = 1;
  std::map<std::string, int> degrees;  // per-symbol overrides, keyed by symbol name
  std::optional<std::vector<Tuple>> tuples;
  std::vector<std::string> centers;     // fixed center generators; empty = family default
  std::vector<std::string> generators;  // x_1..x_n; empty = family basis
  std::size_t cap = 5000;

  int degree(const std::string& symbol) const {
    auto it = degrees.find(symbol);
    return it == degrees.end() ? default_degree : it->second;
  }

  /// The words used: explicit support, or all tuples of length <= min(tuple_cap, M).
  std::vector<Tuple> word_tuples() const {
    if (tuples) return *tuples;
    return default_tuples(m, std::min(tuple_cap, M));
  }

  void validate() const {
    if (m < 0 || l < 0) throw SentenceError("m and l must be nonnegative");
    if (M < 1 || tuple_cap < 1 || center_degree < 1 || default_degree < 1)
      throw SentenceError("degree bounds M, tuple_cap, center_degree and default_degree must be at least 1");
    for (const auto& [k, v] : degrees)
      if (v < 1) throw SentenceError("degree bound for " + k + " must be at least 1");
    if (tuples) {
      std::set<Tuple> seen;
      for (const auto& t : *tuples) {
        if (static_cast<int>(t.size()) > tuple_cap) throw SentenceError("tuple " + tuple_text(t) + " exceeds the tuple cap");
        if (static_cast<int>(t.size()) > M) throw SentenceError("tuple " + tuple_text(t) + " is longer than M");
        for (std::size_t i = 0; i < t.size(); ++i) {
          if (t[i] < 1 || t[i] > 2 * m) throw SentenceError("tuple " + tuple_text(t) + " has an index outside 1..2m");
          if (i && t[i] < t[i - 1]) throw SentenceError("tuple " + tuple_text(t) + " is not nondecreasing");
        }
        if (!seen.insert(t).second) throw SentenceError("tuple " + tuple_text(t) + " listed twice");
      }
    }
  }

  friend bool operator==(const BoundProfile&, const BoundProfile&) = default;
};

inline nlohmann::ordered_json to_json(const BoundProfile& b) {
  nlohmann::ordered_json j;
  j["m"] = b.m;
  j["l"] = b.l;
  j["M"] = b.M;
  j["tuple_cap"] = b.tuple_cap;
  j["center_degree"] = b.center_degree;
  j["default_degree"] = b.default_degree;
  nlohmann::ordered_json deg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : b.degrees) deg[k] = v;
  j["degrees"] = deg;
  if (b.tuples) j["tuples"] = *b.tuples;
  if (!b.centers.empty()) j["centers"] = b.centers;
  if (!b.generators.empty()) j["generators"] = b.generators;
  j["cap"] = b.cap;
  return j;
}

inline BoundProfile profile_from_json(const nlohmann::json& j) {
  BoundProfile b;
  try {
    for (const char* key : {"m", "l", "M"})
      if (!j.contains(key)) throw SentenceError(std::string("bound profile is missing the field '") + key + "'");
    b.m = j.at("m").get<int>();
    b.l = j.at("l").get<int>();
    b.M = j.at("M").get<int>();
    b.tuple_cap = j.value("tuple_cap", b.tuple_cap);
    b.center_degree = j.value("center_degree", b.center_degree);
    b.default_degree = j.value("default_degree", b.default_degree);
    if (j.contains("degrees")) b.degrees = j.at("degrees").get<std::map<std::string, int>>();
    if (j.contains("tuples")) b.tuples = j.at("tuples").get<std::vector<Tuple>>();
    if (j.contains("centers")) b.centers = j.at("centers").get<std::vector<std::string>>();
    if (j.contains("generators")) b.generators = j.at("generators").get<std::vector<std::string>>();
    b.cap = j.value("cap", b.cap);
  } catch (const nlohmann::json::exception& e) {
    throw SentenceError(std::string("malformed bound profile: ") + e.what());
  }
  b.validate();
  return b;
}

inline BoundProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SentenceError("cannot open bound profile '" + path + "'");
  try {
    return profile_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw SentenceError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace zfam::sent
