#pragma once

// Existential sentences: a variable catalogue and a locally closed system
// over Z, with a JSON document form.

#include <zfam/sentc/contexts.hpp>
#include <zfam/polycore.hpp>

namespace zfam::sent {

inline constexpr const char* kSentenceSchema = "zfam-sentence/1";

struct ExistentialSentence {
  std::string schema_version = kSentenceSchema;
  std::string family;
  BoundProfile profile;
  std::vector<Tuple> tuples;  // words in chain order; r = tuples.size()
  std::vector<Variable> variables;
  std::vector<Poly> equations;  // over Z, arity N
  std::vector<std::string> labels;
  std::vector<Poly> inequations;

  std::size_t N() const { return variables.size(); }
  std::size_t r() const { return tuples.size(); }

  /// Coefficients mapped into QQ (characteristic 0) or F_p.
  LocallyClosedSystem system(std::uint64_t characteristic) const {
    LocallyClosedSystem sys;
    sys.arity = static_cast<std::uint32_t>(N());
    sys.characteristic = characteristic;
    const Domain d = sys.domain();
    for (const auto& e : equations) sys.equations.push_back(e.converted(d));
    for (const auto& g : inequations) sys.inequations.push_back(g.converted(d));
    return sys;
  }

  friend bool operator==(const ExistentialSentence&, const ExistentialSentence&) = default;
};

inline nlohmann::ordered_json to_json(const ExistentialSentence& s) {
  nlohmann::ordered_json j;
  j["schema_version"] = s.schema_version;
  j["family"] = s.family;
  auto bounds = to_json(s.profile);
  bounds["N"] = s.N();
  bounds["r"] = s.r();
  j["bounds"] = bounds;
  j["tuples"] = s.tuples;
  auto vars = nlohmann::ordered_json::array();
  for (const auto& v : s.variables) vars.push_back({{"name", v.name}, {"role", v.role}, {"index", v.index}});
  j["variables"] = vars;
  auto eqs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < s.equations.size(); ++i)
    eqs.push_back({{"label", s.labels.at(i)}, {"poly", to_string(s.equations[i])}});
  j["equations"] = eqs;
  auto ineqs = nlohmann::ordered_json::array();
  for (const auto& g : s.inequations) ineqs.push_back(to_string(g));
  j["inequations"] = ineqs;
  return j;
}

inline std::string serialize(const ExistentialSentence& s) { return to_json(s).dump(1) + "\n"; }

namespace detail {

inline constexpr const char* kSentenceFields[] = {"schema_version", "family", "bounds", "tuples", "variables", "equations", "inequations"};

/// Records which top-level fields were read completely before a syntax error.
class FieldTracker : public nlohmann::json_sax<nlohmann::json> {
 public:
  std::set<std::string> complete;
  std::size_t error_pos = 0;
  std::string error;

  bool null() override { return scalar(); }
  bool boolean(bool) override { return scalar(); }
  bool number_integer(number_integer_t) override { return scalar(); }
  bool number_unsigned(number_unsigned_t) override { return scalar(); }
  bool number_float(number_float_t, const string_t&) override { return scalar(); }
  bool string(string_t&) override { return scalar(); }
  bool binary(binary_t&) override { return scalar(); }
  bool start_object(std::size_t) override { return ++depth_, true; }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return ++depth_, true; }
  bool end_array() override { return close(); }
  bool key(string_t& k) override {
    if (depth_ == 1) key_ = k;
    return true;
  }
  bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& e) override {
    error_pos = pos;
    error = e.what();
    return false;
  }

 private:
  bool scalar() {
    if (depth_ == 1) complete.insert(key_);
    return true;
  }
  bool close() {
    if (--depth_ == 1) complete.insert(key_);
    return true;
  }
  int depth_ = 0;
  std::string key_;
};

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t pos) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < pos && i < text.size(); ++i) {
    if (text[i] == '\n') ++line, col = 1;
    else ++col;
  }
  return {line, col};
}

}  // namespace detail

inline ExistentialSentence sentence_from_json(const nlohmann::json& j) {
  for (const char* f : detail::kSentenceFields)
    if (!j.contains(f)) throw SentenceError(std::string("sentence document is missing the field '") + f + "'");
  ExistentialSentence s;
  try {
    s.schema_version = j.at("schema_version").get<std::string>();
    if (s.schema_version != kSentenceSchema)
      throw SentenceError("unsupported sentence schema '" + s.schema_version + "', expected " + kSentenceSchema);
    s.family = j.at("family").get<std::string>();
    s.profile = profile_from_json(j.at("bounds"));
    s.tuples = j.at("tuples").get<std::vector<Tuple>>();
    for (const auto& v : j.at("variables"))
      s.variables.push_back({v.at("name").get<std::string>(), v.at("role").get<std::string>(), v.at("index").get<std::vector<int>>()});
    const auto n = static_cast<std::uint32_t>(s.variables.size());
    const auto& b = j.at("bounds");
    if (b.contains("N") && b.at("N").get<std::size_t>() != n)
      throw SentenceError("bounds.N = " + std::to_string(b.at("N").get<std::size_t>()) + " but the catalogue has " +
                          std::to_string(n) + " variables");
    if (b.contains("r") && b.at("r").get<std::size_t>() != s.tuples.size())
      throw SentenceError("bounds.r does not match the number of tuples");
    for (std::size_t i = 0; i < j.at("equations").size(); ++i) {
      const auto& e = j.at("equations")[i];
      try {
        s.equations.push_back(parse_poly(e.at("poly").get<std::string>(), n, Domain::integers()));
      } catch (const std::exception& ex) {
        throw SentenceError("equations[" + std::to_string(i) + "]: " + ex.what());
      }
      s.labels.push_back(e.value("label", ""));
    }
    for (std::size_t i = 0; i < j.at("inequations").size(); ++i) {
      try {
        s.inequations.push_back(parse_poly(j.at("inequations")[i].get<std::string>(), n, Domain::integers()));
      } catch (const std::exception& ex) {
        throw SentenceError("inequations[" + std::to_string(i) + "]: " + ex.what());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw SentenceError(std::string("malformed sentence document: ") + e.what());
  }
  return s;
}

/// Parses a sentence document. Syntax errors report line and column and, for a
/// truncated document, the first required field that was not read.
inline ExistentialSentence parse_sentence(const std::string& text) {
  detail::FieldTracker tracker;
  if (!nlohmann::json::sax_parse(text, &tracker)) {
    auto [line, col] = detail::line_column(text, tracker.error_pos);
    std::string msg = "sentence document: syntax error at line " + std::to_string(line) + ", column " + std::to_string(col);
    for (const char* f : detail::kSentenceFields)
      if (!tracker.complete.count(f)) {
        msg += ": missing field '" + std::string(f) + "'";
        break;
      }
    throw SentenceError(msg);
  }
  return sentence_from_json(nlohmann::json::parse(text));
}

inline ExistentialSentence load_sentence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SentenceError("cannot open sentence '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_sentence(ss.str());
}

}  // namespace zfam::sent
