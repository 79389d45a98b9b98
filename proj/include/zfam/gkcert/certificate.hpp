#pragma once

// Witness certificates: file format and the parsed, ready-to-check form.

#include <zfam/gkcert/recovery.hpp>

#include <json.hpp>

#include <fstream>

namespace zfam::cert {

inline constexpr const char* kCertificateSchema = "zfam-certificate/1";

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RecoveryText {
  std::string q, p;
};

/// Certificate as stored on disk; element and fraction literals stay text.
/// Master copies live over QQ; reductions carry a prime field domain.
struct WitnessCertificate {
  std::string schema_version = kCertificateSchema;
  std::string family;
  std::string sign_convention;
  int m = 0, l = 0;
  std::vector<std::string> witnesses, centers, generators;
  std::vector<RecoveryText> recovery;
  ore::OreBounds bounds;
  int expected_tdeg = 0;
  /// How invariant bases are produced; averaging needs |W| invertible.
  nc::InvariantMethod invariant_method = nc::InvariantMethod::Solve;
  Domain domain = Domain::rationals();
};

inline nlohmann::ordered_json to_json(const WitnessCertificate& c) {
  nlohmann::ordered_json j;
  j["schema_version"] = c.schema_version;
  j["family"] = c.family;
  j["sign_convention"] = c.sign_convention;
  if (c.domain.kind == Domain::Kind::Modular) j["characteristic"] = c.domain.prime;
  j["m"] = c.m;
  j["l"] = c.l;
  j["witnesses"] = c.witnesses;
  j["centers"] = c.centers;
  j["generators"] = c.generators;
  auto rec = nlohmann::ordered_json::array();
  for (const auto& r : c.recovery) rec.push_back({{"q", r.q}, {"p", r.p}});
  j["recovery"] = rec;
  j["bounds"] = {{"initial", c.bounds.initial}, {"ceiling", c.bounds.ceiling}};
  j["expected_tdeg"] = c.expected_tdeg;
  if (c.invariant_method == nc::InvariantMethod::Average) j["invariant_method"] = "average";
  return j;
}

inline WitnessCertificate certificate_from_json(const nlohmann::json& j) {
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) throw CertificateError(std::string("certificate is missing the field '") + key + "'");
    return j.at(key);
  };
  WitnessCertificate c;
  try {
    c.schema_version = need("schema_version").get<std::string>();
    if (c.schema_version != kCertificateSchema)
      throw CertificateError("unsupported certificate schema '" + c.schema_version + "' (expected " + kCertificateSchema + ")");
    c.family = need("family").get<std::string>();
    c.sign_convention = j.value("sign_convention", std::string());
    if (j.contains("characteristic")) c.domain = Domain::modular(j.at("characteristic").get<std::uint64_t>());
    c.m = need("m").get<int>();
    c.l = need("l").get<int>();
    c.witnesses = need("witnesses").get<std::vector<std::string>>();
    c.centers = need("centers").get<std::vector<std::string>>();
    c.generators = need("generators").get<std::vector<std::string>>();
    for (const auto& r : need("recovery")) {
      if (!r.contains("q") || !r.contains("p")) throw CertificateError("recovery entries need both 'q' and 'p'");
      c.recovery.push_back({r.at("q").get<std::string>(), r.at("p").get<std::string>()});
    }
    const auto& b = need("bounds");
    c.bounds.initial = b.value("initial", 2);
    c.bounds.ceiling = b.value("ceiling", 16);
    c.expected_tdeg = need("expected_tdeg").get<int>();
    const auto method = j.value("invariant_method", std::string("solve"));
    if (method == "average") c.invariant_method = nc::InvariantMethod::Average;
    else if (method != "solve") throw CertificateError("invariant_method must be \"solve\" or \"average\"");
  } catch (const nlohmann::json::exception& e) {
    throw CertificateError(std::string("malformed certificate: ") + e.what());
  } catch (const DomainError& e) {
    throw CertificateError(std::string("malformed certificate: ") + e.what());
  }
  return c;
}

inline WitnessCertificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CertificateError("cannot open certificate file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw CertificateError("'" + path + "' is not valid JSON: " + e.what());
  }
  return certificate_from_json(j);
}

/// Certificate with all literals parsed in its family instance.
struct LoadedCertificate {
  nc::FamilyInstance inst;
  std::vector<Fraction> witnesses;
  std::vector<AlgebraElement> centers;
  std::vector<AlgebraElement> generators;
  std::vector<RecoveryPoly> q, p;
};

/// Parses and checks the static shape of a certificate: counts, Tdeg
/// bookkeeping, sign convention, invariance, and that the generators form a
/// basis of the generator level of the filtration (modulo scalars).
inline LoadedCertificate load(const WitnessCertificate& c) {
  LoadedCertificate out{{nc::make_family(c.family), c.domain}, {}, {}, {}, {}, {}};
  const auto& fam = *out.inst.family;
  if (c.m < 0 || c.l < 0) throw CertificateError("m and l must be nonnegative");
  if (c.expected_tdeg != 2 * c.m + c.l)
    throw CertificateError("expected_tdeg " + std::to_string(c.expected_tdeg) + " differs from 2m + l = " +
                           std::to_string(2 * c.m + c.l));
  if (static_cast<std::size_t>(c.expected_tdeg) != fam.tdeg())
    throw CertificateError("expected_tdeg " + std::to_string(c.expected_tdeg) + " differs from Tdeg " +
                           std::to_string(fam.tdeg()) + " of " + fam.label());
  if (c.sign_convention != fam.sign_convention())
    throw CertificateError("sign convention '" + c.sign_convention + "' does not match '" + fam.sign_convention() + "'");
  if (c.witnesses.size() != static_cast<std::size_t>(2 * c.m))
    throw CertificateError("expected " + std::to_string(2 * c.m) + " witnesses, found " + std::to_string(c.witnesses.size()));
  if (c.centers.size() != static_cast<std::size_t>(c.l))
    throw CertificateError("expected " + std::to_string(c.l) + " center generators, found " + std::to_string(c.centers.size()));
  if (c.recovery.size() != c.generators.size())
    throw CertificateError("one recovery pair per generator is required");
  if (c.bounds.initial < 1 || c.bounds.ceiling < c.bounds.initial) throw CertificateError("bounds need 1 <= initial <= ceiling");

  auto where = [](const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; };
  try {
    for (std::size_t i = 0; i < c.centers.size(); ++i) out.centers.push_back(nc::parse_element(c.centers[i], out.inst));
    for (std::size_t i = 0; i < c.witnesses.size(); ++i)
      out.witnesses.push_back(ore::parse_fraction(c.witnesses[i], out.inst, out.centers));
    for (std::size_t i = 0; i < c.generators.size(); ++i)
      out.generators.push_back(nc::parse_element(c.generators[i], out.inst, out.centers));
    for (std::size_t i = 0; i < c.recovery.size(); ++i) {
      out.q.push_back(RecoveryPoly::parse(c.recovery[i].q, c.m, c.l, c.domain));
      out.p.push_back(RecoveryPoly::parse(c.recovery[i].p, c.m, c.l, c.domain));
      if (out.q.back().is_zero()) throw CertificateError(where("recovery", i) + ".q is zero");
    }
  } catch (const ParseError& e) {
    throw CertificateError(std::string("unparsable literal: ") + e.what());
  } catch (const DomainError& e) {
    throw CertificateError(std::string("literal outside ") + c.domain.name() + ": " + e.what());
  }

  for (std::size_t i = 0; i < out.witnesses.size(); ++i)
    if (!nc::is_invariant_element(out.witnesses[i].den()) || !nc::is_invariant_element(out.witnesses[i].num()))
      throw CertificateError(where("witnesses", i) + " is not W-invariant");
  for (std::size_t i = 0; i < out.centers.size(); ++i)
    if (!nc::is_invariant_element(out.centers[i])) throw CertificateError(where("centers", i) + " is not W-invariant");

  // generators: a basis of the generator level modulo scalars
  const int level = fam.generator_level();
  auto expected = nc::algebra_generators(out.inst);
  if (out.generators.size() != expected.size())
    throw CertificateError("expected " + std::to_string(expected.size()) + " generators (a basis of filtration level " +
                           std::to_string(level) + "), found " + std::to_string(out.generators.size()));
  std::map<NcMono, std::uint32_t, nc::MonoLess> index;
  EchelonForm ef(c.domain, static_cast<std::uint32_t>(nc::full_piece_dimension(fam.num_generators(), level).get_ui()));
  for (std::size_t i = 0; i < out.generators.size(); ++i) {
    const auto& g = out.generators[i];
    if (g.degree() > level || !nc::is_invariant_element(g))
      throw CertificateError(where("generators", i) + " is not in filtration level " + std::to_string(level));
    SparseRow row;
    for (const auto& [mono, coeff] : g.terms())
      if (nc::mono_degree(mono) > 0) row.emplace(index.emplace(mono, static_cast<std::uint32_t>(index.size())).first->second, coeff);
    if (!ef.add_row(row)) throw CertificateError(where("generators", i) + " is linearly dependent on the previous generators");
  }
  return out;
}

}  // namespace zfam::cert
