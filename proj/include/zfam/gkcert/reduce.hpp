#pragma once

// Reduction of characteristic-0 certificates modulo a prime.

#include <zfam/gkcert/verify.hpp>

#include <variant>

namespace zfam::cert {

/// p cannot be used: some datum has no image, or loses meaning, mod p.
struct BadPrime {
  std::uint64_t p = 0;
  std::string location;
  std::string reason;

  std::string to_string() const { return "p = " + std::to_string(p) + " is bad: " + location + " (" + reason + ")"; }
};

namespace detail {

inline std::string reduce_element_text(const std::string& text, const nc::FamilyInstance& qq, const nc::FamilyInstance& fp,
                                       const std::vector<AlgebraElement>& centers) {
  return nc::parse_element(text, qq, centers).converted(fp.domain).to_string();
}

}  // namespace detail

/// Reduces every literal of a characteristic-0 certificate into GF(p).
inline std::variant<WitnessCertificate, BadPrime> reduce_mod_p(const WitnessCertificate& cert, std::uint64_t p) {
  if (cert.domain.kind != Domain::Kind::Rational) throw CertificateError("only characteristic-0 certificates can be reduced");
  const Domain fp = Domain::modular(p);
  LoadedCertificate master = load(cert);
  const nc::FamilyInstance qq = master.inst, red{master.inst.family, fp};
  auto bad = [&](std::string location, std::string reason) { return BadPrime{p, std::move(location), std::move(reason)}; };
  auto idx = [](const char* field, std::size_t i) { return std::string(field) + "[" + std::to_string(i) + "]"; };

  if (cert.invariant_method == nc::InvariantMethod::Average && qq->is_invariant() && qq->group_order() % p == 0)
    return bad("invariant_method", "p divides |W| = " + std::to_string(qq->group_order()) + " but averaging is required");

  WitnessCertificate out = cert;
  out.domain = fp;
  out.witnesses.clear();
  out.centers.clear();
  out.generators.clear();
  out.recovery.clear();
  std::vector<AlgebraElement> red_centers;
  for (std::size_t i = 0; i < master.centers.size(); ++i) {
    try {
      red_centers.push_back(master.centers[i].converted(fp));
    } catch (const DomainError& e) {
      return bad(idx("centers", i), e.what());
    }
    if (red_centers.back().is_zero()) return bad(idx("centers", i), "reduces to 0");
    out.centers.push_back(red_centers.back().to_string());
  }
  for (std::size_t i = 0; i < master.witnesses.size(); ++i) {
    const Fraction& w = master.witnesses[i];
    AlgebraElement den(red), num(red);
    try {
      den = w.den().converted(fp);
      num = w.num().converted(fp);
    } catch (const DomainError& e) {
      return bad(idx("witnesses", i), e.what());
    }
    if (den.is_zero()) return bad(idx("witnesses", i), "denominator " + w.den().to_string() + " reduces to 0");
    out.witnesses.push_back(Fraction(den, num).to_string());
  }
  for (std::size_t i = 0; i < master.generators.size(); ++i) {
    try {
      out.generators.push_back(master.generators[i].converted(fp).to_string());
    } catch (const DomainError& e) {
      return bad(idx("generators", i), e.what());
    }
  }
  for (std::size_t i = 0; i < cert.recovery.size(); ++i) {
    RecoveryText t;
    try {
      t.q = RecoveryPoly::parse(cert.recovery[i].q, cert.m, cert.l, fp).to_string();
    } catch (const DomainError& e) {
      return bad(idx("recovery", i) + ".q", e.what());
    }
    try {
      t.p = RecoveryPoly::parse(cert.recovery[i].p, cert.m, cert.l, fp).to_string();
    } catch (const DomainError& e) {
      return bad(idx("recovery", i) + ".p", e.what());
    }
    if (t.q == "0") return bad(idx("recovery", i) + ".q", "reduces to 0");
    out.recovery.push_back(std::move(t));
  }
  // structural checks over GF(p), e.g. generators staying independent
  try {
    load(out);
  } catch (const CertificateError& e) {
    return bad("certificate", e.what());
  }
  return out;
}

/// One row of a modular sweep.
struct ModularOutcome {
  std::uint64_t p = 0;
  std::optional<BadPrime> bad;
  std::optional<VerificationReport> report;

  Status status() const { return bad ? Status::Skipped : report->overall(); }
};

inline ModularOutcome reduce_and_verify(const WitnessCertificate& cert, std::uint64_t p, const VerifyOptions& opts = {}) {
  ModularOutcome out;
  out.p = p;
  auto r = reduce_mod_p(cert, p);
  if (auto* b = std::get_if<BadPrime>(&r)) out.bad = *b;
  else out.report = verify_certificate(std::get<WitnessCertificate>(r), opts);
  return out;
}

}  // namespace zfam::cert
