#pragma once

// Exact verification of witness certificates.

#include <zfam/gkcert/certificate.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>

namespace zfam::cert {

enum class Status { Pass, Fail, Inconclusive, Skipped, Warn };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "inconclusive";
    case Status::Skipped: return "skipped";
    case Status::Warn: return "warn";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  bool mandatory = true;
  std::vector<std::string> details;  // one line per identity checked
  std::string witness;               // first violated identity, if any
};

struct VerificationReport {
  std::string family;
  Domain domain = Domain::rationals();
  int m = 0, l = 0;
  ore::OreBounds bounds;
  std::vector<CheckResult> checks;

  /// Fail if any mandatory check fails; otherwise inconclusive if one could
  /// not be decided; advisory checks never change the verdict.
  Status overall() const {
    Status out = Status::Pass;
    for (const auto& c : checks) {
      if (!c.mandatory) continue;
      if (c.status == Status::Fail) return Status::Fail;
      if (c.status == Status::Inconclusive || c.status == Status::Skipped) out = Status::Inconclusive;
    }
    return out;
  }
  bool passed() const { return overall() == Status::Pass; }

  /// First violated identity over all checks, in check order.
  std::string first_violation() const {
    for (const auto& c : checks)
      if (c.status == Status::Fail && !c.witness.empty()) return c.name + ": " + c.witness;
    return {};
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "certificate for " << family << " over " << domain.name() << " (m = " << m << ", l = " << l
        << ", Ore bounds " << bounds.initial << ".." << bounds.ceiling << ")\n";
    for (const auto& c : checks) {
      out << "  " << std::left << std::setw(10) << c.name << status_name(c.status) << (c.mandatory ? "" : " (advisory)")
          << "\n";
      for (const auto& d : c.details) out << "      " << d << "\n";
      if (!c.witness.empty()) out << "      first violation: " << c.witness << "\n";
    }
    out << "verdict: " << status_name(overall()) << "\n";
    return out.str();
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["domain"] = domain.name();
    j["m"] = m;
    j["l"] = l;
    j["bounds"] = {{"initial", bounds.initial}, {"ceiling", bounds.ceiling}};
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json cj;
      cj["name"] = c.name;
      cj["status"] = status_name(c.status);
      cj["mandatory"] = c.mandatory;
      cj["details"] = c.details;
      if (!c.witness.empty()) cj["witness"] = c.witness;
      arr.push_back(cj);
    }
    j["checks"] = arr;
    j["verdict"] = status_name(overall());
    return j;
  }
};

struct VerifyOptions {
  std::optional<int> bound_ceiling;  // overrides the certificate's ceiling (and caps its initial bound)
  bool growth_advisory = true;
  int growth_jmax = 20;
  double growth_tolerance = 0.2;
};

namespace detail {

inline std::string wname(int i) { return "w" + std::to_string(i + 1); }

inline std::string inconclusive_line(const std::string& what, const ore::NoSolutionAtBound& e) {
  return what + ": no Ore solution up to degree " + std::to_string(e.bound());
}

}  // namespace detail

/// [w_j, w_i] for i < j: 1 when j = i + m, else 0.
inline CheckResult verify_dagger(const LoadedCertificate& c, const ore::OreBounds& bounds) {
  CheckResult r{"dagger", Status::Pass, true, {}, {}};
  const int n = static_cast<int>(c.witnesses.size()), m = n / 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const long expected = j == i + m ? 1 : 0;
      const std::string what = "[" + detail::wname(j) + ", " + detail::wname(i) + "]";
      try {
        auto value = ore::frac_commutator(c.witnesses[j], c.witnesses[i], bounds);
        if (ore::frac_eq(value, ore::Fraction::scalar(c.inst, expected), bounds)) {
          r.details.push_back(what + " = " + std::to_string(expected));
        } else {
          std::string line = what + " = " + ore::normalize(value).to_string() + ", expected " + std::to_string(expected);
          r.details.push_back(line);
          if (r.status != Status::Fail) r.witness = line;
          r.status = Status::Fail;
        }
      } catch (const ore::NoSolutionAtBound& e) {
        r.details.push_back(detail::inconclusive_line(what, e));
        if (r.status == Status::Pass) r.status = Status::Inconclusive;
      }
    }
  return r;
}

/// Every phi_k commutes with every algebra generator.
inline CheckResult verify_center(const LoadedCertificate& c) {
  CheckResult r{"center", Status::Pass, true, {}, {}};
  if (c.centers.empty()) {
    r.details.push_back("no center generators (vacuous)");
    return r;
  }
  std::vector<AlgebraElement> gens;
  if (c.inst->is_invariant()) gens = nc::algebra_generators(c.inst);
  else
    for (std::size_t g = 0; g < c.inst->num_generators(); ++g) gens.push_back(AlgebraElement::generator(c.inst, g));
  for (std::size_t k = 0; k < c.centers.size(); ++k) {
    bool central = true;
    for (const auto& g : gens) {
      auto br = nc::commutator(c.centers[k], g);
      if (!br.is_zero()) {
        central = false;
        std::string line = "[" + c.centers[k].to_string() + ", " + g.to_string() + "] = " + br.to_string();
        r.details.push_back("z" + std::to_string(k + 1) + " is not central: " + line);
        if (r.status != Status::Fail) r.witness = line;
        r.status = Status::Fail;
        break;
      }
    }
    if (central) r.details.push_back("z" + std::to_string(k + 1) + " commutes with all " + std::to_string(gens.size()) + " generators");
  }
  return r;
}

/// q_i(w, z) x_i = p_i(w, z) in the fraction field, with q_i(w, z) != 0.
inline CheckResult verify_ddagger(const LoadedCertificate& c, const ore::OreBounds& bounds) {
  CheckResult r{"ddagger", Status::Pass, true, {}, {}};
  for (std::size_t i = 0; i < c.generators.size(); ++i) {
    const std::string what = "x" + std::to_string(i + 1) + " = " + c.generators[i].to_string();
    try {
      Fraction q = c.q[i].evaluate(c.witnesses, c.centers, bounds);
      Fraction p = c.p[i].evaluate(c.witnesses, c.centers, bounds);
      std::string line;
      if (q.is_zero()) line = what + ": q(w, z) = " + c.q[i].to_string() + " evaluates to 0";
      else if (!ore::frac_eq(ore::frac_mul(q, Fraction::embed(c.generators[i]), bounds), p, bounds))
        line = what + ": (" + c.q[i].to_string() + ") * x" + std::to_string(i + 1) + " != " + c.p[i].to_string();
      if (line.empty()) {
        r.details.push_back(what + ": (" + c.q[i].to_string() + ") * x" + std::to_string(i + 1) + " = " + c.p[i].to_string());
      } else {
        r.details.push_back(line);
        if (r.status != Status::Fail) r.witness = line;
        r.status = Status::Fail;
      }
    } catch (const ore::NoSolutionAtBound& e) {
      r.details.push_back(detail::inconclusive_line(what, e));
      if (r.status == Status::Pass) r.status = Status::Inconclusive;
    }
  }
  return r;
}

inline CheckResult growth_advisory(const LoadedCertificate& c, int m, int l, const VerifyOptions& opts) {
  CheckResult r{"growth", Status::Pass, false, {}, {}};
  const double e = nc::growth_exponent(c.inst, opts.growth_jmax);
  std::ostringstream line;
  line << std::fixed << std::setprecision(3) << "growth exponent at j <= " << opts.growth_jmax << ": " << e
       << " (2m + l = " << 2 * m + l << ")";
  r.details.push_back(line.str());
  if (std::abs(e - (2 * m + l)) > opts.growth_tolerance) r.status = Status::Warn;
  return r;
}

inline VerificationReport verify_certificate(const WitnessCertificate& cert, const VerifyOptions& opts = {}) {
  LoadedCertificate c = load(cert);
  VerificationReport rep;
  rep.family = cert.family;
  rep.domain = cert.domain;
  rep.m = cert.m;
  rep.l = cert.l;
  rep.bounds = cert.bounds;
  if (opts.bound_ceiling) {
    rep.bounds.ceiling = *opts.bound_ceiling;
    rep.bounds.initial = std::min(rep.bounds.initial, rep.bounds.ceiling);
  }
  rep.checks.push_back(verify_dagger(c, rep.bounds));
  rep.checks.push_back(verify_center(c));
  if (rep.checks.front().status == Status::Pass) {
    rep.checks.push_back(verify_ddagger(c, rep.bounds));
  } else {
    rep.checks.push_back({"ddagger", Status::Skipped, true, {"not evaluated: the witness relations did not pass"}, {}});
  }
  if (opts.growth_advisory) rep.checks.push_back(growth_advisory(c, cert.m, cert.l, opts));
  return rep;
}

}  // namespace zfam::cert
