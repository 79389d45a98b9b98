#pragma once

// Emitting sentences, turning verified certificates into satisfying
// assignments, and deciding sentences at toy scale.

#include <zfam/sentc/sentence.hpp>
#include <zfam/gkcert.hpp>

namespace zfam::sent {

/// Sentence of the family at the given bounds.
inline ExistentialSentence emit_sentence(const std::string& family, const BoundProfile& profile) {
  const Plan plan = make_plan(family, profile);
  SymbolicCtx counter(plan, true, 0);
  construct(counter, plan);
  const auto n = static_cast<std::uint32_t>(counter.variables().size());
  SymbolicCtx ctx(plan, false, n);
  construct(ctx, plan);
  ExistentialSentence s;
  s.family = plan.zinst->label();
  s.profile = profile;
  s.tuples = plan.tuples;
  s.variables = ctx.variables();
  s.equations = ctx.equations();
  s.labels = ctx.labels();
  s.inequations = {Poly::constant(n, Coefficient::integer(1))};
  return s;
}

struct Assignment {
  std::vector<std::string> names;
  std::vector<mpq_class> values;
};

namespace detail {

inline Tuple tuple_of(const NcMono& wexp) {
  Tuple t;
  for (std::size_t i = 0; i < wexp.size(); ++i) t.insert(t.end(), wexp[i], static_cast<int>(i + 1));
  return t;
}

/// Words and center degree used by a certificate's recovery polynomials.
inline std::pair<std::vector<Tuple>, int> recovery_support(const cert::LoadedCertificate& c) {
  std::set<Tuple, decltype(&tuple_less)> words(&tuple_less);
  int zdeg = 1;
  for (const auto* side : {&c.q, &c.p})
    for (const auto& rp : *side)
      for (const auto& t : rp.terms()) {
        words.insert(tuple_of(t.wexp));
        zdeg = std::max(zdeg, static_cast<int>(nc::mono_degree(t.zexp)));
      }
  return {{words.begin(), words.end()}, zdeg};
}

inline CertificateData certificate_data(const cert::WitnessCertificate& wc, const cert::LoadedCertificate& c, const Plan& plan) {
  CertificateData data{c.witnesses, c.centers, {}, {}, wc.bounds};
  auto fill = [&](const std::vector<cert::RecoveryPoly>& polys, auto& table, const char* what) {
    for (std::size_t k = 0; k < polys.size(); ++k)
      for (const auto& t : polys[k].terms()) {
        const Tuple word = tuple_of(t.wexp);
        auto it = std::find(plan.tuples.begin(), plan.tuples.end(), word);
        if (it == plan.tuples.end())
          throw BoundsMismatch(std::string(what) + "_" + std::to_string(k + 1) + " uses the word " + tuple_text(word) +
                               ", which the profile does not admit");
        if (nc::mono_degree(t.zexp) > static_cast<unsigned>(plan.profile.center_degree))
          throw BoundsMismatch(std::string(what) + "_" + std::to_string(k + 1) + " exceeds the center degree bound");
        table[{static_cast<int>(it - plan.tuples.begin()), static_cast<int>(k), t.zexp}] = t.coeff.as_rational();
      }
  };
  fill(c.p, data.lambda, "p");
  fill(c.q, data.mu, "q");
  return data;
}

inline cert::LoadedCertificate verified(const cert::WitnessCertificate& wc) {
  if (wc.domain != Domain::rationals()) throw SentenceError("certificate must be over QQ");
  auto report = cert::verify_certificate(wc);
  if (!report.passed()) throw SentenceError("certificate does not verify: " + report.first_violation());
  return cert::load(wc);
}

inline void check_compatible(const Plan& plan, const cert::LoadedCertificate& c) {
  if (plan.generators.size() != c.generators.size()) throw BoundsMismatch("generator count differs from the certificate");
  for (std::size_t k = 0; k < c.generators.size(); ++k)
    if (!(plan.generators[k].converted(Domain::rationals()) == c.generators[k]))
      throw BoundsMismatch("generator x_" + std::to_string(k + 1) + " of the profile differs from the certificate's");
  if (!plan.centers_fixed) return;
  for (std::size_t i = 0; i < c.centers.size(); ++i)
    if (!(plan.centers[i].converted(Domain::rationals()) == c.centers[i].scaled(Coefficient::rational(plan.center_scale[i]))))
      throw BoundsMismatch("center phi_" + std::to_string(i + 1) + " of the profile differs from the certificate's");
}

}  // namespace detail

/// Smallest profile at which the certificate's data is an assignment: its
/// words, center degree, and the actual degree of every bounded unknown
/// (raised to 1 where smaller).
inline BoundProfile induce_profile(const cert::WitnessCertificate& wc) {
  const auto c = detail::verified(wc);
  auto [words, zdeg] = detail::recovery_support(c);
  BoundProfile b;
  b.m = wc.m;
  b.l = wc.l;
  b.M = 1;
  for (const auto& t : words) b.M = std::max(b.M, static_cast<int>(t.size()));
  b.tuple_cap = b.M;
  b.center_degree = zdeg;
  b.tuples = words;
  b.centers = wc.centers;
  b.generators = wc.generators;
  const Plan plan = make_plan(wc.family, b);
  detail::check_compatible(plan, c);
  const auto data = detail::certificate_data(wc, c, plan);
  ConcreteCtx ctx(plan, data, false);
  construct(ctx, plan);
  for (const auto& [name, deg] : ctx.degrees()) b.degrees[name] = std::max(deg, 1);
  return b;
}

/// Values of every catalogue variable at the given profile (the induced one by
/// default), from the certificate's elements and exact Ore solutions.
inline Assignment witness_to_assignment(const cert::WitnessCertificate& wc, const std::optional<BoundProfile>& profile = {}) {
  const BoundProfile b = profile ? *profile : induce_profile(wc);
  const auto c = detail::verified(wc);
  if (b.m != wc.m || b.l != wc.l) throw BoundsMismatch("profile (m, l) differs from the certificate's");
  const Plan plan = make_plan(wc.family, b);
  detail::check_compatible(plan, c);
  const auto data = detail::certificate_data(wc, c, plan);
  ConcreteCtx ctx(plan, data, true);
  construct(ctx, plan);
  Assignment out;
  for (const auto& [name, v] : ctx.values()) {
    out.names.push_back(name);
    out.values.push_back(v);
  }
  return out;
}

struct AssignmentCheck {
  bool equations_hold = true;
  bool inequation_holds = false;
  std::string first_failure;  // label of the first nonzero equation
  bool ok() const { return equations_hold && inequation_holds; }
};

/// Exact substitution of an assignment into the sentence over QQ, or over F_p
/// when a characteristic is given.
inline AssignmentCheck check_assignment(const ExistentialSentence& s, const Assignment& a, std::uint64_t characteristic = 0) {
  if (a.values.size() != s.N()) throw SentenceError("assignment has " + std::to_string(a.values.size()) + " values for " + std::to_string(s.N()) + " variables");
  for (std::size_t i = 0; i < s.N(); ++i)
    if (!a.names.empty() && a.names[i] != s.variables[i].name)
      throw SentenceError("assignment variable " + a.names[i] + " does not match catalogue entry " + s.variables[i].name);
  const Domain d = characteristic ? Domain::modular(characteristic) : Domain::rationals();
  std::vector<Coefficient> point;
  point.reserve(s.N());
  for (const auto& v : a.values) point.push_back(Coefficient::from_rational(v, d));
  AssignmentCheck out;
  for (std::size_t i = 0; i < s.equations.size(); ++i)
    if (!s.equations[i].converted(d).evaluate(point).is_zero()) {
      out.equations_hold = false;
      out.first_failure = s.labels[i];
      break;
    }
  for (const auto& g : s.inequations)
    if (!g.converted(d).evaluate(point).is_zero()) out.inequation_holds = true;
  return out;
}

enum class Verdict { Sat, Unsat, Inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Sat: return "SAT";
    case Verdict::Unsat: return "UNSAT";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

/// Nonemptiness of the sentence's locally closed set over the algebraic
/// closure of QQ (characteristic 0) or F_p. Practical at toy bounds only.
inline Verdict decide_sentence(const ExistentialSentence& s, std::uint64_t characteristic, const GroebnerLimits& limits = {}) {
  try {
    return decide_locally_closed_nonempty(s.system(characteristic), limits) ? Verdict::Sat : Verdict::Unsat;
  } catch (const ResourceLimit&) {
    return Verdict::Inconclusive;
  }
}

}  // namespace zfam::sent
