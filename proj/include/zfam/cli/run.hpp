#pragma once

// Batch command-line front end. Exit codes: 0 pass / SAT, 1 fail / UNSAT,
// 2 inconclusive, 3 usage or input error.

#include <zfam/gkcert.hpp>
#include <zfam/sentc.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace zfam::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInconclusive = 2, kUsage = 3 };

struct CommandResult {
  int exit_code = kPass;
  std::string out;  // human-readable report (stdout)
  std::string err;  // diagnostics (stderr)
  std::optional<std::string> report_path;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline int exit_for(cert::Status s) {
  switch (s) {
    case cert::Status::Pass:
    case cert::Status::Warn: return kPass;
    case cert::Status::Inconclusive: return kInconclusive;
    default: return kFail;
  }
}

/// "a..b" or a single prime.
inline std::pair<std::uint64_t, std::uint64_t> prime_range(const std::string& text) {
  auto parse = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw CLI::ValidationError("--primes", "expected a..b, got '" + text + "'");
    return std::stoull(s);
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    auto p = parse(text);
    return {p, p};
  }
  auto a = parse(text.substr(0, dots)), b = parse(text.substr(dots + 2));
  if (a > b) throw CLI::ValidationError("--primes", "empty range '" + text + "'");
  if (b >= (1ULL << 31)) throw CLI::ValidationError("--primes", "primes must be below 2^31");
  return {a, b};
}

inline std::optional<int> env_ceiling() {
  const char* v = std::getenv("ZFAM_BOUND_CEILING");
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t used = 0;
    int k = std::stoi(v, &used);
    if (used != std::strlen(v) || k < 1) throw std::invalid_argument(v);
    return k;
  } catch (const std::exception&) {
    throw InputError(std::string("ZFAM_BOUND_CEILING must be a positive integer, got '") + v + "'");
  }
}

inline void write_report(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write report '" + path + "'");
  f << j.dump(2) << "\n";
}

inline cert::WitnessCertificate read_certificate(const std::string& path) {
  try {
    return cert::load_certificate(path);
  } catch (const cert::CertificateError& e) {
    throw InputError(e.what());
  }
}

struct Options {
  std::string report;
  // verify / reduce-mod-p
  std::string cert_path;
  std::optional<int> bound_ceiling;
  bool no_growth = false;
  std::string primes;
  // emit-sentence
  std::string family, bounds_path, out_path;
  // decide
  std::string sentence_path;
  std::uint64_t characteristic = 0;
  double max_seconds = 60;
  // rootsys
  std::string rs_label;
};

inline CommandResult cmd_verify(const Options& o) {
  CommandResult r;
  cert::VerifyOptions vo;
  vo.bound_ceiling = o.bound_ceiling ? o.bound_ceiling : env_ceiling();
  vo.growth_advisory = !o.no_growth;
  auto report = cert::verify_certificate(read_certificate(o.cert_path), vo);
  r.out = report.to_text();
  r.exit_code = exit_for(report.overall());
  if (!o.report.empty()) write_report(o.report, report.to_json());
  return r;
}

inline CommandResult cmd_reduce(const Options& o) {
  CommandResult r;
  const auto cert = read_certificate(o.cert_path);
  const auto [lo, hi] = prime_range(o.primes);
  cert::VerifyOptions vo;
  vo.bound_ceiling = o.bound_ceiling ? o.bound_ceiling : env_ceiling();
  vo.growth_advisory = false;  // growth does not depend on p

  std::ostringstream out;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  out << "modular sweep of " << cert.family << " over primes " << lo << ".." << hi << "\n";
  out << "  " << std::left << std::setw(6) << "p" << std::setw(14) << "status" << "detail\n";
  int worst = kPass;
  std::size_t passed = 0, bad = 0;
  auto row = [&](std::uint64_t p, const std::string& status, const std::string& detail) {
    out << "  " << std::left << std::setw(6) << p << std::setw(14) << status << detail << "\n";
    rows.push_back({{"p", p}, {"status", status}, {"detail", detail}});
  };
  // p = 2 is always reported, since it divides the data of every shipped family
  if (lo > 2) {
    auto two = cert::reduce_mod_p(cert, 2);
    if (auto* b = std::get_if<cert::BadPrime>(&two)) row(2, "excluded", "bad prime: " + b->location + " (" + b->reason + ")");
  }
  for (std::uint64_t p = lo; p <= hi; ++p) {
    if (!is_prime(p)) continue;
    auto res = cert::reduce_and_verify(cert, p, vo);
    if (res.bad) {
      ++bad;
      row(p, "bad", res.bad->location + " (" + res.bad->reason + ")");
      continue;
    }
    const auto s = res.report->overall();
    if (s == cert::Status::Pass || s == cert::Status::Warn) ++passed;
    if (exit_for(s) == kFail) worst = kFail;
    else if (exit_for(s) == kInconclusive && worst == kPass) worst = kInconclusive;
    row(p, cert::status_name(s), exit_for(s) == kPass ? "" : res.report->first_violation());
  }
  out << "summary: " << passed << " passed, " << bad << " bad";
  out << "; verdict: " << (worst == kPass ? "pass" : worst == kFail ? "FAIL" : "inconclusive") << "\n";
  r.out = out.str();
  r.exit_code = worst;
  if (!o.report.empty())
    write_report(o.report, {{"family", cert.family}, {"primes", {lo, hi}}, {"rows", rows}, {"exit_code", worst}});
  return r;
}

inline CommandResult cmd_emit(const Options& o) {
  CommandResult r;
  sent::BoundProfile b;
  try {
    b = sent::load_profile(o.bounds_path);
  } catch (const sent::SentenceError& e) {
    throw InputError(e.what());
  }
  auto s = sent::emit_sentence(o.family, b);
  std::ofstream f(o.out_path);
  if (!f) throw InputError("cannot write sentence '" + o.out_path + "'");
  f << sent::serialize(s);
  std::ostringstream out;
  out << "sentence for " << s.family << ": N = " << s.N() << " unknowns, r = " << s.r() << " words, " << s.equations.size()
      << " equations, " << s.inequations.size() << " inequation(s)\n";
  out << "written to " << o.out_path << "\n";
  r.out = out.str();
  if (!o.report.empty())
    write_report(o.report, {{"family", s.family}, {"N", s.N()}, {"r", s.r()}, {"equations", s.equations.size()}, {"output", o.out_path}});
  return r;
}

inline CommandResult cmd_decide(const Options& o) {
  CommandResult r;
  sent::ExistentialSentence s;
  try {
    s = sent::load_sentence(o.sentence_path);
  } catch (const sent::SentenceError& e) {
    throw InputError(e.what());
  }
  if (o.characteristic != 0 && !is_prime(o.characteristic))
    throw CLI::ValidationError("--char", "expected 0 or a prime, got " + std::to_string(o.characteristic));
  GroebnerLimits limits;
  limits.max_seconds = o.max_seconds;
  const auto v = sent::decide_sentence(s, o.characteristic, limits);
  std::ostringstream out;
  out << "sentence for " << s.family << " (N = " << s.N() << ", " << s.equations.size() << " equations) in characteristic "
      << o.characteristic << "\n";
  out << "verdict: " << sent::verdict_name(v) << "\n";
  r.out = out.str();
  r.exit_code = v == sent::Verdict::Sat ? kPass : v == sent::Verdict::Unsat ? kFail : kInconclusive;
  if (!o.report.empty())
    write_report(o.report, {{"family", s.family}, {"characteristic", o.characteristic}, {"verdict", sent::verdict_name(v)}});
  return r;
}

inline CommandResult cmd_rootsys(const Options& o) {
  CommandResult r;
  roots::RootSystem rs;
  try {
    rs = roots::build_root_system(o.rs_label);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  const auto cb = roots::chevalley_constants(rs);
  const auto w = roots::weyl_group(rs);
  const auto triples = cb.verify_jacobi();
  std::ostringstream out;
  out << "root system " << rs.label() << "\n";
  out << "  rank            " << rs.rank() << "\n";
  out << "  roots           " << rs.num_roots() << " (" << rs.num_positive() << " positive)\n";
  out << "  Weyl group      " << w.size() << "\n";
  out << "  Lie dimension   " << rs.lie_dimension() << "\n";
  out << "  Jacobi          pass (" << triples << " basis triples)\n";
  out << "  sign convention " << roots::kSignConvention << "\n";
  out << "  Cartan matrix\n";
  for (const auto& row : rs.cartan()) {
    out << "   ";
    for (auto v : row) out << std::right << std::setw(3) << v;
    out << "\n";
  }
  out << "  positive roots (simple-root coordinates, by height)\n";
  for (const auto& v : rs.positive_roots()) {
    out << "    (";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ")\n";
  }
  r.out = out.str();
  if (!o.report.empty())
    write_report(o.report, {{"label", rs.label()},
                            {"rank", rs.rank()},
                            {"roots", rs.num_roots()},
                            {"weyl_order", w.size()},
                            {"lie_dimension", rs.lie_dimension()},
                            {"jacobi_triples", triples},
                            {"cartan", rs.cartan()},
                            {"positive_roots", rs.positive_roots()}});
  return r;
}

}  // namespace detail

/// Runs one command; argv excludes the program name.
inline CommandResult run(std::vector<std::string> args) {
  detail::Options o;
  CLI::App app{"zfam: witness certificates, modular reduction and existential sentences for Z-compatible algebra families",
               "zfam"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--report", o.report, "write a machine-readable JSON report to this path");

  auto* verify = app.add_subcommand("verify", "verify a witness certificate exactly");
  verify->add_option("certificate", o.cert_path, "certificate JSON")->required();
  verify->add_option("--bound-ceiling", o.bound_ceiling, "Ore degree ceiling (default: certificate, or ZFAM_BOUND_CEILING)")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--no-growth", o.no_growth, "skip the growth advisory");

  auto* reduce = app.add_subcommand("reduce-mod-p", "reduce a certificate modulo primes and re-verify");
  reduce->add_option("certificate", o.cert_path, "certificate JSON")->required();
  reduce->add_option("--primes", o.primes, "prime range a..b")->required();
  reduce->add_option("--bound-ceiling", o.bound_ceiling, "Ore degree ceiling")->check(CLI::PositiveNumber);

  auto* emit = app.add_subcommand("emit-sentence", "emit the existential sentence of a family at given bounds");
  emit->add_option("family", o.family, "family label, e.g. enveloping(A1)")->required();
  emit->add_option("--bounds", o.bounds_path, "bound profile JSON")->required();
  emit->add_option("-o,--output", o.out_path, "output sentence JSON")->required();

  auto* decide = app.add_subcommand("decide", "decide a sentence over an algebraically closed field");
  decide->add_option("sentence", o.sentence_path, "sentence JSON")->required();
  decide->add_option("--char", o.characteristic, "characteristic: 0 or a prime")->required();
  decide->add_option("--max-seconds", o.max_seconds, "time budget before INCONCLUSIVE")->check(CLI::PositiveNumber);

  auto* rootsys = app.add_subcommand("rootsys", "root system tools");
  rootsys->require_subcommand(1);
  auto* info = rootsys->add_subcommand("info", "root data, Weyl group order and Chevalley basis check");
  info->add_option("type", o.rs_label, "type and rank, e.g. A2, G2")->required();

  CommandResult r;
  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    r.out = out.str();
    r.err = err.str();
    if (code != 0 && r.err.find("Run with --help") != std::string::npos) r.err += "\n" + app.help();
    r.exit_code = code == 0 ? kPass : kUsage;
    return r;
  }

  try {
    if (*verify) r = detail::cmd_verify(o);
    else if (*reduce) r = detail::cmd_reduce(o);
    else if (*emit) r = detail::cmd_emit(o);
    else if (*decide) r = detail::cmd_decide(o);
    else if (*info) r = detail::cmd_rootsys(o);
  } catch (const CLI::ValidationError& e) {
    r = {kUsage, "", std::string("error: ") + e.what() + "\n", {}};
  } catch (const InputError& e) {
    r = {kUsage, "", std::string("error: ") + e.what() + "\n", {}};
  } catch (const sent::SentenceError& e) {
    r = {kFail, "", std::string("error: ") + e.what() + "\n", {}};
  } catch (const std::exception& e) {
    r = {kUsage, "", std::string("error: ") + e.what() + "\n", {}};
  }
  if (!o.report.empty()) r.report_path = o.report;
  return r;
}

}  // namespace zfam::cli
