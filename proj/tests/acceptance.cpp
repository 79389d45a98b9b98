// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include <zfam/gkcert.hpp>
#include <zfam/sentc.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

using namespace zfam;

namespace {

std::string data(const std::string& rel) { return std::string(ZFAM_DATA_DIR) + "/" + rel; }

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

/// Runs a criterion with a wall-time budget and prints its line.
bool criterion(int id, const std::string& title, double budget, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && secs >= budget) {
    o.ok = false;
    o.note = "over the " + std::to_string(static_cast<int>(budget)) + " s budget";
  }
  std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << id << "] " << title << "  (" << std::fixed << std::setprecision(2) << secs
            << " s)";
  if (!o.note.empty()) std::cout << "  " << o.note;
  std::cout << std::endl;
  return o.ok;
}

// Independent root closure: reflect the simple roots under s_i(v) = v - <v, a_i^vee> a_i
// with the pairing read off a Cartan matrix written out here by type.
std::vector<std::vector<long>> cartan_of(char type, int n) {
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  if (type == 'B') c[n - 1][n - 2] = -2;  // alpha_n short
  if (type == 'G') c[1][0] = -3;          // alpha_1 short
  return c;
}

std::size_t closure_root_count(char type, int n) {
  const auto c = cartan_of(type, n);
  // rows: <alpha_i, alpha_j^vee> = c[i][j]
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> todo;
  for (int i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    todo.push_back(e);
  }
  while (!todo.empty()) {
    auto v = todo.back();
    todo.pop_back();
    if (!seen.insert(v).second) continue;
    for (int j = 0; j < n; ++j) {
      long k = 0;
      for (int i = 0; i < n; ++i) k += v[i] * c[i][j];
      auto w = v;
      w[j] -= k;
      todo.push_back(w);
    }
  }
  return seen.size();
}

std::size_t closure_weyl_order(char type, int n) {
  const auto c = cartan_of(type, n);
  using M = std::vector<std::vector<long>>;
  std::vector<M> gens;
  for (int j = 0; j < n; ++j) {
    M s(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) s[i][i] = 1;
    for (int i = 0; i < n; ++i) s[j][i] -= c[i][j];  // column i = s_j(alpha_i)
    gens.push_back(s);
  }
  M id(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  std::set<M> seen{id};
  std::vector<M> frontier{id};
  while (!frontier.empty()) {
    std::vector<M> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        M p(n, std::vector<long>(n, 0));
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) p[i][j] += s[i][k] * g[k][j];
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

int main() {
  int failed = 0;
  auto count = [&](bool ok) { failed += ok ? 0 : 1; };

  cert::VerifyOptions no_growth;
  no_growth.growth_advisory = false;

  count(criterion(1, "sl2 enveloping certificate verifies exactly", 10, [&](Outcome& o) {
    auto r = cert::verify_certificate(cert::load_certificate(data("certs/sl2.cert.json")));
    o.require(r.overall() == cert::Status::Pass, "verdict " + std::string(cert::status_name(r.overall())) + ": " + r.first_violation());
    for (const char* c : {"dagger", "center", "ddagger"})
      o.require(r.find(c) && r.find(c)->status == cert::Status::Pass, std::string(c) + " did not pass");
  }));

  count(criterion(2, "A1^{Z/2} invariant certificate verifies exactly", 10, [&](Outcome& o) {
    auto r = cert::verify_certificate(cert::load_certificate(data("certs/a1_z2.cert.json")));
    o.require(r.overall() == cert::Status::Pass, "verdict " + std::string(cert::status_name(r.overall())) + ": " + r.first_violation());
  }));

  count(criterion(3, "both certificates re-verify over F_p for 3 <= p <= 97; p = 2 is bad", 60, [&](Outcome& o) {
    std::size_t rows = 0;
    for (const char* name : {"sl2", "a1_z2"}) {
      auto c = cert::load_certificate(data(std::string("certs/") + name + ".cert.json"));
      o.require(std::holds_alternative<cert::BadPrime>(cert::reduce_mod_p(c, 2)), std::string(name) + ": p = 2 not reported bad");
      for (std::uint64_t p = 3; p <= 97; ++p) {
        if (!is_prime(p)) continue;
        auto res = cert::reduce_and_verify(c, p, no_growth);
        o.require(!res.bad && res.status() == cert::Status::Pass, std::string(name) + " fails at p = " + std::to_string(p));
        ++rows;
      }
    }
    o.note = std::to_string(rows) + " reductions";
  }));

  count(criterion(4, "growth exponents at jmax = 20 within 0.2 of 2, 4, 3, 1", 30, [&](Outcome& o) {
    std::ostringstream note;
    for (auto [label, expect] : {std::pair{"weylFull(1)", 2.0}, std::pair{"weylFull(2)", 4.0}, std::pair{"enveloping(A1)", 3.0},
                                 std::pair{"commutative(1)", 1.0}}) {
      const double e = nc::growth_exponent({nc::make_family(label), Domain::rationals()}, 20);
      note << label << " " << std::setprecision(3) << e << "; ";
      o.require(std::abs(e - expect) <= 0.2, std::string(label) + " gives " + std::to_string(e));
    }
    if (o.ok) o.note = note.str();
  }));

  count(criterion(5, "ACF decision sound against F_5/F_25 search; exact on univariate QQ systems", 120, [&](Outcome& o) {
    std::mt19937 rng(2024);
    const auto F5 = Domain::modular(5);
    int with_points = 0, trials = 0;
    for (int trial = 0; trial < 120; ++trial, ++trials) {
      const std::uint32_t arity = 1 + trial % 3;
      LocallyClosedSystem sys{arity, {}, {}, 5};
      for (int k = 0; k < 2; ++k) sys.equations.push_back(oracle::random_poly(rng, arity, F5, 3, 3));
      if (trial % 2) sys.inequations.push_back(oracle::random_poly(rng, arity, F5, 2, 2));
      if (oracle::has_point(sys, true) || oracle::has_point(sys, false)) {
        ++with_points;
        o.require(decide_locally_closed_nonempty(sys), "F5 system " + std::to_string(trial) + " has a point but was decided empty");
      }
    }
    std::mt19937 urng(4048);
    for (int trial = 0; trial < 100; ++trial) {
      LocallyClosedSystem sys{1, {}, {}, 0};
      auto lin = [&] { return parse_poly("v0 - " + std::to_string(urng() % 3), 1, Domain::rationals()); };
      const Poly one = Poly::constant(1, Coefficient::one(Domain::rationals()));
      for (int k = 0; k < 2; ++k) sys.equations.push_back(lin() * lin() * (trial % 3 ? lin() : one));
      if (trial % 4) sys.inequations.push_back(lin() * (trial % 2 ? lin() : one));
      o.require(decide_locally_closed_nonempty(sys) == oracle::univariate_nonempty(sys),
                "univariate system " + std::to_string(trial) + " disagrees");
    }
    if (o.ok) o.note = std::to_string(trials) + " F5 systems (" + std::to_string(with_points) + " with points), 100 univariate";
  }));

  count(criterion(6, "certificate assignments satisfy their sentences; toys decide UNSAT / SAT", 60, [&](Outcome& o) {
    for (const char* name : {"sl2", "a1_z2"}) {
      auto wc = cert::load_certificate(data(std::string("certs/") + name + ".cert.json"));
      auto b = sent::induce_profile(wc);
      auto s = sent::emit_sentence(wc.family, b);
      auto chk = sent::check_assignment(s, sent::witness_to_assignment(wc, b));
      o.require(chk.equations_hold, std::string(name) + ": equation " + chk.first_failure + " is nonzero");
      o.require(chk.inequation_holds, std::string(name) + ": every inequation vanishes");
    }
    sent::BoundProfile un;
    un.m = 1;
    un.l = 0;
    un.M = 1;
    o.require(sent::decide_sentence(sent::emit_sentence("commutative(2)", un), 0) == sent::Verdict::Unsat,
              "commutative toy not UNSAT");
    sent::BoundProfile sat;
    sat.m = 0;
    sat.l = 1;
    sat.M = 1;
    o.require(sent::decide_sentence(sent::emit_sentence("commutative(1)", sat), 0) == sent::Verdict::Sat, "l = 1 toy not SAT");
  }));

  count(criterion(7, "root systems A1 A2 A3 B2 G2: counts by closure, Jacobi, reduction mod p <= 13", 60, [&](Outcome& o) {
    const std::vector<std::tuple<char, int, std::size_t, std::size_t>> cases{
        {'A', 1, 2, 2}, {'A', 2, 6, 6}, {'A', 3, 12, 24}, {'B', 2, 8, 8}, {'G', 2, 12, 12}};
    for (auto [type, n, roots_expected, w_expected] : cases) {
      const std::string label = std::string(1, type) + std::to_string(n);
      const auto rs = roots::build_root_system(label);
      const auto nroots = closure_root_count(type, n), worder = closure_weyl_order(type, n);
      o.require(nroots == roots_expected && rs.num_roots() == nroots, label + ": root count");
      o.require(worder == w_expected && roots::weyl_group(rs).size() == worder, label + ": Weyl group order");
      const auto cb = roots::chevalley_constants(rs);
      cb.verify_jacobi();
      for (long p : {2, 3, 5, 7, 11, 13}) cb.reduced_table(p);
    }
  }));

  count(criterion(8, "A1^{Z/2} piece dimensions equal even-degree monomial counts, j <= 10", 10, [&](Outcome& o) {
    const nc::FamilyInstance inv{nc::make_family("weylInvariants(A1)"), Domain::rationals()};
    for (int j = 0; j <= 10; ++j) {
      long expect = 0;
      for (int a = 0; a <= j; ++a)
        for (int b = 0; a + b <= j; ++b)
          if ((a + b) % 2 == 0) ++expect;
      o.require(nc::piece_dimension(inv, j) == expect, "j = " + std::to_string(j));
    }
  }));

  std::cout << (failed ? std::to_string(failed) + " criterion(s) failed" : "all criteria pass") << std::endl;
  return failed ? 1 : 0;
}
