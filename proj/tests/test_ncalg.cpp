#include <zfam/ncalg.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace zfam;
using namespace zfam::nc;

namespace {

const Domain QQ = Domain::rationals();

FamilyInstance inst(const std::string& label, Domain d = QQ) { return {make_family(label), d}; }

AlgebraElement E(const std::string& s, const FamilyInstance& i) { return parse_element(s, i); }

AlgebraElement random_element(std::mt19937& rng, const FamilyInstance& i, unsigned max_deg, unsigned terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> gen(0, i->num_generators() - 1);
  AlgebraElement a(i);
  for (unsigned t = 0; t < terms; ++t) {
    NcMono m(i->num_generators(), 0);
    for (unsigned k = deg(rng); k > 0; --k) ++m[gen(rng)];
    a.add_term(m, Coefficient::from_integer(static_cast<long>(coeff(rng)), i.domain));
  }
  return a;
}

// Weyl algebra as differential operators on QQ[x1..xn]: x_i multiplies, y_i = d/dx_i.
using CPoly = std::map<std::vector<int>, mpq_class>;

CPoly apply_weyl(const AlgebraElement& a, const CPoly& p) {
  const int n = a.family().weyl_rank();
  CPoly out;
  for (const auto& [m, c] : a.terms()) {
    CPoly cur = p;
    for (int i = 0; i < n; ++i)
      for (unsigned k = 0; k < m[n + i]; ++k) {
        CPoly next;
        for (const auto& [e, v] : cur)
          if (e[i] > 0) {
            auto e2 = e;
            --e2[i];
            next[e2] += v * e[i];
          }
        cur = next;
      }
    for (const auto& [e, v] : cur) {
      auto e2 = e;
      for (int i = 0; i < n; ++i) e2[i] += m[i];
      out[e2] += v * c.as_rational();
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Power series coefficients of prod 1/det(1 - t g) averaged over the group.
std::vector<mpq_class> molien(const Family& fam, unsigned upto) {
  std::vector<mpq_class> total(upto + 1, 0);
  const int n = fam.weyl_rank();
  for (const auto& m : fam.group()) {
    // action on the 2n generators is block diag(M, M^{-T}); the series of
    // 1/det(1 - tA) is sum_d tr Sym^d(A), obtained from the exponential of
    // sum_k tr(A^k) t^k / k.
    std::vector<std::vector<mpq_class>> A(2 * n, std::vector<mpq_class>(2 * n, 0));
    auto inv = nc::detail::integer_inverse(m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        A[i][j] = m[i][j];
        A[n + i][n + j] = inv[j][i];
      }
    std::vector<mpq_class> p(upto + 1, 0);  // power sums tr(A^k)
    auto P = A;
    for (unsigned k = 1; k <= upto; ++k) {
      mpq_class tr = 0;
      for (int i = 0; i < 2 * n; ++i) tr += P[i][i];
      p[k] = tr;
      std::vector<std::vector<mpq_class>> Q(2 * n, std::vector<mpq_class>(2 * n, 0));
      for (int i = 0; i < 2 * n; ++i)
        for (int l = 0; l < 2 * n; ++l)
          for (int j = 0; j < 2 * n; ++j) Q[i][j] += P[i][l] * A[l][j];
      P = Q;
    }
    // h_d = (1/d) sum_{k=1..d} p_k h_{d-k}
    std::vector<mpq_class> h(upto + 1, 0);
    h[0] = 1;
    for (unsigned d = 1; d <= upto; ++d) {
      for (unsigned k = 1; k <= d; ++k) h[d] += p[k] * h[d - k];
      h[d] /= d;
    }
    for (unsigned d = 0; d <= upto; ++d) total[d] += h[d];
  }
  for (auto& v : total) v /= static_cast<long>(fam.group_order());
  return total;
}

}  // namespace

TEST(Mul, WeylRelations) {
  auto A1 = inst("weylFull(1)");
  EXPECT_EQ(E("y1*x1", A1), E("x1*y1 + 1", A1));
  EXPECT_EQ((E("x1*y1", A1) * E("x1*y1", A1)).to_string(), "x1^2*y1^2 + x1*y1");
  auto A2 = inst("weylFull(2)");
  EXPECT_EQ(commutator(E("y1", A2), E("x2", A2)), AlgebraElement(A2));
  EXPECT_EQ(commutator(E("y2", A2), E("x2", A2)), AlgebraElement::one(A2));
}

TEST(Mul, EnvelopingSl2) {
  auto U = inst("enveloping(A1)");
  EXPECT_EQ(U->generator_names(), (std::vector<std::string>{"e.1", "h.1", "f.1"}));
  EXPECT_EQ(E("e.1*f.1", U), E("f.1*e.1", U) + E("h.1", U));
  EXPECT_EQ(E("f.1*e.1", U).to_string(), "e.1*f.1 - h.1");
  EXPECT_EQ(E("h.1*e.1", U).to_string(), "e.1*h.1 + 2*e.1");
  EXPECT_EQ(E("f.1*h.1", U).to_string(), "h.1*f.1 + 2*f.1");
}

TEST(Mul, FamilyMismatchRejected) {
  EXPECT_THROW(E("x1", inst("weylFull(1)")) * E("x1", inst("commutative(1)")), FamilyError);
  EXPECT_THROW(E("x1", inst("weylFull(1)")) + E("x1", inst("weylFull(1)", Domain::modular(5))), FamilyError);
  EXPECT_THROW(E("q1", inst("weylFull(1)")), ParseError);
  EXPECT_THROW(make_family("weylFull(x)"), FamilyError);
  EXPECT_THROW(make_family("enveloping(G3)"), FamilyError);
}

TEST(Mul, WeylAgreesWithDifferentialOperators) {
  std::mt19937 rng(11);
  auto A2 = inst("weylFull(2)");
  CPoly test{{{2, 1}, 1}, {{0, 3}, -2}, {{1, 0}, 5}, {{0, 0}, 1}};
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_element(rng, A2, 3, 4), b = random_element(rng, A2, 3, 4);
    EXPECT_EQ(apply_weyl(a * b, test), apply_weyl(a, apply_weyl(b, test)));
  }
}

TEST(Mul, AssociativityAndDegree) {
  std::mt19937 rng(5);
  for (const std::string label : {"weylFull(2)", "enveloping(A2)", "enveloping(B2)", "enveloping(G2)", "commutative(3)"}) {
    auto I = inst(label);
    for (int trial = 0; trial < 12; ++trial) {
      auto a = random_element(rng, I, 2, 3), b = random_element(rng, I, 2, 3), c = random_element(rng, I, 2, 3);
      EXPECT_EQ((a * b) * c, a * (b * c)) << label;
      if (!a.is_zero() && !b.is_zero()) EXPECT_EQ((a * b).degree(), a.degree() + b.degree()) << label;
    }
  }
}

TEST(Mul, BaseChangeCommutes) {
  std::mt19937 rng(3);
  const Domain F7 = Domain::modular(7);
  for (const std::string label : {"weylFull(1)", "enveloping(A2)"}) {
    auto Z = inst(label, Domain::integers()), P = inst(label, F7);
    for (int trial = 0; trial < 10; ++trial) {
      auto a = random_element(rng, Z, 3, 4), b = random_element(rng, Z, 3, 4);
      EXPECT_EQ((a * b).converted(F7), a.converted(F7) * b.converted(F7));
    }
  }
}

TEST(Text, RoundTrip) {
  std::mt19937 rng(8);
  for (const std::string label : {"weylFull(2)", "enveloping(A2)"}) {
    auto I = inst(label);
    for (int trial = 0; trial < 10; ++trial) {
      auto a = random_element(rng, I, 3, 4);
      EXPECT_EQ(parse_element(a.to_string(), I), a);
    }
  }
  auto U = inst("enveloping(A1)");
  EXPECT_EQ(E("1/2*h.1^2 - 3", U).to_string(), "1/2*h.1^2 - 3");
}

TEST(Filtration, Examples) {
  EXPECT_EQ(filtration_piece(inst("weylFull(1)"), 2).dimension(), 6u);
  EXPECT_EQ(filtration_piece(inst("enveloping(A1)"), 1).dimension(), 4u);
  auto inv = inst("weylInvariants(A1)");
  auto piece = filtration_piece(inv, 2);
  std::vector<std::string> names;
  for (const auto& b : piece.basis) names.push_back(b.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"1", "y1^2", "x1*y1", "x1^2"}));
  EXPECT_EQ(piece_dimension(inst("weylFull(2)"), 3), 35);
  EXPECT_EQ(filtration_piece(inst("weylFull(2)"), 3).dimension(), 35u);
}

TEST(Filtration, PiecesMultiply) {
  auto I = inst("weylInvariants(A2)");
  auto b1 = filtration_piece(I, 2), b2 = filtration_piece(I, 2);
  for (const auto& a : b1.basis)
    for (const auto& b : b2.basis) {
      auto p = a * b;
      EXPECT_LE(p.degree(), 4);
      EXPECT_TRUE(is_invariant_element(p));
    }
}

TEST(Filtration, InvariantBasisIsFixed) {
  for (const std::string label : {"weylInvariants(A1)", "weylInvariants(A2)", "weylInvariants(B2)"}) {
    auto I = inst(label);
    const auto& fam = *I.family;
    for (const auto& v : filtration_piece(I, 4).basis)
      for (const auto& m : fam.group()) EXPECT_EQ(act(m, v), v) << label;
  }
}

TEST(Filtration, GradedDimensionsMatchMolien) {
  for (const std::string label : {"weylInvariants(A1)", "weylInvariants(A2)", "weylInvariants(B2)"}) {
    auto I = inst(label);
    auto series = molien(*I.family, 6);
    for (unsigned d = 0; d <= 6; ++d) EXPECT_EQ(mpq_class(graded_basis(I, d).size()), series[d]) << label << " d=" << d;
  }
}

TEST(Filtration, AveragingMatchesSolving) {
  auto I = inst("weylInvariants(A2)");
  for (unsigned d = 0; d <= 4; ++d)
    EXPECT_EQ(graded_basis(I, d, InvariantMethod::Average).size(), graded_basis(I, d, InvariantMethod::Solve).size());
  auto I3 = inst("weylInvariants(A2)", Domain::modular(3));
  EXPECT_THROW(graded_basis(I3, 2, InvariantMethod::Average), InvariantError);
  EXPECT_EQ(graded_basis(I3, 2).size(), graded_basis(I, 2).size());
}

TEST(Filtration, IntegerInvariantsArePrimitive) {
  auto I = inst("weylInvariants(A1)", Domain::integers());
  for (const auto& b : graded_basis(I, 2)) EXPECT_EQ(b.leading().second.as_rational(), 1);
}

TEST(Action, Examples) {
  auto I = inst("weylInvariants(A1)");
  roots::IntMatrix minus{{-1}};
  EXPECT_EQ(act(minus, E("x1", I)), E("-x1", I));
  EXPECT_EQ(act(minus, E("x1*y1", I)), E("x1*y1", I));
  auto A2 = inst("weylInvariants(A2)");
  auto s1 = A2->group_generators()[0];
  EXPECT_EQ(act(s1, E("x1", A2)), E("-x1", A2));
  EXPECT_EQ(act(s1, E("x2", A2)), E("x1 + x2", A2));
  EXPECT_EQ(act(s1, E("y1", A2)), E("-y1 + y2", A2));
  EXPECT_EQ(act(s1, E("y2", A2)), E("y2", A2));
  EXPECT_THROW(act(s1, E("e.1", inst("enveloping(A2)"))), ActionError);
}

TEST(Casimir, CentralAndGuarded) {
  auto U = inst("enveloping(A1)");
  auto c = casimir(U);
  EXPECT_EQ(c.to_string(), "2*e.1*f.1 + 1/2*h.1^2 - h.1");
  for (const char* g : {"e.1", "h.1", "f.1"}) EXPECT_TRUE(commutator(c, E(g, U)).is_zero());
  EXPECT_TRUE(commutator(casimir(inst("enveloping(A1)", Domain::modular(5))), E("e.1", inst("enveloping(A1)", Domain::modular(5)))).is_zero());
  EXPECT_THROW(casimir(inst("enveloping(A1)", Domain::modular(2))), CasimirError);
  EXPECT_THROW(casimir(inst("enveloping(A1)", Domain::integers())), CasimirError);
  EXPECT_THROW(casimir(inst("enveloping(A2)")), CasimirError);
}

TEST(Growth, Estimates) {
  EXPECT_NEAR(growth_exponent(inst("weylFull(1)"), 20), 2.0, 0.2);
  EXPECT_NEAR(growth_exponent(inst("weylFull(2)"), 20), 4.0, 0.2);
  EXPECT_NEAR(growth_exponent(inst("enveloping(A1)"), 20), 3.0, 0.2);
  EXPECT_NEAR(growth_exponent(inst("commutative(1)"), 20), 1.0, 0.2);
  EXPECT_NEAR(growth_exponent(inst("weylInvariants(A1)"), 20), 2.0, 0.2);
  EXPECT_THROW(growth_exponent(inst("weylFull(1)"), 3), std::invalid_argument);
}
