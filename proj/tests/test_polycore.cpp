#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace zfam;

namespace {

const Domain QQ = Domain::rationals();

Poly P(const std::string& s, std::uint32_t arity, Domain d = QQ) { return parse_poly(s, arity, d); }

}  // namespace

TEST(Coefficient, RationalsAreCanonical) {
  auto c = Coefficient::rational(mpq_class(6, -4));
  EXPECT_EQ(c.to_string(), "-3/2");
  EXPECT_EQ(c.as_rational().get_den(), 2);
}

TEST(Coefficient, ResiduesStayInRange) {
  auto a = Coefficient::residue(-1, 7);
  EXPECT_EQ(a.residue_value(), 6u);
  EXPECT_EQ((a * a).residue_value(), 1u);
  EXPECT_EQ((a.inverse() * a).residue_value(), 1u);
  EXPECT_THROW(Domain::modular(9), DomainError);
}

TEST(Coefficient, MixedDomainsRejected) {
  EXPECT_THROW(Coefficient::one(QQ) + Coefficient::one(Domain::modular(5)), DomainError);
  EXPECT_THROW(Coefficient::from_rational(mpq_class(1, 5), Domain::modular(5)), DomainError);
  EXPECT_EQ(Coefficient::from_rational(mpq_class(1, 2), Domain::modular(5)).residue_value(), 3u);
}

TEST(PolyArith, Cancellation) {
  auto r = poly_arith(P("v0 + 1", 1), P("-1", 1), ArithKind::Add);
  EXPECT_EQ(r, P("v0", 1));
  EXPECT_EQ(r.size(), 1u);
}

TEST(PolyArith, DifferenceOfSquares) {
  EXPECT_EQ(poly_arith(P("v0 + v1", 2), P("v0 - v1", 2), ArithKind::Mul), P("v0^2 - v1^2", 2));
}

TEST(PolyArith, ProductOverF5) {
  // (x+2)(x+3) = x^2 + 5x + 6 = x^2 + 1 mod 5
  const auto F5 = Domain::modular(5);
  auto r = poly_arith(P("v0 + 2", 1, F5), P("v0 + 3", 1, F5), ArithKind::Mul);
  EXPECT_EQ(r, P("v0^2 + 1", 1, F5));
}

TEST(PolyArith, Errors) {
  EXPECT_THROW(P("v0", 1) + P("v0", 2), std::invalid_argument);
  EXPECT_THROW(P("v0", 1) * P("v0", 1, Domain::modular(3)), DomainError);
}

TEST(PolyArith, RingAxiomsOnRandomInputs) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = oracle::random_poly(rng, 3, QQ, 3, 5);
    auto b = oracle::random_poly(rng, 3, QQ, 3, 5);
    auto c = oracle::random_poly(rng, 3, QQ, 3, 5);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Text, RoundTripAndOrdering) {
  auto p = P("3 - v1 + 1/2*v0^2*v1 + v0*v1^2", 2);
  EXPECT_EQ(to_string(p), "1/2*v0^2*v1 + v0*v1^2 - v1 + 3");
  EXPECT_EQ(to_string(p, MonomialOrder::lex()), "1/2*v0^2*v1 + v0*v1^2 - v1 + 3");
  EXPECT_EQ(parse_poly(to_string(p), 2, QQ), p);
  EXPECT_THROW(P("v2", 2), ParseError);
  EXPECT_THROW(P("v0 +", 1), ParseError);
  EXPECT_THROW(P("1/0", 1), ParseError);
}

TEST(Order, GrevlexAndLex) {
  auto g = MonomialOrder::grevlex();
  auto x = Monomial::variable(0), y = Monomial::variable(1), z = Monomial::variable(2);
  EXPECT_TRUE(g.less(x * z, y * y));  // x*z < y^2 in grevlex
  EXPECT_TRUE(MonomialOrder::lex().less(y * y, x * z));
  MonomialOrder yfirst(MonomialOrder::Kind::Lex, {1, 0, 2});
  EXPECT_TRUE(yfirst.less(x * x, y));
}

TEST(Groebner, SingleGenerator) {
  auto gb = groebner_basis({P("v0", 1)}, MonomialOrder::grevlex());
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb[0], P("v0", 1));
}

TEST(Groebner, EliminationExample) {
  // lex with x > y: {x^2 - y, y^2 - x} -> {x - y^2, y^4 - y}, worked by hand.
  auto lex = MonomialOrder::lex();
  auto gb = groebner_basis({P("v0^2 - v1", 2), P("v1^2 - v0", 2)}, lex);
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb[0], P("v0 - v1^2", 2));
  EXPECT_EQ(gb[1], P("v1^4 - v1", 2));
}

TEST(Groebner, UnitIdeal) {
  auto gb = groebner_basis({P("v0", 1), P("v0 + 1", 1)}, MonomialOrder::grevlex());
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb[0], P("1", 1));
}

TEST(Groebner, RequiresField) {
  EXPECT_THROW(groebner_basis({P("v0", 1, Domain::integers())}, MonomialOrder::grevlex()), DomainError);
}

TEST(Groebner, IndependentOfGeneratorOrder) {
  std::mt19937 rng(5);
  const auto F7 = Domain::modular(7);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Poly> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(oracle::random_poly(rng, 3, F7, 2, 3));
    auto gb1 = groebner_basis(gens, MonomialOrder::grevlex());
    std::reverse(gens.begin(), gens.end());
    auto gb2 = groebner_basis(gens, MonomialOrder::grevlex());
    std::rotate(gens.begin(), gens.begin() + 1, gens.end());
    auto gb3 = groebner_basis(gens, MonomialOrder::grevlex());
    EXPECT_EQ(gb1, gb2);
    EXPECT_EQ(gb1, gb3);
  }
}

TEST(Groebner, ReducedBasisProperties) {
  std::mt19937 rng(9);
  auto order = MonomialOrder::grevlex();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(oracle::random_poly(rng, 3, QQ, 2, 3));
    auto gb = groebner_basis(gens, order);
    for (std::size_t i = 0; i < gb.size(); ++i) {
      EXPECT_TRUE(gb[i].leading(order).second.is_one());
      for (std::size_t j = 0; j < gb.size(); ++j) {
        if (i == j) continue;
        // no term of gb[i] is divisible by lm(gb[j])
        for (const auto& [m, c] : gb[i].terms()) EXPECT_FALSE(gb[j].leading(order).first.divides(m));
        // S-polynomials reduce to zero
        auto [mi, ci] = gb[i].leading(order);
        auto [mj, cj] = gb[j].leading(order);
        auto l = lcm(mi, mj);
        auto s = gb[i].times_monomial(l.divide(mi), Coefficient::one(QQ)) - gb[j].times_monomial(l.divide(mj), Coefficient::one(QQ));
        EXPECT_TRUE(normal_form(s, gb, order).is_zero());
      }
    }
    for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb, order).is_zero());
  }
}

TEST(NormalForm, Examples) {
  auto order = MonomialOrder::grevlex();
  EXPECT_TRUE(normal_form(P("v0^2", 1), {P("v0", 1)}, order).is_zero());
  EXPECT_EQ(normal_form(P("v0^2 + v1", 2), {P("v0", 2)}, order), P("v1", 2));
  auto lex = MonomialOrder::lex();
  auto gb = groebner_basis({P("v0^2 - v1", 2), P("v1^2 - v0", 2)}, lex);
  EXPECT_EQ(normal_form(P("v1^4", 2), gb, lex), P("v1", 2));
  EXPECT_THROW(normal_form(P("v0", 1), {P("v0", 2)}, order), std::invalid_argument);
}

TEST(NormalForm, IdealMembershipConsistency) {
  std::mt19937 rng(21);
  auto order = MonomialOrder::grevlex();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(oracle::random_poly(rng, 3, QQ, 2, 3));
    auto gb = groebner_basis(gens, order);
    // g is a combination of generators, so f*g + h == h modulo the ideal
    Poly g = gens[0] * oracle::random_poly(rng, 3, QQ, 1, 2) + gens[1] * oracle::random_poly(rng, 3, QQ, 1, 2);
    auto f = oracle::random_poly(rng, 3, QQ, 2, 3), h = oracle::random_poly(rng, 3, QQ, 3, 4);
    EXPECT_EQ(normal_form(f * g + h, gb, order), normal_form(h, gb, order));
  }
}

TEST(Radical, Examples) {
  EXPECT_TRUE(in_radical(P("v0", 1), {P("v0^2", 1)}));
  EXPECT_FALSE(in_radical(P("v0", 2), {P("v1", 2)}));
  std::vector<Poly> I{P("v0^2 - v1^2", 2), P("v0 - v1", 2)};
  EXPECT_FALSE(in_radical(P("v0 + v1", 2), I));  // (1,1) is a zero with x+y = 2
  EXPECT_TRUE(in_radical(P("v0 - v1", 2), I));
}

TEST(Radical, RabinowitschSoundness) {
  // in_radical(f, I) implies f^e in I for some small e
  std::mt19937 rng(3);
  auto order = MonomialOrder::grevlex();
  const auto F5 = Domain::modular(5);
  int positives = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto a = oracle::random_poly(rng, 2, F5, 2, 2);
    auto b = oracle::random_poly(rng, 2, F5, 1, 2);
    std::vector<Poly> I{a * a, a * b};
    Poly f = a;
    if (trial % 2) f = oracle::random_poly(rng, 2, F5, 2, 2);
    if (!in_radical(f, I)) continue;
    ++positives;
    auto gb = groebner_basis(I, order);
    bool found = false;
    Poly power = f;
    for (int e = 1; e <= 8 && !found; ++e, power *= f) found = normal_form(power, gb, order).is_zero();
    EXPECT_TRUE(found);
  }
  EXPECT_GT(positives, 10);
}

TEST(Decide, Examples) {
  LocallyClosedSystem s1{1, {P("v0^2 + 1", 1)}, {}, 0};
  EXPECT_TRUE(decide_locally_closed_nonempty(s1));
  LocallyClosedSystem s2{1, {P("v0", 1)}, {P("v0", 1)}, 0};
  EXPECT_FALSE(decide_locally_closed_nonempty(s2));
  LocallyClosedSystem s3{1, {P("v0^2 - 2", 1)}, {P("v0", 1)}, 0};
  EXPECT_TRUE(decide_locally_closed_nonempty(s3));
  LocallyClosedSystem s4{2, {}, {P("1", 2)}, 0};
  EXPECT_TRUE(decide_locally_closed_nonempty(s4));
  LocallyClosedSystem bad{2, {P("v0", 1)}, {}, 0};
  EXPECT_THROW(decide_locally_closed_nonempty(bad), std::invalid_argument);
}

TEST(Decide, AgreesWithExhaustiveSearchOverF5) {
  std::mt19937 rng(77);
  const auto F5 = Domain::modular(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t arity = 1 + trial % 3;
    LocallyClosedSystem sys{arity, {}, {}, 5};
    for (int k = 0; k < 2; ++k) sys.equations.push_back(oracle::random_poly(rng, arity, F5, 3, 3));
    if (trial % 2) sys.inequations.push_back(oracle::random_poly(rng, arity, F5, 2, 2));
    bool decided = decide_locally_closed_nonempty(sys);
    if (oracle::has_point(sys, true) || oracle::has_point(sys, false)) EXPECT_TRUE(decided) << trial;
  }
}

TEST(Decide, UnivariateMatchesSquarefreeAnalysis) {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    LocallyClosedSystem sys{1, {}, {}, 0};
    // products of small linear factors make common roots likely
    auto lin = [&] { return P("v0 - " + std::to_string(rng() % 3), 1); };
    for (int k = 0; k < 2; ++k) sys.equations.push_back(lin() * lin() * (trial % 3 ? lin() : P("1", 1)));
    if (trial % 4) sys.inequations.push_back(lin() * (trial % 2 ? lin() : P("1", 1)));
    EXPECT_EQ(decide_locally_closed_nonempty(sys), oracle::univariate_nonempty(sys)) << trial;
  }
}

TEST(Linalg, KernelAndSpan) {
  // rows of [[1,2,3],[2,4,6]] -> kernel dimension 2
  std::vector<SparseRow> rows(2);
  for (std::uint32_t c = 0; c < 3; ++c) {
    rows[0][c] = Coefficient::from_integer(static_cast<long>(c + 1), QQ);
    rows[1][c] = Coefficient::from_integer(static_cast<long>(2 * (c + 1)), QQ);
  }
  auto ker = kernel_basis(rows, 3, QQ);
  ASSERT_EQ(ker.size(), 2u);
  for (const auto& v : ker) {
    Coefficient s = Coefficient::zero(QQ);
    for (std::uint32_t c = 0; c < 3; ++c) s += rows[0].at(c) * v[c];
    EXPECT_TRUE(s.is_zero());
  }
  SparseRow e0{{0, Coefficient::one(QQ)}}, e1{{1, Coefficient::one(QQ)}};
  SparseRow t{{0, Coefficient::from_integer(3L, QQ)}, {1, Coefficient::rational(mpq_class(-1, 2))}};
  auto x = solve_in_span({e0, e1}, t, QQ);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[1].to_string(), "-1/2");
  SparseRow e2{{2, Coefficient::one(QQ)}};
  EXPECT_FALSE(solve_in_span({e0, e1}, e2, QQ).has_value());
}
