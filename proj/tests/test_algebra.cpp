#include <infl/gadgets.hpp>
#include <infl/gcd.hpp>
#include <infl/parse.hpp>
#include <infl/resultant.hpp>
#include <infl/series.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace infl;
using namespace infl::literals;

namespace {

Poly random_poly(std::mt19937& rng, std::vector<Var> vars, int terms, int maxdeg) {
  std::uniform_int_distribution<int> c(-9, 9), d(0, maxdeg);
  std::vector<Poly::Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (Var v : vars) m[v] = static_cast<std::uint16_t>(d(rng));
    ts.emplace_back(m, Rational(c(rng), 1 + (i % 3)));
  }
  return Poly::from_terms(ts);
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational a(6, -4);
  EXPECT_EQ(a.str(), "-3/2");
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Parse, RoundTripsCanonicalText) {
  Poly p = "2 - 5/2*x^3 - 1/16*x^6 + 1/2*x*lam"_p;
  EXPECT_EQ(parse_poly(p.str()), p);
  EXPECT_EQ("(2u-5)(82u-213)"_p, "164*u^2 - 836*u + 1065"_p);
  EXPECT_EQ("3/8x^4"_p, "3/8*x^4"_p);
  EXPECT_EQ("x**2 - lambda"_p, "x^2 - lam"_p);
  EXPECT_THROW(parse_poly("x +"), ParseError);
  EXPECT_THROW(parse_poly("q^2"), ParseError);
}

TEST(Hasse, BinomialRule) {
  EXPECT_EQ(hasse("x^5"_p, var::x, 2), "10*x^3"_p);
  EXPECT_EQ(hasse("x^3"_p, var::x, 4), Poly());
  EXPECT_EQ(hasse("x^4"_p, var::x, 0), "x^4"_p);
  EXPECT_EQ(hasse(hasse("x^4"_p, var::x, 2), var::x, 1), hasse("x^4"_p, var::x, 3).scaled(3));
}

TEST(Hasse, CompositionAndLeibnizOnRandomInputs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Poly p = random_poly(rng, {var::x, var::lam}, 6, 7);
    Poly q = random_poly(rng, {var::x, var::u}, 5, 5);
    for (unsigned m = 0; m < 5; ++m)
      EXPECT_EQ(hasse(hasse(p, var::x, m), var::x, 1), hasse(p, var::x, m + 1).scaled(Rational(m + 1)));
    for (unsigned k = 0; k < 5; ++k) {
      Poly rhs;
      for (unsigned i = 0; i <= k; ++i) rhs += hasse(p, var::x, i) * hasse(q, var::x, k - i);
      EXPECT_EQ(hasse(p * q, var::x, k), rhs);
    }
  }
}

TEST(Gadgets, Values) {
  EXPECT_EQ(falling(Rational(5), 3), Rational(60));
  EXPECT_EQ(dfalling(Rational(7), 3), Rational(105));
  EXPECT_EQ(rising(Rational(2), 3), Rational(24));
  EXPECT_EQ(drising(Rational(1), 3), Rational(15));
  EXPECT_EQ(falling(Rational(9), 0), Rational(1));
  EXPECT_EQ(falling(var_poly<Rational>(var::u), 2), "u^2 - u"_p);
}

TEST(ExactDivide, Cases) {
  EXPECT_EQ(exact_divide("x^2 - 1"_p, "x - 1"_p), "x + 1"_p);
  EXPECT_EQ(exact_divide("x^2*lam + 3"_p, Poly(1L)), "x^2*lam + 3"_p);
  EXPECT_THROW(exact_divide("x^3"_p, "x + 1"_p), NotDivisible);
  std::mt19937 rng(11);
  for (int i = 0; i < 20; ++i) {
    Poly a = random_poly(rng, {var::x, var::s1, var::s2}, 5, 3);
    Poly b = random_poly(rng, {var::x, var::s1}, 4, 3);
    if (b.is_zero_poly()) continue;
    EXPECT_EQ(exact_divide(a * b, b), a);
  }
}

TEST(Resultant, SmallCases) {
  EXPECT_EQ(resultant("x - s1"_p, "x - s2"_p, var::x), "s1 - s2"_p);
  EXPECT_EQ(resultant("x^2 - 1"_p, "x - 1"_p, var::x), Poly());
}

TEST(Resultant, AntisymmetryAndInterpolationAgree) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    Poly f = random_poly(rng, {var::x, var::s1}, 5, 3) + "x^3"_p;
    Poly g = random_poly(rng, {var::x, var::s2, var::s1}, 5, 2) + "x^2"_p;
    int df = f.degree(var::x), dg = g.degree(var::x);
    Poly r = resultant(f, g, var::x);
    Poly r2 = resultant(g, f, var::x);
    EXPECT_EQ(r, (df * dg) % 2 ? -r2 : r2);
    EXPECT_EQ(resultant_interp(f, g, var::x), r);
  }
}

TEST(Discriminant, BiellipticSextic) {
  Poly f = "x^6 - s1*x^4 + s2*x^2 - 1"_p;
  Poly expected = "64*(-s1^2*s2^2 + 4*s1^3 + 4*s2^3 - 18*s1*s2 + 27)^2"_p;
  EXPECT_EQ(discriminant(f, var::x), expected);
  EXPECT_EQ(discriminant(f, var::x, ResultantPath::interpolation), expected);
  EXPECT_EQ(discriminant("x^2 + s*x + z"_p, var::x), "s^2 - 4*z"_p);
}

TEST(Gcd, SquarefreeParts) {
  auto r = squarefree("(x-1)^2*(x+2)"_p);
  EXPECT_EQ(r.squarefree_part, "(x-1)*(x+2)"_p);
  EXPECT_EQ(r.gcd_with_partials, "x-1"_p);
  EXPECT_TRUE(squarefree("x^2*lam + x + lam^3"_p).gcd_with_partials.is_constant());
  Poly dx = discriminant("x^6 - s1*x^4 + s2*x^2 - 1"_p, var::x).scaled(Rational(1, 64));
  Poly quartic = "-s1^2*s2^2 + 4*s1^3 + 4*s2^3 - 18*s1*s2 + 27"_p;
  auto sq = squarefree(dx).squarefree_part;
  EXPECT_EQ(sq, quartic.scaled(quartic.leading().second.inverse()));
}

TEST(Gcd, EvaluationSchemeMatchesPrs) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Poly g = random_poly(rng, {var::x, var::s1, var::s2}, 3, 2) + Poly(1L);
    Poly a = g * random_poly(rng, {var::x, var::s1, var::s2}, 4, 2);
    Poly b = g * random_poly(rng, {var::x, var::s2}, 4, 2);
    if (a.is_zero_poly() || b.is_zero_poly()) continue;
    EXPECT_EQ(gcd_eval(a, b), gcd_prs(a, b));
    EXPECT_TRUE(divides(gcd_prs(a, b), a));
  }
}

TEST(ModP, Reduction) {
  EXPECT_EQ(reduce_mod_p("1/2*x"_p, 3).str(), "2*x");
  EXPECT_THROW(reduce_mod_p("1/2*x"_p, 2), std::domain_error);
  std::mt19937 rng(9);
  for (int i = 0; i < 10; ++i) {
    Poly a = random_poly(rng, {var::x, var::lam}, 4, 3), b = random_poly(rng, {var::x, var::lam}, 4, 3);
    EXPECT_EQ(reduce_mod_p(a * b, 7), reduce_mod_p(a, 7) * reduce_mod_p(b, 7));
    EXPECT_EQ(reduce_mod_p(a + b, 7), reduce_mod_p(a, 7) + reduce_mod_p(b, 7));
    EXPECT_EQ(reduce_mod_p(hasse(a, var::x, 2), 7), hasse(reduce_mod_p(a, 7), var::x, 2));
  }
  PolyP p = reduce_mod_p("(x + lam)^2*(x - 1)"_p, 5);
  EXPECT_FALSE(is_squarefree(p));
  EXPECT_TRUE(is_squarefree(reduce_mod_p("x^2 + lam^3 + 1"_p, 5)));
}

TEST(Substitute, TranslationAndQuotientRings) {
  EXPECT_EQ(substitute("x^2"_p, var::x, "x + 1"_p), "x^2 + 2*x + 1"_p);
  Poly quartic = "-s1^2*s2^2 + 4*s1^3 + 4*s2^3 - 18*s1*s2 + 27"_p;
  EXPECT_TRUE(evaluate_all(quartic, {{var::s1, Rational(-1)}, {var::s2, Rational(-1)}}).is_zero());
  auto ring = cyclotomic3();
  QElem zeta = QElem::generator(ring);
  QElem zinv = zeta * zeta;
  QElem three(3L);
  EXPECT_TRUE(evaluate_all(lift(quartic), {{var::s1, three * zeta}, {var::s2, three * zinv}}).is_zero());
  QElem r = QElem::generator(sqrt_minus_half());
  EXPECT_EQ((r * r).str(), "-1/2");
}

TEST(Series, LocalInversion) {
  auto x = local_inversion({Rational(0), Rational(1)}, Rational(0), 2, 8);
  EXPECT_EQ(x.valuation(), 2);
  EXPECT_EQ(x[2], Rational(1));
  for (int k = 3; k <= 8; ++k) EXPECT_TRUE(x[k].is_zero());

  // f = x(x-1)(x-2) = x^3 - 3x^2 + 2x
  auto h = local_inversion({Rational(0), Rational(2), Rational(-3), Rational(1)}, Rational(0), 2, 9);
  EXPECT_EQ(h[2], Rational(1, 2));
  EXPECT_EQ(h[4], Rational(3, 8));
  EXPECT_TRUE(h[3].is_zero());
  EXPECT_THROW(local_inversion({Rational(2), Rational(-3), Rational(0), Rational(1)}, Rational(1), 2, 6),
               std::domain_error);
}

TEST(Series, WronskianOfMonomials) {
  std::vector<int> mu = {0, 1, 2, 3, 4, 6, 9};
  std::vector<TruncatedSeries> basis;
  for (int m : mu) basis.push_back(TruncatedSeries::monomial(m, 20));
  auto w = series_wronskian(basis);
  ASSERT_TRUE(w.valuation());
  EXPECT_EQ(*w.valuation(), 4);
  std::vector<std::vector<Rational>> n(7, std::vector<Rational>(7));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) n[i][j] = Rational(binomial_z(mu[j], i));
  EXPECT_EQ(w[4], up::det(n));
  EXPECT_EQ(w[4], Rational(378));

  auto one = series_wronskian({TruncatedSeries::monomial(0, 5), TruncatedSeries::monomial(1, 5)});
  EXPECT_EQ(one.valuation(), 0);
  EXPECT_EQ(one[0], Rational(1));
}
