#include <infl/elimination.hpp>

#include <gtest/gtest.h>

using namespace infl;
using namespace infl::literals;

namespace {

const UMode kHalf = UMode::at(Rational(1, 2));

}  // namespace

TEST(Singular, WeierstrassEliminant) {
  Poly cube = "lam^3 + 27"_p;
  for (int m = 3; m <= 5; ++m) {
    Poly p = atomic_inflection(PencilSpec::of(Family::weierstrass), m, kHalf).poly;
    auto r = singular_candidates(p, var::lam);
    EXPECT_FALSE(r.degenerate);
    EXPECT_TRUE(divides(cube, r.eliminant)) << m << ": " << r.eliminant;
    EXPECT_NE(std::find(r.rational.roots.begin(), r.rational.roots.end(), Rational(-3)), r.rational.roots.end());
  }
}

TEST(Singular, D4Eliminant) {
  Poly target = "s*(4*s - 1)"_p;
  for (int m = 3; m <= 5; ++m) {
    Poly p = atomic_inflection(PencilSpec::of(Family::d4), m, kHalf).poly;
    auto r = singular_candidates(p, var::s);
    EXPECT_TRUE(divides(target, r.eliminant)) << m << ": " << r.eliminant;
  }
}

TEST(Singular, SmoothConicHasNoRationalCandidates) {
  auto r = singular_candidates("x^2 + lam^2 + 1"_p, var::lam);
  EXPECT_TRUE(r.rational.complete);
  EXPECT_TRUE(r.rational.roots.empty());
}

TEST(Singular, RepeatedFactorIsReportedDegenerate) {
  auto r = singular_candidates("(x - lam)^2*(x + 1)"_p, var::lam);
  EXPECT_TRUE(r.degenerate);
}

TEST(Singular, WeierstrassThreeAtNamedPoints) {
  Poly p3 = atomic_inflection(PencilSpec::of(Family::weierstrass), 3, kHalf).poly;
  EXPECT_EQ(p3.constant_term(), Rational(2));
  EXPECT_TRUE(verify_singular_point(p3, var::lam, QElem(1L), QElem(-3L)).verified);
  auto origin = verify_singular_point(p3, var::lam, QElem(0L), QElem(0L));
  EXPECT_FALSE(origin.verified);
  EXPECT_EQ(origin.value, QElem(2L));
  auto ring = cyclotomic3();
  QElem zeta = QElem::generator(ring);
  for (int m = 3; m <= 6; ++m) {
    Poly p = atomic_inflection(PencilSpec::of(Family::weierstrass), m, kHalf).poly;
    auto r = verify_singular_point(p, var::lam, zeta * zeta, QElem(-3L) * zeta);
    EXPECT_TRUE(r.verified) << m;
    ASSERT_TRUE(r.delta.has_value());
    EXPECT_EQ(*r.delta, weierstrass_genus(m).deltas[0].second);
  }
}

TEST(Singular, D4AtSqrtMinusHalf) {
  QElem r = QElem::generator(sqrt_minus_half());
  for (int m = 3; m <= 4; ++m) {
    Poly p = atomic_inflection(PencilSpec::of(Family::d4), m, kHalf).poly;
    EXPECT_TRUE(verify_singular_point(p, var::s, r, QElem(Rational(1, 4))).verified) << m;
    EXPECT_TRUE(verify_singular_point(p, var::s, QElem(-1L) * r, QElem(Rational(1, 4))).verified) << m;
    EXPECT_FALSE(verify_singular_point(p, var::s, QElem(1L), QElem(Rational(1, 4))).verified) << m;
  }
}

TEST(Fixtures, ParseAndShape) {
  EXPECT_EQ(component_fixture("m3_c1"), "4*s1 - s2^2"_p);
  Poly c = component_fixture("m5_c3");
  EXPECT_EQ(c.terms().size(), 61u);
  EXPECT_EQ(c.coeff(Monomial{} * mono(var::s1, 11) * mono(var::s2, 5)), Rational(-65461824));
  auto star = newton_polygon(delta_star(), var::s1, var::s2);
  EXPECT_EQ(star.str(), "Conv((0,0),(3,0),(2,2),(0,3))");
  EXPECT_EQ(newton_polygon(component_fixture("m4_c3"), var::s1, var::s2), star);
  auto twice = minkowski_sum(star, star);
  EXPECT_EQ(newton_polygon(component_fixture("m4_c4"), var::s1, var::s2), twice);
  EXPECT_EQ(interior_lattice_points(twice).count, 17);
  auto five = minkowski_sum(minkowski_sum(twice, twice), star);
  EXPECT_EQ(newton_polygon(c, var::s1, var::s2), five);
  EXPECT_EQ(interior_lattice_points(five).count, 131);
  // the printed count for this component is 10; its polygon Conv((0,0),(6,0),(5,2),(3,3),(0,3)) has 9
  EXPECT_EQ(interior_lattice_points(newton_polygon(component_fixture("m3_c2"), var::s1, var::s2)).count, 9);
  EXPECT_THROW(component_fixture("m9_c9"), std::invalid_argument);
}

TEST(Surface, MTwo) {
  auto d = surface_discriminant(2);
  ASSERT_EQ(d.ledger.entries.size(), 1u);
  EXPECT_TRUE(d.ledger.entries[0].divides);
  EXPECT_TRUE(d.ledger.all_divide());
}

TEST(Surface, MThree) {
  auto d = surface_discriminant(3);
  EXPECT_TRUE(d.ledger.all_divide());
  for (auto& e : d.ledger.entries) EXPECT_TRUE(e.divides && e.simple_in_squarefree) << e.name;
  EXPECT_EQ(d.ledger.entries[0].multiplicity, 5);
}

TEST(Surface, MFour) {
  auto d = surface_discriminant(4, ResultantPath::interpolation, 4);
  ASSERT_EQ(d.ledger.entries.size(), 5u);
  for (auto& e : d.ledger.entries) EXPECT_TRUE(e.divides && e.simple_in_squarefree) << e.name;
  EXPECT_TRUE(d.ledger.product_divides);
}

TEST(Surface, ParallelMatchesSerialAndDirect) {
  auto a = surface_discriminant(3, ResultantPath::interpolation, 1);
  auto b = surface_discriminant(3, ResultantPath::interpolation, 3);
  auto c = surface_discriminant(3, ResultantPath::direct);
  EXPECT_EQ(a.delta, b.delta);
  EXPECT_EQ(a.delta, c.delta);
}

TEST(Surface, MFive) {
  auto d = surface_discriminant(5, ResultantPath::interpolation, std::max(1u, std::thread::hardware_concurrency()));
  for (auto& e : d.ledger.entries) EXPECT_TRUE(e.divides && e.simple_in_squarefree) << e.name;
}

TEST(DeltaStar, Checks) {
  auto r = delta_star_checks();
  EXPECT_TRUE(r.ok()) << r.counterexample.value_or("");
  EXPECT_GE(r.checked, 12);
}

TEST(DeltaStar, CuspLocus) {
  auto c = cusp_locus_data();
  EXPECT_TRUE(c.divisible) << c.gcd_t;
  EXPECT_TRUE(c.roots_match);
  EXPECT_TRUE(c.no_rational_root);
  EXPECT_GT(c.removed_t + c.removed_t2, 0);
  EXPECT_TRUE(cusp_locus().ok());
}

TEST(LowerHull, GammaInstances) {
  EXPECT_EQ(gamma_jk(1, 2), "2*(u - 3/2)"_p);
  Poly q3 = lower_hull_polynomials(3, Parity::odd);
  EXPECT_EQ(q3, "lam^2"_p + (gamma_jk(1, 3) * "lam"_p).scaled(Rational(6)) + gamma_jk(2, 3).scaled(Rational(6)));
  EXPECT_EQ(lower_hull_polynomials(2, Parity::even), "lam"_p + gamma_jk(1, 2).scaled(Rational(2)));
  EXPECT_THROW(lower_hull_polynomials(1, Parity::odd), std::invalid_argument);
}

TEST(LowerHull, ResultantTable) {
  for (int m = 6; m <= 10; ++m) {
    auto r = nondegeneracy_resultant(m);
    ASSERT_TRUE(r.printed.has_value());
    EXPECT_TRUE(r.scalar.has_value()) << m << ": " << r.computed;
    EXPECT_FALSE(r.at_half.is_zero()) << m;
  }
  EXPECT_EQ(*nondegeneracy_resultant(6).scalar, Rational(-9, 5));
}

TEST(LowerHull, EdgeSeparability) {
  for (int m = 6; m <= 11; ++m) {
    auto r = edge_restriction_separability(m);
    EXPECT_TRUE(r.ok()) << m << ": " << r.counterexample.value_or("") << " " << r.computed;
  }
  UPoly<Rational> control = up::mul(UPoly<Rational>{-1, 1}, UPoly<Rational>{-1, 1});
  EXPECT_FALSE(separability_report(control, "control").ok());
}
