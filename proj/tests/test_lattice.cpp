#include <infl/lattice.hpp>
#include <infl/parse.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace infl;
using namespace infl::literals;

namespace {

const UMode kHalf = UMode::at(Rational(1, 2));

LatticePolygon conv(std::vector<Pt> v) { return LatticePolygon::hull(std::move(v)); }

std::vector<Pt> brute_minkowski(const LatticePolygon& a, const LatticePolygon& b) {
  std::vector<Pt> s;
  for (auto& p : a.vertices())
    for (auto& q : b.vertices()) s.push_back(p + q);
  return s;
}

long legendre_pg(long m) {
  long v = (2 * m - 1) * (2 * m - 2) / 2 - 3 * (((m - 1) * (m - 1)) / 2) - 3 * m + 3;
  return std::max(0L, v);
}

}  // namespace

TEST(Polygon, CanonicalForm) {
  auto p = conv({{2, 0}, {0, 0}, {1, 0}, {0, 2}, {1, 1}, {2, 2}, {1, 2}});
  std::vector<Pt> want{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  EXPECT_EQ(p.vertices(), want);
  EXPECT_EQ(p.twice_area(), 8);
  EXPECT_EQ(p.boundary_points(), 8);
  EXPECT_EQ(interior_lattice_points(p).count, 1);
  EXPECT_TRUE(conv({{3, 1}}).is_point());
  EXPECT_TRUE(conv({{0, 0}, {1, 1}, {3, 3}}).is_segment());
  EXPECT_EQ(conv({{0, 0}, {1, 1}, {3, 3}}).boundary_points(), 4);
}

TEST(Polygon, MinkowskiAgreesWithPairwiseHull) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-5, 5);
  std::uniform_int_distribution<int> n(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Pt> a, b;
    for (int k = n(rng); k > 0; --k) a.push_back({d(rng), d(rng)});
    for (int k = n(rng); k > 0; --k) b.push_back({d(rng), d(rng)});
    auto A = conv(a), B = conv(b);
    EXPECT_EQ(minkowski_sum(A, B), conv(brute_minkowski(A, B))) << A.str() << " + " << B.str();
  }
}

TEST(Polygon, NewtonPolygonOfProductIsMinkowskiSum) {
  Poly f = "x^3 + 2*x*lam + lam^2 - 1"_p, g = "x*lam^3 + x^2 - 5*lam"_p;
  EXPECT_EQ(newton_polygon(f * g, var::x, var::lam),
            minkowski_sum(newton_polygon(f, var::x, var::lam), newton_polygon(g, var::x, var::lam)));
}

TEST(Polygon, AmbientInteriorCounts) {
  for (long m = 1; m <= 12; ++m) {
    EXPECT_EQ(interior_lattice_points(conv({{0, 0}, {2 * m, 0}, {0, m}})).count, (m - 1) * (m - 1));
    EXPECT_EQ(interior_lattice_points(conv({{0, 0}, {4 * m, 0}, {0, m}})).count, (2 * m - 1) * (m - 1));
  }
}

TEST(LowerHull, ClassicalSingularities) {
  EXPECT_EQ(lower_hull_delta("x^2 - lam^2"_p, var::x, var::lam).delta, 1);
  EXPECT_EQ(lower_hull_delta("lam^2 - x^3"_p, var::x, var::lam).delta, 1);
  EXPECT_EQ(lower_hull_delta("lam^2 - x^5"_p, var::x, var::lam).delta, 2);
  EXPECT_EQ(lower_hull_delta("lam^3 - x^4"_p, var::x, var::lam).delta, 3);
  EXPECT_EQ(lower_hull_delta("x - lam^2"_p, var::x, var::lam).delta, 0);
  EXPECT_THROW(lower_hull_delta("x^2 + lam^2 + 1"_p, var::x, var::lam), std::invalid_argument);
  EXPECT_THROW(lower_hull_delta("x*lam + x^3"_p, var::x, var::lam), std::invalid_argument);
}

TEST(LowerHull, SmoothPointAfterTranslation) {
  // (2, -5) lies on the Weierstrass pencil and is a smooth point
  Poly f = "x^3 + lam*x + 2"_p;
  Poly c = translate(f, {{var::x, Rational(2)}, {var::lam, Rational(-5)}});
  auto h = lower_hull_delta(c, var::x, var::lam);
  EXPECT_EQ(h.delta, 0);
  EXPECT_TRUE(h.chain.front() == (Pt{0, 1}) || h.chain.back() == (Pt{1, 0}));
}

TEST(LowerHull, D4OriginDelta) {
  for (int m = 2; m <= 6; ++m) {
    Poly p = atomic_inflection(PencilSpec::of(Family::d4), m, kHalf).poly;
    EXPECT_EQ(lower_hull_delta(p, var::x, var::s).delta, long(m) * (m - 1)) << m;
  }
}

TEST(Stated, LegendreGeneric) {
  for (auto [a, b, c] : {std::tuple{1, 1, 1}, {2, 1, 1}, {1, 2, 3}})
    for (int m = 1; m <= 4; ++m) {
      Poly p = atomic_inflection(PencilSpec::legendre(a, b, c), m, UMode::sym()).poly;
      EXPECT_EQ(newton_polygon(p, var::x, var::lam), expected_polygon("legendre.generic", {m, a, b, c}).polygon)
          << a << b << c << " m=" << m;
    }
}

TEST(Stated, LegendreHalf) {
  for (int m = 2; m <= 8; ++m) {
    Poly p = atomic_inflection(PencilSpec::legendre(1, 1, 1), m, kHalf).poly;
    EXPECT_EQ(newton_polygon(p, var::x, var::lam), expected_polygon("legendre.u-half", {m}).polygon) << m;
  }
}

TEST(Stated, WeierstrassCentered) {
  for (int m = 3; m <= 10; ++m) {
    Poly p = atomic_inflection(weierstrass_centered(), m, kHalf).poly;
    EXPECT_EQ(newton_polygon(p, var::x, var::lam), expected_polygon("weierstrass.centered", {m}).polygon) << m;
  }
}

TEST(Stated, D4Origin) {
  for (int m = 2; m <= 8; ++m) {
    Poly p = atomic_inflection(PencilSpec::of(Family::d4), m, UMode::sym()).poly;
    EXPECT_EQ(newton_polygon(p, var::x, var::s), expected_polygon("d4.origin", {m}).polygon) << m;
  }
}

TEST(Stated, RefusesGarbledD4) {
  EXPECT_THROW(expected_polygon("d4.centered", {6}), std::domain_error);
  EXPECT_THROW(expected_polygon("nonsense", {3}), std::invalid_argument);
}

TEST(Stated, D6OriginSmallCases) {
  EXPECT_EQ(expected_polygon("d6.origin", {3}).polygon.str(), "Conv((0,2),(6,0),(15,0),(3,2))");
  EXPECT_EQ(expected_polygon("d6.origin", {4}).polygon.str(), "Conv((0,2),(6,0),(12,0))");
}

TEST(Genus, WeierstrassFive) {
  auto g = weierstrass_genus(5);
  EXPECT_EQ(g.arithmetic, 16);
  ASSERT_EQ(g.deltas.size(), 3u);
  for (auto& [label, d] : g.deltas) EXPECT_EQ(d, 4) << label;
  EXPECT_EQ(g.geometric, 4);
  EXPECT_FALSE(g.assumptions.empty());
}

TEST(Genus, WeierstrassFormula) {
  for (long m = 3; m <= 8; ++m) {
    auto g = weierstrass_genus(static_cast<int>(m));
    long delta = m % 2 ? ((m - 1) / 2) * ((m - 1) / 2) : (m / 2) * (m / 2 - 1);
    for (auto& [label, d] : g.deltas) EXPECT_EQ(d, delta) << m << " " << label;
    EXPECT_EQ(g.geometric, ((m - 1) * (m - 1) + 3) / 4) << m;
  }
}

TEST(Genus, D4ThreeHasNodesNotCusps) {
  // The stated m = 3 polygon has (2,1) on its lower hull; the x*s coefficient is in fact nonzero,
  // the Hessian there is nondegenerate and each center is an ordinary node.
  auto g = d4_genus(3);
  EXPECT_EQ(g.arithmetic, 10);
  EXPECT_EQ(g.deltas[0].second, 6);
  EXPECT_EQ(g.deltas[1].second, 1);
  EXPECT_EQ(g.deltas[2].second, 1);
  EXPECT_EQ(g.geometric, 2);
}

TEST(Genus, D4CenteredPolygons) {
  auto ring = sqrt_minus_half();
  QElem r = QElem::generator(ring);
  for (int m = 3; m <= 5; ++m) {
    Poly p = atomic_inflection(PencilSpec::of(Family::d4), m, kHalf).poly;
    PolyQ c = center_at(p, var::x, r, var::s, QElem(Rational(1, 4)));
    auto computed = newton_polygon(c, var::x, var::s);
    if (m == 3)
      EXPECT_EQ(computed.str(), "Conv((0,2),(1,1),(5,0),(12,0),(0,3))");
    else
      EXPECT_EQ(computed, expected_polygon("d4.centered", {m}).polygon) << m;
  }
}

TEST(Genus, LegendreTable) {
  for (long m = 4; m <= 7; ++m) {
    auto g = legendre_genus(static_cast<int>(m));
    long delta = ((m - 1) * (m - 1)) / 2 + m - 1;
    for (auto& [label, d] : g.deltas) EXPECT_EQ(d, delta) << m << " " << label;
    EXPECT_EQ(g.geometric, legendre_pg(m)) << m;
  }
}
