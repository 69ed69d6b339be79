#include <infl/parse.hpp>
#include <infl/ramification.hpp>

#include <gtest/gtest.h>

using namespace infl;
using namespace infl::literals;

TEST(Orders, Examples) {
  EXPECT_EQ(inflection_orders(3, 4, 9), (std::vector<int>{0, 1, 2, 3, 4, 6, 9}));
  EXPECT_EQ(inflection_orders(2, 5, 6), (std::vector<int>{0, 1, 2, 4, 6}));
  EXPECT_EQ(inflection_orders(3, 4, 0), (std::vector<int>{0}));
  EXPECT_THROW(inflection_orders(3, 6, 9), std::invalid_argument);
}

TEST(Orders, MuBClosedFormAgreesWithOrdersAndPermanent) {
  EXPECT_EQ(mu_B(3, 1), 4);
  EXPECT_EQ(mu_B(3, 0), 0);
  for (int g = 1; g <= 6; ++g) EXPECT_EQ(mu_B(2, g), g * (g + 1) / 2);
  for (int n = 2; n <= 5; ++n)
    for (int beta = 1; beta <= 3; ++beta)
      for (int alpha = (n - 1) * beta + 1; alpha <= (n - 1) * beta + 3; ++alpha) {
        RamificationParams p{n, alpha, beta};
        if ((p.genus() + 1) > 20) continue;
        long closed = mu_B(n, beta);
        EXPECT_EQ(sum_mu_minus_i(inflection_orders(n, p.d(), p.ell())), closed) << p.str();
        auto t = tropical_matrix(p);
        EXPECT_EQ(t.permanent, closed) << p.str();
        EXPECT_EQ(t.diagonal, closed) << p.str();
      }
}

TEST(Vandermonde, N339) {
  auto v = vandermonde_N(3, 3, 9);
  EXPECT_EQ(v.k0, 3);
  EXPECT_EQ(v.lower.size(), 4u);
  EXPECT_EQ(v.lower_det, Rational(378));
  EXPECT_EQ(v.det, Rational(378));
  EXPECT_EQ(vandermonde_N(3, 3, 0).det, Rational(1));
}

TEST(Vandermonde, HyperellipticLowerBlock) {
  for (int beta = 1; beta <= 5; ++beta)
    for (int alpha = beta + 1; alpha <= 6; ++alpha) {
      auto v = vandermonde_N(2, beta, 2 * alpha);
      ASSERT_EQ(static_cast<int>(v.lower.size()), beta + 1);
      for (int i = 0; i <= beta; ++i)
        for (int j = 0; j <= beta; ++j)
          EXPECT_EQ(v.lower[i][j], binom_q(2 * (alpha - beta) + 2 * j, 2 * (alpha - beta) + i));
      EXPECT_EQ(v.lower_det, v.det);
      EXPECT_GT(v.det.sign(), 0);
    }
}

TEST(Vandermonde, HyperellipticGesselViennotComparison) {
  for (int alpha = 2; alpha <= 6; ++alpha)
    for (int beta = 1; beta < alpha; ++beta) {
      Rational lhs = vandermonde_N(2, beta, 2 * alpha).det;
      Rational rhs = Rational(mpz_class(mpz_class(1) << (beta * (beta + 1) / 2))) * up::det(gessel_viennot_M(alpha, beta));
      EXPECT_EQ(lhs, rhs) << alpha << "," << beta;
    }
}

TEST(Plucker, ColumnsForThreeThreeOne) {
  auto cols = wronskian_columns({3, 3, 1});
  std::vector<ColumnIndex> want{{1, 0}, {1, 1}, {2, 0}, {3, 0}};
  EXPECT_EQ(cols, want);
}

TEST(Plucker, ColumnIndexAgreesWithIntervalDescription) {
  for (int n = 2; n <= 4; ++n)
    for (int beta = 1; beta <= 2; ++beta)
      for (int alpha = (n - 1) * beta + 1; alpha <= (n - 1) * beta + 4; ++alpha) {
        RamificationParams p{n, alpha, beta};
        for (int i0 = alpha - (n - 1) * beta; i0 <= alpha; ++i0) {
          int j = 0;
          if (i0 < alpha - beta)
            for (int c = 1; c <= n - 2; ++c)
              if (alpha - beta * (c + 1) <= i0 && i0 <= alpha - beta * c - 1) j = c;
          EXPECT_EQ(top_k(p, i0), j) << p.str() << " i0=" << i0;
        }
      }
}

TEST(Plucker, HyperellipticGraphsAreSinglePaths) {
  for (int alpha = 2; alpha <= 6; ++alpha)
    for (int beta = 1; beta < alpha; ++beta)
      for (auto& g : maximal_paths({2, alpha, beta})) {
        EXPECT_EQ(g.path_count, 1) << alpha << "," << beta;
        for (auto& [lam, w] : g.ow) EXPECT_EQ(w, 1);
      }
}

TEST(Plucker, OccurrenceWeightsCountPaths) {
  for (auto& g : maximal_paths({3, 4, 1})) {
    ASSERT_TRUE(g.paths.has_value());
    EXPECT_EQ(mpz_class(g.paths->size()), g.path_count);
    std::map<Partition, long> seen;
    for (auto& path : *g.paths) {
      for (std::size_t s = 1; s < path.size(); ++s) {
        EXPECT_EQ(weight(path[s]), weight(path[s - 1]) + 1);
        EXPECT_TRUE(contained(path[s - 1], path[s]));
      }
      for (auto& lam : path) ++seen[lam];
    }
    for (auto& [lam, w] : g.ow) EXPECT_EQ(mpz_class(seen[lam]), w) << to_string(lam);
  }
}

TEST(GV, ThreeThreeOnePolynomial) {
  auto r = gv_sum_identity({3, 3, 1});
  EXPECT_TRUE(r.enumerated);
  Poly want = "9*t1*t2^2*t3^4 + 2*t2^4*t3^3 - 3*t1^2*t3^5"_p;
  EXPECT_EQ(r.t_poly, want);
  EXPECT_EQ(r.at_binomials, Rational(378));
  EXPECT_TRUE(r.holds);
  // t = (3c y^2, 3c y, c) gives 378 c^7 y^4
  Poly c = var_poly<Rational>(var::w), y = var_poly<Rational>(var::y);
  Poly spec = substitute(r.t_poly, {{t_var(1), c.scaled(Rational(3)) * y * y}, {t_var(2), c.scaled(Rational(3)) * y}, {t_var(3), c}});
  EXPECT_EQ(spec, "378*w^7*y^4"_p);
}

TEST(GV, EnumerationAgreesWithMultilinearSums) {
  for (RamificationParams p : {RamificationParams{3, 3, 1}, {3, 4, 1}, {2, 4, 2}, {4, 4, 1}}) {
    auto a = gv_sum_identity(p);
    auto b = gv_sum_identity(p, 0);
    EXPECT_FALSE(b.enumerated);
    EXPECT_EQ(a.t_poly, b.t_poly) << p.str();
  }
}

TEST(GV, HyperellipticSpecialisesToGesselViennot) {
  for (int alpha = 2; alpha <= 6; ++alpha)
    for (int beta = 1; beta < alpha; ++beta) {
      auto r = gv_sum_identity({2, alpha, beta});
      EXPECT_TRUE(r.holds) << alpha << "," << beta;
      Rational ones = evaluate_all(r.t_poly, {{t_var(1), Rational(1)}, {t_var(2), Rational(1)}});
      EXPECT_EQ(ones, up::det(gessel_viennot_M(alpha, beta)));
    }
}

TEST(GV, IdentityAcrossSmallParameters) {
  for (RamificationParams p : {RamificationParams{3, 4, 1}, {3, 5, 1}, {3, 5, 2}, {4, 4, 1}, {4, 5, 1}, {5, 5, 1}}) {
    auto r = gv_sum_identity(p);
    EXPECT_TRUE(r.holds) << p.str() << ": " << r.at_binomials.str() << " vs " << r.det_N.str();
    EXPECT_GT(r.det_N.sign(), 0);
  }
}

TEST(GlobalClass, Plucker) {
  EXPECT_EQ(plucker_degree_a1(3, 0, 3).gamma, 0);
  EXPECT_EQ(plucker_degree_a1(3, 1, 2).gamma, 9);
  EXPECT_FALSE(plucker_degree_a1(3, 1, 2).defined);
  EXPECT_EQ(plucker_degree_a1(4, 1, 3).str(), "8H");
  for (int n = 2; n <= 5; ++n)
    for (int D = 2; D <= 9; ++D) {
      if (std::gcd(n, D) != 1) continue;
      int g = (n - 1) * (D - 1) / 2;
      for (int ell = std::max(2 * g - 1, g + 1); ell <= 2 * g + n + 6; ++ell)
        EXPECT_EQ(complete_series_class(n, D, ell).defined, ell % 2 == 0 || (ell - g + 1) % 2 == 0)
            << n << " " << D << " " << ell;
    }
}

TEST(Series, CrossCheckRandomCurves) {
  std::mt19937_64 rng(2024);
  for (auto [n, d, ell, val] : {std::tuple{2, 5, 6, 3}, {3, 4, 9, 4}})
    for (int trial = 0; trial < 5; ++trial) {
      auto f = random_separable(d, rng);
      auto rep = series_cross_check(n, d, ell, f, Rational(0));
      EXPECT_TRUE(rep.ok()) << rep.counterexample.value_or("") << " " << rep.computed;
      EXPECT_NE(rep.computed.find("valuation " + std::to_string(val)), std::string::npos);
    }
}

TEST(Series, NonzeroSimpleRoot) {
  // (x-1)(x-2)(x-3)(x-4)(x+5) at gamma = 3
  UPoly<Rational> g = up::mul(up::mul(UPoly<Rational>{-1, 1}, UPoly<Rational>{-2, 1}),
                              up::mul(UPoly<Rational>{-3, 1}, up::mul(UPoly<Rational>{-4, 1}, UPoly<Rational>{5, 1})));
  auto rep = series_cross_check(2, 5, 6, g, Rational(3));
  EXPECT_TRUE(rep.ok()) << rep.counterexample.value_or("");
}
