#pragma once

#include "pencils.hpp"

#include <functional>
#include <string>
#include <vector>

namespace infl {

struct CoefficientItem {
  std::string label;
  std::vector<std::pair<Var, unsigned>> monomial;
  Poly expected;
};

struct CoefficientParams {
  int a = 1, b = 1, c = 1;
};

/// A closed-form claim about selected coefficients of P_m, as a function of m.
struct CoefficientClaim {
  std::string id;
  std::string statement;
  std::string status;  // theorem | conjecture | observation
  int m_min = 1;
  int m_max_default = 8;
  std::function<PencilSpec(const CoefficientParams&)> pencil;
  std::function<UMode()> umode;
  std::function<std::vector<CoefficientItem>(int m, const Poly& u, const CoefficientParams&)> items;
};

namespace detail {

inline std::vector<std::pair<Var, unsigned>> xl(Var p, int i, int j) {
  return {{var::x, static_cast<unsigned>(i)}, {p, static_cast<unsigned>(j)}};
}

inline Poly q(const Rational& r) { return Poly(r); }
inline Poly q(long a, long b = 1) { return Poly(Rational(a, b)); }
inline Poly inv_fact(long n) { return Poly(factorial_q(n).inverse()); }
inline Poly pow3(long k) { return Poly(pow(Rational(3), static_cast<unsigned>(k))); }

inline Rational double_factorial_odd(long n) {  // n!! for odd n >= -1
  Rational r(1);
  for (long k = n; k > 1; k -= 2) r *= Rational(k);
  return r;
}

inline std::vector<CoefficientItem> weierstrass_common(int m, const Poly& u) {
  std::vector<CoefficientItem> it;
  it.push_back({"v2", xl(var::lam, 0, m), inv_fact(m) * falling(u, m)});
  if (m % 2)
    it.push_back({"v3", xl(var::lam, 1, (m - 1) / 2),
                  q(2) * pow3((m + 1) / 2) * inv_fact((m - 1) / 2) * falling(u, (m + 1) / 2)});
  it.push_back({"v6", xl(var::lam, 2 * m, 0), inv_fact(m) * falling(u.scaled(Rational(3)), m)});
  return it;
}

inline std::vector<CoefficientClaim> build_coefficient_catalog() {
  std::vector<CoefficientClaim> cat;
  auto sym = [] { return UMode::sym(); };

  cat.push_back({"legendre.generic.vertex-coefficients",
                 "Coefficients of the four vertex monomials of the Legendre polygon are signed (k u)_m / m! "
                 "with k = a+c, a+b+c, a, a+b",
                 "theorem", 1, 8,
                 [](const CoefficientParams& p) { return PencilSpec::legendre(p.a, p.b, p.c); }, sym,
                 [](int m, const Poly& u, const CoefficientParams& p) {
                   int a = p.a, b = p.b, c = p.c;
                   auto sg = [](int e) { return q(e % 2 ? -1 : 1); };
                   auto fu = [&](int k) { return falling(u.scaled(Rational(k)), m); };
                   return std::vector<CoefficientItem>{
                       {"v1", xl(var::lam, m * a + m * c - m, 0), sg(b * m) * inv_fact(m) * fu(a + c)},
                       {"v2", xl(var::lam, m * a + m * b + m * c - m, 0), inv_fact(m) * fu(a + b + c)},
                       {"v3", xl(var::lam, m * a - m, m * c), sg((b + c) * m) * inv_fact(m) * fu(a)},
                       {"v4", xl(var::lam, m * a + m * b - m, m * c), sg(c * m) * inv_fact(m) * fu(a + b)}};
                 }});

  cat.push_back({"legendre.u-half.coefficients",
                 "Legendre(1,1,1) at u = 1/2: lam^m and x^{2m} give (u)_m/m! and (3u)_m/m!; (m-2,m), (m-2,2) give "
                 "-1/8; (2m-1,0), (2m-1,1) give -2u(3u-1)_{m-1}/(m-1)!; (2m-2,1) gives ((4m-1)u-m)u(3u-2)_{m-2}/(m-1)!",
                 "theorem", 2, 12, [](const CoefficientParams&) { return PencilSpec::legendre(1, 1, 1); },
                 [] { return UMode::at(Rational(1, 2)); },
                 [](int m, const Poly& u, const CoefficientParams&) {
                   Poly v34 = q(-2) * inv_fact(m - 1) * u * falling(u.scaled(Rational(3)) - q(1), m - 1);
                   Poly v5 = inv_fact(m - 1) * (u.scaled(Rational(4 * m - 1)) - q(m)) * u *
                             falling(u.scaled(Rational(3)) - q(2), m - 2);
                   return std::vector<CoefficientItem>{
                       {"lam^m", xl(var::lam, 0, m), inv_fact(m) * falling(u, m)},
                       {"x^2m", xl(var::lam, 2 * m, 0), inv_fact(m) * falling(u.scaled(Rational(3)), m)},
                       {"v1", xl(var::lam, m - 2, m), q(-1, 8)},
                       {"v2", xl(var::lam, m - 2, 2), q(-1, 8)},
                       {"v3", xl(var::lam, 2 * m - 1, 0), v34},
                       {"v4", xl(var::lam, 2 * m - 1, 1), v34},
                       {"v5", xl(var::lam, 2 * m - 2, 1), v5}};
                 }});

  cat.push_back({"weierstrass.centered.coefficients",
                 "Weierstrass pencil centered at (1,-3): the six vertex coefficients v1..v6 as printed, with "
                 "((3))^k read as a double rising and ((2u-3))_k as a double falling factorial",
                 "theorem", 3, 10, [](const CoefficientParams&) { return weierstrass_centered(); }, sym,
                 [](int m, const Poly& u, const CoefficientParams&) {
                   auto it = weierstrass_common(m, u);
                   bool even = m % 2 == 0;
                   Poly v1 = falling(u, m / 2);
                   if (m > 3) v1 = v1 * pow3(even ? 2 : 1) * q(1, 2);
                   if (!even) v1 = v1 * (u.scaled(Rational(3)) - q(m - 1));
                   int k = m / 2 - 1;
                   Poly v4 = pow3(m - 1) * q(even ? 1 : 2) * inv_fact(k) * Poly(drising(Rational(3), k).inverse()) *
                             dfalling(u.scaled(Rational(2)) - q(3), k) * falling(u, (m + 1) / 2);
                   Poly v5 = Poly(pow(Rational(3), static_cast<unsigned>(m - 3)).inverse()) *
                             falling(u.scaled(Rational(3)), m);
                   it.push_back({"v1", xl(var::lam, 0, (m + 1) / 2), v1});
                   it.push_back({"v4", xl(var::lam, m - 2, 1), v4});
                   it.push_back({"v5", xl(var::lam, 2 * m - 1, 0), v5});
                   return it;
                 }});

  cat.push_back({"weierstrass.centered.coefficients-observed",
                 "Weierstrass pencil centered at (1,-3): forms fitted to the computed coefficients; v1 = "
                 "3^k (u)_k / k! for m = 2k and 3^{k-1} (3u-m+1)(u)_k / k! for m = 2k+1; v4 denominator "
                 "(2 ceil(m/2) - 3)!!; v5 = 2 (3u)_m / (m-1)!",
                 "observation", 3, 12, [](const CoefficientParams&) { return weierstrass_centered(); }, sym,
                 [](int m, const Poly& u, const CoefficientParams&) {
                   auto it = weierstrass_common(m, u);
                   int k = m / 2;
                   Poly v1 = m % 2 == 0 ? pow3(k) * inv_fact(k) * falling(u, k)
                                        : pow3(k - 1) * inv_fact(k) * (u.scaled(Rational(3)) - q(m - 1)) * falling(u, k);
                   int kk = m / 2 - 1;
                   Poly v4 = pow3(m - 1) * q(m % 2 ? 2 : 1) * inv_fact(kk) *
                             Poly(double_factorial_odd(2 * ((m + 1) / 2) - 3).inverse()) *
                             dfalling(u.scaled(Rational(2)) - q(3), kk) * falling(u, (m + 1) / 2);
                   Poly v5 = q(2) * inv_fact(m - 1) * falling(u.scaled(Rational(3)), m);
                   it.push_back({"v1", xl(var::lam, 0, (m + 1) / 2), v1});
                   it.push_back({"v4", xl(var::lam, m - 2, 1), v4});
                   it.push_back({"v5", xl(var::lam, 2 * m - 1, 0), v5});
                   return it;
                 }});

  cat.push_back({"d4.vertex-coefficients",
                 "D4 pencil: coefficients at (0,m), (2m,0), (4m,0) are (u)_m/m!, (5u)_m/m!, (3u)_m/m!",
                 "theorem", 2, 8, [](const CoefficientParams&) { return PencilSpec::of(Family::d4); }, sym,
                 [](int m, const Poly& u, const CoefficientParams&) {
                   return std::vector<CoefficientItem>{
                       {"(0,m)", xl(var::s, 0, m), inv_fact(m) * falling(u, m)},
                       {"(2m,0)", xl(var::s, 2 * m, 0), inv_fact(m) * falling(u.scaled(Rational(5)), m)},
                       {"(4m,0)", xl(var::s, 4 * m, 0), inv_fact(m) * falling(u.scaled(Rational(3)), m)}};
                 }});

  cat.push_back({"d4.vertex-coefficients-observed",
                 "D4 pencil with the two x-axis labels exchanged: (2m,0) carries (3u)_m/m! and (4m,0) carries "
                 "(5u)_m/m!",
                 "observation", 2, 8, [](const CoefficientParams&) { return PencilSpec::of(Family::d4); }, sym,
                 [](int m, const Poly& u, const CoefficientParams&) {
                   return std::vector<CoefficientItem>{
                       {"(0,m)", xl(var::s, 0, m), inv_fact(m) * falling(u, m)},
                       {"(2m,0)", xl(var::s, 2 * m, 0), inv_fact(m) * falling(u.scaled(Rational(3)), m)},
                       {"(4m,0)", xl(var::s, 4 * m, 0), inv_fact(m) * falling(u.scaled(Rational(5)), m)}};
                 }});

  cat.push_back({"weierstrass.inner-edge",
                 "Centered Weierstrass inner edge: [(2j,k-j)] = c_{j,k}(u)_k((2u-2k+1))^j for m = 2k and "
                 "[(2j+1,k-j)] = d_{j,k}(u)_{k+1}((2u-2k+1))^j for m = 2k+1, j = 1..k-2, double rising factorial",
                 "conjecture", 6, 12, [](const CoefficientParams&) { return weierstrass_centered(); }, sym,
                 [](int m, const Poly& u, const CoefficientParams&) {
                   std::vector<CoefficientItem> it;
                   int k = m / 2;
                   for (int j = 1; j <= k - 2; ++j) {
                     Rational prod(1);
                     for (int i = 1; i <= j; ++i) prod *= Rational(i * (2 * i + 1));
                     Rational base = factorial_q(k - j) * prod;
                     Poly w = drising(u.scaled(Rational(2)) - q(2 * k - 1), j);
                     if (m % 2 == 0) {
                       Rational c = pow(Rational(3), j + k) * Rational(2 * j + 1) / base;
                       it.push_back({"c_" + std::to_string(j) + "," + std::to_string(k), xl(var::lam, 2 * j, k - j),
                                     q(c) * falling(u, k) * w});
                     } else {
                       Rational d = Rational(2) * pow(Rational(3), j + k + 1) / base;
                       it.push_back({"d_" + std::to_string(j) + "," + std::to_string(k),
                                     xl(var::lam, 2 * j + 1, k - j), q(d) * falling(u, k + 1) * w});
                     }
                   }
                   return it;
                 }});
  return cat;
}

}  // namespace detail

inline const std::vector<CoefficientClaim>& coefficient_catalog() {
  static const std::vector<CoefficientClaim> cat = detail::build_coefficient_catalog();
  return cat;
}

inline const CoefficientClaim& coefficient_claim(const std::string& id) {
  for (auto& c : coefficient_catalog())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown coefficient claim: " + id);
}

/// Extracts the named coefficients of P_m for m in [m_lo, m_hi] and compares them with the closed forms.
inline VerificationReport coefficient_check(const std::string& id, int m_lo, int m_hi,
                                            const CoefficientParams& params = {}) {
  const CoefficientClaim& claim = coefficient_claim(id);
  VerificationReport r;
  r.id = id;
  r.param("m", std::to_string(m_lo) + ".." + std::to_string(m_hi));
  if (id == "legendre.generic.vertex-coefficients")
    r.param("abc", std::to_string(params.a) + "," + std::to_string(params.b) + "," + std::to_string(params.c));
  if (claim.status != "theorem") r.assumption = claim.status;
  m_lo = std::max(m_lo, claim.m_min);
  PencilSpec spec = claim.pencil(params);
  UMode um = claim.umode();
  Poly f = base_poly(spec);
  std::vector<std::string> bad;
  for (int m = m_lo; m <= m_hi; ++m) {
    Poly p = atomic_of(f, m, um);
    for (auto& item : claim.items(m, um.as_poly(), params)) {
      ++r.checked;
      Poly got = coefficient_of(p, item.monomial);
      if (got != item.expected) {
        std::string where = "m=" + std::to_string(m) + " " + item.label + " [" + std::string(name_of(var::x)) + "^" +
                            std::to_string(item.monomial[0].second) + " " + std::string(name_of(item.monomial[1].first)) +
                            "^" + std::to_string(item.monomial[1].second) + "]";
        r.fail(where + ": computed " + got.str() + ", expected " + item.expected.str());
        bad.push_back("m=" + std::to_string(m) + ":" + item.label);
      }
    }
  }
  r.computed = std::to_string(r.checked - r.failures) + "/" + std::to_string(r.checked) + " coefficients match";
  if (!bad.empty()) {
    r.computed += "; mismatches:";
    for (auto& b : bad) r.computed += " " + b;
  }
  r.expected = claim.statement;
  return r;
}

}  // namespace infl
