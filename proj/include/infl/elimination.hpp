#pragma once

#include "gcd.hpp"
#include "lattice.hpp"
#include "parse.hpp"
#include "pencils.hpp"
#include "report.hpp"
#include "resultant.hpp"

#include <infl/fixtures_data.hpp>

#include <future>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace infl {

// ---------------------------------------------------------------------------
// Univariate helpers

/// Squarefree part of a univariate polynomial, made monic.
inline UPoly<Rational> squarefree_part(const UPoly<Rational>& a) {
  if (up::deg(a) <= 0) return {Rational(1)};
  auto g = up::gcd(a, up::derivative(a));
  return up::monic(up::divmod(a, g).first);
}

inline bool is_separable(const UPoly<Rational>& a) { return up::deg(up::gcd(a, up::derivative(a))) <= 0; }

struct RationalRoots {
  std::vector<Rational> roots;
  bool complete = true;  // false when a constant or leading coefficient was too large to factor
};

namespace detail {

inline std::optional<std::vector<mpz_class>> divisors(mpz_class n, long trial_limit = 1000000) {
  n = abs(n);
  if (n == 0) return std::nullopt;
  std::vector<std::pair<mpz_class, int>> fac;
  for (long p = 2; p <= trial_limit && mpz_class(p) * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e) fac.emplace_back(mpz_class(p), e);
  }
  if (n > 1) {
    if (n > mpz_class(trial_limit) * trial_limit && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
    fac.emplace_back(n, 1);
  }
  std::vector<mpz_class> ds{1};
  for (auto& [p, e] : fac) {
    std::size_t base = ds.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

}  // namespace detail

/// Rational roots by the rational root theorem on the integer-normalized polynomial.
inline RationalRoots rational_roots(UPoly<Rational> a) {
  RationalRoots out;
  if (up::deg(a) <= 0) return out;
  if (a[0].is_zero()) {
    out.roots.push_back(Rational(0));
    std::size_t k = 0;
    while (a[k].is_zero()) ++k;
    a.erase(a.begin(), a.begin() + static_cast<long>(k));
  }
  mpz_class den = 1;
  for (auto& c : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
  auto ps = detail::divisors((a.front() * Rational(den)).num());
  auto qs = detail::divisors((a.back() * Rational(den)).num());
  if (!ps || !qs) {
    out.complete = false;
    return out;
  }
  std::set<Rational> found;
  for (auto& p : *ps)
    for (auto& q : *qs)
      for (int sg : {1, -1}) {
        Rational r(mpz_class(sg * p), q);
        if (up::eval(a, r).is_zero()) found.insert(r);
      }
  out.roots.insert(out.roots.end(), found.begin(), found.end());
  return out;
}

// ---------------------------------------------------------------------------
// Resultants with a parallel outer interpolation

/// resultant_interp with the outermost parameter's evaluations spread over threads.
/// Every evaluation is exact, so the result is identical to the serial path.
inline Poly resultant_interp_parallel(const Poly& f, const Poly& g, Var v, unsigned threads) {
  std::uint32_t mask = (f.support_vars() | g.support_vars()) & ~(1u << v.id);
  auto params = detail::vars_in(mask);
  if (threads <= 1 || params.empty()) return resultant_interp(f, g, v);
  int df = f.degree(v), dg = g.degree(v);
  Var p = params.front();
  int bound = dg * std::max(0, f.degree(p)) + df * std::max(0, g.degree(p));
  std::vector<Rational> xs(static_cast<std::size_t>(bound) + 1);
  std::vector<Poly> vals(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = detail::interp_point(i);
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < threads; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < xs.size(); i += threads)
        vals[i] = detail::resultant_interp_rec(evaluate(f, p, xs[i]), df, evaluate(g, p, xs[i]), dg, v, params, 1);
    }));
  for (auto& j : jobs) j.get();
  std::map<Monomial, std::vector<Rational>> table;
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (auto& [m, c] : vals[i].terms()) {
      auto& row = table[m];
      row.resize(vals.size(), Rational(0));
      row[i] = c;
    }
  std::vector<Poly::Term> ts;
  for (auto& [m, row] : table) {
    row.resize(vals.size(), Rational(0));
    auto coeffs = up::interpolate(xs, row);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      Monomial nm = m;
      nm[p] = static_cast<std::uint16_t>(k);
      ts.emplace_back(nm, coeffs[k]);
    }
  }
  return Poly::from_terms(std::move(ts));
}

// ---------------------------------------------------------------------------
// Singular points of inflectionary curves

struct EliminantReport {
  Var param;
  Poly res_x_px, res_x_pparam;
  Poly eliminant;  // squarefree part of the gcd, monic, in param
  bool degenerate = false;
  std::string note;
  RationalRoots rational;
};

/// R(param) = squarefree part of gcd(res_x(P, P_x), res_x(P, P_param)).
inline EliminantReport singular_candidates(const Poly& P, Var param) {
  if (P.degree(var::x) < 1 || P.degree(param) < 1)
    throw std::invalid_argument("singular_candidates: P must involve x and " + std::string(name_of(param)));
  EliminantReport r{param, {}, {}, {}, false, {}, {}};
  r.res_x_px = resultant_interp(P, diff(P, var::x), var::x);
  r.res_x_pparam = resultant_interp(P, diff(P, param), var::x);
  if (r.res_x_px.is_zero_poly() || r.res_x_pparam.is_zero_poly()) {
    r.degenerate = true;
    r.note = "a resultant vanishes identically: P has a repeated factor or a factor free of x";
    const Poly& nz = r.res_x_px.is_zero_poly() ? r.res_x_pparam : r.res_x_px;
    r.eliminant = nz.is_zero_poly() ? Poly() : from_dense(squarefree_part(to_dense(nz, param)), param);
    return r;
  }
  auto g = up::gcd(to_dense(r.res_x_px, param), to_dense(r.res_x_pparam, param));
  auto sf = squarefree_part(g);
  r.eliminant = from_dense(sf, param);
  r.rational = rational_roots(sf);
  return r;
}

struct SingularityReport {
  std::string point;
  bool verified = false;
  QElem value, d_x, d_param;
  std::optional<LatticePolygon> local;
  std::optional<long> delta;
};

/// Exact evaluation of P, P_x, P_param at (x0, p0); for a singular point the local polygon and delta too.
inline SingularityReport verify_singular_point(const Poly& P, Var param, const QElem& x0, const QElem& p0) {
  if (x0.ring() && p0.ring() && x0.ring() != p0.ring())
    throw std::invalid_argument("verify_singular_point: coordinates lie in different rings");
  SingularityReport r;
  r.point = "(" + x0.str() + ", " + p0.str() + ")";
  PolyQ c = center_at(P, var::x, x0, param, p0);
  r.value = c.constant_term();
  r.d_x = c.coeff(mono(var::x));
  r.d_param = c.coeff(mono(param));
  r.verified = r.value.is_zero() && r.d_x.is_zero() && r.d_param.is_zero();
  if (r.verified && !c.is_zero_poly()) {
    r.local = newton_polygon(c, var::x, param);
    try {
      r.delta = lower_hull_delta(c, var::x, param).delta;
    } catch (const std::invalid_argument&) {
      // non-isolated: an axis is a component of the local curve
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Component fixtures

/// Polynomial text of data/components/<name>.poly, comment lines removed.
inline Poly component_fixture(std::string_view name) {
  for (auto& [key, text] : fixtures::kEmbedded) {
    if (key != name) continue;
    std::string body;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t nl = text.find('\n', pos);
      if (nl == std::string_view::npos) nl = text.size();
      auto line = text.substr(pos, nl - pos);
      if (!line.empty() && line.front() != '#') body.append(line).push_back(' ');
      pos = nl + 1;
    }
    return parse_poly(body);
  }
  throw std::invalid_argument("unknown component fixture: " + std::string(name));
}

/// The quartic factor of disc_x(x^6 - s1 x^4 + s2 x^2 - 1).
inline Poly delta_star() { return parse_poly("-s1^2*s2^2 + 4*s1^3 + 4*s2^3 - 18*s1*s2 + 27"); }

struct ComponentEntry {
  std::string name;
  Poly component;
  bool divides = false;
  int multiplicity = 0;  // in the full discriminant
  bool simple_in_squarefree = false;
};

struct ComponentLedger {
  std::string target;
  std::vector<ComponentEntry> entries;
  bool product_divides = false;

  bool all_divide() const {
    for (auto& e : entries)
      if (!e.divides || !e.simple_in_squarefree) return false;
    return product_divides;
  }
};

struct SurfaceDiscriminant {
  int m = 0;
  Poly q;         // Q_m in X = x^2
  Poly delta;     // Q_m(0) * res_X(Q_m, dQ_m/dX)
  Poly squarefree;
  ComponentLedger ledger;
  std::string convention;
  ResultantPath path = ResultantPath::interpolation;
};

inline std::vector<std::string> printed_components(int m) {
  switch (m) {
    case 2: return {};
    case 3: return {"m3_c1", "m3_c2"};
    case 4: return {"m4_c1", "m4_c2", "m4_c3", "m4_c4"};
    case 5: return {"m5_c1", "m5_c2", "m5_c3"};
    default: return {};
  }
}

inline int multiplicity_of(Poly p, const Poly& factor) {
  int k = 0;
  while (auto q = try_exact_divide(p, factor)) p = std::move(*q), ++k;
  return k;
}

/// Bielliptic inflectionary discriminant for u = 1/2, computed in X = x^2.
inline SurfaceDiscriminant surface_discriminant(int m, ResultantPath path = ResultantPath::interpolation,
                                                unsigned threads = 1) {
  if (m < 2) throw std::invalid_argument("surface_discriminant needs m >= 2");
  SurfaceDiscriminant d;
  d.m = m;
  d.path = path;
  Poly qm = bielliptic_Qm(m, UMode::at(Rational(1, 2)));
  std::vector<Poly::Term> ts;
  for (auto& [mo, c] : qm.terms()) {
    Monomial h = mo;
    h[var::x] = static_cast<std::uint16_t>(mo[var::x] / 2);
    ts.emplace_back(h, c);
  }
  d.q = Poly::from_terms(std::move(ts));
  Poly dq = diff(d.q, var::x);
  Poly res = path == ResultantPath::direct ? resultant(d.q, dq, var::x) : resultant_interp_parallel(d.q, dq, var::x, threads);
  if (res.is_zero_poly()) throw std::domain_error("surface_discriminant: resultant vanishes identically");
  d.delta = evaluate(d.q, var::x, Rational(0)) * res;
  d.convention = "Q_m(0) * res_X(Q_m, dQ_m/dX) with X = x^2, " +
                 std::string(path == ResultantPath::direct ? "Sylvester determinant" : "evaluation/interpolation");
  d.squarefree = squarefree(d.delta).squarefree_part;

  d.ledger.target = "squarefree part of the m = " + std::to_string(m) + " discriminant";
  std::vector<std::pair<std::string, Poly>> comps{{"delta_star", delta_star()}};
  for (auto& name : printed_components(m)) comps.emplace_back(name, component_fixture(name));
  Poly product(1L);
  for (auto& [name, c] : comps) {
    ComponentEntry e{name, c};
    e.multiplicity = multiplicity_of(d.delta, c);
    e.divides = e.multiplicity > 0;
    e.simple_in_squarefree = multiplicity_of(d.squarefree, c) == 1;
    if (e.divides) product = product * c;
    d.ledger.entries.push_back(std::move(e));
  }
  d.ledger.product_divides = divides(product, d.squarefree);
  return d;
}

// ---------------------------------------------------------------------------
// The quartic curve Delta_*

struct DeltaStarParam {
  Poly s1, s2, z;  // in t
};

inline DeltaStarParam delta_star_parameterization() {
  return {parse_poly("(t-2)*(3*t^3-6*t^2+12*t-8)"), parse_poly("t*(3*t^3-12*t^2+24*t-16)"), parse_poly("t^2*(t-2)^2")};
}

inline VerificationReport delta_star_checks() {
  return timed([] {
    VerificationReport r;
    r.id = "elimination.delta-star";
    Poly quartic = delta_star();
    Poly hq = homogenize(quartic, {var::s1, var::s2}, var::z, 4);
    auto par = delta_star_parameterization();
    Poly composed = substitute(hq, {{var::s1, par.s1}, {var::s2, par.s2}, {var::z, par.z}});
    ++r.checked;
    if (!composed.is_zero_poly()) r.fail("parameterization does not lie on the quartic: " + composed.str());

    Rational one(1);
    Rational at1[3] = {evaluate_all(par.s1, {{var::t, one}}), evaluate_all(par.s2, {{var::t, one}}),
                       evaluate_all(par.z, {{var::t, one}})};
    ++r.checked;
    if (!(at1[0] == Rational(-1) && at1[1] == Rational(-1) && at1[2] == one)) r.fail("t = 1 is not (-1, -1, 1)");

    auto ring = cyclotomic3();
    QElem zeta = QElem::generator(ring);
    QElem powers[3] = {QElem(1L), zeta, zeta * zeta};
    PolyQ lq = lift(quartic), d1 = diff(lq, var::s1), d2 = diff(lq, var::s2);
    for (int j = 0; j < 3; ++j) {
      QElem a = QElem(3L) * powers[j], b = QElem(3L) * powers[(3 - j) % 3];
      for (auto* p : {&lq, &d1, &d2}) {
        ++r.checked;
        if (!evaluate_all(*p, {{var::s1, a}, {var::s2, b}}).is_zero())
          r.fail("not a node: (3 zeta^" + std::to_string(j) + ", 3 zeta^-" + std::to_string(j) + ")");
      }
    }

    Rational m1(-1);
    ++r.checked;
    if (!evaluate_all(quartic, {{var::s1, m1}, {var::s2, m1}}).is_zero()) r.fail("(-1,-1) is not on the quartic");
    ++r.checked;
    Rational g1 = evaluate_all(diff(quartic, var::s1), {{var::s1, m1}, {var::s2, m1}});
    Rational g2 = evaluate_all(diff(quartic, var::s2), {{var::s1, m1}, {var::s2, m1}});
    if (g1.is_zero() && g2.is_zero()) r.fail("(-1,-1) is singular");

    ++r.checked;
    Poly disc = discriminant(parse_poly("x^6 - s1*x^4 + s2*x^2 - 1"), var::x);
    if (disc != pow(quartic, 2).scaled(Rational(64))) r.fail("disc_x f != 64 Delta_*^2");
    r.computed = "parameterization, three nodes, smooth point and disc_x f = 64 Delta_*^2 checked";
    return r;
  });
}

struct CuspLocus {
  Poly r1, r2, gcd_t, reduced;  // reduced: gcd with t and (t - 2) removed
  int removed_t = 0, removed_t2 = 0;
  bool divisible = false;
  bool roots_match = false;
  bool no_rational_root = false;
};

/// Points of Delta_* over which the fiber acquires a triple root.
inline CuspLocus cusp_locus_data() {
  CuspLocus c;
  auto par = delta_star_parameterization();
  Poly X = var_poly<Rational>(var::x);
  Poly g = par.z * pow(X, 6) - par.s1 * pow(X, 4) + par.s2 * pow(X, 2) - par.z;
  c.r1 = resultant_interp(g, diff(g, var::x), var::x);
  c.r2 = resultant_interp(g, hasse(g, var::x, 2), var::x);
  c.gcd_t = gcd(c.r1, c.r2);
  Poly h = c.gcd_t, T = var_poly<Rational>(var::t), T2 = parse_poly("t - 2");
  while (auto q = try_exact_divide(h, T)) h = *q, ++c.removed_t;
  while (auto q = try_exact_divide(h, T2)) h = *q, ++c.removed_t2;
  c.reduced = h;
  Poly target = parse_poly("3*t^2 - 6*t + 4");
  c.divisible = divides(target, h);
  auto ring = std::make_shared<const QuotientRing>(std::vector<Rational>{Rational(1, 3), 0, 1}, "r");
  QElem r = QElem::generator(ring);
  PolyQ lt = lift(target);
  c.roots_match = evaluate_all(lt, {{var::t, QElem(1L) + r}}).is_zero() &&
                  evaluate_all(lt, {{var::t, QElem(1L) - r}}).is_zero();
  c.no_rational_root = rational_roots(to_dense(target, var::t)).roots.empty();
  return c;
}

inline VerificationReport cusp_locus() {
  return timed([] {
    VerificationReport r;
    r.id = "elimination.cusp-locus";
    auto c = cusp_locus_data();
    r.checked = 3;
    if (!c.divisible) r.fail("3t^2 - 6t + 4 does not divide gcd(r1, r2) = " + c.gcd_t.str());
    if (!c.roots_match) r.fail("roots of 3t^2 - 6t + 4 are not 1 +- sqrt(-1/3)");
    if (!c.no_rational_root) r.fail("3t^2 - 6t + 4 has a rational root");
    r.computed = "gcd(r1, r2) = " + c.gcd_t.str() + "; removed t^" + std::to_string(c.removed_t) + ", (t-2)^" +
                 std::to_string(c.removed_t2);
    r.expected = "3*t^2 - 6*t + 4 divides, roots 1 +- sqrt(-1/3)";
    return r;
  });
}

// ---------------------------------------------------------------------------
// Weierstrass non-degeneracy

enum class Parity { odd, even };

/// gamma_{j,k}(u) as a polynomial in u.
inline Poly gamma_jk(int j, int k) {
  if (j < 1 || j > k) throw std::invalid_argument("gamma_jk needs 1 <= j <= k");
  Rational c = pow(Rational(6), static_cast<unsigned>(j)) / factorial_q(k - j);
  for (int i = 1; i <= j; ++i) c /= Rational(i * (2 * i + 1));
  Poly p(c);
  for (int i = 1; i <= j; ++i) p = p * (var_poly<Rational>(var::u) - Poly(Rational(2 * (k - i) + 1, 2)));
  return p;
}

inline Poly lower_hull_polynomials(int k, Parity parity) {
  if (k < 2) throw std::invalid_argument("lower_hull_polynomials needs k >= 2");
  Poly L = var_poly<Rational>(var::lam);
  Poly q = pow(L, static_cast<unsigned>(k - 1));
  if (parity == Parity::odd) {
    for (int j = 1; j <= k - 1; ++j)
      q = q + (gamma_jk(j, k) * pow(L, static_cast<unsigned>(k - 1 - j))).scaled(factorial_q(k));
  } else {
    Poly sum = gamma_jk(k - 1, k);
    for (int j = 1; j <= k - 2; ++j)
      sum = sum + (gamma_jk(j, k) * pow(L, static_cast<unsigned>(k - 1 - j))).scaled(Rational(2 * j + 1));
    q = q + sum.scaled(Rational(2) * pow(Rational(3), static_cast<unsigned>(k - 2)));
  }
  return q;
}

/// The factored table rows for m = 6..10.
inline std::optional<Poly> printed_resultant_row(int m) {
  switch (m) {
    case 6: return parse_poly("(2*u-5)*(82*u-213)");
    case 7: return parse_poly("(2*u-5)*(2*u-13)");
    case 8: return parse_poly("(8648*u^3-99644*u^2+366558*u-433225)*(2*u-5)*(2*u-7)^2");
    case 9: return parse_poly("(1544*u^3-4124*u^2-68050*u+261375)*(2*u-5)*(2*u-7)^2");
    case 10:
      return parse_poly("(2628587072*u^6-119949472448*u^5+2150917889200*u^4-19208897405344*u^3+88953911319420*u^2"
             "-202718213505900*u+178829173396125)*(2*u-5)*(2*u-7)^2*(2*u-9)^3");
    default: return std::nullopt;
  }
}

struct NondegeneracyResultant {
  int m = 0, k = 0;
  Poly computed;
  std::optional<Poly> printed;
  std::optional<Rational> scalar;  // computed = scalar * printed
  Rational at_half;
};

inline NondegeneracyResultant nondegeneracy_resultant(int m) {
  if (m < 6) throw std::invalid_argument("nondegeneracy_resultant needs m >= 6");
  NondegeneracyResultant r;
  r.m = m;
  r.k = m / 2;
  Poly q = lower_hull_polynomials(r.k, m % 2 ? Parity::odd : Parity::even);
  r.computed = resultant(q, diff(q, var::lam), var::lam);
  r.printed = printed_resultant_row(m);
  if (r.printed && !r.printed->is_zero_poly()) {
    Rational c = r.computed.leading().second / r.printed->leading().second;
    if (r.computed == r.printed->scaled(c) && !c.is_zero()) r.scalar = c;
  }
  r.at_half = evaluate_all(r.computed, {{var::u, Rational(1, 2)}});
  return r;
}

/// The part of p supported on the segment [a, b] of the (x, lam) plane.
inline Poly edge_restriction(const Poly& p, Pt a, Pt b) {
  std::vector<Poly::Term> ts;
  for (auto& [mo, c] : p.terms()) {
    Pt q{static_cast<long>(mo[var::x]), static_cast<long>(mo[var::lam])};
    if (cross(a, b, q) != 0) continue;
    if (q.x < std::min(a.x, b.x) || q.x > std::max(a.x, b.x) || q.y < std::min(a.y, b.y) || q.y > std::max(a.y, b.y))
      continue;
    ts.emplace_back(mo, c);
  }
  return Poly::from_terms(std::move(ts));
}

/// Edge polynomial at x = 1 with the power of lam removed.
inline UPoly<Rational> edge_univariate(const Poly& edge) {
  auto d = to_dense(evaluate(edge, var::x, Rational(1)), var::lam);
  std::size_t k = 0;
  while (k < d.size() && d[k].is_zero()) ++k;
  d.erase(d.begin(), d.begin() + static_cast<long>(k));
  return d;
}

inline VerificationReport separability_report(const UPoly<Rational>& e, const std::string& id) {
  VerificationReport r;
  r.id = id;
  r.checked = 1;
  r.computed = "degree " + std::to_string(up::deg(e)) + ", gcd with derivative of degree " +
               std::to_string(up::deg(up::gcd(e, up::derivative(e))));
  if (!is_separable(e)) r.fail("repeated factor in the edge polynomial");
  return r;
}

/// Inner edge of the centered Weierstrass polygon: [v1, v4] for even m, [v3, v4] for odd m.
inline VerificationReport edge_restriction_separability(int m, int ell = 1) {
  if (m < 6) throw std::invalid_argument("edge_restriction_separability needs m >= 6");
  return timed([&] {
    Poly p = atomic_inflection(weierstrass_centered(2 * ell, ell), m, UMode::at(Rational(1, 2))).poly;
    Pt a = m % 2 ? Pt{1, (m - 1) / 2} : Pt{0, m / 2}, b{m - 2, 1};
    auto e = edge_univariate(edge_restriction(p, a, b));
    auto r = separability_report(e, "weierstrass.edge-separability");
    r.param("m", std::to_string(m));
    r.param("ell", std::to_string(ell));
    ++r.checked;
    if (up::deg(e) != m / 2 - 1) r.fail("edge polynomial has degree " + std::to_string(up::deg(e)));
    ++r.checked;
    bool nonzero = !nondegeneracy_resultant(m).at_half.is_zero();
    if (nonzero != is_separable(e)) r.fail("separability disagrees with the resultant at u = 1/2");
    r.expected = "separable, consistent with the resultant at u = 1/2";
    r.assumption = "edge " + to_string(a) + "-" + to_string(b);
    return r;
  });
}

}  // namespace infl
