#pragma once

#include "upoly.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace infl {

namespace detail {

inline std::vector<Var> vars_in(std::uint32_t mask) {
  std::vector<Var> out;
  for (std::uint8_t i = 0; i < kMaxVars; ++i)
    if (mask & (1u << i)) out.push_back(Var{i});
  return out;
}

/// Scales so the lex-leading coefficient is 1.
template <class C>
MPoly<C> monic_lex(const MPoly<C>& p) {
  if (p.is_zero_poly()) return p;
  return p.scaled(p.leading().second.inverse());
}

}  // namespace detail

template <class C>
MPoly<C> gcd_prs(const MPoly<C>& a, const MPoly<C>& b);

/// Gcd of the coefficients of p viewed as a polynomial in v.
template <class C, class G>
MPoly<C> content_in(const MPoly<C>& p, Var v, G&& gcd) {
  MPoly<C> c;
  for (auto& k : as_univariate(p, v)) {
    if (k.is_zero_poly()) continue;
    c = c.is_zero_poly() ? detail::monic_lex(k) : gcd(c, k);
    if (c.is_constant()) return MPoly<C>(1L);
  }
  return c;
}

template <class C>
MPoly<C> pseudo_remainder(const MPoly<C>& a, const MPoly<C>& b, Var v) {
  auto bc = as_univariate(b, v);
  int db = static_cast<int>(bc.size()) - 1;
  const MPoly<C>& lb = bc.back();
  MPoly<C> r = a;
  int da = a.degree(v);
  int steps = 0, total = da - db + 1;
  while (!r.is_zero_poly() && r.degree(v) >= db) {
    int dr = r.degree(v);
    MPoly<C> lr = as_univariate(r, v).back();
    r = r * lb - (lr * b).times_monomial(mono(v, dr - db));
    ++steps;
  }
  for (; steps < total; ++steps) r = r * lb;
  return r;
}

/// Gcd over a field by recursive primitive polynomial remainder sequences.
/// Result is normalized to lex-leading coefficient 1.
template <class C>
MPoly<C> gcd_prs(const MPoly<C>& a, const MPoly<C>& b) {
  if (a.is_zero_poly()) return detail::monic_lex(b);
  if (b.is_zero_poly()) return detail::monic_lex(a);
  if (a.is_constant() || b.is_constant()) return MPoly<C>(1L);
  std::uint32_t mask = a.support_vars() | b.support_vars();
  Var v = detail::vars_in(mask).front();
  auto rec = [](const MPoly<C>& x, const MPoly<C>& y) { return gcd_prs(x, y); };
  if (!a.uses(v)) return gcd_prs(a, content_in(b, v, rec));
  if (!b.uses(v)) return gcd_prs(content_in(a, v, rec), b);
  MPoly<C> ca = content_in(a, v, rec), cb = content_in(b, v, rec);
  MPoly<C> c = gcd_prs(ca, cb);
  MPoly<C> p = exact_divide(a, ca), q = exact_divide(b, cb);
  if (p.degree(v) < q.degree(v)) std::swap(p, q);
  for (;;) {
    MPoly<C> r = pseudo_remainder(p, q, v);
    if (r.is_zero_poly()) break;
    if (r.degree(v) <= 0) return detail::monic_lex(c);
    p = std::move(q);
    q = exact_divide(r, content_in(r, v, rec));
  }
  q = exact_divide(q, content_in(q, v, rec));
  return detail::monic_lex(c * q);
}

namespace detail {

inline Rational interp_point_gcd(std::size_t i) { return Rational(static_cast<long>(i) + 1); }

inline Poly content_in_var_univariate(const Poly& p, Var e) {
  // gcd over Q[e] of the coefficients of p seen as a polynomial in the other variables.
  std::map<Monomial, std::vector<Poly::Term>> groups;
  for (auto& [m, c] : p.terms()) {
    Monomial key = m;
    key[e] = 0;
    groups[key].emplace_back(mono(e, m[e]), c);
  }
  UPoly<Rational> g;
  bool first = true;
  for (auto& [k, ts] : groups) {
    auto coeff = to_dense(Poly::from_terms(std::move(ts)), e);
    g = first ? up::monic(coeff) : up::gcd(g, coeff);
    first = false;
    if (g.size() == 1) break;
  }
  return from_dense(g, e);
}

/// Coefficient (in Q[e]) of the lex-largest monomial in the other variables.
inline Poly leading_in_others(const Poly& p, Var e) {
  Monomial best;
  bool have = false;
  for (auto& [m, c] : p.terms()) {
    Monomial key = m;
    key[e] = 0;
    if (!have || best < key) best = key, have = true;
  }
  std::vector<Poly::Term> ts;
  for (auto& [m, c] : p.terms()) {
    Monomial key = m;
    key[e] = 0;
    if (key == best) ts.emplace_back(mono(e, m[e]), c);
  }
  return Poly::from_terms(std::move(ts));
}

}  // namespace detail

/// Gcd over Q by evaluation in the least significant variable and
/// interpolation (Brown's dense scheme), verified by trial division.
inline Poly gcd_eval(const Poly& a, const Poly& b) {
  if (a.is_zero_poly()) return detail::monic_lex(b);
  if (b.is_zero_poly()) return detail::monic_lex(a);
  if (a.is_constant() || b.is_constant()) return Poly(1L);
  auto vars = detail::vars_in(a.support_vars() | b.support_vars());
  if (vars.size() == 1) {
    Var v = vars[0];
    return from_dense(up::gcd(to_dense(a, v), to_dense(b, v)), v);
  }
  Var e = vars.back();
  Poly ca = detail::content_in_var_univariate(a, e), cb = detail::content_in_var_univariate(b, e);
  Poly c = from_dense(up::gcd(to_dense(ca, e), to_dense(cb, e)), e);
  Poly p = exact_divide(a, ca), q = exact_divide(b, cb);
  auto lp = to_dense(detail::leading_in_others(p, e), e);
  auto lq = to_dense(detail::leading_in_others(q, e), e);
  auto gamma = up::gcd(lp, lq);
  int need = up::deg(gamma) + std::min(p.degree(e), q.degree(e)) + 1;

  std::vector<Rational> xs;
  std::vector<Poly> images;
  std::optional<Monomial> lead;
  for (std::size_t i = 0;; ++i) {
    Rational pt = detail::interp_point_gcd(i);
    if (up::eval(lp, pt).is_zero() || up::eval(lq, pt).is_zero()) continue;
    Poly g = gcd_eval(evaluate(p, e, pt), evaluate(q, e, pt));
    Monomial lm = g.leading().first;
    if (lead && lm > *lead) continue;
    if (!lead || lm < *lead) {
      lead = lm;
      xs.clear();
      images.clear();
    }
    xs.push_back(pt);
    images.push_back(g.scaled(up::eval(gamma, pt)));
    if (static_cast<int>(xs.size()) < need) continue;

    std::map<Monomial, std::vector<Rational>> table;
    for (std::size_t k = 0; k < images.size(); ++k)
      for (auto& [m, cf] : images[k].terms()) {
        auto& row = table[m];
        row.resize(images.size(), Rational(0));
        row[k] = cf;
      }
    std::vector<Poly::Term> ts;
    for (auto& [m, row] : table) {
      row.resize(images.size(), Rational(0));
      auto coeffs = up::interpolate(xs, row);
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Monomial nm = m;
        nm[e] = static_cast<std::uint16_t>(k);
        ts.emplace_back(nm, coeffs[k]);
      }
    }
    Poly h = Poly::from_terms(std::move(ts));
    h = exact_divide(h, detail::content_in_var_univariate(h, e));
    if (divides(h, p) && divides(h, q)) return detail::monic_lex(c * h);
    ++need;
  }
}

/// gcd over a field, choosing the scheme that suits the coefficient type.
template <class C>
MPoly<C> gcd(const MPoly<C>& a, const MPoly<C>& b) {
  if constexpr (std::is_same_v<C, Rational>) return gcd_eval(a, b);
  else return gcd_prs(a, b);
}

template <class C>
struct SquarefreeResult {
  MPoly<C> gcd_with_partials;
  MPoly<C> squarefree_part;
};

/// gcd(P, all first partials) and P divided by it (monic in lex order).
template <class C>
SquarefreeResult<C> squarefree(const MPoly<C>& p) {
  if (p.is_zero_poly()) throw std::invalid_argument("squarefree part of zero");
  MPoly<C> g = p;
  for (Var v : detail::vars_in(p.support_vars())) {
    g = gcd(g, diff(p, v));
    if (g.is_constant()) break;
  }
  g = detail::monic_lex(g);
  return {g, detail::monic_lex(exact_divide(p, g))};
}

template <class C>
bool is_squarefree(const MPoly<C>& p) { return squarefree(p).gcd_with_partials.is_constant(); }

}  // namespace infl
