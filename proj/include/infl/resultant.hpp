#pragma once

#include "upoly.hpp"

#include <stdexcept>
#include <vector>

namespace infl {

template <class C>
using PolyMatrix = std::vector<std::vector<MPoly<C>>>;

/// Fraction-free (Bareiss) determinant over a polynomial ring.
template <class C>
MPoly<C> bareiss_det(PolyMatrix<C> m) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly<C>(1L);
  int sign = 1;
  MPoly<C> prev(1L);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero_poly()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero_poly()) ++piv;
      if (piv == n) return MPoly<C>();
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly<C> num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? num.scaled(prev.constant_term().inverse()) : exact_divide(num, prev);
      }
      m[i][k] = MPoly<C>();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

/// Sylvester matrix in v, rows of f first.
template <class C>
PolyMatrix<C> sylvester_matrix(const MPoly<C>& f, const MPoly<C>& g, Var v) {
  auto fc = as_univariate(f, v), gc = as_univariate(g, v);
  int df = static_cast<int>(fc.size()) - 1, dg = static_cast<int>(gc.size()) - 1;
  int n = df + dg;
  PolyMatrix<C> s(n, std::vector<MPoly<C>>(n));
  for (int r = 0; r < dg; ++r)
    for (int k = 0; k <= df; ++k) s[r][r + k] = fc[df - k];
  for (int r = 0; r < df; ++r)
    for (int k = 0; k <= dg; ++k) s[dg + r][r + k] = gc[dg - k];
  return s;
}

/// res_v(f, g) as the Sylvester determinant (direct fraction-free path).
template <class C>
MPoly<C> resultant(const MPoly<C>& f, const MPoly<C>& g, Var v) {
  if (f.is_zero_poly() || g.is_zero_poly()) throw std::invalid_argument("resultant of zero polynomial");
  int df = f.degree(v), dg = g.degree(v);
  if (df == 0 && dg == 0) return MPoly<C>(1L);
  if (df == 0) return pow(f, dg);
  if (dg == 0) return pow(g, df);
  return bareiss_det(sylvester_matrix(f, g, v));
}

namespace detail {

inline Rational interp_point(std::size_t i) {
  long k = static_cast<long>((i + 1) / 2);
  return Rational(i % 2 ? k : -k);
}

inline Poly resultant_interp_rec(const Poly& f, int df, const Poly& g, int dg, Var v,
                                 const std::vector<Var>& params, std::size_t level) {
  if (level == params.size()) {
    auto fd = to_dense(f, v), gd = to_dense(g, v);
    return Poly(up::resultant(fd, df, gd, dg));
  }
  Var p = params[level];
  int bound = dg * std::max(0, f.degree(p)) + df * std::max(0, g.degree(p));
  std::vector<Rational> xs;
  std::vector<Poly> vals;
  for (int i = 0; i <= bound; ++i) {
    Rational a = interp_point(static_cast<std::size_t>(i));
    xs.push_back(a);
    vals.push_back(resultant_interp_rec(evaluate(f, p, a), df, evaluate(g, p, a), dg, v, params, level + 1));
  }
  // Coefficientwise interpolation in p.
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

}  // namespace detail

/// res_v(f, g) by evaluating the parameters at integers and interpolating.
/// Agrees with resultant() because the Sylvester determinant of the formal
/// degrees commutes with specialisation.
inline Poly resultant_interp(const Poly& f, const Poly& g, Var v) {
  if (f.is_zero_poly() || g.is_zero_poly()) throw std::invalid_argument("resultant of zero polynomial");
  std::uint32_t mask = (f.support_vars() | g.support_vars()) & ~(1u << v.id);
  std::vector<Var> params;
  for (std::uint8_t i = 0; i < kMaxVars; ++i)
    if (mask & (1u << i)) params.push_back(Var{i});
  return detail::resultant_interp_rec(f, f.degree(v), g, g.degree(v), v, params, 0);
}

enum class ResultantPath { direct, interpolation };

/// disc_v(f) = (-1)^{n(n-1)/2} res_v(f, f') / lc_v(f).
template <class C>
MPoly<C> discriminant(const MPoly<C>& f, Var v, ResultantPath path = ResultantPath::direct) {
  int n = f.degree(v);
  if (n < 1) throw std::invalid_argument("discriminant of a constant");
  MPoly<C> r;
  if constexpr (std::is_same_v<C, Rational>) {
    r = path == ResultantPath::interpolation ? resultant_interp(f, diff(f, v), v) : resultant(f, diff(f, v), v);
  } else {
    r = resultant(f, diff(f, v), v);
  }
  MPoly<C> lc = as_univariate(f, v).back();
  MPoly<C> d = exact_divide(r, lc);
  return (n * (n - 1) / 2) % 2 ? -d : d;
}

}  // namespace infl
