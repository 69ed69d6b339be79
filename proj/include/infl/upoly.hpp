#pragma once

#include "mpoly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace infl {

/// Dense univariate polynomial over a field, coefficients from degree 0 up.
template <class F>
using UPoly = std::vector<F>;

namespace up {

template <class F>
void trim(UPoly<F>& a) {
  while (!a.empty() && is_zero(a.back())) a.pop_back();
}

template <class F>
int deg(const UPoly<F>& a) { return static_cast<int>(a.size()) - 1; }

template <class F>
UPoly<F> add(UPoly<F> a, const UPoly<F>& b) {
  if (a.size() < b.size()) a.resize(b.size(), F(0L));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

template <class F>
UPoly<F> sub(UPoly<F> a, const UPoly<F>& b) {
  if (a.size() < b.size()) a.resize(b.size(), F(0L));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

template <class F>
UPoly<F> mul(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.empty() || b.empty()) return {};
  UPoly<F> r(a.size() + b.size() - 1, F(0L));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

template <class F>
UPoly<F> scale(UPoly<F> a, const F& c) {
  for (auto& x : a) x *= c;
  trim(a);
  return a;
}

/// Quotient and remainder.
template <class F>
std::pair<UPoly<F>, UPoly<F>> divmod(UPoly<F> a, const UPoly<F>& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  UPoly<F> q(a.size() - b.size() + 1, F(0L));
  F inv = b.back().inverse();
  const int db = static_cast<int>(b.size()) - 1;
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    if (is_zero(a[k])) continue;
    F c = a[k] * inv;
    int shift = k - db;
    q[shift] = c;
    for (int j = 0; j <= db; ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

template <class F>
UPoly<F> monic(UPoly<F> a) {
  trim(a);
  if (a.empty()) return a;
  F inv = a.back().inverse();
  for (auto& x : a) x *= inv;
  return a;
}

/// Monic gcd (zero when both inputs vanish).
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

template <class F>
UPoly<F> derivative(const UPoly<F>& a) {
  UPoly<F> r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * F(static_cast<long>(i)));
  trim(r);
  return r;
}

template <class F>
F eval(const UPoly<F>& a, const F& x) {
  F r(0L);
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
  return r;
}

/// Determinant over a field by Gaussian elimination.
template <class F>
F det(std::vector<std::vector<F>> m) {
  std::size_t n = m.size();
  F d(1L);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(m[piv][c])) ++piv;
    if (piv == n) return F(0L);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    F inv = m[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(m[r][c])) continue;
      F f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

/// Sylvester matrix with formal degrees df, dg; rows of f first.
template <class F>
std::vector<std::vector<F>> sylvester(const UPoly<F>& f, int df, const UPoly<F>& g, int dg) {
  int n = df + dg;
  std::vector<std::vector<F>> s(n, std::vector<F>(n, F(0L)));
  auto coeff = [](const UPoly<F>& p, int k) { return k < static_cast<int>(p.size()) ? p[k] : F(0L); };
  for (int r = 0; r < dg; ++r)
    for (int k = 0; k <= df; ++k) s[r][r + k] = coeff(f, df - k);
  for (int r = 0; r < df; ++r)
    for (int k = 0; k <= dg; ++k) s[dg + r][r + k] = coeff(g, dg - k);
  return s;
}

/// Resultant with respect to the formal degrees (determinant of the Sylvester matrix).
template <class F>
F resultant(const UPoly<F>& f, int df, const UPoly<F>& g, int dg) {
  if (df == 0 && dg == 0) return F(1L);
  if (df == 0) return f.empty() ? F(0L) : [&] { F r(1L); for (int i = 0; i < dg; ++i) r *= f[0]; return r; }();
  if (dg == 0) return g.empty() ? F(0L) : [&] { F r(1L); for (int i = 0; i < df; ++i) r *= g[0]; return r; }();
  return det(sylvester(f, df, g, dg));
}

/// Newton interpolation through (xs[i], ys[i]).
template <class F>
UPoly<F> interpolate(const std::vector<F>& xs, const std::vector<F>& ys) {
  std::size_t n = xs.size();
  std::vector<F> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UPoly<F> r;
  for (std::size_t k = n; k-- > 0;) {
    // r = r * (X - xs[k]) + dd[k]
    UPoly<F> nr(r.size() + 1, F(0L));
    for (std::size_t i = 0; i < r.size(); ++i) {
      nr[i + 1] += r[i];
      nr[i] -= r[i] * xs[k];
    }
    if (nr.empty()) nr.push_back(F(0L));
    nr[0] += dd[k];
    r = std::move(nr);
    trim(r);
  }
  return r;
}

}  // namespace up

/// Dense view of a polynomial that only involves v.
template <class F>
UPoly<F> to_dense(const MPoly<F>& p, Var v) {
  if (p.support_vars() & ~(1u << v.id)) throw std::invalid_argument("to_dense: polynomial is not univariate in " + std::string(name_of(v)));
  UPoly<F> r(p.degree(v) + 1, F(0L));
  for (auto& [m, c] : p.terms()) r[m[v]] = c;
  up::trim(r);
  return r;
}

template <class F>
MPoly<F> from_dense(const UPoly<F>& a, Var v) {
  std::vector<typename MPoly<F>::Term> ts;
  for (std::size_t i = 0; i < a.size(); ++i) ts.emplace_back(mono(v, static_cast<unsigned>(i)), a[i]);
  return MPoly<F>::from_terms(std::move(ts));
}

}  // namespace infl
