#pragma once

#include "upoly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace infl {

/// Power series in y known modulo y^{N+1}: coefficients c_0..c_N.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(int precision) : c_(precision + 1, Rational(0)) {}
  TruncatedSeries(std::vector<Rational> coeffs, int precision) : c_(std::move(coeffs)) {
    c_.resize(precision + 1, Rational(0));
  }
  static TruncatedSeries monomial(int k, int precision, const Rational& c = Rational(1)) {
    TruncatedSeries s(precision);
    if (k <= precision) s.c_[k] = c;
    return s;
  }

  int precision() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_.at(k); }
  Rational& operator[](int k) { return c_.at(k); }
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Least k with c_k != 0; nullopt when zero to this precision.
  std::optional<int> valuation() const {
    for (int k = 0; k < static_cast<int>(c_.size()); ++k)
      if (!c_[k].is_zero()) return k;
    return std::nullopt;
  }

  TruncatedSeries truncated(int precision) const {
    TruncatedSeries r(std::min(precision, this->precision()));
    for (int k = 0; k <= r.precision(); ++k) r.c_[k] = c_[k];
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.precision(), b.precision()));
    for (int k = 0; k <= r.precision(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.precision(), b.precision()));
    for (int k = 0; k <= r.precision(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  /// Product; the precision of a product accounts for the factors' valuations.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int va = a.valuation().value_or(a.precision() + 1);
    int vb = b.valuation().value_or(b.precision() + 1);
    int prec = std::min(a.precision() + vb, b.precision() + va);
    TruncatedSeries r(prec);
    for (int i = va; i <= std::min(a.precision(), prec); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = vb; i + j <= prec && j <= b.precision(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  TruncatedSeries scaled(const Rational& s) const {
    TruncatedSeries r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  /// Hasse derivative D^k_y; precision drops by k.
  TruncatedSeries hasse(int k) const {
    if (k > precision()) throw std::domain_error("series precision exhausted by derivative");
    TruncatedSeries r(precision() - k);
    for (int j = k; j <= precision(); ++j) r.c_[j - k] = c_[j] * Rational(binomial_z(j, k));
    return r;
  }

  /// Composition p(s) for a dense polynomial p.
  static TruncatedSeries compose(const UPoly<Rational>& p, const TruncatedSeries& s) {
    TruncatedSeries r(s.precision());
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
      r = r * s;
      r = r.truncated(s.precision());
      if (r.precision() < s.precision()) r.c_.resize(s.precision() + 1, Rational(0));
      r.c_[0] += *it;
    }
    return r;
  }

 private:
  std::vector<Rational> c_;
};

/// Solves f(x(y)) = y^n near a simple root gamma of f, to precision N.
inline TruncatedSeries local_inversion(const UPoly<Rational>& f, const Rational& gamma, int n, int N) {
  if (n < 2) throw std::invalid_argument("local_inversion needs n >= 2");
  if (!up::eval(f, gamma).is_zero()) throw std::invalid_argument("local_inversion: gamma is not a root");
  // Taylor coefficients f_k = D^k f(gamma).
  std::vector<Rational> taylor;
  for (int k = 0; k <= up::deg(f); ++k) {
    Rational acc(0);
    for (int j = k; j <= up::deg(f); ++j) acc += f[j] * Rational(binomial_z(j, k)) * pow(gamma, j - k);
    taylor.push_back(acc);
  }
  if (taylor.size() < 2 || taylor[1].is_zero()) throw std::domain_error("not a simple root");
  Rational inv = taylor[1].inverse();
  // h = x - gamma satisfies h = (y^n - sum_{k>=2} f_k h^k) / f_1; each pass gains n digits.
  TruncatedSeries h = TruncatedSeries::monomial(n, N, inv);
  for (int pass = 0; pass <= N / n + 1; ++pass) {
    TruncatedSeries rhs = TruncatedSeries::monomial(n, N);
    TruncatedSeries hk = h;
    for (std::size_t k = 2; k < taylor.size(); ++k) {
      hk = (hk * h).truncated(N);
      if (hk.precision() < N) hk = TruncatedSeries(hk.coeffs(), N);
      rhs = rhs - hk.scaled(taylor[k]);
    }
    h = rhs.scaled(inv);
  }
  h[0] += gamma;
  // Back-substitution certificate.
  TruncatedSeries back = TruncatedSeries::compose(f, h) - TruncatedSeries::monomial(n, N);
  if (back.valuation()) throw std::logic_error("local_inversion failed to converge");
  return h;
}

/// det(D^i_y b_j) for a square family of series.
inline TruncatedSeries series_wronskian(const std::vector<TruncatedSeries>& basis) {
  const int r = static_cast<int>(basis.size());
  if (r == 0) return TruncatedSeries::monomial(0, 0);
  std::vector<std::vector<TruncatedSeries>> m(r, std::vector<TruncatedSeries>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m[i][j] = basis[j].hasse(i);
  // Laplace expansion along rows with memoised column subsets.
  std::vector<std::optional<TruncatedSeries>> memo(std::size_t(1) << r);
  auto rec = [&](auto& self, std::uint32_t used, int row) -> TruncatedSeries {
    if (row == r - 1) {
      for (int j = 0; j < r; ++j)
        if (!(used & (1u << j))) return m[row][j];
    }
    if (memo[used]) return *memo[used];
    std::optional<TruncatedSeries> acc;
    int sign_pos = 0;
    for (int j = 0; j < r; ++j) {
      if (used & (1u << j)) continue;
      TruncatedSeries term = m[row][j] * self(self, used | (1u << j), row + 1);
      if (sign_pos++ % 2) term = term.scaled(Rational(-1));
      acc = acc ? *acc + term : term;
    }
    memo[used] = *acc;
    return *acc;
  };
  return rec(rec, 0, 0);
}

}  // namespace infl
