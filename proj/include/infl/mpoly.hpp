#pragma once

#include "quotient.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace infl {

inline constexpr std::size_t kMaxVars = 16;

/// Handle into the fixed global variable order. Lower ids are more
/// significant in the lexicographic monomial order.
struct Var {
  std::uint8_t id = 0;
  friend bool operator==(Var, Var) = default;
  friend auto operator<=>(Var, Var) = default;
};

namespace var {
inline constexpr Var x{0}, lam{1}, s1{2}, s2{3}, s{4}, z{5}, u{6}, t{7}, w{8}, y{9};
inline constexpr Var t0{10}, t1{11}, t2{12}, t3{13}, t4{14}, t5{15};
}  // namespace var

inline constexpr std::array<std::string_view, kMaxVars> kVarNames = {
    "x", "lam", "s1", "s2", "s", "z", "u", "t", "w", "y", "t0", "t1", "t2", "t3", "t4", "t5"};

inline std::string_view name_of(Var v) { return kVarNames[v.id]; }

inline std::optional<Var> var_by_name(std::string_view name) {
  if (name == "lambda" || name == "\xce\xbb") return var::lam;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (kVarNames[i] == name) return Var{static_cast<std::uint8_t>(i)};
  return std::nullopt;
}

/// t_k for the Plücker-path matrices.
inline Var t_var(int k) {
  if (k < 0 || k > 5) throw std::out_of_range("t_k only defined for 0 <= k <= 5");
  return Var{static_cast<std::uint8_t>(10 + k)};
}

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  std::uint16_t operator[](Var v) const { return e[v.id]; }
  std::uint16_t& operator[](Var v) { return e[v.id]; }

  unsigned total_degree() const {
    unsigned d = 0;
    for (auto k : e) d += k;
    return d;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(a.e[i]) + b.e[i];
      if (s > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
      r.e[i] = static_cast<std::uint16_t>(s);
    }
    return r;
  }
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    return r;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (!e[i]) continue;
      if (!out.empty()) out += '*';
      out += kVarNames[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
  }
};

inline Monomial mono(Var v, unsigned k = 1) {
  Monomial m;
  m[v] = static_cast<std::uint16_t>(k);
  return m;
}

/// Builds a coefficient equal to the integer n in the same ring as `like`.
template <class C>
C scalar_like(const mpz_class& n, const C& like);

template <>
inline Rational scalar_like<Rational>(const mpz_class& n, const Rational&) { return Rational(n); }

template <>
inline ModP scalar_like<ModP>(const mpz_class& n, const ModP& like) {
  if (!like.modulus()) return ModP(n.get_si());
  mpz_class r = n % mpz_class(static_cast<unsigned long>(like.modulus()));
  return ModP(r.get_si(), like.modulus());
}

/// Sparse multivariate polynomial: terms kept sorted by monomial, no zero coefficients.
template <class C>
class MPoly {
 public:
  using Term = std::pair<Monomial, C>;

  MPoly() = default;
  MPoly(const C& c) {
    if (!is_zero(c)) terms_.emplace_back(Monomial{}, c);
  }
  MPoly(long c) : MPoly(C(c)) {}
  MPoly(int c) : MPoly(C(static_cast<long>(c))) {}
  MPoly(const Monomial& m, const C& c) {
    if (!is_zero(c)) terms_.emplace_back(m, c);
  }

  static MPoly variable(Var v) { return MPoly(mono(v), C(1L)); }

  /// Takes arbitrary (unsorted, possibly repeated or zero) terms.
  static MPoly from_terms(std::vector<Term> ts) {
    MPoly p;
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : ts) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (is_zero(p.terms_.back().second)) p.terms_.pop_back();
      } else if (!is_zero(t.second)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero_poly() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{}); }
  C constant_term() const {
    if (!terms_.empty() && terms_[0].first == Monomial{}) return terms_[0].second;
    return C(0L);
  }
  const Term& leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.back();
  }

  C coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return C(0L);
  }

  int degree(Var v) const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max<int>(d, m[v]);
    return d;
  }
  int min_degree(Var v) const {
    if (terms_.empty()) return -1;
    int d = 0xFFFF;
    for (auto& [m, c] : terms_) d = std::min<int>(d, m[v]);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max<int>(d, static_cast<int>(m.total_degree()));
    return d;
  }
  /// Bitmask of variables that occur.
  std::uint32_t support_vars() const {
    std::uint32_t mask = 0;
    for (auto& [m, c] : terms_)
      for (std::size_t i = 0; i < kMaxVars; ++i)
        if (m.e[i]) mask |= 1u << i;
    return mask;
  }
  bool uses(Var v) const { return support_vars() & (1u << v.id); }

  MPoly& operator+=(const MPoly& o) { return *this = merge(*this, o, false); }
  MPoly& operator-=(const MPoly& o) { return *this = merge(*this, o, true); }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }
  MPoly operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return MPoly();
    if (b.is_constant()) return a.scaled(b.terms_[0].second);
    if (a.is_constant()) return b.scaled(a.terms_[0].second);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
    return from_terms(std::move(prod));
  }

  MPoly scaled(const C& c) const {
    if (is_zero(c)) return MPoly();
    MPoly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    std::erase_if(r.terms_, [](const Term& t) { return is_zero(t.second); });
    return r;
  }
  MPoly times_monomial(const Monomial& m) const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.first = t.first * m;
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].first != b.terms_[i].first || !(a.terms_[i].second == b.terms_[i].second)) return false;
    return true;
  }

  template <class F>
  auto map_coeffs(F f) const {
    using D = decltype(f(std::declval<const C&>()));
    std::vector<std::pair<Monomial, D>> ts;
    ts.reserve(terms_.size());
    for (auto& [m, c] : terms_) ts.emplace_back(m, f(c));
    return MPoly<D>::from_terms(std::move(ts));
  }

  /// Canonical text: ascending monomial order, fractions as num/den.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
      bool neg = is_negative(c);
      C a = neg ? -c : c;
      std::string cs = to_text(a);
      bool unit = cs == "1";
      if (first) os << (neg ? "-" : "");
      else os << (neg ? " - " : " + ");
      first = false;
      if (m == Monomial{}) { os << cs; continue; }
      if (!unit) os << cs << '*';
      os << m.str();
    }
    return os.str();
  }

 private:
  static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
    MPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
        ++j;
      } else {
        C c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!is_zero(c)) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i, ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

using Poly = MPoly<Rational>;
using PolyP = MPoly<ModP>;

template <class C>
std::ostream& operator<<(std::ostream& os, const MPoly<C>& p) { return os << p.str(); }

template <class C>
MPoly<C> pow(const MPoly<C>& p, unsigned e) {
  MPoly<C> result(1L), base = p;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

template <class C>
MPoly<C> var_poly(Var v) { return MPoly<C>::variable(v); }

/// Hasse derivative D^k with respect to v: D^k v^j = binom(j,k) v^{j-k}.
template <class C>
MPoly<C> hasse(const MPoly<C>& p, Var v, unsigned k = 1) {
  if (k == 0) return p;
  std::vector<typename MPoly<C>::Term> ts;
  for (auto& [m, c] : p.terms()) {
    if (m[v] < k) continue;
    Monomial nm = m;
    nm[v] = static_cast<std::uint16_t>(m[v] - k);
    ts.emplace_back(nm, c * scalar_like<C>(binomial_z(m[v], k), c));
  }
  return MPoly<C>::from_terms(std::move(ts));
}

/// Ordinary derivative (equals the first Hasse derivative).
template <class C>
MPoly<C> diff(const MPoly<C>& p, Var v) { return hasse(p, v, 1); }

/// Coefficients of p as a polynomial in v: result[k] is free of v.
template <class C>
std::vector<MPoly<C>> as_univariate(const MPoly<C>& p, Var v) {
  int d = p.degree(v);
  std::vector<std::vector<typename MPoly<C>::Term>> buckets(d < 0 ? 0 : d + 1);
  for (auto& [m, c] : p.terms()) {
    Monomial nm = m;
    nm[v] = 0;
    buckets[m[v]].emplace_back(nm, c);
  }
  std::vector<MPoly<C>> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MPoly<C>::from_terms(std::move(b)));
  return out;
}

template <class C>
MPoly<C> from_univariate(const std::vector<MPoly<C>>& coeffs, Var v) {
  std::vector<typename MPoly<C>::Term> ts;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (auto& [m, c] : coeffs[k].terms()) {
      Monomial nm = m;
      nm[v] = static_cast<std::uint16_t>(k);
      ts.emplace_back(nm, c);
    }
  return MPoly<C>::from_terms(std::move(ts));
}

/// Replaces v by q (Horner scheme).
template <class C>
MPoly<C> substitute(const MPoly<C>& p, Var v, const MPoly<C>& q) {
  auto cs = as_univariate(p, v);
  MPoly<C> r;
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) r = r * q + *it;
  return r;
}

/// Simultaneous substitution of several variables.
template <class C>
MPoly<C> substitute(const MPoly<C>& p, const std::vector<std::pair<Var, MPoly<C>>>& subs) {
  std::vector<std::vector<MPoly<C>>> powers(subs.size());
  auto power_of = [&](std::size_t i, unsigned k) -> const MPoly<C>& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(MPoly<C>(1L));
    while (pw.size() <= k) pw.push_back(pw.back() * subs[i].second);
    return pw[k];
  };
  std::vector<typename MPoly<C>::Term> acc;
  for (auto& [m, c] : p.terms()) {
    Monomial keep = m;
    MPoly<C> t(Monomial{}, c);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      unsigned k = m[subs[i].first];
      keep[subs[i].first] = 0;
      if (k) t = t * power_of(i, k);
    }
    for (auto& [tm, tc] : t.terms()) acc.emplace_back(tm * keep, tc);
  }
  return MPoly<C>::from_terms(std::move(acc));
}

/// Coefficient extraction helper for the common bivariate case.
template <class C>
C coeff_at(const MPoly<C>& p, std::initializer_list<std::pair<Var, unsigned>> exps) {
  Monomial m;
  for (auto [v, k] : exps) m[v] = static_cast<std::uint16_t>(k);
  return p.coeff(m);
}

/// Evaluates v at a scalar.
template <class C>
MPoly<C> evaluate(const MPoly<C>& p, Var v, const C& value) {
  return substitute(p, v, MPoly<C>(value));
}

/// Evaluates every variable; vars absent from `values` must not occur.
template <class C>
C evaluate_all(const MPoly<C>& p, const std::vector<std::pair<Var, C>>& values) {
  std::vector<std::pair<Var, MPoly<C>>> subs;
  for (auto& [v, c] : values) subs.emplace_back(v, MPoly<C>(c));
  auto r = substitute(p, subs);
  if (!r.is_constant()) throw std::invalid_argument("evaluate_all: free variables remain in " + r.str());
  return r.constant_term();
}

struct NotDivisible : std::domain_error {
  using std::domain_error::domain_error;
};

/// Exact multivariate division over a field; nullopt when b does not divide a.
template <class C>
std::optional<MPoly<C>> try_exact_divide(const MPoly<C>& a, const MPoly<C>& b) {
  if (b.is_zero_poly()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero_poly()) return MPoly<C>();
  if (b.is_constant()) return a.scaled(b.constant_term().inverse());
  const auto& [lm, lc] = b.leading();
  C lc_inv = lc.inverse();
  std::map<Monomial, C> rem;
  for (auto& [m, c] : a.terms()) rem.emplace(m, c);
  std::vector<typename MPoly<C>::Term> quot;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (!lm.divides(top->first)) return std::nullopt;
    Monomial qm = top->first / lm;
    C qc = top->second * lc_inv;
    for (auto& [m, c] : b.terms()) {
      Monomial pm = m * qm;
      auto [it, inserted] = rem.try_emplace(pm, C(0L));
      it->second -= c * qc;
      if (is_zero(it->second)) rem.erase(it);
    }
    quot.emplace_back(qm, qc);
  }
  return MPoly<C>::from_terms(std::move(quot));
}

template <class C>
MPoly<C> exact_divide(const MPoly<C>& a, const MPoly<C>& b) {
  auto q = try_exact_divide(a, b);
  if (!q) throw NotDivisible("not divisible: (" + a.str() + ") / (" + b.str() + ")");
  return *q;
}

template <class C>
bool divides(const MPoly<C>& b, const MPoly<C>& a) { return try_exact_divide(a, b).has_value(); }

template <>
inline QElem scalar_like<QElem>(const mpz_class& n, const QElem&) { return QElem(Rational(n)); }

using PolyQ = MPoly<QElem>;

/// Lifts a rational polynomial into a quotient ring.
inline PolyQ lift(const Poly& p) {
  return p.map_coeffs([](const Rational& c) { return QElem(c); });
}

inline PolyP reduce_mod_p(const Poly& p, std::uint64_t prime) {
  return p.map_coeffs([prime](const Rational& c) { return reduce_mod_p(c, prime); });
}

/// Makes a polynomial homogeneous of degree `deg` in the variables `vars`
/// by inserting powers of `h`.
template <class C>
MPoly<C> homogenize(const MPoly<C>& p, const std::vector<Var>& vars, Var h, int deg = -1) {
  int d = 0;
  for (auto& [m, c] : p.terms()) {
    int k = 0;
    for (Var v : vars) k += m[v];
    d = std::max(d, k);
  }
  if (deg < 0) deg = d;
  if (deg < d) throw std::invalid_argument("homogenize: degree below polynomial degree");
  std::vector<typename MPoly<C>::Term> ts;
  for (auto& [m, c] : p.terms()) {
    int k = 0;
    for (Var v : vars) k += m[v];
    Monomial nm = m;
    nm[h] = static_cast<std::uint16_t>(nm[h] + deg - k);
    ts.emplace_back(nm, c);
  }
  return MPoly<C>::from_terms(std::move(ts));
}

}  // namespace infl
