#pragma once

#include "gadgets.hpp"
#include "report.hpp"
#include "resultant.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace infl {

enum class Family { legendre, weierstrass, d4, d6, bielliptic, custom };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::legendre: return "legendre";
    case Family::weierstrass: return "weierstrass";
    case Family::d4: return "d4";
    case Family::d6: return "d6";
    case Family::bielliptic: return "bielliptic";
    case Family::custom: return "custom";
  }
  return "?";
}

/// A superelliptic pencil y^n = f(x, params) together with the section index l.
struct PencilSpec {
  Family family = Family::weierstrass;
  int a = 1, b = 1, c = 1;
  Poly custom;
  int n = 2;
  int ell = 1;

  static PencilSpec legendre(int a, int b, int c, int n = 2, int ell = 1) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("Legendre exponents must be positive");
    PencilSpec s;
    s.family = Family::legendre;
    s.a = a, s.b = b, s.c = c, s.n = n, s.ell = ell;
    return s;
  }
  static PencilSpec of(Family f, int n = 2, int ell = 1) {
    if (f == Family::custom) throw std::invalid_argument("custom pencils need a polynomial");
    if (f == Family::legendre) return legendre(1, 1, 1, n, ell);
    PencilSpec s;
    s.family = f, s.n = n, s.ell = ell;
    return s;
  }
  static PencilSpec with_poly(Poly f, int n = 2, int ell = 1) {
    if (!f.uses(var::x)) throw std::invalid_argument("custom pencil must involve x");
    PencilSpec s;
    s.family = Family::custom, s.custom = std::move(f), s.n = n, s.ell = ell;
    return s;
  }

  Rational u() const { return Rational(ell, n); }

  std::string key() const {
    std::string k = family_name(family);
    if (family == Family::legendre)
      k += "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    if (family == Family::custom) k += "[" + custom.str() + "]";
    return k;
  }
};

/// The defining polynomial f of the pencil.
inline Poly base_poly(const PencilSpec& s) {
  Poly x = var_poly<Rational>(var::x);
  switch (s.family) {
    case Family::legendre:
      return pow(x, s.a) * pow(x - Poly(1L), s.b) * pow(x - var_poly<Rational>(var::lam), s.c);
    case Family::weierstrass: return pow(x, 3) + var_poly<Rational>(var::lam) * x + Poly(2L);
    case Family::d4: return pow(x, 5) + pow(x, 3) + var_poly<Rational>(var::s) * x;
    case Family::d6: return pow(x, 6) + pow(x, 3) + var_poly<Rational>(var::z);
    case Family::bielliptic:
      return pow(x, 6) - var_poly<Rational>(var::s1) * pow(x, 4) + var_poly<Rational>(var::s2) * pow(x, 2) -
             Poly(1L);
    case Family::custom: return s.custom;
  }
  return {};
}

/// Translation sending the origin to (x0, p0): x -> x + x0, param -> param + p0.
inline Poly translate(const Poly& p, const std::vector<std::pair<Var, Rational>>& shift) {
  std::vector<std::pair<Var, Poly>> subs;
  for (auto& [v, c] : shift) subs.emplace_back(v, var_poly<Rational>(v) + Poly(c));
  return substitute(p, subs);
}

/// Weierstrass pencil in coordinates centered at (x, lam) = (1, -3): f* = x^3 + 3x^2 + lam x + lam.
inline PencilSpec weierstrass_centered(int n = 2, int ell = 1) {
  Poly f = translate(base_poly(PencilSpec::of(Family::weierstrass)), {{var::x, Rational(1)}, {var::lam, Rational(-3)}});
  return PencilSpec::with_poly(f, n, ell);
}

/// u either stays the symbolic variable `u` or is specialised to a rational.
struct UMode {
  bool symbolic = true;
  Rational value;

  static UMode sym() { return {}; }
  static UMode at(const Rational& v) { return {false, v}; }
  static UMode of(const PencilSpec& s) { return at(s.u()); }

  Poly as_poly() const { return symbolic ? var_poly<Rational>(var::u) : Poly(value); }
  std::string str() const { return symbolic ? "u" : value.str(); }
};

struct InflectionPoly {
  Poly poly;
  int m = 0;
  PencilSpec spec;
  UMode u;
};

namespace detail {

struct AtomicEntry {
  std::mutex mu;
  Poly f, df, u;
  std::vector<Poly> seq;  // seq[k] = P_k, seq[0] unused
};

inline std::mutex& atomic_registry_mutex() {
  static std::mutex m;
  return m;
}

inline std::map<std::string, std::shared_ptr<AtomicEntry>>& atomic_registry() {
  static std::map<std::string, std::shared_ptr<AtomicEntry>> r;
  return r;
}

inline std::shared_ptr<AtomicEntry> atomic_entry(const Poly& f, const UMode& um) {
  std::string key = f.str() + "|" + um.str();
  std::lock_guard lock(atomic_registry_mutex());
  auto& slot = atomic_registry()[key];
  if (!slot) {
    slot = std::make_shared<AtomicEntry>();
    slot->f = f;
    slot->df = diff(f, var::x);
    slot->u = um.as_poly();
    slot->seq = {Poly(), slot->u * slot->df};
  }
  return slot;
}

}  // namespace detail

/// P_1 = u D f, (m+1) P_{m+1} = D P_m f + P_m D f (u - m); memoised per (f, u).
inline Poly atomic_of(const Poly& f, int m, const UMode& um) {
  if (m < 1) throw std::invalid_argument("atomic inflection index must be positive");
  auto e = detail::atomic_entry(f, um);
  std::lock_guard lock(e->mu);
  while (static_cast<int>(e->seq.size()) <= m) {
    int k = static_cast<int>(e->seq.size()) - 1;
    const Poly& pk = e->seq.back();
    Poly next = diff(pk, var::x) * e->f + pk * e->df * (e->u - Poly(static_cast<long>(k)));
    e->seq.push_back(next.scaled(Rational(1, k + 1)));
  }
  return e->seq[m];
}

inline InflectionPoly atomic_inflection(const PencilSpec& spec, int m, const UMode& um) {
  return {atomic_of(base_poly(spec), m, um), m, spec, um};
}

/// (m+1) P_{m+1} - D P_m f - P_m D f (u - m); zero for every correctly built pair.
inline Poly recursion_residual(const Poly& f, const Poly& pm, const Poly& pm1, int m, const UMode& um) {
  Poly df = diff(f, var::x);
  return pm1.scaled(Rational(m + 1)) - diff(pm, var::x) * f - pm * df * (um.as_poly() - Poly(static_cast<long>(m)));
}

/// Primes dividing some coefficient denominator (trial division; unfactored cofactors are reported as-is).
inline std::set<mpz_class> denominator_primes(const Poly& p) {
  std::set<mpz_class> out;
  for (auto& [m, c] : p.terms()) {
    mpz_class d = c.den();
    for (unsigned long q = 2; q <= 100000 && mpz_class(q) * q <= d; ++q) {
      if (mpz_divisible_ui_p(d.get_mpz_t(), q)) {
        out.insert(mpz_class(q));
        while (mpz_divisible_ui_p(d.get_mpz_t(), q)) d /= q;
      }
    }
    if (d > 1) out.insert(d);
  }
  return out;
}

/// Coefficient of x^i * param^j, as a polynomial in whatever else occurs (typically u).
inline Poly coefficient_of(const Poly& p, const std::vector<std::pair<Var, unsigned>>& exps) {
  std::vector<Poly::Term> ts;
  for (auto& [m, c] : p.terms()) {
    bool hit = true;
    for (auto& [v, e] : exps) hit = hit && m[v] == e;
    if (!hit) continue;
    Monomial rest = m;
    for (auto& [v, e] : exps) rest[v] = 0;
    ts.emplace_back(rest, c);
  }
  return Poly::from_terms(std::move(ts));
}

// ---------------------------------------------------------------------------
// Monomial bases and the Wronskian away from ramification

struct BasisElement {
  int i = 0, j = 0;
  int pole_order = 0;
};

struct MonomialBasis {
  int n = 0, d = 0, ell = 0;
  int genus = 0;
  std::vector<BasisElement> elements;
};

/// x^i y^j with 0 <= j <= n-1 and ni + dj <= l, sorted by pole order.
inline MonomialBasis monomial_basis(int n, int d, int ell) {
  if (n < 1 || d < 1 || ell < 0) throw std::invalid_argument("monomial_basis: n, d positive and l >= 0");
  if (std::gcd(n, d) != 1) throw std::invalid_argument("monomial_basis: gcd(n, d) must be 1");
  MonomialBasis b{n, d, ell, (d - 1) * (n - 1) / 2, {}};
  for (int j = 0; j < n; ++j)
    for (int i = 0; n * i + d * j <= ell; ++i) b.elements.push_back({i, j, n * i + d * j});
  std::sort(b.elements.begin(), b.elements.end(),
            [](const BasisElement& x, const BasisElement& y) { return x.pole_order < y.pole_order; });
  return b;
}

struct WronskianAway {
  int n = 0, d = 0, ell = 0, alpha = 0, beta = 0, genus = 0;
  std::vector<int> rows;                    // derivative orders k
  std::vector<std::pair<int, int>> cols;    // (i, j0)
  std::vector<std::vector<std::string>> labels;
  PolyMatrix<Rational> entries;             // filled only when f is supplied
  std::optional<Poly> det;
};

/// Matrix of P^{j0}_{k-i} replacing D^k(x^i y^{j0}), for l = n alpha and d = n beta + 1.
inline WronskianAway wronskian_matrix_away(int n, int d, int ell, const std::optional<Poly>& f = std::nullopt) {
  if (n < 2 || ell % n != 0 || (d - 1) % n != 0 || d <= 1)
    throw std::invalid_argument("wronskian_matrix_away needs l = n*alpha and d = n*beta + 1 with beta >= 1");
  WronskianAway w;
  w.n = n, w.d = d, w.ell = ell, w.alpha = ell / n, w.beta = (d - 1) / n;
  if (w.alpha <= (n - 1) * w.beta) throw std::invalid_argument("wronskian_matrix_away needs alpha/beta > n-1");
  auto basis = monomial_basis(n, d, ell);
  w.genus = basis.genus;
  for (auto& e : basis.elements)
    if (e.j >= 1) w.cols.emplace_back(e.i, e.j);
  std::sort(w.cols.begin(), w.cols.end(), [](auto& x, auto& y) {
    return x.second != y.second ? x.second < y.second : x.first < y.first;
  });
  for (int k = w.alpha + 1; k <= ell - w.genus; ++k) w.rows.push_back(k);
  if (w.rows.size() != w.cols.size()) throw std::logic_error("wronskian_matrix_away: matrix is not square");
  for (int k : w.rows) {
    std::vector<std::string> lab;
    for (auto [i, j0] : w.cols) {
      int o = k - i;
      lab.push_back(o < 0 ? "0" : o == 0 ? "1" : "P^" + std::to_string(j0) + "_" + std::to_string(o));
    }
    w.labels.push_back(std::move(lab));
  }
  if (f) {
    for (int k : w.rows) {
      std::vector<Poly> row;
      for (auto [i, j0] : w.cols) {
        int o = k - i;
        row.push_back(o < 0 ? Poly() : o == 0 ? Poly(1L) : atomic_of(*f, o, UMode::at(Rational(j0, n))));
      }
      w.entries.push_back(std::move(row));
    }
    w.det = bareiss_det(w.entries);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Parity, gradings, symmetries

/// Q_m = P_m for even m and P_m / x for odd m > 1 (bielliptic pencil).
inline Poly bielliptic_Qm(int m, const UMode& um, int n = 2, int ell = 1) {
  Poly p = atomic_inflection(PencilSpec::of(Family::bielliptic, n, ell), m, um).poly;
  if (m % 2 == 1 && m > 1) {
    auto q = try_exact_divide(p, var_poly<Rational>(var::x));
    if (!q) throw std::logic_error("bielliptic P_" + std::to_string(m) + " is not divisible by x");
    p = *q;
  }
  for (auto& [mono, c] : p.terms())
    if (m > 1 && mono[var::x] % 2 != 0)
      throw std::logic_error("bielliptic Q_" + std::to_string(m) + " has an odd power of x");
  return p;
}

struct GradedClass {
  bool homogeneous = true;
  int cls = 0;
  std::optional<std::pair<Monomial, Monomial>> witness;
};

inline int mod_floor(long a, int m) { return static_cast<int>(((a % m) + m) % m); }

inline GradedClass graded_weight_class(const Poly& p, const std::vector<std::pair<Var, int>>& weights, int modulus) {
  GradedClass g;
  std::optional<Monomial> first;
  for (auto& [m, c] : p.terms()) {
    long w = 0;
    for (auto& [v, k] : weights) w += static_cast<long>(k) * m[v];
    int r = mod_floor(w, modulus);
    if (!first) {
      first = m;
      g.cls = r;
    } else if (r != g.cls) {
      g.homogeneous = false;
      g.witness = {*first, m};
      return g;
    }
  }
  return g;
}

enum class SymmetrySign { printed, observed };

/// Sign in P(x+1, lam+1) = sign * P(-x, -lam): printed (-1)^{am}; observed (-1)^{(a+1)m}.
inline int legendre_translation_sign(int a, int m, SymmetrySign conv) {
  int e = conv == SymmetrySign::printed ? a * m : (a + 1) * m;
  return e % 2 ? -1 : 1;
}

inline VerificationReport legendre_symmetry_check(int a, int m, const UMode& um,
                                                  SymmetrySign conv = SymmetrySign::printed) {
  VerificationReport r;
  r.id = conv == SymmetrySign::printed ? "legendre.symmetries" : "legendre.symmetries-observed-sign";
  r.param("a", std::to_string(a));
  r.param("m", std::to_string(m));
  r.param("u", um.str());
  Poly p = atomic_inflection(PencilSpec::legendre(a, a, a), m, um).poly;
  // Homogenize in (x, lam) with z, set lam = 1, then rename z to lam.
  Poly h = homogenize(p, {var::x, var::lam}, var::z);
  Poly swapped = substitute(evaluate(h, var::lam, Rational(1)), var::z, var_poly<Rational>(var::lam));
  ++r.checked;
  if (swapped != p) r.fail("projective swap lam <-> z: " + (swapped - p).str() + " != 0");
  Poly lhs = translate(p, {{var::x, Rational(1)}, {var::lam, Rational(1)}});
  Poly reflected = substitute(p, {{var::x, -var_poly<Rational>(var::x)}, {var::lam, -var_poly<Rational>(var::lam)}});
  int sign = legendre_translation_sign(a, m, conv);
  ++r.checked;
  if (lhs != (sign > 0 ? reflected : -reflected)) {
    std::string actual = lhs == reflected ? "+1" : lhs == -reflected ? "-1" : "neither sign";
    r.fail("translation symmetry with sign " + std::to_string(sign) + " fails at a=" + std::to_string(a) +
           ", m=" + std::to_string(m) + "; the identity holds with sign " + actual);
  }
  r.computed = r.failures ? "symmetry broken" : "both identities hold";
  r.expected = "both identities hold with translation sign " + std::to_string(sign);
  return r;
}

struct D6Factor {
  int e = 0;
  bool x_power_divides = false;
  bool has_factor_4z_minus_1 = false;
  Poly rest;
};

/// Peels x^{(-m) mod 3} and (4z - 1) from the D6 polynomial P_m.
inline D6Factor d6_factor(int m, const UMode& um) {
  D6Factor out;
  out.e = mod_floor(-m, 3);
  Poly p = atomic_inflection(PencilSpec::of(Family::d6), m, um).poly;
  auto q = try_exact_divide(p, pow(var_poly<Rational>(var::x), out.e));
  out.x_power_divides = q.has_value();
  if (!q) {
    out.rest = p;
    return out;
  }
  auto q2 = try_exact_divide(*q, var_poly<Rational>(var::z).scaled(Rational(4)) - Poly(1L));
  out.has_factor_4z_minus_1 = q2.has_value();
  out.rest = q2 ? *q2 : *q;
  return out;
}

}  // namespace infl
