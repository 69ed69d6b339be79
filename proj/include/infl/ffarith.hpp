#pragma once

#include "gadgets.hpp"
#include "gcd.hpp"
#include "parse.hpp"
#include "pencils.hpp"
#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace infl {

struct BadPrime : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<bool> comp(n + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 r = 1, x = b % p;
  for (; e; e >>= 1, x = x * x % p)
    if (e & 1) r = r * x % p;
  return static_cast<std::uint64_t>(r);
}

/// Quadratic character with chi(0) = 0.
inline int legendre_symbol(long a, std::uint64_t p) {
  long r = a % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  if (r == 0) return 0;
  return powmod(static_cast<std::uint64_t>(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Rejects 2, 3, divisors of n, non-primes and primes dividing a denominator of P.
inline void check_good_prime(std::uint64_t p, const Poly& P, int n = 2) {
  if (!is_prime(p)) throw BadPrime(std::to_string(p) + " is not prime");
  if (p <= 3) throw BadPrime("p = " + std::to_string(p) + " is excluded (p must not divide 6)");
  if (n > 0 && static_cast<std::uint64_t>(n) % p == 0) throw BadPrime("p divides n");
  for (auto& [m, c] : P.terms())
    if (mpz_class(c.den() % p) == 0) throw BadPrime("p divides a denominator of the polynomial");
}

// ---------------------------------------------------------------------------
// Exhaustive counting

struct Closure {
  enum Kind { affine, projective, weighted } kind = affine;
  int w = 1;  // weight of the second variable in P(1, w, 1)

  static Closure affine_plane() { return {affine, 1}; }
  static Closure projective_p2() { return {projective, 1}; }
  static Closure weighted_plane(int w) { return {weighted, w}; }
  std::string str() const {
    switch (kind) {
      case affine: return "affine";
      case projective: return "projective_P2";
      case weighted: return "weighted(1," + std::to_string(w) + ",1)";
    }
    return "?";
  }
};

namespace detail {

struct IntTerm {
  int i, j;
  std::uint64_t c;
};

inline std::vector<IntTerm> int_terms(const Poly& P, Var a, Var b, std::uint64_t p) {
  std::vector<IntTerm> ts;
  for (auto& [m, c] : P.terms()) {
    for (std::uint8_t v = 0; v < kMaxVars; ++v)
      if (v != a.id && v != b.id && m[Var{v}] != 0) throw std::invalid_argument("count_points: more than two variables");
    ModP r = reduce_mod_p(c, p);
    if (!r.is_zero()) ts.push_back({m[a], m[b], static_cast<std::uint64_t>(r.raw())});
  }
  return ts;
}

inline std::uint64_t eval_terms(const std::vector<IntTerm>& ts, const std::vector<std::uint64_t>& xp,
                                const std::vector<std::uint64_t>& yp, std::uint64_t p) {
  unsigned __int128 acc = 0;
  for (auto& t : ts) acc += static_cast<unsigned __int128>(t.c) * xp[t.i] % p * yp[t.j] % p;
  return static_cast<std::uint64_t>(acc % p);
}

inline std::vector<std::uint64_t> power_table(std::uint64_t v, int deg, std::uint64_t p) {
  std::vector<std::uint64_t> t(static_cast<std::size_t>(deg) + 1, 1);
  for (int k = 1; k <= deg; ++k) t[k] = static_cast<std::uint64_t>(static_cast<unsigned __int128>(t[k - 1]) * v % p);
  return t;
}

}  // namespace detail

/// Number of F_p-points of P(a, b) = 0 in the chosen compactification, by enumeration.
inline long count_points(const Poly& P, Var a, Var b, std::uint64_t p, Closure cl = Closure::affine_plane(), int n = 2) {
  check_good_prime(p, P, n);
  auto ts = detail::int_terms(P, a, b, p);
  int da = std::max(0, P.degree(a)), db = std::max(0, P.degree(b));
  long count = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    auto xp = detail::power_table(x, da, p);
    for (std::uint64_t y = 0; y < p; ++y)
      if (detail::eval_terms(ts, xp, detail::power_table(y, db, p), p) == 0) ++count;
  }
  if (cl.kind == Closure::affine) return count;
  int w = cl.kind == Closure::projective ? 1 : cl.w;
  int D = 0;
  for (auto& t : ts) D = std::max(D, t.i + w * t.j);
  std::vector<detail::IntTerm> top;
  for (auto& t : ts)
    if (t.i + w * t.j == D) top.push_back(t);
  // [1 : y : 0]
  auto one = detail::power_table(1, da, p);
  for (std::uint64_t y = 0; y < p; ++y)
    if (detail::eval_terms(top, one, detail::power_table(y, db, p), p) == 0) ++count;
  // [0 : 1 : 0]
  std::uint64_t at = 0;
  for (auto& t : top)
    if (t.i == 0) at = (at + t.c) % p;
  if (at == 0) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// The D4 curve C_2

/// 8 P_2 for the D4 pencil at u = 1/2.
inline Poly d4_c2() { return parse_poly("3*x^4 + 22*x^6 + 15*x^8 + 6*x^2*s + 30*x^4*s - s^2"); }

/// Projective count of C_2 in P^2 using that it is quadratic in s.
inline long fast_count_C2(std::uint64_t p) {
  check_good_prime(p, Poly(1L));
  long count = 1;  // [0:1:0]
  for (std::uint64_t xi = 0; xi < p; ++xi) {
    unsigned __int128 x = xi, x2 = x * x % p, x4 = x2 * x2 % p, x6 = x4 * x2 % p, x8 = x4 * x4 % p;
    unsigned __int128 B = (6 * x2 + 30 * x4) % p, C = (3 * x4 + 22 * x6 + 15 * x8) % p;
    long d = static_cast<long>((B * B + 4 * C) % p);
    count += 1 + legendre_symbol(d, p);
  }
  return count;
}

struct PointCountRecord {
  std::uint64_t p = 0;
  long count = 0;
  long e = 0;
  double e_tilde = 0;
  std::string strategy;
};

inline PointCountRecord c2_record(std::uint64_t p, bool brute = false) {
  PointCountRecord r;
  r.p = p;
  r.count = brute ? count_points(d4_c2(), var::x, var::s, p, Closure::projective_p2()) : fast_count_C2(p);
  r.e = r.count - static_cast<long>(p + 1);
  r.e_tilde = static_cast<double>(r.e) / (2.0 * std::sqrt(static_cast<double>(p)));
  r.strategy = brute ? "brute" : "fiberwise";
  return r;
}

/// Points of Q1: ty - x^2 = 0, Q2: 15t^2 + 30ts + 22x^2 + 3y^2 + 6ys - s^2 = 0 in P^3 [x:y:t:s].
inline long count_quadric_model(std::uint64_t p) {
  auto md = [p](long v) { return ((v % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p); };
  long count = 0;
  auto on = [&](long x, long y, long t, long s) {
    return md(t * y - x * x) == 0 && md(15 * t * t + 30 * t * s + 22 * x * x + 3 * y * y + 6 * y * s - s * s) == 0;
  };
  long P = static_cast<long>(p);
  for (long x = 0; x < P; ++x)  // s = 1
    for (long y = 0; y < P; ++y)
      for (long t = 0; t < P; ++t) count += on(x, y, t, 1);
  for (long x = 0; x < P; ++x)  // s = 0, t = 1
    for (long y = 0; y < P; ++y) count += on(x, y, 1, 0);
  for (long x = 0; x < P; ++x) count += on(x, 1, 0, 0);  // s = t = 0, y = 1
  count += on(1, 0, 0, 0);
  return count;
}

/// Printed bookkeeping: #C_2 = #C_2^nu - 2 (6/p) - 2.
inline VerificationReport fiber_correction_check(std::uint64_t p) {
  return timed([p] {
    if (p > 100) throw BadPrime("fiber_correction_check is limited to p <= 100");
    VerificationReport r;
    r.id = "d4.c2.fiber-correction";
    r.param("p", std::to_string(p));
    long c2 = count_points(d4_c2(), var::x, var::s, p, Closure::projective_p2());
    long nu = count_quadric_model(p);
    long predicted = nu - 2 * legendre_symbol(6, p) - 2;
    r.checked = 1;
    r.computed = "#C2 = " + std::to_string(c2) + ", #C2nu = " + std::to_string(nu);
    r.expected = "#C2nu - 2(6/p) - 2 = " + std::to_string(predicted);
    if (c2 != predicted) r.fail("p = " + std::to_string(p));
    return r;
  });
}

/// Branch count at the two singular points: #C_2^nu = #C_2 + (3/p) + (15/p).
inline VerificationReport fiber_correction_observed(std::uint64_t p) {
  return timed([p] {
    VerificationReport r;
    r.id = "d4.c2.fiber-correction-observed";
    r.param("p", std::to_string(p));
    long c2 = count_points(d4_c2(), var::x, var::s, p, Closure::projective_p2());
    long nu = count_quadric_model(p);
    long predicted = nu - legendre_symbol(3, p) - legendre_symbol(15, p);
    r.checked = 1;
    r.computed = "#C2 = " + std::to_string(c2) + ", #C2nu = " + std::to_string(nu);
    r.expected = "#C2nu - (3/p) - (15/p) = " + std::to_string(predicted);
    if (c2 != predicted) r.fail("p = " + std::to_string(p));
    return r;
  });
}

// ---------------------------------------------------------------------------
// Sato-Tate statistics

inline double semicircle_cdf(double t) {
  t = std::clamp(t, -1.0, 1.0);
  return 0.5 + (t * std::sqrt(1 - t * t) + std::asin(t)) / std::numbers::pi;
}

inline double ks_semicircle(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  double n = static_cast<double>(xs.size()), d = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double f = semicircle_cdf(xs[i]);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return d;
}

struct SatoTate {
  std::vector<PointCountRecord> records;  // sorted by p
  std::vector<std::pair<std::pair<double, double>, double>> histogram;
  double ks = 1;
  bool hasse_ok = true;
  std::vector<std::uint64_t> hasse_violations;
};

/// Primes at which C_2 is counted: p >= 7 (5 divides the leading coefficient 15).
inline bool satotate_good_prime(std::uint64_t p) { return p >= 7; }

inline SatoTate satotate(std::uint64_t bound, int bins, unsigned threads = 1) {
  if (bound < 100) throw std::invalid_argument("satotate needs prime_bound >= 100");
  if (bins < 1) throw std::invalid_argument("satotate needs bins >= 1");
  std::vector<std::uint64_t> ps;
  for (auto p : primes_up_to(bound))
    if (satotate_good_prime(p)) ps.push_back(p);
  SatoTate st;
  st.records.resize(ps.size());
  threads = std::max(1u, threads);
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < threads; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < ps.size(); i += threads) st.records[i] = c2_record(ps[i]);
    }));
  for (auto& j : jobs) j.get();
  std::vector<double> xs;
  std::vector<long> counts(static_cast<std::size_t>(bins), 0);
  for (auto& r : st.records) {
    xs.push_back(r.e_tilde);
    if (std::abs(static_cast<double>(r.e)) > 2 * std::sqrt(static_cast<double>(r.p)) + 4) {
      st.hasse_ok = false;
      st.hasse_violations.push_back(r.p);
    }
    int b = static_cast<int>(std::floor((std::clamp(r.e_tilde, -1.0, 1.0) + 1) / 2 * bins));
    ++counts[static_cast<std::size_t>(std::clamp(b, 0, bins - 1))];
  }
  for (int b = 0; b < bins; ++b) {
    double lo = -1 + 2.0 * b / bins, hi = -1 + 2.0 * (b + 1) / bins;
    st.histogram.push_back({{lo, hi}, static_cast<double>(counts[b]) / static_cast<double>(xs.size())});
  }
  st.ks = ks_semicircle(xs);
  return st;
}

inline std::string records_csv(const std::vector<PointCountRecord>& rs, const std::string& header = "") {
  std::ostringstream os;
  if (!header.empty()) os << "# " << header << "\n";
  os << "p,count,e,e_tilde\n";
  os.precision(10);
  for (auto& r : rs) os << r.p << "," << r.count << "," << r.e << "," << r.e_tilde << "\n";
  return os.str();
}

inline std::string histogram_csv(const SatoTate& st, const std::string& header = "") {
  std::ostringstream os;
  if (!header.empty()) os << "# " << header << "\n";
  os << "bin_left,bin_right,frequency\n";
  os.precision(10);
  for (auto& [range, f] : st.histogram) os << range.first << "," << range.second << "," << f << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// p-adic valuations

inline long val_p(mpz_class n, std::uint64_t p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  n = abs(n);
  long v = 0;
  while (n % p == 0) n /= p, ++v;
  return v;
}

/// sum_{i >= 1} floor(q / p^i) for rational q >= 0.
inline long legendre_sum(const Rational& q, std::uint64_t p) {
  long s = 0;
  mpz_class pk = p;
  for (;;) {
    mpz_class f = q.num() / (q.den() * pk);
    if (f == 0) return s;
    s += f.get_si();
    pk *= p;
  }
}

inline long val_p_factorial(long n, std::uint64_t p) { return legendre_sum(Rational(n), p); }

/// a (a-2) ... (a-2n+2).
inline mpz_class double_falling(long a, long n) {
  mpz_class r = 1;
  for (long i = 0; i < n; ++i) r *= a - 2 * i;
  return r;
}

struct PadicValuation {
  long formula = 0;
  long direct = 0;
  std::string case_name;
};

/// val_p(((a))_n) by the case formulas and by direct factorization; p odd.
inline PadicValuation padic_double_falling(long a, long n, std::uint64_t p) {
  if (p % 2 == 0) throw std::invalid_argument("p must be odd");
  mpz_class v = double_falling(a, n);
  if (v == 0) throw std::domain_error("((a))_n vanishes");
  PadicValuation r;
  r.direct = val_p(v, p);
  if (a > 2 * n - 2 && a % 2 == 0) {
    r.case_name = "a even, a > 2n-2";
    r.formula = legendre_sum(Rational(a / 2), p) - legendre_sum(Rational(a / 2 - n), p);
  } else if (a > 2 * n - 2) {
    r.case_name = "a odd, a > 2n-2";
    r.formula = legendre_sum(Rational(a), p) - legendre_sum(Rational(a - 2 * n + 1), p) -
                legendre_sum(Rational((a - 1) / 2), p) + legendre_sum(Rational((a - 1) / 2 - n + 1), p);
  } else {
    r.case_name = "a odd, a < 2n-2";
    r.formula = legendre_sum(Rational(a), p) - legendre_sum(Rational((a - 1) / 2), p) +
                legendre_sum(Rational(2 * n - 2 - a), p) - legendre_sum(Rational(2 * n - 2 - a, 2), p);
  }
  return r;
}

/// val_p((a u)_n / n!) at u = 1/2.
inline PadicValuation padic_valuations(long a, long n, std::uint64_t p) {
  auto d = padic_double_falling(a, n, p);
  long f = val_p_factorial(n, p);
  Rational q = falling(Rational(a, 2), n) / factorial_q(n);
  PadicValuation r{d.formula - f, val_p(q.num(), p) - val_p(q.den(), p), d.case_name};
  return r;
}

// ---------------------------------------------------------------------------
// Characteristic 3

inline VerificationReport char3_checks() {
  return timed([] {
    VerificationReport r;
    r.id = "weierstrass.char3";
    auto reduced = [](int m) {
      return reduce_mod_p(atomic_inflection(PencilSpec::of(Family::weierstrass), m, UMode::at(Rational(1, 2))).poly, 3);
    };
    PolyP p3 = reduced(3), p4 = reduced(4), p5 = reduced(5);
    PolyP lam = var_poly<ModP>(var::lam).map_coeffs([](const ModP& c) { return ModP(c.raw(), 3); });
    r.checked = 3;
    auto q4 = try_exact_divide(p4, lam);
    if (!q4) r.fail("lam does not divide P4 mod 3");
    auto s5 = squarefree(p5);
    if (s5.gcd_with_partials.is_constant()) r.fail("P5 mod 3 is squarefree");
    if (!squarefree(p3).gcd_with_partials.is_constant()) r.fail("P3 mod 3 is not squarefree");
    r.computed = "P4 mod 3 = lam * (" + (q4 ? q4->str() : std::string("?")) + "); gcd(P5, dP5) mod 3 = " +
                 s5.gcd_with_partials.str();
    r.expected = "lam | P4, P5 non-squarefree, P3 squarefree (mod 3)";
    return r;
  });
}

}  // namespace infl
