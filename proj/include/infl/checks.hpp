#pragma once

// Named verification checks shared by the command-line harness and the acceptance binary.

#include "coefficients.hpp"
#include "elimination.hpp"
#include "ffarith.hpp"
#include "lattice.hpp"
#include "parse.hpp"
#include "pencils.hpp"
#include "ramification.hpp"
#include "report.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace infl {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// "2..10", "5", "5,7,11" and mixtures such as "2..4,7".
inline std::vector<long> parse_range(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer: '" + s + "' in '" + text + "'");
    }
    if (used != s.size()) throw UsageError("not an integer: '" + s + "' in '" + text + "'");
    return v;
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(num(item));
      continue;
    }
    long lo = num(item.substr(0, dots)), hi = num(item.substr(dots + 2));
    if (hi < lo) throw UsageError("empty range '" + item + "'");
    if (hi - lo > 100000) throw UsageError("range too long '" + item + "'");
    for (long v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty range '" + text + "'");
  return out;
}

struct ParamSpec {
  std::string key;
  std::string fallback;
  std::string help;
};

class CheckParams {
 public:
  explicit CheckParams(std::map<std::string, std::string> values) : v_(std::move(values)) {}

  const std::string& str(const std::string& key) const {
    auto it = v_.find(key);
    if (it == v_.end()) throw std::logic_error("missing parameter " + key);
    return it->second;
  }
  long integer(const std::string& key) const {
    auto r = parse_range(str(key));
    if (r.size() != 1) throw UsageError("--" + key + " takes a single integer");
    return r[0];
  }
  std::vector<long> range(const std::string& key) const { return parse_range(str(key)); }
  double real(const std::string& key) const {
    try {
      return std::stod(str(key));
    } catch (const std::exception&) {
      throw UsageError("--" + key + " takes a number");
    }
  }
  const std::map<std::string, std::string>& all() const { return v_; }

 private:
  std::map<std::string, std::string> v_;
};

struct CheckDescriptor {
  std::string id;
  std::string status;  // theorem | proposition | conjecture | observation | computation | plumbing
  std::string anchor;  // paraphrase of the statement being checked
  std::vector<ParamSpec> schema;
  std::function<VerificationReport(const CheckParams&)> run;
};

namespace detail {

inline std::string mstr(long m) { return "m=" + std::to_string(m); }

/// Folds a sub-report into an aggregate; the first failing sub-report provides the counterexample.
inline void absorb(VerificationReport& into, const VerificationReport& sub, const std::string& where) {
  into.checked += std::max(sub.checked, 1);
  if (sub.verdict == Verdict::fail) {
    into.fail(where + ": " + sub.counterexample.value_or("failed"));
    into.failures += std::max(sub.failures, 1) - 1;
  } else if (sub.verdict == Verdict::refused) {
    into.refuse(where + ": " + sub.counterexample.value_or("refused"));
  }
}

/// First monomial where two polynomials differ.
inline std::string first_difference(const Poly& got, const Poly& want) {
  Poly d = got - want;
  if (d.is_zero_poly()) return "";
  auto [mono, c] = *d.terms().begin();
  Poly single = Poly::from_terms({{mono, Rational(1)}});
  return "monomial " + single.str() + ": computed " + got.coeff(mono).str() + ", expected " +
         want.coeff(mono).str();
}

inline std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

inline std::string vertex_difference(const LatticePolygon& got, const LatticePolygon& want) {
  auto& gv = got.vertices();
  auto& wv = want.vertices();
  for (auto& p : wv)
    if (std::find(gv.begin(), gv.end(), p) == gv.end()) return "stated vertex " + to_string(p) + " missing";
  for (auto& p : gv)
    if (std::find(wv.begin(), wv.end(), p) == wv.end()) return "extra vertex " + to_string(p);
  return "vertex sets differ";
}

const UMode kHalf = UMode::at(Rational(1, 2));

inline CoefficientParams parse_abc(const std::string& s) {
  auto v = parse_range(s);
  if (v.size() != 3 || v[0] < 1 || v[1] < 1 || v[2] < 1) throw UsageError("--abc takes three positive integers a,b,c");
  return {static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])};
}

inline std::vector<std::uint64_t> prime_list(const std::vector<long>& xs) {
  std::vector<std::uint64_t> ps;
  for (long x : xs)
    if (x > 1 && is_prime(static_cast<std::uint64_t>(x))) ps.push_back(static_cast<std::uint64_t>(x));
  return ps;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Displayed polynomials

/// The Weierstrass P_3, P_4, P_5 at u = 1/2 as displayed.
inline const std::map<int, std::string>& displayed_weierstrass() {
  static const std::map<int, std::string> d{
      {3, "2 - 5/2*x^3 - 1/16*x^6 + 1/2*x*lam - 5/16*x^4*lam + 5/16*x^2*lam^2 + 1/16*lam^3"},
      {4, "-15/2*x^2 + 21/8*x^5 + 3/128*x^8 - lam - 7/4*x^3*lam + 7/32*x^6*lam + 1/8*x*lam^2 - 35/64*x^4*lam^2"
          " - 5/32*x^2*lam^3 - 5/128*lam^4"},
      {5, "-6*x + 18*x^4 - 45/16*x^7 - 3/256*x^10 + 9/4*x^2*lam + 63/16*x^5*lam - 45/256*x^8*lam + 3/4*lam^2"
          " - 15/16*x^3*lam^2 + 105/128*x^6*lam^2 - 3/16*x*lam^3 + 27/128*x^4*lam^3 + 33/256*x^2*lam^4 + 7/256*lam^5"}};
  return d;
}

inline VerificationReport displayed_polynomials_check(const std::vector<long>& ms) {
  VerificationReport r;
  std::vector<std::string> done;
  for (long m : ms) {
    auto it = displayed_weierstrass().find(static_cast<int>(m));
    if (it == displayed_weierstrass().end()) {
      r.refuse(detail::mstr(m) + ": no polynomial is displayed");
      continue;
    }
    Poly got = atomic_inflection(PencilSpec::of(Family::weierstrass), static_cast<int>(m), detail::kHalf).poly;
    Poly want = parse_poly(it->second);
    ++r.checked;
    if (got != want) r.fail(detail::mstr(m) + " " + detail::first_difference(got, want));
    done.push_back("P_" + std::to_string(m) + " (" + std::to_string(got.terms().size()) + " terms)");
  }
  r.computed = detail::join(done, ", ") + (r.failures ? " with differences" : " equal to the displays");
  r.expected = "exact equality with the displayed polynomials";
  return r;
}

// ---------------------------------------------------------------------------
// Newton polygons

inline VerificationReport polygon_check(const std::string& statement, const std::vector<long>& ms,
                                        const PolygonParams& base,
                                        const std::function<LatticePolygon(int m)>& computed_polygon) {
  VerificationReport r;
  std::vector<std::string> lines;
  for (long m : ms) {
    PolygonParams pp = base;
    pp.m = static_cast<int>(m);
    ExpectedPolygon want;
    try {
      want = expected_polygon(statement, pp);
    } catch (const std::domain_error& e) {
      r.refuse(detail::mstr(m) + ": " + e.what());
      continue;
    }
    LatticePolygon got = computed_polygon(static_cast<int>(m));
    ++r.checked;
    lines.push_back(detail::mstr(m) + " " + got.str());
    if (got != want.polygon)
      r.fail(detail::mstr(m) + ": " + detail::vertex_difference(got, want.polygon) + "; computed " + got.str() +
             ", stated " + want.polygon.str());
    if (!want.note.empty()) r.assumption = want.note;
  }
  r.computed = detail::join(lines, "; ");
  r.expected = "stated polygons (" + statement + ")";
  return r;
}

// ---------------------------------------------------------------------------
// Gradings and symmetries

inline VerificationReport mu3_grading_check(const std::vector<long>& ms) {
  VerificationReport r;
  for (long m : ms) {
    Poly p = atomic_inflection(PencilSpec::of(Family::weierstrass), static_cast<int>(m), detail::kHalf).poly;
    auto g = graded_weight_class(p, {{var::x, 1}, {var::lam, -1}}, 3);
    ++r.checked;
    if (!g.homogeneous)
      r.fail(detail::mstr(m) + ": monomials " + Poly::from_terms({{g.witness->first, Rational(1)}}).str() + " and " +
             Poly::from_terms({{g.witness->second, Rational(1)}}).str() + " lie in different classes");
  }
  r.computed = std::to_string(r.checked - r.failures) + "/" + std::to_string(r.checked) + " homogeneous";
  r.expected = "deg_x - deg_lam constant mod 3 on every P_m";
  return r;
}

inline VerificationReport d6_class_check(const std::vector<long>& ms) {
  VerificationReport r;
  std::vector<std::string> lines;
  for (long m : ms) {
    int mi = static_cast<int>(m);
    Poly p = atomic_inflection(PencilSpec::of(Family::d6), mi, detail::kHalf).poly;
    auto g = graded_weight_class(p, {{var::x, 1}}, 3);
    auto f = d6_factor(mi, detail::kHalf);
    r.checked += 3;
    if (!g.homogeneous) r.fail(detail::mstr(m) + ": x-degrees not constant mod 3");
    else if (g.cls != mod_floor(-m, 3))
      r.fail(detail::mstr(m) + ": class " + std::to_string(g.cls) + ", expected " + std::to_string(mod_floor(-m, 3)));
    if (!f.x_power_divides) r.fail(detail::mstr(m) + ": x^" + std::to_string(f.e) + " does not divide P_m");
    if (!f.has_factor_4z_minus_1) r.fail(detail::mstr(m) + ": 4z - 1 does not divide P_m / x^" + std::to_string(f.e));
    lines.push_back(detail::mstr(m) + " x^" + std::to_string(f.e) + "(4z-1)");
  }
  r.computed = detail::join(lines, "; ");
  r.expected = "class (-m) mod 3, x^e (4z - 1) peels exactly";
  return r;
}

inline VerificationReport bielliptic_parity_check(const std::vector<long>& ms) {
  VerificationReport r;
  for (long m : ms) {
    ++r.checked;
    try {
      bielliptic_Qm(static_cast<int>(m), UMode::sym());
    } catch (const std::logic_error& e) {
      r.fail(detail::mstr(m) + ": " + e.what());
    }
  }
  r.computed = std::to_string(r.checked - r.failures) + "/" + std::to_string(r.checked) + " have even Q_m";
  r.expected = "x | P_m for odd m, Q_m supported in even powers of x";
  return r;
}

inline VerificationReport legendre_symmetries(const std::vector<long>& as, const std::vector<long>& ms, SymmetrySign sign) {
  VerificationReport r;
  for (long a : as)
    for (long m : ms)
      detail::absorb(r, legendre_symmetry_check(static_cast<int>(a), static_cast<int>(m), UMode::sym(), sign),
                     "a=" + std::to_string(a) + " " + detail::mstr(m));
  r.computed = std::to_string(r.checked - r.failures) + "/" + std::to_string(r.checked) + " (a, m) pairs hold";
  r.expected = sign == SymmetrySign::printed ? "projective swap, translation sign (-1)^{am}"
                                             : "projective swap, translation sign (-1)^{(a+1)m}";
  return r;
}

// ---------------------------------------------------------------------------
// Genera

inline VerificationReport genus_check(const std::string& family, const std::vector<long>& ms) {
  VerificationReport r;
  std::vector<std::string> lines, expect;
  for (long m : ms) {
    if (m < 3) throw UsageError("genus checks need m >= 3");
    GenusReport g = family == "weierstrass" ? weierstrass_genus(static_cast<int>(m)) : d4_genus(static_cast<int>(m));
    long want = family == "weierstrass" ? ((m - 1) * (m - 1) + 3) / 4 : m == 3 ? 0 : (m * m - 2 * m + 3) / 2;
    ++r.checked;
    std::string ds;
    for (auto& [label, d] : g.deltas) ds += (ds.empty() ? "" : ",") + std::to_string(d);
    lines.push_back(detail::mstr(m) + " p_a " + std::to_string(g.arithmetic) + " deltas " + ds + " g " +
                    std::to_string(g.geometric));
    expect.push_back(detail::mstr(m) + " g " + std::to_string(want));
    if (g.geometric != want)
      r.fail(detail::mstr(m) + ": genus " + std::to_string(g.geometric) + ", expected " + std::to_string(want));
    r.assumption = detail::join(g.assumptions, "; ");
  }
  r.computed = detail::join(lines, "; ");
  r.expected = detail::join(expect, "; ");
  return r;
}

// ---------------------------------------------------------------------------
// Singular loci and discriminants

inline VerificationReport eliminant_check(const std::string& family, const std::vector<long>& ms) {
  VerificationReport r;
  bool w = family == "weierstrass";
  Var param = w ? var::lam : var::s;
  Poly target = w ? parse_poly("lam^3 + 27") : parse_poly("s*(4*s - 1)");
  std::vector<std::string> lines;
  for (long m : ms) {
    if (m < 3) throw UsageError("singular candidates need m >= 3");
    Poly p = atomic_inflection(PencilSpec::of(w ? Family::weierstrass : Family::d4), static_cast<int>(m), detail::kHalf).poly;
    auto e = singular_candidates(p, param);
    ++r.checked;
    if (!divides(target, e.eliminant)) r.fail(detail::mstr(m) + ": " + target.str() + " does not divide the eliminant");
    std::vector<std::string> roots;
    for (auto& q : e.rational.roots) roots.push_back(q.str());
    lines.push_back(detail::mstr(m) + " rational roots {" + detail::join(roots, ",") + "}" +
                    (e.degenerate ? " (degenerate)" : ""));
  }
  r.computed = detail::join(lines, "; ");
  r.expected = target.str() + " divides the eliminant in " + std::string(name_of(param));
  return r;
}

inline VerificationReport weierstrass_singular_points(const std::vector<long>& ms) {
  VerificationReport r;
  auto ring = cyclotomic3();
  QElem zeta = QElem::generator(ring), one(1L), three(-3L);
  QElem xs[3] = {one, zeta * zeta, zeta}, ls[3] = {three, three * zeta, three * zeta * zeta};
  std::vector<std::string> lines;
  for (long m : ms) {
    if (m < 3) throw UsageError("singular points need m >= 3");
    Poly p = atomic_inflection(PencilSpec::of(Family::weierstrass), static_cast<int>(m), detail::kHalf).poly;
    long want = m % 2 ? ((m - 1) / 2) * ((m - 1) / 2) : (m / 2) * (m / 2 - 1);
    for (int j = 0; j < 3; ++j) {
      auto s = verify_singular_point(p, var::lam, xs[j], ls[j]);
      ++r.checked;
      std::string at = detail::mstr(m) + " q" + std::to_string(j);
      if (!s.verified) r.fail(at + ": not singular");
      else if (!s.delta || *s.delta != want)
        r.fail(at + ": delta " + (s.delta ? std::to_string(*s.delta) : std::string("?")) + ", expected " +
               std::to_string(want));
    }
    lines.push_back(detail::mstr(m) + " delta " + std::to_string(want));
  }
  r.computed = detail::join(lines, "; ");
  r.expected = "singular at (zeta^-j, -3 zeta^j) with the lower-hull delta";
  return r;
}

inline VerificationReport discriminant_ledger_check(const std::vector<long>& ms, unsigned threads, ResultantPath path) {
  VerificationReport r;
  std::vector<std::string> lines;
  for (long m : ms) {
    auto d = surface_discriminant(static_cast<int>(m), path, threads);
    std::vector<std::string> es;
    for (auto& e : d.ledger.entries) {
      ++r.checked;
      es.push_back(e.name + "^" + std::to_string(e.multiplicity));
      if (!e.divides) r.fail(detail::mstr(m) + ": " + e.name + " does not divide the discriminant");
      else if (!e.simple_in_squarefree) r.fail(detail::mstr(m) + ": " + e.name + " is not simple in the squarefree part");
    }
    ++r.checked;
    if (!d.ledger.product_divides) r.fail(detail::mstr(m) + ": product of components does not divide");
    lines.push_back(detail::mstr(m) + " " + detail::join(es, " "));
    r.assumption = d.convention;
  }
  r.computed = detail::join(lines, "; ");
  r.expected = "each listed component divides the squarefree part exactly once";
  return r;
}

inline VerificationReport resultant_table_check(const std::vector<long>& ms) {
  VerificationReport r;
  std::vector<std::string> lines;
  for (long m : ms) {
    if (m < 6) throw UsageError("the resultant table starts at m = 6");
    auto n = nondegeneracy_resultant(static_cast<int>(m));
    r.checked += 2;
    if (!n.printed) {
      r.refuse(detail::mstr(m) + ": no tabulated row");
      lines.push_back(detail::mstr(m) + " " + n.computed.str());
      continue;
    }
    if (!n.scalar) r.fail(detail::mstr(m) + ": computed " + n.computed.str() + " is not a multiple of the row");
    if (n.at_half.is_zero()) r.fail(detail::mstr(m) + ": vanishes at u = 1/2");
    lines.push_back(detail::mstr(m) + " " + (n.scalar ? n.scalar->str() + " * row" : std::string("not proportional")) +
                    ", value at 1/2 " + n.at_half.str());
  }
  r.computed = detail::join(lines, "; ");
  r.expected = "proportional to the tabulated factored form, nonzero at u = 1/2";
  return r;
}

// ---------------------------------------------------------------------------
// Point counts

inline VerificationReport fast_count_check(std::uint64_t bound) {
  VerificationReport r;
  long n = 0;
  for (auto p : primes_up_to(bound)) {
    if (p <= 3) continue;
    auto fast = c2_record(p), brute = c2_record(p, true);
    ++r.checked, ++n;
    if (fast.count != brute.count)
      r.fail("p=" + std::to_string(p) + ": fast " + std::to_string(fast.count) + ", brute " + std::to_string(brute.count));
  }
  r.computed = std::to_string(n - r.failures) + "/" + std::to_string(n) + " primes agree";
  r.expected = "fiberwise count equals brute-force count";
  return r;
}

inline VerificationReport fiber_check(const std::vector<long>& ps, bool printed) {
  VerificationReport r;
  std::vector<std::string> lines;
  for (auto p : detail::prime_list(ps)) {
    if (p <= 3) {
      r.refuse("p=" + std::to_string(p) + ": bad prime");
      continue;
    }
    auto s = printed ? fiber_correction_check(p) : fiber_correction_observed(p);
    ++r.checked;
    if (!s.ok()) r.fail("p=" + std::to_string(p) + ": " + s.computed + ", predicted " + s.expected);
    lines.push_back("p=" + std::to_string(p) + " " + s.computed + " vs " + s.expected);
  }
  r.computed = detail::join(lines, "; ");
  r.expected = printed ? "#C2 = #C2nu - 2(6/p) - 2" : "#C2 = #C2nu - (3/p) - (15/p)";
  return r;
}

inline VerificationReport satotate_check(std::uint64_t bound, int bins, double ks_max, unsigned threads) {
  auto st = satotate(bound, bins, threads);
  VerificationReport r;
  r.checked = 2;
  std::ostringstream ks;
  ks.precision(4);
  ks << std::fixed << st.ks;
  if (st.ks > ks_max) r.fail("KS distance " + ks.str() + " exceeds " + std::to_string(ks_max));
  if (!st.hasse_ok) r.fail("p=" + std::to_string(st.hasse_violations.front()) + " violates |e| <= 2 sqrt(p) + 4");
  r.computed = std::to_string(st.records.size()) + " primes, KS " + ks.str() + ", Hasse " + (st.hasse_ok ? "ok" : "violated");
  std::ostringstream want;
  want << "KS <= " << ks_max << ", |e| <= 2 sqrt(p) + 4";
  r.expected = want.str();
  return r;
}

inline VerificationReport padic_check(long samples, long seed) {
  VerificationReport r;
  std::mt19937 rng(static_cast<unsigned>(seed));
  std::uniform_int_distribution<long> an(1, 60), nn(1, 20);
  const std::uint64_t ps[] = {3, 5, 7, 11, 13};
  long done = 0;
  while (done < samples) {
    long a = an(rng), n = nn(rng);
    std::uint64_t p = ps[rng() % 5];
    if (double_falling(a, n) == 0) continue;
    auto v = padic_double_falling(a, n, p);
    auto q = padic_valuations(a, n, p);
    r.checked += 2;
    std::string at = "a=" + std::to_string(a) + " n=" + std::to_string(n) + " p=" + std::to_string(p);
    if (v.formula != v.direct) r.fail(at + " (" + v.case_name + "): formula " + std::to_string(v.formula) + ", direct " +
                                      std::to_string(v.direct));
    if (q.formula != q.direct) r.fail(at + ": valuation of (a/2)_n/n! formula " + std::to_string(q.formula) + ", direct " +
                                      std::to_string(q.direct));
    ++done;
  }
  r.computed = std::to_string(done) + " samples, " + std::to_string(r.failures) + " disagreements";
  r.expected = "case formulas agree with direct factorisation";
  return r;
}

// ---------------------------------------------------------------------------
// Ramification

inline VerificationReport vandermonde_check(long n, long g, long ell) {
  auto v = vandermonde_N(static_cast<int>(n), static_cast<int>(g), static_cast<int>(ell));
  VerificationReport r;
  r.computed = "det N = " + v.det.str();
  r.expected = "det N equals the determinant of its lower block";
  if (v.k0 < 0) {
    r.refuse("lower block needs l = n alpha, d = n beta + 1, alpha/beta > n - 1");
    return r;
  }
  r.computed += ", lower block det = " + v.lower_det.str();
  ++r.checked;
  if (v.lower_det != v.det) r.fail("lower block " + v.lower_det.str() + " != " + v.det.str());
  if (n == 3 && g == 3 && ell == 9) {
    r.expected += ", equal to 378";
    ++r.checked;
    if (v.lower_det != Rational(378)) r.fail("lower block determinant " + v.lower_det.str() + " != 378");
  }
  return r;
}

inline VerificationReport gv_identity_check(const std::vector<long>& ns, const std::vector<long>& alphas,
                                            const std::vector<long>& betas) {
  VerificationReport r;
  std::vector<std::string> lines;
  for (long n : ns)
    for (long a : alphas)
      for (long b : betas) {
        RamificationParams p{static_cast<int>(n), static_cast<int>(a), static_cast<int>(b)};
        try {
          p.validate();
        } catch (const std::invalid_argument& e) {
          r.refuse(p.str() + ": " + e.what());
          continue;
        }
        auto s = gv_sum_identity(p);
        ++r.checked;
        lines.push_back(p.str() + " det N = " + s.det_N.str() + ", path sum = " + s.at_binomials.str());
        if (!s.holds) r.fail(p.str() + ": path sum " + s.at_binomials.str() + " != det N " + s.det_N.str());
      }
  r.computed = detail::join(lines, "; ");
  r.expected = "det N = sum over P* of det M~(p) at t_i = binom(n, i)";
  return r;
}

inline VerificationReport hyperelliptic_gv_check(long alpha_max) {
  VerificationReport r;
  for (int alpha = 2; alpha <= alpha_max; ++alpha)
    for (int beta = 1; beta < alpha; ++beta) {
      Rational lhs = vandermonde_N(2, beta, 2 * alpha).det;
      Rational rhs = Rational(mpz_class(mpz_class(1) << (beta * (beta + 1) / 2))) * up::det(gessel_viennot_M(alpha, beta));
      ++r.checked;
      if (lhs != rhs)
        r.fail("(alpha,beta)=(" + std::to_string(alpha) + "," + std::to_string(beta) + "): " + lhs.str() + " != " + rhs.str());
    }
  r.computed = std::to_string(r.checked - r.failures) + "/" + std::to_string(r.checked) + " pairs agree";
  r.expected = "det N(2, beta, 2 alpha) = 2^{C(beta+1,2)} det M(alpha, beta) for 1 <= beta < alpha";
  return r;
}

inline VerificationReport series_check(long trials, long seed) {
  VerificationReport r;
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  std::vector<std::string> lines;
  for (auto [n, d, ell] : {std::tuple{2, 5, 6}, {3, 4, 9}}) {
    for (long t = 0; t < trials; ++t) {
      auto f = random_separable(d, rng);
      auto s = series_cross_check(n, d, ell, f, Rational(0));
      detail::absorb(r, s, "(n,d,l)=(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(ell) +
                               ") f=" + from_dense(f, var::x).str());
      if (t == 0) lines.push_back("(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(ell) + ") " + s.computed);
    }
  }
  r.computed = detail::join(lines, "; ") + "; " + std::to_string(r.checked - r.failures) + "/" + std::to_string(r.checked) +
               " sub-checks pass";
  r.expected = "valuation mu(B) and leading coefficient prod D^{mu_i} b_i det N";
  return r;
}

// ---------------------------------------------------------------------------
// Registry

inline std::vector<CheckDescriptor> build_registry() {
  using detail::kHalf;
  std::vector<CheckDescriptor> reg;
  auto add = [&](std::string id, std::string status, std::string anchor, std::vector<ParamSpec> schema,
                 std::function<VerificationReport(const CheckParams&)> run) {
    reg.push_back({std::move(id), std::move(status), std::move(anchor), std::move(schema), std::move(run)});
  };
  const ParamSpec threads{"threads", "1", "worker threads"};

  add("weierstrass.displayed-polynomials", "theorem",
      "P_3, P_4 and P_5 for y^2 = x^3 + lam x + 2 at u = 1/2 are the displayed polynomials, term by term.",
      {{"m", "3..5", "indices with a display"}}, [](const CheckParams& p) { return displayed_polynomials_check(p.range("m")); });

  // Newton polygons
  add("legendre.generic.newton-polygon", "theorem",
      "For symbolic u the Newton polygon of the Legendre P_m is the quadrilateral with vertices (ma+mc-m,0), "
      "(ma+mb+mc-m,0), (ma-m,mc), (ma+mb-m,mc).",
      {{"m", "1..6", "indices"}, {"abc", "1,1,1", "Legendre exponents a,b,c"}}, [](const CheckParams& p) {
        auto abc = detail::parse_abc(p.str("abc"));
        PencilSpec spec = PencilSpec::legendre(abc.a, abc.b, abc.c);
        return polygon_check("legendre.generic", p.range("m"), {0, abc.a, abc.b, abc.c}, [&](int m) {
          return newton_polygon(atomic_inflection(spec, m, UMode::sym()).poly, var::x, var::lam);
        });
      });
  add("legendre.u-half.newton-polygon", "theorem",
      "At u = 1/2 the Legendre(1,1,1) P_m has Newton polygon with vertices (0,m), (m-2,m), (m-2,2), (2m-1,1), "
      "(2m-1,0), (2m,0).",
      {{"m", "2..12", "indices"}}, [](const CheckParams& p) {
        return polygon_check("legendre.u-half", p.range("m"), {}, [](int m) {
          return newton_polygon(atomic_inflection(PencilSpec::legendre(1, 1, 1), m, detail::kHalf).poly, var::x, var::lam);
        });
      });
  add("weierstrass.centered.newton-polygon", "theorem",
      "Centered at the singular point (1,-3), the Weierstrass P_m at u = 1/2 has the stated polygon with a "
      "parity-dependent inner vertex.",
      {{"m", "3..12", "indices"}}, [](const CheckParams& p) {
        return polygon_check("weierstrass.centered", p.range("m"), {}, [](int m) {
          return newton_polygon(atomic_inflection(weierstrass_centered(), m, detail::kHalf).poly, var::x, var::lam);
        });
      });
  add("d4.origin.newton-polygon", "proposition",
      "For symbolic u the D4 P_m has Newton polygon Conv((0,m),(2m,0),(4m,0)) at the origin.",
      {{"m", "2..8", "indices"}}, [](const CheckParams& p) {
        return polygon_check("d4.origin", p.range("m"), {}, [](int m) {
          return newton_polygon(atomic_inflection(PencilSpec::of(Family::d4), m, UMode::sym()).poly, var::x, var::s);
        });
      });
  add("d4.centered.newton-polygon", "conjecture",
      "Centered at (sqrt(-1/2), 1/4), the D4 P_m at u = 1/2 has the stated polygon; the m >= 6 statement is garbled.",
      {{"m", "3..5", "indices"}}, [](const CheckParams& p) {
        auto ring = sqrt_minus_half();
        QElem r = QElem::generator(ring);
        return polygon_check("d4.centered", p.range("m"), {}, [&](int m) {
          Poly q = atomic_inflection(PencilSpec::of(Family::d4), m, detail::kHalf).poly;
          return newton_polygon(center_at(q, var::x, r, var::s, QElem(Rational(1, 4))), var::x, var::s);
        });
      });
  add("d6.origin.newton-polygon", "conjecture",
      "At the origin the D6 factor P_{m,*} at u = 1/2 has the stated polygon with vertices built from phi1 and phi2.",
      {{"m", "3..8", "indices"}}, [](const CheckParams& p) {
        return polygon_check("d6.origin", p.range("m"), {}, [](int m) {
          Poly q = m >= 4 ? d6_factor(m, detail::kHalf).rest
                          : atomic_inflection(PencilSpec::of(Family::d6), m, detail::kHalf).poly;
          return newton_polygon(q, var::x, var::z);
        });
      });

  // Closed-form coefficients
  for (auto& claim : coefficient_catalog()) {
    std::vector<ParamSpec> schema{
        {"m", std::to_string(claim.m_min) + ".." + std::to_string(claim.m_max_default), "indices"}};
    bool legendre = claim.id == "legendre.generic.vertex-coefficients";
    if (legendre) schema.push_back({"abc", "1,1,1", "Legendre exponents a,b,c"});
    std::string id = claim.id;
    add(claim.id, claim.status, claim.statement, schema, [id, legendre](const CheckParams& p) {
      auto ms = p.range("m");
      auto [lo, hi] = std::minmax_element(ms.begin(), ms.end());
      CoefficientParams abc = legendre ? detail::parse_abc(p.str("abc")) : CoefficientParams{};
      return coefficient_check(id, static_cast<int>(*lo), static_cast<int>(*hi), abc);
    });
  }

  // Gradings and symmetries
  add("weierstrass.mu3-grading", "theorem",
      "Every Weierstrass P_m at u = 1/2 is homogeneous for the mu_3 grading deg x - deg lam mod 3.",
      {{"m", "1..15", "indices"}}, [](const CheckParams& p) { return mu3_grading_check(p.range("m")); });
  add("d6.class-and-peeling", "theorem",
      "The D6 P_m lies in x-degree class (-m) mod 3 and is divisible by x^e (4z - 1) with e = (-m) mod 3.",
      {{"m", "4..10", "indices"}}, [](const CheckParams& p) { return d6_class_check(p.range("m")); });
  add("bielliptic.parity", "lemma",
      "For the bielliptic pencil, x divides P_m when m is odd and Q_m involves only even powers of x.",
      {{"m", "2..10", "indices"}}, [](const CheckParams& p) { return bielliptic_parity_check(p.range("m")); });
  add("legendre.symmetries", "theorem",
      "The Legendre P_m (a = b = c) is invariant under the projective swap lam <-> z, and "
      "P(x+1, lam+1) = (-1)^{am} P(-x, -lam).",
      {{"a", "1..2", "Legendre exponent"}, {"m", "1..8", "indices"}},
      [](const CheckParams& p) { return legendre_symmetries(p.range("a"), p.range("m"), SymmetrySign::printed); });
  add("legendre.symmetries-observed-sign", "observation",
      "The translation symmetry holds with sign (-1)^{(a+1)m}.",
      {{"a", "1..2", "Legendre exponent"}, {"m", "1..8", "indices"}},
      [](const CheckParams& p) { return legendre_symmetries(p.range("a"), p.range("m"), SymmetrySign::observed); });

  // Genera
  add("weierstrass.genus", "conjecture",
      "The Weierstrass inflectionary curve C_m in P(1,2,1) has geometric genus ceil((m-1)^2/4).",
      {{"m", "3..10", "indices"}}, [](const CheckParams& p) { return genus_check("weierstrass", p.range("m")); });
  add("d4.genus", "conjecture",
      "The D4 inflectionary curve C_m has geometric genus 0 for m = 3 and ceil(m^2/2 - m + 1) for m >= 4.",
      {{"m", "3..5", "indices"}}, [](const CheckParams& p) { return genus_check("d4", p.range("m")); });

  // Singular loci, discriminants, resultants
  add("weierstrass.singular-candidates", "conjecture",
      "The eliminant of (P, P_x, P_lam) for the Weierstrass P_m vanishes on lam^3 + 27 = 0.",
      {{"m", "3..5", "indices"}}, [](const CheckParams& p) { return eliminant_check("weierstrass", p.range("m")); });
  add("d4.singular-candidates", "conjecture",
      "The eliminant of (P, P_x, P_s) for the D4 P_m vanishes at s = 0 and s = 1/4.",
      {{"m", "3..5", "indices"}}, [](const CheckParams& p) { return eliminant_check("d4", p.range("m")); });
  add("weierstrass.singular-points", "theorem",
      "The Weierstrass C_m is singular at (zeta^-j, -3 zeta^j), with delta ((m-1)/2)^2 or (m/2)(m/2 - 1).",
      {{"m", "3..6", "indices"}}, [](const CheckParams& p) { return weierstrass_singular_points(p.range("m")); });
  add("bielliptic.discriminant-ledger", "proposition",
      "Delta_* and the listed extra components divide the reduced inflectionary discriminant Delta_m for m = 3, 4, 5.",
      {{"m", "3..4", "indices (2..5)"}, threads, {"path", "interp", "interp | direct"}}, [](const CheckParams& p) {
        auto path = p.str("path");
        if (path != "interp" && path != "direct") throw UsageError("--path takes interp or direct");
        return discriminant_ledger_check(p.range("m"), static_cast<unsigned>(p.integer("threads")),
                                         path == "direct" ? ResultantPath::direct : ResultantPath::interpolation);
      });
  add("elimination.delta-star", "proposition",
      "Delta_* is a rational quartic with the given parameterization, nodes at (3 zeta^j, 3 zeta^-j), and "
      "disc_x(x^6 - s1 x^4 + s2 x^2 - 1) = 64 Delta_*^2.",
      {}, [](const CheckParams&) { return delta_star_checks(); });
  add("elimination.cusp-locus", "proposition",
      "Over Delta_* the fiber acquires a triple root exactly where 3t^2 - 6t + 4 = 0.", {},
      [](const CheckParams&) { return cusp_locus(); });
  add("weierstrass.resultant-table", "computation",
      "The resultant of the lower-hull polynomial and its lam-derivative is the tabulated factored polynomial in u.",
      {{"m", "6..10", "indices"}}, [](const CheckParams& p) { return resultant_table_check(p.range("m")); });
  add("weierstrass.edge-separability", "conjecture",
      "The inner-edge polynomial of the centered Weierstrass P_m at u = 1/2 is separable (Newton non-degeneracy).",
      {{"m", "6..11", "indices"}, {"ell", "1", "section index"}}, [](const CheckParams& p) {
        VerificationReport r;
        for (long m : p.range("m"))
          detail::absorb(r, edge_restriction_separability(static_cast<int>(m), static_cast<int>(p.integer("ell"))),
                         detail::mstr(m));
        r.computed = std::to_string(r.checked - r.failures) + "/" + std::to_string(r.checked) + " sub-checks pass";
        r.expected = "separable edge polynomial of degree floor(m/2) - 1";
        return r;
      });

  // Finite fields
  add("d4.c2.fast-count", "plumbing", "Fiberwise count of C_2 agrees with the brute-force projective count.",
      {{"bound", "200", "largest prime"}},
      [](const CheckParams& p) { return fast_count_check(static_cast<std::uint64_t>(p.integer("bound"))); });
  add("d4.c2.fiber-correction", "proposition",
      "#C_2(F_p) = #C_2^nu(F_p) - 2(6/p) - 2, with C_2^nu the intersection of two quadrics in P^3.",
      {{"p", "5,7,11,13", "primes"}}, [](const CheckParams& p) { return fiber_check(p.range("p"), true); });
  add("d4.c2.fiber-correction-observed", "observation",
      "#C_2(F_p) = #C_2^nu(F_p) - (3/p) - (15/p), from the branches at the two singular points.",
      {{"p", "5..59", "primes"}}, [](const CheckParams& p) { return fiber_check(p.range("p"), false); });
  add("weierstrass.char3", "proposition",
      "Mod 3: lam divides P_4, P_5 is not squarefree, P_3 is squarefree.", {},
      [](const CheckParams&) { return char3_checks(); });
  add("d4.c2.sato-tate", "proposition",
      "Normalised errors e_p / (2 sqrt p) for C_2 follow the semicircle law.",
      {{"bound", "10000", "prime bound"}, {"bins", "40", "histogram bins"}, {"ks", "0.08", "KS threshold"}, threads},
      [](const CheckParams& p) {
        return satotate_check(static_cast<std::uint64_t>(p.integer("bound")), static_cast<int>(p.integer("bins")),
                              p.real("ks"), static_cast<unsigned>(p.integer("threads")));
      });
  add("padic.double-factorial-valuations", "remark",
      "Case formulas for the p-adic valuation of double falling factorials and of (a/2)_n / n!.",
      {{"samples", "50", "random cases"}, {"seed", "11", "RNG seed"}},
      [](const CheckParams& p) { return padic_check(p.integer("samples"), p.integer("seed")); });

  // Ramification
  add("ramification.vandermonde", "proposition",
      "det N(n, g, l) equals the determinant of its lower block; for (n, d, l) = (3, 4, 9) both are 378.",
      {{"n", "3", "cyclic degree"}, {"g", "3", "genus"}, {"l", "9", "section index"}},
      [](const CheckParams& p) { return vandermonde_check(p.integer("n"), p.integer("g"), p.integer("l")); });
  add("ramification.gv-identity", "theorem",
      "det N = sum over maximal Plucker paths of det M~(p), evaluated at t_i = binom(n, i).",
      {{"n", "3", "cyclic degree"}, {"alpha", "3", "l / n"}, {"beta", "1", "(d - 1) / n"}},
      [](const CheckParams& p) { return gv_identity_check(p.range("n"), p.range("alpha"), p.range("beta")); });
  add("ramification.hyperelliptic-gv", "corollary",
      "For n = 2, det N(2, beta, 2 alpha) = 2^{C(beta+1,2)} det M(alpha, beta).",
      {{"alpha", "6", "largest alpha"}}, [](const CheckParams& p) { return hyperelliptic_gv_check(p.integer("alpha")); });
  add("ramification.series-cross-check", "plumbing",
      "Series Wronskian of random separable curves has valuation mu(B) and leading coefficient prod D^{mu_i} b_i det N.",
      {{"trials", "5", "curves per (n,d,l)"}, {"seed", "2024", "RNG seed"}},
      [](const CheckParams& p) { return series_check(p.integer("trials"), p.integer("seed")); });

  std::sort(reg.begin(), reg.end(), [](auto& a, auto& b) { return a.id < b.id; });
  return reg;
}

inline const std::vector<CheckDescriptor>& check_registry() {
  static const std::vector<CheckDescriptor> reg = build_registry();
  return reg;
}

inline const CheckDescriptor* find_check(const std::string& id) {
  for (auto& c : check_registry())
    if (c.id == id) return &c;
  return nullptr;
}

/// Runs a check with schema defaults overridden by `given`; unknown keys are a usage error.
inline VerificationReport run_check(const CheckDescriptor& d, const std::map<std::string, std::string>& given) {
  std::map<std::string, std::string> values;
  for (auto& s : d.schema) values[s.key] = s.fallback;
  for (auto& [k, v] : given) {
    if (!values.count(k)) {
      if (k == "threads") continue;
      throw UsageError(d.id + " has no parameter --" + k);
    }
    values[k] = v;
  }
  CheckParams params(values);
  VerificationReport r;
  try {
    r = timed([&] { return d.run(params); });
  } catch (const UsageError&) {
    throw;
  } catch (const BadPrime& e) {
    r = VerificationReport{};
    r.refuse(std::string("bad prime: ") + e.what());
  } catch (const std::domain_error& e) {
    r = VerificationReport{};
    r.refuse(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(d.id + ": " + e.what());
  }
  r.id = d.id;
  r.params.clear();
  for (auto& [k, v] : values)
    if (k != "threads") r.param(k, v);
  if ((d.status == "conjecture" || d.status == "observation") && r.assumption.empty()) r.assumption = d.status;
  return r;
}

}  // namespace infl
