#pragma once

#include "pencils.hpp"
#include "report.hpp"
#include "series.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace infl {

using QMatrix = std::vector<std::vector<Rational>>;

/// Weakly decreasing parts, padded to a fixed length.
using Partition = std::vector<int>;
using PluckerPath = std::vector<Partition>;

inline int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline bool contained(const Partition& a, const Partition& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

/// y-adic orders n*i + j of the basis x^i y^j at a finite ramification point, sorted.
inline std::vector<int> inflection_orders(int n, int d, int ell) {
  auto b = monomial_basis(n, d, ell);
  std::vector<int> mu;
  for (auto& e : b.elements) mu.push_back(n * e.i + e.j);
  std::sort(mu.begin(), mu.end());
  return mu;
}

inline long sum_mu_minus_i(const std::vector<int>& mu) {
  long s = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) s += mu[i] - static_cast<long>(i);
  return s;
}

/// (n-1) n^2 (n+1) b^2 / 24 + (n-1) n (5-n) b / 12.
inline long mu_B(int n, int beta) {
  if (n < 2 || beta < 0) throw std::invalid_argument("mu_B needs n >= 2 and beta >= 0");
  Rational v = Rational(long(n - 1) * n * n * (n + 1) * beta * beta, 24) + Rational(long(n - 1) * n * (5 - n) * beta, 12);
  if (!v.is_integer()) throw std::logic_error("mu_B is not an integer");
  return v.num().get_si();
}

/// Parameters (n, alpha, beta): l = n alpha, d = n beta + 1, alpha/beta > n-1.
struct RamificationParams {
  int n = 2, alpha = 2, beta = 1;

  int ell() const { return n * alpha; }
  int d() const { return n * beta + 1; }
  int genus() const { return (n - 1) * n * beta / 2; }
  int k0() const { return n * (alpha - (n - 1) * beta); }

  void validate() const {
    if (n < 2 || alpha < 1 || beta < 1) throw std::invalid_argument("need n >= 2, alpha >= 1, beta >= 1");
    if (alpha <= (n - 1) * beta) throw std::invalid_argument("need alpha/beta > n-1");
  }
  std::string str() const {
    return "(n,alpha,beta)=(" + std::to_string(n) + "," + std::to_string(alpha) + "," + std::to_string(beta) + ")";
  }
};

struct VandermondeN {
  int n = 0, g = 0, ell = 0, d = 0;
  std::vector<int> mu;
  QMatrix matrix;  // binom(mu_j, i)
  Rational det;
  int k0 = -1;     // start of the lower block when the (alpha, beta) hypotheses hold
  QMatrix lower;   // C
  Rational lower_det;
};

inline QMatrix binomial_matrix(const std::vector<int>& mu, int from) {
  QMatrix m;
  for (int i = from; i < static_cast<int>(mu.size()); ++i) {
    std::vector<Rational> row;
    for (int j = from; j < static_cast<int>(mu.size()); ++j) row.push_back(binom_q(mu[j], i));
    m.push_back(std::move(row));
  }
  return m;
}

/// N(n, g, l) = (binom(mu_j, i)) with d recovered from g = (n-1)(d-1)/2.
inline VandermondeN vandermonde_N(int n, int g, int ell) {
  if (n < 2 || g < 0 || (2 * g) % (n - 1) != 0) throw std::invalid_argument("vandermonde_N: g must be (n-1)(d-1)/2");
  VandermondeN v;
  v.n = n, v.g = g, v.ell = ell, v.d = 2 * g / (n - 1) + 1;
  v.mu = inflection_orders(n, v.d, ell);
  v.matrix = binomial_matrix(v.mu, 0);
  v.det = up::det(v.matrix);
  if (ell % n == 0 && (v.d - 1) % n == 0 && v.d > 1) {
    RamificationParams p{n, ell / n, (v.d - 1) / n};
    if (p.alpha > (n - 1) * p.beta) {
      v.k0 = p.k0();
      for (int i = 0; i < v.k0; ++i)
        if (v.mu[i] != i) throw std::logic_error("vandermonde_N: upper block is not unitriangular");
      v.lower = binomial_matrix(v.mu, v.k0);
      v.lower_det = up::det(v.lower);
    }
  }
  return v;
}

/// Gessel-Viennot matrix M(alpha, beta)_{w,v} = binom(alpha - beta + v, 2v - w), 0 <= w, v <= beta.
inline QMatrix gessel_viennot_M(int alpha, int beta) {
  QMatrix m(beta + 1, std::vector<Rational>(beta + 1));
  for (int w = 0; w <= beta; ++w)
    for (int v = 0; v <= beta; ++v) m[w][v] = 2 * v - w < 0 ? Rational(0) : binom_q(alpha - beta + v, 2 * v - w);
  return m;
}

// ---------------------------------------------------------------------------
// Columns of the reduced Wronskian and their Plucker graphs

struct ColumnIndex {
  int i0 = 0, k = 0;
  friend auto operator<=>(const ColumnIndex&, const ColumnIndex&) = default;
};

/// j(i0): the largest k with x^{i0} y^k in the basis.
inline int top_k(const RamificationParams& p, int i0) {
  int k = -1;
  for (int j = 0; j < p.n; ++j)
    if (p.n * i0 + p.d() * j <= p.ell()) k = j;
  return k;
}

/// Lexicographic (i0, k) for alpha - (n-1) beta <= i0 <= alpha.
inline std::vector<ColumnIndex> wronskian_columns(const RamificationParams& p) {
  p.validate();
  std::vector<ColumnIndex> cols;
  for (int i0 = p.alpha - (p.n - 1) * p.beta; i0 <= p.alpha; ++i0)
    for (int k = 0; k <= top_k(p, i0); ++k) cols.push_back({i0, k});
  if (static_cast<int>(cols.size()) != p.genus() + 1) throw std::logic_error("column count is not g+1");
  return cols;
}

struct TropicalMatrix {
  std::vector<std::vector<long>> v;
  long permanent = 0;
  long diagonal = 0;
};

/// min-plus permanent by dynamic programming over column subsets.
inline long min_plus_permanent(const std::vector<std::vector<long>>& m) {
  const std::size_t r = m.size();
  if (r == 0) return 0;
  if (r > 24) throw std::invalid_argument("min_plus_permanent: matrix too large");
  const long inf = std::numeric_limits<long>::max() / 4;
  std::vector<long> best(std::size_t(1) << r, inf);
  best[0] = 0;
  for (std::uint32_t s = 0; s < (1u << r); ++s) {
    if (best[s] == inf) continue;
    int row = std::popcount(s);
    if (row == static_cast<int>(r)) continue;
    for (std::size_t c = 0; c < r; ++c)
      if (!(s & (1u << c))) best[s | (1u << c)] = std::min(best[s | (1u << c)], best[s] + m[row][c]);
  }
  return best.back();
}

/// Top row n(i0 - alpha + (n-1) beta) + k; each column drops by one per row and stops at zero.
inline TropicalMatrix tropical_matrix(const RamificationParams& p) {
  auto cols = wronskian_columns(p);
  TropicalMatrix t;
  const int size = static_cast<int>(cols.size());
  t.v.assign(size, std::vector<long>(size));
  for (int c = 0; c < size; ++c) {
    long top = long(p.n) * (cols[c].i0 - p.alpha + (p.n - 1) * p.beta) + cols[c].k;
    for (int u = 0; u < size; ++u) t.v[u][c] = std::max(top - u, 0L);
  }
  t.permanent = min_plus_permanent(t.v);
  for (int c = 0; c < size; ++c) t.diagonal += t.v[c][c];
  return t;
}

struct PluckerGraph {
  ColumnIndex col;
  int min_weight = 0;                     // n(alpha - (n-1) beta) - k
  std::vector<Partition> vertices;        // i0 parts in [1, n], weight >= min_weight
  std::map<Partition, mpz_class> ow;      // number of maximal paths through each vertex
  mpz_class path_count;
  std::optional<std::vector<PluckerPath>> paths;  // listed when path_count is small
};

namespace detail {

inline void partitions_in_box(int parts, int max_part, int min_part, Partition& cur, std::vector<Partition>& out) {
  if (static_cast<int>(cur.size()) == parts) {
    out.push_back(cur);
    return;
  }
  for (int v = max_part; v >= min_part; --v) {
    cur.push_back(v);
    partitions_in_box(parts, v, min_part, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// PG(i0, k) with maximal paths; the paths are listed when there are at most `list_cap` of them.
inline PluckerGraph plucker_graph(const RamificationParams& p, ColumnIndex col, long list_cap = 20000) {
  PluckerGraph g;
  g.col = col;
  g.min_weight = p.k0() - col.k;
  std::vector<Partition> all;
  Partition cur;
  detail::partitions_in_box(col.i0, p.n, 1, cur, all);
  for (auto& q : all)
    if (weight(q) >= g.min_weight) g.vertices.push_back(q);
  std::sort(g.vertices.begin(), g.vertices.end(), [](const Partition& a, const Partition& b) {
    return weight(a) != weight(b) ? weight(a) < weight(b) : a < b;
  });
  const std::size_t V = g.vertices.size();
  std::vector<std::vector<std::size_t>> succ(V), pred(V);
  for (std::size_t a = 0; a < V; ++a)
    for (std::size_t b = 0; b < V; ++b)
      if (weight(g.vertices[b]) == weight(g.vertices[a]) + 1 && contained(g.vertices[a], g.vertices[b])) {
        succ[a].push_back(b);
        pred[b].push_back(a);
      }
  std::vector<mpz_class> from(V, 0), to(V, 0);
  for (std::size_t a = 0; a < V; ++a) {
    if (pred[a].empty()) from[a] = 1;
    for (auto q : pred[a]) from[a] += from[q];
  }
  for (std::size_t a = V; a-- > 0;) {
    if (succ[a].empty()) to[a] = 1;
    for (auto q : succ[a]) to[a] += to[q];
  }
  g.path_count = 0;
  for (std::size_t a = 0; a < V; ++a) {
    g.ow[g.vertices[a]] = from[a] * to[a];
    if (succ[a].empty()) g.path_count += from[a];
  }
  if (g.path_count <= list_cap) {
    std::vector<PluckerPath> paths;
    PluckerPath stack;
    auto walk = [&](auto& self, std::size_t a) -> void {
      stack.push_back(g.vertices[a]);
      if (succ[a].empty()) paths.push_back(stack);
      for (auto q : succ[a]) self(self, q);
      stack.pop_back();
    };
    for (std::size_t a = 0; a < V; ++a)
      if (pred[a].empty()) walk(walk, a);
    g.paths = std::move(paths);
  }
  return g;
}

inline std::vector<PluckerGraph> maximal_paths(const RamificationParams& p, long list_cap = 20000) {
  std::vector<PluckerGraph> out;
  for (auto c : wronskian_columns(p)) out.push_back(plucker_graph(p, c, list_cap));
  return out;
}

namespace detail {

/// i0! / prod c_m! times prod t_m^{c_m} for the partition with multiplicities c_m.
inline Poly partition_term(const Partition& lambda) {
  std::map<int, int> c;
  for (int part : lambda) ++c[part];
  Rational coeff = factorial_q(static_cast<long>(lambda.size()));
  Monomial mon;
  for (auto [part, mult] : c) {
    coeff /= factorial_q(mult);
    mon[t_var(part)] = static_cast<std::uint16_t>(mult);
  }
  return Poly(mon, coeff);
}

inline const Partition* at_weight(const PluckerPath& path, int w) {
  for (auto& q : path)
    if (weight(q) == w) return &q;
  return nullptr;
}

}  // namespace detail

/// The universal matrix M~(p) for one choice of path per column.
inline PolyMatrix<Rational> universal_matrix(const std::vector<PluckerGraph>& graphs, const std::vector<const PluckerPath*>& choice,
                                             int g) {
  PolyMatrix<Rational> m(g + 1, std::vector<Poly>(graphs.size()));
  for (std::size_t c = 0; c < graphs.size(); ++c)
    for (int u = 0; u <= g; ++u) {
      const Partition* lam = detail::at_weight(*choice[c], graphs[c].min_weight + u);
      if (!lam) continue;
      m[u][c] = detail::partition_term(*lam).scaled(Rational(graphs[c].ow.at(*lam)).inverse());
    }
  return m;
}

struct GVSum {
  RamificationParams params;
  Poly t_poly;               // sum over P* of det M~(p), in t1..tn
  mpz_class product_size;    // |P*|
  bool enumerated = false;   // false: multilinear column sums
  Rational at_binomials;     // t_i = binom(n, i)
  Rational det_N;
  bool holds = false;
};

/// Sum of det M~(p) over P*, compared with det N at t_i = binom(n, i).
inline GVSum gv_sum_identity(const RamificationParams& p, long enumerate_cap = 20000) {
  p.validate();
  if (p.n > 5) throw std::invalid_argument("gv_sum_identity: n <= 5");
  GVSum r;
  r.params = p;
  auto graphs = maximal_paths(p, enumerate_cap);
  const int g = p.genus();
  r.product_size = 1;
  bool listable = true;
  for (auto& gr : graphs) {
    r.product_size *= gr.path_count;
    listable = listable && gr.paths.has_value();
  }
  if (listable && r.product_size <= enumerate_cap) {
    r.enumerated = true;
    std::vector<std::size_t> idx(graphs.size(), 0);
    while (true) {
      std::vector<const PluckerPath*> choice;
      for (std::size_t c = 0; c < graphs.size(); ++c) choice.push_back(&(*graphs[c].paths)[idx[c]]);
      r.t_poly += bareiss_det(universal_matrix(graphs, choice, g));
      std::size_t c = 0;
      while (c < graphs.size() && ++idx[c] == graphs[c].paths->size()) idx[c++] = 0;
      if (c == graphs.size()) break;
    }
  } else {
    // Multilinearity: the sum over paths of a column is the sum over its vertices.
    PolyMatrix<Rational> m(g + 1, std::vector<Poly>(graphs.size()));
    for (std::size_t c = 0; c < graphs.size(); ++c)
      for (auto& lam : graphs[c].vertices) {
        int u = weight(lam) - graphs[c].min_weight;
        if (u <= g) m[u][c] += detail::partition_term(lam);
      }
    r.t_poly = bareiss_det(m);
  }
  std::vector<std::pair<Var, Rational>> at;
  for (int i = 1; i <= p.n; ++i) at.emplace_back(t_var(i), binom_q(p.n, i));
  r.at_binomials = evaluate_all(r.t_poly, at);
  r.det_N = vandermonde_N(p.n, g, p.ell()).det;
  r.holds = r.at_binomials == r.det_N;
  return r;
}

// ---------------------------------------------------------------------------
// Global class

struct A1Class {
  long gamma = 0;     // (r+1) d + (r+1) r (g-1)
  bool defined = false;
  long multiplier = 0;  // class = multiplier * H
  std::string str() const {
    return defined ? std::to_string(multiplier) + "H" : std::string("parity obstruction");
  }
};

inline A1Class plucker_degree_a1(long d, long g, long r) {
  if (d < 1 || r < 1 || g < 0) throw std::invalid_argument("plucker_degree_a1 needs d >= 1, r >= 1, g >= 0");
  A1Class a;
  a.gamma = (r + 1) * d + (r + 1) * r * (g - 1);
  a.defined = a.gamma % 2 == 0;
  if (a.defined) a.multiplier = a.gamma / 2;
  return a;
}

/// The complete series |l infinity| on y^n = f with deg f = D coprime to n.
inline A1Class complete_series_class(int n, int D, int ell) {
  if (std::gcd(n, D) != 1) throw std::invalid_argument("complete_series_class: gcd(n, deg f) must be 1");
  long g = long(n - 1) * (D - 1) / 2;
  if (ell < 2 * g - 1 || ell - g < 1) throw std::invalid_argument("complete_series_class: l too small");
  return plucker_degree_a1(ell, g, ell - g);
}

// ---------------------------------------------------------------------------
// Series oracle

/// Leading y-adic term of the Wronskian of (x-gamma)^i y^j against prod D^{mu_i} b_i * det N.
inline VerificationReport series_cross_check(int n, int d, int ell, const UPoly<Rational>& f, const Rational& gamma,
                                             int extra_precision = 4) {
  VerificationReport rep;
  rep.id = "ramification.series-cross-check";
  rep.param("n", std::to_string(n));
  rep.param("d", std::to_string(d));
  rep.param("l", std::to_string(ell));
  rep.param("f", from_dense(f, var::x).str());
  rep.param("gamma", gamma.str());
  if (up::deg(f) != d) throw std::invalid_argument("series_cross_check: deg f must be d");
  auto basis = monomial_basis(n, d, ell);
  const int g = basis.genus;
  std::vector<std::pair<int, BasisElement>> ordered;
  for (auto& e : basis.elements) ordered.emplace_back(n * e.i + e.j, e);
  std::sort(ordered.begin(), ordered.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<int> mu;
  for (auto& [m, e] : ordered) mu.push_back(m);
  long expected_val = sum_mu_minus_i(mu);
  int N = static_cast<int>(expected_val) + (ell - g) + extra_precision;
  TruncatedSeries X = local_inversion(f, gamma, n, N);
  X[0] -= gamma;
  Rational lead_x = X[n];  // D^n_y x at the point, equals 1/f'(gamma)
  std::vector<TruncatedSeries> series;
  Rational prod(1);
  for (auto& [m, e] : ordered) {
    TruncatedSeries b = TruncatedSeries::monomial(e.j, N);
    for (int i = 0; i < e.i; ++i) b = (b * X).truncated(N);
    series.push_back(b);
    prod *= b[m];
  }
  TruncatedSeries w = series_wronskian(series);
  Rational detN = up::det(binomial_matrix(mu, 0));
  auto val = w.valuation();
  rep.expected = "valuation " + std::to_string(expected_val) + ", leading " + (prod * detN).str() + " = (" +
                 lead_x.str() + ")^k * " + detN.str();
  if (!val || *val > w.precision()) {
    rep.fail("precision shortfall: Wronskian vanishes to precision " + std::to_string(w.precision()));
    rep.computed = "zero to precision " + std::to_string(w.precision());
    return rep;
  }
  rep.computed = "valuation " + std::to_string(*val) + ", leading " + w[*val].str();
  ++rep.checked;
  if (*val != expected_val) rep.fail("valuation " + std::to_string(*val) + " != " + std::to_string(expected_val));
  ++rep.checked;
  if (w[*val] != prod * detN) rep.fail("leading coefficient " + w[*val].str() + " != " + (prod * detN).str());
  return rep;
}

/// A random separable polynomial of degree d with a simple root at 0.
inline UPoly<Rational> random_separable(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-9, 9);
  while (true) {
    UPoly<Rational> f(d + 1);
    f[0] = 0;
    for (int k = 1; k <= d; ++k) f[k] = Rational(coef(rng));
    if (f[1].is_zero() || f[d].is_zero()) continue;
    if (up::deg(up::gcd(f, up::derivative(f))) == 0) return f;
  }
}

}  // namespace infl
