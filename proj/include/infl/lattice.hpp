#pragma once

#include "pencils.hpp"
#include "quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace infl {

struct Pt {
  long x = 0, y = 0;
  friend bool operator==(const Pt&, const Pt&) = default;
  friend auto operator<=>(const Pt&, const Pt&) = default;
  friend Pt operator+(Pt a, Pt b) { return {a.x + b.x, a.y + b.y}; }
  friend Pt operator-(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
};

inline long cross(Pt o, Pt a, Pt b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

inline std::string to_string(Pt p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

/// Convex lattice polygon: counterclockwise, no collinear vertices, starting at the lexicographic minimum.
class LatticePolygon {
 public:
  LatticePolygon() = default;

  static LatticePolygon hull(std::vector<Pt> pts) {
    if (pts.empty()) throw std::invalid_argument("hull of no points");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    LatticePolygon p;
    if (pts.size() <= 2) {
      p.v_ = pts;
      return p;
    }
    std::vector<Pt> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
      h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
      while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
      h[k++] = pts[i];
    }
    h.resize(k - 1);
    p.v_ = std::move(h);  // monotone chain starts at the lexicographic minimum
    return p;
  }

  const std::vector<Pt>& vertices() const { return v_; }
  bool is_point() const { return v_.size() == 1; }
  bool is_segment() const { return v_.size() == 2; }
  bool degenerate() const { return v_.size() < 3; }

  long twice_area() const {
    long a = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) {
      const Pt& p = v_[i];
      const Pt& q = v_[(i + 1) % v_.size()];
      a += p.x * q.y - q.x * p.y;
    }
    return a;
  }

  long boundary_points() const {
    if (v_.size() == 1) return 1;
    if (v_.size() == 2) return std::gcd(std::labs(v_[1].x - v_[0].x), std::labs(v_[1].y - v_[0].y)) + 1;
    long b = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) {
      Pt d = v_[(i + 1) % v_.size()] - v_[i];
      b += std::gcd(std::labs(d.x), std::labs(d.y));
    }
    return b;
  }

  /// Pick: i = A - b/2 + 1.
  long pick_interior() const { return degenerate() ? 0 : (twice_area() - boundary_points() + 2) / 2; }

  bool strictly_inside(Pt p) const {
    if (degenerate()) return false;
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (cross(v_[i], v_[(i + 1) % v_.size()], p) <= 0) return false;
    return true;
  }

  bool contains(Pt p) const {
    if (v_.size() == 1) return p == v_[0];
    if (v_.size() == 2) {
      if (cross(v_[0], v_[1], p) != 0) return false;
      return std::min(v_[0].x, v_[1].x) <= p.x && p.x <= std::max(v_[0].x, v_[1].x) &&
             std::min(v_[0].y, v_[1].y) <= p.y && p.y <= std::max(v_[0].y, v_[1].y);
    }
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (cross(v_[i], v_[(i + 1) % v_.size()], p) < 0) return false;
    return true;
  }

  std::string str() const {
    std::string s = "Conv(";
    for (std::size_t i = 0; i < v_.size(); ++i) s += (i ? "," : "") + to_string(v_[i]);
    return s + ")";
  }

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

 private:
  std::vector<Pt> v_;
};

template <class C>
std::vector<Pt> support(const MPoly<C>& p, Var a, Var b) {
  std::vector<Pt> pts;
  for (auto& [m, c] : p.terms()) pts.push_back({m[a], m[b]});
  return pts;
}

template <class C>
LatticePolygon newton_polygon(const MPoly<C>& p, Var a, Var b) {
  if (p.is_zero_poly()) throw std::invalid_argument("Newton polygon of the zero polynomial");
  return LatticePolygon::hull(support(p, a, b));
}

/// Edge-merge Minkowski sum of two convex polygons (points and segments allowed).
inline LatticePolygon minkowski_sum(const LatticePolygon& A, const LatticePolygon& B) {
  auto edges = [](const std::vector<Pt>& v) {
    std::vector<Pt> e;
    if (v.size() == 1) return e;
    if (v.size() == 2) return std::vector<Pt>{v[1] - v[0], v[0] - v[1]};
    for (std::size_t i = 0; i < v.size(); ++i) e.push_back(v[(i + 1) % v.size()] - v[i]);
    return e;
  };
  auto half = [](Pt d) { return d.y < 0 || (d.y == 0 && d.x < 0); };  // angle in [pi, 2pi)
  auto angle_less = [&](Pt a, Pt b) {
    if (half(a) != half(b)) return !half(a);
    return a.x * b.y - a.y * b.x > 0;
  };
  // Start from the bottom-most (then left-most) vertex of each, so edge angles increase from 0.
  auto start = [](const std::vector<Pt>& v) {
    std::size_t s = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i].y < v[s].y || (v[i].y == v[s].y && v[i].x < v[s].x)) s = i;
    return s;
  };
  auto rotate_edges = [&](const std::vector<Pt>& v) {
    auto e = edges(v);
    if (v.size() == 2) {
      std::sort(e.begin(), e.end(), angle_less);
      return e;
    }
    std::rotate(e.begin(), e.begin() + static_cast<long>(start(v)), e.end());
    return e;
  };
  const auto& va = A.vertices();
  const auto& vb = B.vertices();
  Pt cur = va[start(va)] + vb[start(vb)];
  auto ea = rotate_edges(va), eb = rotate_edges(vb);
  std::vector<Pt> all;
  std::merge(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(all), angle_less);
  std::vector<Pt> pts{cur};
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    cur = cur + all[i];
    pts.push_back(cur);
  }
  return LatticePolygon::hull(pts);
}

inline void PrintTo(const LatticePolygon& p, std::ostream* os) { *os << p.str(); }

inline LatticePolygon conv_union(const LatticePolygon& a, const LatticePolygon& b) {
  auto pts = a.vertices();
  pts.insert(pts.end(), b.vertices().begin(), b.vertices().end());
  return LatticePolygon::hull(pts);
}

struct InteriorPoints {
  long count = 0;
  std::vector<Pt> points;
};

/// Direct enumeration, cross-checked against Pick's formula.
inline InteriorPoints interior_lattice_points(const LatticePolygon& p) {
  InteriorPoints out;
  if (p.degenerate()) return out;
  long x0 = p.vertices()[0].x, x1 = x0, y0 = p.vertices()[0].y, y1 = y0;
  for (auto& v : p.vertices()) {
    x0 = std::min(x0, v.x), x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y), y1 = std::max(y1, v.y);
  }
  for (long x = x0 + 1; x < x1; ++x)
    for (long y = y0 + 1; y < y1; ++y)
      if (p.strictly_inside({x, y})) out.points.push_back({x, y});
  out.count = static_cast<long>(out.points.size());
  if (out.count != p.pick_interior()) throw std::logic_error("interior enumeration disagrees with Pick");
  return out;
}

struct LowerHull {
  std::vector<Pt> chain;  // from (0, j0) to (i0, 0)
  long delta = 0;
};

/// Lower hull of the support near the origin and delta = #{(i,j): i,j >= 1 on or below it}.
inline LowerHull lower_hull_delta(const std::vector<Pt>& supp) {
  std::optional<long> j0, i0;
  for (auto& p : supp) {
    if (p.x == 0 && p.y == 0) throw std::invalid_argument("lower_hull_delta: the center is not on the curve");
    if (p.x == 0) j0 = j0 ? std::min(*j0, p.y) : p.y;
    if (p.y == 0) i0 = i0 ? std::min(*i0, p.x) : p.x;
  }
  if (!j0 || !i0) throw std::invalid_argument("lower_hull_delta: a coordinate axis is a component");
  std::map<long, long> low;
  for (auto& p : supp)
    if (p.x <= *i0) {
      auto it = low.find(p.x);
      if (it == low.end() || p.y < it->second) low[p.x] = p.y;
    }
  std::vector<Pt> h;
  for (auto& [x, y] : low) {
    Pt p{x, y};
    while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
    h.push_back(p);
  }
  LowerHull out;
  out.chain = h;
  std::size_t seg = 0;
  for (long i = 1; i < *i0; ++i) {
    while (h[seg + 1].x < i) ++seg;
    Pt a = h[seg], b = h[seg + 1];
    // floor of the hull height at i; heights are nonnegative here
    long fl = (a.y * (b.x - a.x) + (b.y - a.y) * (i - a.x)) / (b.x - a.x);
    out.delta += fl;
  }
  return out;
}

template <class C>
LowerHull lower_hull_delta(const MPoly<C>& p, Var a, Var b) {
  return lower_hull_delta(support(p, a, b));
}

// ---------------------------------------------------------------------------
// Stated polygons

namespace detail {

inline LatticePolygon conv(std::vector<Pt> v) { return LatticePolygon::hull(std::move(v)); }

inline int phi1(int r) {
  static const int t[6] = {-4, -2, 0, -1, 1, 3};
  return t[r];
}

inline int phi2(int m) {
  switch (m) {
    case 3: case 4: return 2;
    case 5: return 3;
    case 6: return 4;
  }
  return 4 + ((m - 7) / 6) * 5 + (m - 1) % 6;
}

}  // namespace detail

struct PolygonParams {
  int m = 2;
  int a = 1, b = 1, c = 1;
};

struct ExpectedPolygon {
  LatticePolygon polygon;
  std::string note;  // interpretation flags
};

inline std::vector<std::string> polygon_statements() {
  return {"legendre.generic", "legendre.u-half", "weierstrass.centered", "d4.origin", "d4.centered",
          "d6.origin", "d6.centered"};
}

/// The polygon asserted by a named statement, with parity-dependent vertices resolved.
inline ExpectedPolygon expected_polygon(const std::string& id, const PolygonParams& p) {
  using detail::conv;
  long m = p.m;
  if (id == "legendre.generic") {
    long a = p.a, b = p.b, c = p.c;
    return {conv({{m * a + m * c - m, 0}, {m * a + m * b + m * c - m, 0}, {m * a - m, m * c}, {m * a + m * b - m, m * c}}),
            ""};
  }
  if (id == "legendre.u-half") {
    if (m < 2) throw std::invalid_argument("legendre.u-half needs m >= 2");
    return {conv({{0, m}, {m - 2, m}, {m - 2, 2}, {2 * m - 1, 1}, {2 * m - 1, 0}, {2 * m, 0}}), ""};
  }
  if (id == "weierstrass.centered") {
    if (m < 3) throw std::invalid_argument("weierstrass.centered needs m >= 3");
    std::vector<Pt> v{{0, (m + 1) / 2}, {0, m}, {m - 2, 1}, {2 * m - 1, 0}, {2 * m, 0}};
    if (m % 2) v.push_back({1, (m - 1) / 2});
    return {conv(v), ""};
  }
  if (id == "d4.origin") {
    if (m < 2) throw std::invalid_argument("d4.origin needs m >= 2");
    return {conv({{0, m}, {2 * m, 0}, {4 * m, 0}}), ""};
  }
  if (id == "d4.centered") {
    if (m == 3) return {conv({{0, 3}, {0, 2}, {2, 1}, {5, 0}, {12, 0}}), ""};
    if (m == 4) return {conv({{0, 4}, {0, 2}, {2, 1}, {8, 0}, {16, 0}}), ""};
    if (m == 5) return {conv({{0, 5}, {0, 3}, {1, 2}, {3, 1}, {9, 0}, {20, 0}}), ""};
    throw std::domain_error("d4.centered: the stated polygon for m >= 6 has a vertex with a missing coordinate");
  }
  if (id == "d6.origin" || id == "d6.centered") {
    bool origin = id == "d6.origin";
    if (m == 3)
      return {origin ? conv({{0, 2}, {3, 2}, {6, 0}, {15, 0}}) : conv({{0, 2}, {2, 2}, {1, 1}, {5, 0}, {15, 0}}), ""};
    if (m == 4) {
      if (!origin) throw std::domain_error("d6.centered: no polygon is stated for m = 4");
      return {conv({{0, 2}, {6, 0}, {12, 0}}), "polygon of the factor P_{4,*}"};
    }
    if (m < 3) throw std::invalid_argument("d6 polygons need m >= 3");
    long f2 = detail::phi2(static_cast<int>(m));
    Pt v1{2 * m - (2 * m) % 3, 0};
    long fl = m >= 4 ? (m - 4) / 6 : -1;
    Pt v2{4 * m + 6 * fl + detail::phi1(static_cast<int>((m - 4) % 6)), 0};
    Pt v3{0, f2}, v4{3, f2}, v5{0, (2 * m) / 3}, v6{0, (m - 1) / 2}, v7{m - 2, 0}, v8{1, (m - 3) / 2};
    bool with_v4 = m % 6 == 1 || m % 6 == 2 || m % 6 == 3;
    std::vector<Pt> v;
    std::string note = "v2 read as (4m + 6 floor((m-4)/6) + phi1((m-4) mod 6), 0); polygon of the factor P_{m,*}";
    if (origin) {
      v = {v1, v2, v3, v5};
      if (with_v4) v.push_back(v4);
    } else {
      v = {v2, v3, v6, v7};
      if (with_v4) v.push_back(v4);
      if (m % 2) v.push_back(v8);
    }
    return {conv(v), note};
  }
  throw std::invalid_argument("unknown polygon statement: " + id);
}

// ---------------------------------------------------------------------------
// Genus pipeline

/// P translated so that (x0, y0) becomes the origin, over the quotient ring of the coordinates.
inline PolyQ center_at(const Poly& p, Var a, const QElem& x0, Var b, const QElem& y0) {
  PolyQ q = lift(p);
  return substitute(q, {{a, var_poly<QElem>(a) + PolyQ(x0)}, {b, var_poly<QElem>(b) + PolyQ(y0)}});
}

struct CenteredSingularity {
  std::string label;
  PolyQ local;  // polynomial in centered coordinates
  Var a = var::x, b = var::lam;
};

struct GenusReport {
  long arithmetic = 0;
  std::vector<std::pair<std::string, long>> deltas;
  long geometric = 0;
  std::vector<std::string> assumptions;
};

/// p_a from the ambient polygon, delta per center from its lower hull, g = p_a - sum delta.
inline GenusReport genus_report(const LatticePolygon& ambient, const std::vector<CenteredSingularity>& centers,
                                std::vector<std::string> assumptions) {
  GenusReport g;
  g.arithmetic = interior_lattice_points(ambient).count;
  g.geometric = g.arithmetic;
  for (auto& c : centers) {
    bool singular = true;
    for (auto& [m, coeff] : c.local.terms())
      if (m.total_degree() <= 1) singular = false;
    if (!singular) throw std::invalid_argument("genus_report: " + c.label + " is not a singular point");
    long d = lower_hull_delta(c.local, c.a, c.b).delta;
    g.deltas.emplace_back(c.label, d);
    g.geometric -= d;
  }
  g.assumptions = std::move(assumptions);
  return g;
}

/// Weierstrass C_m in P(1,2,1) at u = 1/2: three singular points (zeta^{-j}, -3 zeta^j).
inline GenusReport weierstrass_genus(int m) {
  Poly p = atomic_inflection(PencilSpec::of(Family::weierstrass), m, UMode::at(Rational(1, 2))).poly;
  auto ring = cyclotomic3();
  QElem zeta = QElem::generator(ring), one(1L), three(3L);
  QElem zinv = zeta * zeta;
  std::vector<CenteredSingularity> cs;
  QElem xs[3] = {one, zinv, zeta}, ls[3] = {one, zeta, zinv};
  for (int j = 0; j < 3; ++j)
    cs.push_back({"q" + std::to_string(j), center_at(p, var::x, xs[j], var::lam, QElem(Rational(-3)) * ls[j])});
  LatticePolygon ambient = LatticePolygon::hull({{0, 0}, {2L * m, 0}, {0, m}});
  return genus_report(ambient, cs,
                      {"irreducibility of C_m (conjectural)", "singular locus is exactly the three points q_j (conjectural)",
                       "delta read off the lower hull (Newton non-degenerate singularities)"});
}

/// D4 C_m in P(1,4,1) at u = 1/2: singular at (0,0) and (+-sqrt(-1/2), 1/4).
inline GenusReport d4_genus(int m) {
  Poly p = atomic_inflection(PencilSpec::of(Family::d4), m, UMode::at(Rational(1, 2))).poly;
  auto ring = sqrt_minus_half();
  QElem r = QElem::generator(ring);
  QElem quarter(Rational(1, 4));
  std::vector<CenteredSingularity> cs;
  cs.push_back({"origin", lift(p), var::x, var::s});
  cs.push_back({"(+r,1/4)", center_at(p, var::x, r, var::s, quarter), var::x, var::s});
  cs.push_back({"(-r,1/4)", center_at(p, var::x, QElem(Rational(-1)) * r, var::s, quarter), var::x, var::s});
  LatticePolygon ambient = LatticePolygon::hull({{0, 0}, {4L * m, 0}, {0, m}});
  return genus_report(ambient, cs,
                      {"irreducibility of C_m (conjectural)", "singular locus is exactly the three listed points (conjectural)",
                       "delta read off the lower hull (Newton non-degenerate singularities)"});
}

/// Legendre(1,1,1) at u = 1/2 in P^2: singular at [0:0:1], [0:1:0] and [1:1:1].
inline GenusReport legendre_genus(int m) {
  Poly p = atomic_inflection(PencilSpec::legendre(1, 1, 1), m, UMode::at(Rational(1, 2))).poly;
  int deg = p.total_degree();
  Poly h = homogenize(p, {var::x, var::lam}, var::z, deg);
  Poly at_infinity = evaluate(h, var::lam, Rational(1));  // chart lam = 1, coordinates (x, z)
  std::vector<CenteredSingularity> cs;
  cs.push_back({"[0:0:1]", lift(p), var::x, var::lam});
  cs.push_back({"[0:1:0]", lift(at_infinity), var::x, var::z});
  cs.push_back({"[1:1:1]", center_at(p, var::x, QElem(1L), var::lam, QElem(1L)), var::x, var::lam});
  LatticePolygon ambient = LatticePolygon::hull({{0, 0}, {deg, 0}, {0, deg}});
  return genus_report(ambient, cs,
                      {"irreducibility of C_m (fails at m = 3)", "singular locus is exactly the three points (conjectural)",
                       "delta read off the lower hull (Newton non-degenerate singularities)"});
}

}  // namespace infl
