#pragma once

#include "sculpt/formula.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sculpt {

// A representative point of an open arrangement face with the guard
// signature and polygon membership there.
struct FaceSample {
  Point point;
  std::vector<bool> signature;  // one entry per guard, in guard-set order
  bool inside = false;
};

// Interior point and exterior point that no guard tells apart.
struct Witness {
  Point inside;
  Point outside;
};

namespace detail {

// Evaluates sign(cross(dir, p - origin)) through a normalised Line.
struct SideTester {
  Line line;
  int flip;

  SideTester(const Point& origin, const Vec& dir) : line(origin, dir) {
    // Line's normal is a positive or negative multiple of (-dir.y, dir.x).
    Rational probe = line.a() * (-dir.y) + line.b() * dir.x;
    flip = probe.sign() > 0 ? 1 : -1;
  }
  int side(const Point& p, double px, double py) const { return flip * line.side(p, px, py); }
};

struct FastWedge {
  SideTester s1, s2;
  bool reflex, halfplane;
  Point apex;

  explicit FastWedge(const Wedge& w)
      : s1(w.apex, w.ray1), s2(w.apex, w.ray2), reflex(w.reflex), halfplane(w.is_halfplane()),
        apex(w.apex) {}

  bool contains(const Point& p, double px, double py) const {
    if (p == apex) return true;
    int l1 = s1.side(p, px, py);
    int r2 = -s2.side(p, px, py);  // cross(d, ray2) = -cross(ray2, d)
    if (reflex) return l1 >= 0 || r2 >= 0;
    if (halfplane) return l1 >= 0;
    return l1 >= 0 && r2 >= 0;
  }
};

// Polygon membership for points off every edge line.
struct FastMembership {
  struct Edge {
    Point a, b;
    Line line;
    int flip;  // sign relation between line.side and orient(a, b, .)
  };
  std::vector<std::vector<Edge>> rings;

  explicit FastMembership(const Polygon& p) {
    auto add = [&](const Ring& r) {
      std::vector<Edge> es;
      for (std::size_t i = 0; i < r.size(); ++i) {
        const Point& a = r[i];
        const Point& b = r[next_index(i, r.size())];
        SideTester st(a, b - a);
        es.push_back({a, b, st.line, st.flip});
      }
      rings.push_back(std::move(es));
    };
    add(p.outer);
    for (const auto& h : p.holes) add(h);
  }

  // Exact for points not on any edge; boundary points report as outside.
  bool inside(const Point& q, double qx, double qy) const {
    bool result = false;
    for (std::size_t r = 0; r < rings.size(); ++r) {
      bool in = false;
      for (const auto& e : rings[r]) {
        bool a_above = e.a.y > q.y, b_above = e.b.y > q.y;
        if (a_above == b_above) continue;
        int s = e.flip * e.line.side(q, qx, qy);
        if (s == 0) return false;
        if (e.b.y > e.a.y ? s > 0 : s < 0) in = !in;
      }
      if (r == 0) {
        if (!in) return false;
        result = true;
      } else if (in) {
        return false;
      }
    }
    return result;
  }
};

// Index-compiled monotone formula for fast repeated evaluation.
struct CompiledFormula {
  struct Node {
    Formula::Op op;
    std::size_t guard = 0;
    std::vector<std::size_t> children;
  };
  std::vector<Node> nodes;
  std::size_t root = 0;

  CompiledFormula(const Formula& f, const GuardSet& g) { root = build(f, g); }

  bool eval(const std::vector<bool>& sig) const { return eval(root, sig); }

 private:
  std::size_t build(const Formula& f, const GuardSet& g) {
    Node n{f.op()};
    if (f.is_leaf()) n.guard = g.index_of(f.label());
    for (const auto& c : f.children()) n.children.push_back(build(c, g));
    nodes.push_back(std::move(n));
    return nodes.size() - 1;
  }
  bool eval(std::size_t i, const std::vector<bool>& sig) const {
    const Node& n = nodes[i];
    switch (n.op) {
      case Formula::Op::Leaf: return sig[n.guard];
      case Formula::Op::And:
        for (std::size_t c : n.children) if (!eval(c, sig)) return false;
        return true;
      case Formula::Op::Or:
        for (std::size_t c : n.children) if (eval(c, sig)) return true;
        return false;
    }
    return false;
  }
};

// Position of p along a line with direction d, as a sortable key.
inline Rational along(const Vec& d, const Point& p) { return dot(d, p); }

// Largest power of two strictly below `bound` (bound > 0), capped at 1.
inline Rational power_of_two_below(const Rational& bound) {
  Rational d(1);
  while (d >= bound) d /= Rational(2);
  return d;
}

// Offset step along `normal` from m that crosses none of the lines, except
// those containing m itself with the same normal direction (skipped by
// `skip`).
inline Rational safe_offset(const std::vector<Line>& lines, std::size_t skip, const Point& m,
                            const Vec& normal) {
  std::optional<Rational> bound;
  for (std::size_t j = 0; j < lines.size(); ++j) {
    if (j == skip) continue;
    const Line& l = lines[j];
    Rational slope = l.a() * normal.x + l.b() * normal.y;
    if (slope.sign() == 0) continue;
    Rational r = (l.eval(m) / slope).abs();
    if (!bound || r < *bound) bound = r;
  }
  if (!bound) return Rational(1);
  return power_of_two_below(*bound);
}

}  // namespace detail

// Supporting lines of all polygon edges and all guard rays, deduplicated and
// sorted.
inline std::vector<Line> supporting_lines(const Polygon& p, const GuardSet& g) {
  std::vector<Line> lines;
  auto ring = [&](const Ring& r) {
    for (std::size_t i = 0; i < r.size(); ++i) lines.push_back(Line::through(r[i], r[next_index(i, r.size())]));
  };
  ring(p.outer);
  for (const auto& h : p.holes) ring(h);
  for (const auto& gd : g) {
    lines.emplace_back(gd.wedge.apex, gd.wedge.ray1);
    lines.emplace_back(gd.wedge.apex, gd.wedge.ray2);
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

inline std::vector<Line> guard_lines(const GuardSet& g) {
  std::vector<Line> lines;
  for (const auto& gd : g) {
    lines.emplace_back(gd.wedge.apex, gd.wedge.ray1);
    lines.emplace_back(gd.wedge.apex, gd.wedge.ray2);
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

// One point in every open face of the arrangement, deduplicated by the
// side-of-line sign vector. Each face has an edge on some line; the points
// beside the midpoint of every line segment between consecutive crossings
// (and beyond the extreme crossings) cover all faces.
inline std::vector<Point> arrangement_face_points(const std::vector<Line>& lines) {
  if (lines.empty()) return {Point{Rational(0), Rational(0)}};
  std::map<std::vector<signed char>, Point> faces;
  std::vector<Point> ordered;

  auto signs = [&](const Point& q) {
    double qx = q.x.to_double(), qy = q.y.to_double();
    std::vector<signed char> sig(lines.size());
    for (std::size_t j = 0; j < lines.size(); ++j) sig[j] = static_cast<signed char>(lines[j].side(q, qx, qy));
    return sig;
  };

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& li = lines[i];
    Vec d = li.direction();
    Vec normal{li.a(), li.b()};
    std::vector<std::pair<Rational, Point>> cross_pts;
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (j == i) continue;
      if (auto x = intersect(li, lines[j])) cross_pts.emplace_back(detail::along(d, *x), *x);
    }
    std::sort(cross_pts.begin(), cross_pts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    cross_pts.erase(std::unique(cross_pts.begin(), cross_pts.end(),
                                [](const auto& a, const auto& b) { return a.first == b.first; }),
                    cross_pts.end());
    std::vector<Point> positions;
    if (cross_pts.empty()) {
      positions.push_back(li.some_point());
    } else {
      positions.push_back(cross_pts.front().second - d);
      for (std::size_t k = 0; k + 1 < cross_pts.size(); ++k)
        positions.push_back(midpoint(cross_pts[k].second, cross_pts[k + 1].second));
      positions.push_back(cross_pts.back().second + d);
    }
    for (const auto& m : positions) {
      // Step estimated in floating point, then halved until neither offset
      // point changes side with respect to any other line.
      auto at_m = signs(m);
      double mx = m.x.to_double(), my = m.y.to_double(), est = 1.0;
      for (std::size_t j = 0; j < lines.size(); ++j) {
        if (j == i) continue;
        const Line& l = lines[j];
        double slope = std::fabs(l.a_approx() * li.a_approx() + l.b_approx() * li.b_approx());
        if (slope == 0) continue;
        est = std::min(est, std::fabs(l.a_approx() * mx + l.b_approx() * my + l.c_approx()) / slope);
      }
      int e = 0;
      if (std::isfinite(est) && est > 0) std::frexp(est, &e);
      Rational delta(mpq_class(std::ldexp(1.0, std::max(e - 2, -1000))));
      while (true) {
        Point up = m + delta * normal, down = m - delta * normal;
        auto su = signs(up), sd = signs(down);
        bool ok = true;
        for (std::size_t j = 0; j < lines.size() && ok; ++j)
          if (j != i && (su[j] != at_m[j] || sd[j] != at_m[j])) ok = false;
        if (ok) {
          if (faces.emplace(std::move(su), up).second) ordered.push_back(up);
          if (faces.emplace(std::move(sd), down).second) ordered.push_back(down);
          break;
        }
        delta /= Rational(2);
      }
    }
  }
  return ordered;
}

inline std::vector<FaceSample> face_samples(const Polygon& p, const GuardSet& g) {
  std::vector<Line> lines = supporting_lines(p, g);
  std::vector<detail::FastWedge> wedges;
  wedges.reserve(g.size());
  for (const auto& gd : g) wedges.emplace_back(gd.wedge);
  detail::FastMembership member(p);
  std::vector<FaceSample> out;
  for (auto& q : arrangement_face_points(lines)) {
    double qx = q.x.to_double(), qy = q.y.to_double();
    FaceSample s;
    s.signature.resize(wedges.size());
    for (std::size_t k = 0; k < wedges.size(); ++k) s.signature[k] = wedges[k].contains(q, qx, qy);
    s.inside = member.inside(q, qx, qy);
    s.point = std::move(q);
    out.push_back(std::move(s));
  }
  return out;
}

struct Verification {
  bool ok = true;
  std::optional<FaceSample> counterexample;
  bool counterexample_value = false;  // F at the counterexample
  std::size_t faces_checked = 0;
  std::size_t lines = 0;
};

// F agrees with polygon membership on every open face of the arrangement of
// all supporting lines, hence everywhere off those lines.
inline Verification exact_equivalence(const Polygon& p, const Placement& pl) {
  check_placement_labels(pl);
  detail::CompiledFormula f(pl.formula, pl.guards);
  Verification v;
  v.lines = supporting_lines(p, pl.guards).size();
  for (auto& s : face_samples(p, pl.guards)) {
    ++v.faces_checked;
    bool val = f.eval(s.signature);
    if (val != s.inside && v.ok) {
      v.ok = false;
      v.counterexample_value = val;
      v.counterexample = std::move(s);
      break;
    }
  }
  return v;
}

namespace detail {

inline std::optional<Witness> signature_collision(const std::vector<FaceSample>& samples) {
  std::map<std::vector<bool>, std::pair<const FaceSample*, const FaceSample*>> seen;
  for (const auto& s : samples) {
    auto& slot = seen[s.signature];
    const FaceSample*& mine = s.inside ? slot.first : slot.second;
    if (!mine) mine = &s;
    if (slot.first && slot.second) return Witness{slot.first->point, slot.second->point};
  }
  return std::nullopt;
}

}  // namespace detail

// Ok (nullopt) iff no interior face and exterior face share a guard
// signature, i.e. some monotone formula over the guards defines the polygon.
inline std::optional<Witness> separation_check(const Polygon& p, const GuardSet& g) {
  return detail::signature_collision(face_samples(p, g));
}

// Looks first for a polygon edge whose line carries no guard boundary and
// straddles it with two nearby points; otherwise compares face signatures.
inline std::optional<Witness> witness_finder(const Polygon& p, const GuardSet& g) {
  std::vector<Line> glines = guard_lines(g);
  std::vector<Line> all = supporting_lines(p, g);
  auto try_ring = [&](const Ring& r) -> std::optional<Witness> {
    for (std::size_t e = 0; e < r.size(); ++e) {
      const Point& a = r[e];
      const Point& b = r[next_index(e, r.size())];
      Line le = Line::through(a, b);
      if (std::binary_search(glines.begin(), glines.end(), le)) continue;
      std::size_t self = static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), le) - all.begin());
      Vec d = b - a;
      // Crossing parameters in (0, 1) along the edge.
      std::vector<Rational> ts{Rational(0), Rational(1)};
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (j == self) continue;
        auto x = intersect(le, all[j]);
        if (!x) continue;
        Rational t = dot(*x - a, d) / dot(d, d);
        if (t.sign() > 0 && t < Rational(1)) ts.push_back(t);
      }
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
      Rational tm = (ts[0] + ts[1]) / Rational(2);
      Point m = a + tm * d;
      Vec inward{-d.y, d.x};
      Rational delta = detail::safe_offset(all, self, m, inward);
      Witness w{m + delta * inward, m - delta * inward};
      if (point_in_polygon(p, w.inside) == Location::Inside &&
          point_in_polygon(p, w.outside) == Location::Outside)
        return w;
    }
    return std::nullopt;
  };
  if (auto w = try_ring(p.outer)) return w;
  for (const auto& h : p.holes)
    if (auto w = try_ring(h)) return w;
  return detail::signature_collision(face_samples(p, g));
}

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Number of distinct edge-supporting halfplanes (line plus inner side).
inline std::size_t distinct_halfplanes(const Polygon& p) {
  std::vector<std::pair<Line, int>> hp;
  auto ring = [&](const Ring& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      const Point& a = r[i];
      const Point& b = r[next_index(i, r.size())];
      detail::SideTester st(a, b - a);
      hp.emplace_back(st.line, st.flip);
    }
  };
  ring(p.outer);
  for (const auto& h : p.holes) ring(h);
  std::sort(hp.begin(), hp.end());
  hp.erase(std::unique(hp.begin(), hp.end()), hp.end());
  return hp.size();
}

// Upper bound each strategy promises on the guard count, when it has one.
inline std::optional<std::size_t> claimed_bound(const std::string& strategy, const Polygon& p) {
  const std::size_t n = p.vertex_count(), h = p.hole_count();
  if (strategy == "general") return n <= 3 ? 2 : n + 2 * h - 2;
  if (strategy == "convex") return ceil_div(n, 2);
  if (strategy == "pseudo") return ceil_div(n, 2) + 3;
  if (strategy == "orthogonal") return n < 4 ? 0 : ceil_div(3 * (n - 2), 4);
  if (strategy == "approx2") return distinct_halfplanes(p);
  return std::nullopt;
}

struct CountReport {
  std::size_t n = 0;
  std::size_t guards = 0;
  bool necessary_ok = false;  // n <= g(2g - 1)
  std::optional<std::size_t> claimed;
  bool within_claim = true;
  bool ok() const { return necessary_ok && within_claim; }
};

inline CountReport count_bound_check(const Polygon& p, const Placement& pl) {
  CountReport r;
  r.n = p.vertex_count();
  r.guards = pl.guard_count();
  r.necessary_ok = r.n <= r.guards * (2 * r.guards - (r.guards > 0 ? 1 : 0));
  r.claimed = claimed_bound(pl.strategy, p);
  if (r.claimed) r.within_claim = r.guards <= *r.claimed;
  return r;
}

}  // namespace sculpt
