#pragma once

#include "sculpt/placement.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sculpt {

enum class PolygonKind { Convex, Orthogonal, Simple, PseudoTriangle };

inline PolygonKind parse_polygon_kind(const std::string& s) {
  if (s == "convex") return PolygonKind::Convex;
  if (s == "orthogonal") return PolygonKind::Orthogonal;
  if (s == "simple") return PolygonKind::Simple;
  if (s == "pseudo-triangle" || s == "pseudo_triangle" || s == "pseudo") return PolygonKind::PseudoTriangle;
  throw PreconditionError("unknown polygon kind '" + s + "'");
}

namespace detail {

// Portable draws from a fixed engine; distributions in <random> are not
// reproducible across standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : eng_(seed) {}
  // Uniform-ish integer in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return (eng_() >> 17) & 1u; }

 private:
  std::mt19937_64 eng_;
};

using Cell = std::pair<int, int>;

// Counter-clockwise boundary of a union of unit grid cells (simply
// connected, no corner-only contacts), mapped through coordinate tables.
inline Ring cells_boundary(const std::set<Cell>& cells, const std::vector<Rational>& xs,
                           const std::vector<Rational>& ys) {
  std::map<Cell, Cell> succ;
  auto filled = [&](int x, int y) { return cells.count({x, y}) != 0; };
  for (const auto& [x, y] : cells) {
    if (!filled(x, y - 1)) succ[{x, y}] = {x + 1, y};
    if (!filled(x + 1, y)) succ[{x + 1, y}] = {x + 1, y + 1};
    if (!filled(x, y + 1)) succ[{x + 1, y + 1}] = {x, y + 1};
    if (!filled(x - 1, y)) succ[{x, y + 1}] = {x, y};
  }
  Cell start = succ.begin()->first, cur = start;
  Ring r;
  do {
    r.push_back({xs[static_cast<std::size_t>(cur.first)], ys[static_cast<std::size_t>(cur.second)]});
    cur = succ.at(cur);
  } while (cur != start);
  if (r.size() != succ.size()) throw Error("cell union boundary is not a single cycle");
  return remove_straight_vertices(r);
}

inline std::vector<Rational> integer_table(std::size_t n) {
  std::vector<Rational> t;
  for (std::size_t i = 0; i < n; ++i) t.emplace_back(static_cast<long>(i));
  return t;
}

inline Polygon random_convex(std::size_t n, Draw& d) {
  if (n < 3) throw PreconditionError("convex polygon needs n >= 3");
  const long span = 3 * static_cast<long>(n);
  std::set<long> ks;
  while (ks.size() < n) ks.insert(d.range(-span, span));
  Ring r;
  const Rational scale(100);
  for (long k : ks) {
    Rational t(k, static_cast<long>(n));
    Rational q = Rational(1) + t * t;
    r.push_back({scale * (Rational(1) - t * t) / q, scale * Rational(2) * t / q});
  }
  return Polygon(r);
}

inline bool any_three_collinear(const std::vector<Point>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (orient(pts[i], pts[j], pts[k]) == 0) return true;
  return false;
}


// Random points in general position, untangled by 2-opt moves. Coordinates
// are small integers, so the untangling runs on machine integers.
inline Polygon random_simple(std::size_t n, Draw& d) {
  if (n < 3) throw PreconditionError("simple polygon needs n >= 3");
  using IP = std::pair<long long, long long>;
  auto orient_i = [](const IP& a, const IP& b, const IP& c) {
    long long v = (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
    return (v > 0) - (v < 0);
  };
  const long range = 8 * static_cast<long>(n);
  std::vector<IP> pts;
  while (pts.size() < n) {
    IP p{d.range(0, range), d.range(0, range)};
    bool bad = false;
    for (std::size_t i = 0; i < pts.size() && !bad; ++i) {
      if (pts[i] == p) bad = true;
      for (std::size_t j = i + 1; j < pts.size() && !bad; ++j) bad = orient_i(pts[i], pts[j], p) == 0;
    }
    if (!bad) pts.push_back(p);
  }
  // No three points are collinear, so crossings are proper.
  auto crosses = [&](const IP& a, const IP& b, const IP& c, const IP& e) {
    return orient_i(a, b, c) * orient_i(a, b, e) < 0 && orient_i(c, e, a) * orient_i(c, e, b) < 0;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        if (crosses(pts[i], pts[i + 1], pts[j], pts[(j + 1) % n])) {
          std::reverse(pts.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                       pts.begin() + static_cast<std::ptrdiff_t>(j) + 1);
          changed = true;
        }
      }
  }
  Ring r;
  for (const auto& [x, y] : pts) r.push_back({Rational(static_cast<long>(x)), Rational(static_cast<long>(y))});
  if (signed_area2(r).sign() < 0) std::reverse(r.begin(), r.end());
  return Polygon(r);
}

inline bool pinch_free_and_simply_connected(const std::set<Cell>& cells, int w) {
  auto filled = [&](int x, int y) { return cells.count({x, y}) != 0; };
  for (const auto& [x, y] : cells)
    for (int dx : {-1, 1})
      for (int dy : {-1, 1})
        if (filled(x + dx, y + dy) && !filled(x + dx, y) && !filled(x, y + dy)) return false;
  // Every empty cell of the padded grid must reach the border.
  std::set<Cell> seen{{-1, -1}};
  std::vector<Cell> stack{{-1, -1}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    for (auto [dx, dy] : {Cell{1, 0}, Cell{-1, 0}, Cell{0, 1}, Cell{0, -1}}) {
      int nx = x + dx, ny = y + dy;
      if (nx < -1 || ny < -1 || nx > w || ny > w || filled(nx, ny)) continue;
      if (seen.insert({nx, ny}).second) stack.push_back({nx, ny});
    }
  }
  return seen.size() + cells.size() == static_cast<std::size_t>((w + 2) * (w + 2));
}

// Random polyomino grown cell by cell until its boundary has n corners; grid
// columns and rows get random widths.
inline Polygon random_orthogonal(std::size_t n, Draw& d) {
  if (n < 4 || n % 2) throw PreconditionError("orthogonal polygon needs even n >= 4");
  const int w = static_cast<int>(n) / 2 + 2;
  auto table = [&] {
    std::vector<Rational> t{Rational(0)};
    for (int i = 0; i < w + 1; ++i) t.push_back(t.back() + Rational(d.range(1, 4)));
    return t;
  };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::set<Cell> cells{{w / 2, w / 2}};
    auto ints = integer_table(static_cast<std::size_t>(w) + 2);
    for (int step = 0; step < 4 * w * w; ++step) {
      std::size_t corners = cells_boundary(cells, ints, ints).size();
      if (corners == n) {
        auto xs = table(), ys = table();
        return Polygon(cells_boundary(cells, xs, ys));
      }
      if (corners > n + 6) break;
      std::vector<Cell> frontier;
      for (const auto& [x, y] : cells)
        for (auto [dx, dy] : {Cell{1, 0}, Cell{-1, 0}, Cell{0, 1}, Cell{0, -1}}) {
          Cell c{x + dx, y + dy};
          if (c.first < 0 || c.second < 0 || c.first >= w || c.second >= w || cells.count(c)) continue;
          frontier.push_back(c);
        }
      if (frontier.empty()) break;
      Cell c = frontier[static_cast<std::size_t>(d.range(0, static_cast<long>(frontier.size()) - 1))];
      cells.insert(c);
      if (!pinch_free_and_simply_connected(cells, w)) cells.erase(c);
    }
  }
  throw Error("orthogonal generator did not reach the requested vertex count");
}

// Three convex corners joined by inward-bending chains with the requested
// numbers of reflex vertices.
inline Polygon pseudo_triangle_from(const std::vector<std::size_t>& counts,
                                    const std::vector<Rational>& bends) {
  const Point corners[3] = {{Rational(0), Rational(0)}, {Rational(120), Rational(0)}, {Rational(60), Rational(104)}};
  const Point center{Rational(60), Rational(104, 3)};
  Ring r;
  for (std::size_t i = 0; i < 3; ++i) {
    const Point& a = corners[i];
    const Point& b = corners[(i + 1) % 3];
    Vec pull = center - midpoint(a, b);
    r.push_back(a);
    const long m = static_cast<long>(counts[i]);
    for (long k = 1; k <= m; ++k) {
      Rational s(k, m + 1);
      Rational w = Rational(4) * s * (Rational(1) - s) * bends[i];
      r.push_back(a + s * (b - a) + w * pull);
    }
  }
  return Polygon(r);
}

inline Polygon random_pseudo_triangle(std::size_t n, Draw& d) {
  if (n < 6) throw PreconditionError("pseudo-triangle generator needs n >= 6");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::size_t> counts(3, 0);
    for (std::size_t k = 0; k < n - 3; ++k) counts[static_cast<std::size_t>(d.range(0, 2))]++;
    std::vector<Rational> bends;
    for (int i = 0; i < 3; ++i) bends.emplace_back(d.range(10, 60), 100);
    Polygon p = pseudo_triangle_from(counts, bends);
    if (validate(p)) continue;
    if (kernel(p)) return p;
  }
  throw Error("pseudo-triangle generator failed");
}

}  // namespace detail

inline Polygon gen_random(PolygonKind kind, std::size_t n, std::uint64_t seed) {
  detail::Draw d(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(kind) + 1);
  Polygon p;
  switch (kind) {
    case PolygonKind::Convex: p = detail::random_convex(n, d); break;
    case PolygonKind::Simple: p = detail::random_simple(n, d); break;
    case PolygonKind::Orthogonal: p = detail::random_orthogonal(n, d); break;
    case PolygonKind::PseudoTriangle: p = detail::random_pseudo_triangle(n, d); break;
  }
  require_valid(p);
  return p;
}

// Convex outer ring with up to `holes` small clockwise triangular holes.
inline Polygon gen_holed(std::size_t outer_n, std::size_t holes, std::uint64_t seed) {
  detail::Draw d(seed * 0xD1B54A32D192ED03ull + 7);
  Polygon p = detail::random_convex(outer_n, d);
  for (int attempt = 0; attempt < 1000 && p.holes.size() < holes; ++attempt) {
    Point c{Rational(d.range(-50, 40)), Rational(d.range(-50, 40))};
    Ring h{c, c + Point{Rational(0), Rational(d.range(3, 9))}, c + Point{Rational(d.range(3, 9)), Rational(d.range(-2, 2))}};
    if (orient(h[0], h[1], h[2]) >= 0) continue;
    Polygon q = p;
    q.holes.push_back(h);
    if (!validate(q)) p = std::move(q);
  }
  require_valid(p);
  return p;
}

struct ZigzagInstance {
  Polygon polygon;
  Placement placement;
  std::size_t k = 0;
};

// Comb over a 4k x 4k unit grid: a bottom bar plus k teeth that step left
// and right on every row. Guards are the 16k halfplanes on the two sides of
// every grid line, each with its apex on the bottom or left grid line; the
// formula is the union of the polygon's cells, each cell being the
// conjunction of its four sides.
inline ZigzagInstance gen_zigzag(std::size_t k) {
  if (k < 1) throw PreconditionError("zigzag needs k >= 1");
  const int g = 4 * static_cast<int>(k);  // grid lines 0 .. g-1
  std::set<detail::Cell> cells;
  for (int x = 0; x < g - 1; ++x) cells.insert({x, 0});
  for (int b = 0; b < static_cast<int>(k); ++b)
    for (int y = 1; y < g - 1; ++y) {
      int x0 = (y % 2 == 1) ? 4 * b + 1 : 4 * b;
      cells.insert({x0, y});
      cells.insert({x0 + 1, y});
    }
  auto ints = detail::integer_table(static_cast<std::size_t>(g));
  ZigzagInstance z;
  z.k = k;
  z.polygon = Polygon(detail::cells_boundary(cells, ints, ints));

  // Halfplane guards on both sides of every grid line, each standing at the
  // first polygon vertex on its line (the axis crossing if there is none).
  GuardSet& gs = z.placement.guards;
  const Rational zero(0), one(1);
  auto apex_on = [&](bool vertical, const Rational& v) {
    for (const auto& q : z.polygon.outer)
      if ((vertical ? q.x : q.y) == v) return q;
    return vertical ? Point{v, zero} : Point{zero, v};
  };
  for (int c = 0; c < g; ++c) {
    Point a = apex_on(true, Rational(c));
    gs.add("xge" + std::to_string(c), Wedge::make(a, {zero, -one}, {zero, one}, false));
    gs.add("xle" + std::to_string(c), Wedge::make(a, {zero, one}, {zero, -one}, false));
  }
  for (int r = 0; r < g; ++r) {
    Point a = apex_on(false, Rational(r));
    gs.add("yge" + std::to_string(r), Wedge::make(a, {one, zero}, {-one, zero}, false));
    gs.add("yle" + std::to_string(r), Wedge::make(a, {-one, zero}, {one, zero}, false));
  }
  std::vector<Formula> terms;
  for (const auto& [x, y] : cells)
    terms.push_back(Formula::all_of({Formula::leaf("xge" + std::to_string(x)), Formula::leaf("xle" + std::to_string(x + 1)),
                                     Formula::leaf("yge" + std::to_string(y)), Formula::leaf("yle" + std::to_string(y + 1))}));
  z.placement.formula = Formula::any_of(std::move(terms));
  z.placement.strategy = "zigzag";
  z.placement.certificate_bound = 4;
  return z;
}

struct CounterexamplePentagon {
  Polygon polygon;
  Point inside;
  Point outside;
};

// Pentagon whose five natural guards cannot tell `inside` from `outside`:
// the guards at vertices 0 and 4 see neither point, the other three see
// both. Found by a seeded search over small integer pentagons.
inline CounterexamplePentagon gen_counterexample_pentagon() {
  auto P = [](long x, long y) { return Point{Rational(x), Rational(y)}; };
  return {Polygon(Ring{P(1, 10), P(4, 7), P(4, 4), P(8, 6), P(10, 5)}),
          Point{Rational(9, 2), Rational(11, 2)}, Point{Rational(173, 19), Rational(172, 19)}};
}

}  // namespace sculpt
