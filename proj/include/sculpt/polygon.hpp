#pragma once

#include "sculpt/geometry.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sculpt {

using Ring = std::vector<Point>;

// Outer ring counter-clockwise, hole rings clockwise. The interior of the
// region is on the left of every directed edge.
struct Polygon {
  Ring outer;
  std::vector<Ring> holes;

  Polygon() = default;
  explicit Polygon(Ring o, std::vector<Ring> h = {}) : outer(std::move(o)), holes(std::move(h)) {}

  std::size_t vertex_count() const {
    std::size_t n = outer.size();
    for (const auto& h : holes) n += h.size();
    return n;
  }
  std::size_t hole_count() const { return holes.size(); }

  friend bool operator==(const Polygon&, const Polygon&) = default;
};

inline std::size_t next_index(std::size_t i, std::size_t n) { return i + 1 == n ? 0 : i + 1; }
inline std::size_t prev_index(std::size_t i, std::size_t n) { return i == 0 ? n - 1 : i - 1; }

// Twice the signed area; positive for counter-clockwise rings.
inline Rational signed_area2(const Ring& r) {
  Rational s;
  for (std::size_t i = 0; i < r.size(); ++i) s += cross(r[i], r[next_index(i, r.size())]);
  return s;
}

inline Rational area(const Polygon& p) {
  Rational a = signed_area2(p.outer);
  for (const auto& h : p.holes) a += signed_area2(h);
  return a / Rational(2);
}

// All turns are left turns or straight; the ring must be counter-clockwise.
inline bool is_convex(const Ring& r) {
  const std::size_t n = r.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (orient(r[prev_index(i, n)], r[i], r[next_index(i, n)]) < 0) return false;
  return signed_area2(r).sign() > 0;
}

inline bool is_reflex(const Ring& r, std::size_t i) {
  const std::size_t n = r.size();
  return orient(r[prev_index(i, n)], r[i], r[next_index(i, n)]) < 0;
}

inline bool is_orthogonal(const Polygon& p) {
  auto ring_ok = [](const Ring& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      const Point& a = r[i];
      const Point& b = r[next_index(i, r.size())];
      if (a.x != b.x && a.y != b.y) return false;
    }
    return true;
  };
  if (!ring_ok(p.outer)) return false;
  return std::all_of(p.holes.begin(), p.holes.end(), ring_ok);
}

// Drops vertices whose two incident edges are collinear and continue in the
// same direction.
inline Ring remove_straight_vertices(Ring r) {
  bool changed = true;
  while (changed && r.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const std::size_t n = r.size();
      const Point& a = r[prev_index(i, n)];
      const Point& b = r[i];
      const Point& c = r[next_index(i, n)];
      if (orient(a, b, c) == 0 && dot(b - a, c - b).sign() > 0) {
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return r;
}

struct Violation {
  enum class Kind {
    TooFewVertices,
    RepeatedVertex,
    SelfIntersection,
    Orientation,
    HoleOutside,
    HolesOverlap,
  };
  Kind kind;
  std::size_t ring = 0;  // 0 = outer, k = hole k-1
  std::size_t edge = 0;
  std::size_t other_ring = 0;
  std::size_t other_edge = 0;
  std::optional<Point> point;

  std::string message() const {
    std::ostringstream os;
    switch (kind) {
      case Kind::TooFewVertices: os << "ring " << ring << " has fewer than 3 vertices"; break;
      case Kind::RepeatedVertex:
        os << "ring " << ring << " repeats vertex " << edge;
        break;
      case Kind::SelfIntersection:
        os << "edge " << ring << ":" << edge << " intersects edge " << other_ring << ":"
           << other_edge;
        break;
      case Kind::Orientation:
        os << "ring " << ring << (ring == 0 ? " must be counter-clockwise" : " must be clockwise");
        break;
      case Kind::HoleOutside: os << "hole ring " << ring << " is not strictly inside the outer ring"; break;
      case Kind::HolesOverlap: os << "hole rings " << ring << " and " << other_ring << " overlap"; break;
    }
    if (point) os << " at " << *point;
    return os.str();
  }
};

namespace detail {

inline const Ring& ring_at(const Polygon& p, std::size_t r) {
  return r == 0 ? p.outer : p.holes[r - 1];
}

// Classification against a single ring treated as a closed region:
// +1 inside, 0 on the boundary, -1 outside. Orientation is ignored.
inline int ring_location(const Ring& r, const Point& q) {
  bool inside = false;
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = r[i];
    const Point& b = r[next_index(i, n)];
    if (on_segment(a, b, q)) return 0;
    // Half-open rule on y so vertices are counted once.
    bool a_above = a.y > q.y, b_above = b.y > q.y;
    if (a_above != b_above) {
      // x-coordinate of the crossing compared with q.x, without division.
      int s = orient(a, b, q);
      if (b.y > a.y ? s > 0 : s < 0) inside = !inside;
    }
  }
  return inside ? 1 : -1;
}

}  // namespace detail

// Checks every invariant of Polygon and reports the first violation.
inline std::optional<Violation> validate(const Polygon& p) {
  using K = Violation::Kind;
  const std::size_t rings = 1 + p.holes.size();
  for (std::size_t r = 0; r < rings; ++r) {
    const Ring& ring = detail::ring_at(p, r);
    if (ring.size() < 3) return Violation{K::TooFewVertices, r};
    std::vector<Point> sorted = ring;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
      std::size_t idx = static_cast<std::size_t>(std::find(ring.begin(), ring.end(), *it) - ring.begin());
      return Violation{K::RepeatedVertex, r, idx, r, idx, *it};
    }
  }
  // Pairwise edge tests across all rings.
  for (std::size_t r1 = 0; r1 < rings; ++r1) {
    const Ring& A = detail::ring_at(p, r1);
    for (std::size_t i = 0; i < A.size(); ++i) {
      const Point& a = A[i];
      const Point& b = A[next_index(i, A.size())];
      for (std::size_t r2 = r1; r2 < rings; ++r2) {
        const Ring& B = detail::ring_at(p, r2);
        for (std::size_t j = (r1 == r2 ? i + 1 : 0); j < B.size(); ++j) {
          const Point& c = B[j];
          const Point& d = B[next_index(j, B.size())];
          bool adjacent = r1 == r2 && (j == next_index(i, A.size()) || i == next_index(j, A.size()));
          if (adjacent) {
            // Adjacent edges share one endpoint; they must not fold back.
            const Point& shared = (j == next_index(i, A.size())) ? b : a;
            const Point& u = (shared == b) ? a : b;
            const Point& w = (shared == c) ? d : c;
            if (orient(shared, u, w) == 0 && dot(u - shared, w - shared).sign() > 0)
              return Violation{K::SelfIntersection, r1, i, r2, j, shared};
            continue;
          }
          if (segments_intersect(a, b, c, d)) {
            std::optional<Point> at;
            auto li = line_intersection(DirectedLine::through(a, b), DirectedLine::through(c, d));
            if (li.point) at = li.point;
            else for (const Point* q : {&a, &b, &c, &d})
              if (on_segment(a, b, *q) && on_segment(c, d, *q)) { at = *q; break; }
            K kind = K::SelfIntersection;
            if (r1 != r2) kind = r1 == 0 ? K::HoleOutside : K::HolesOverlap;
            return Violation{kind, r1, i, r2, j, at};
          }
        }
      }
    }
  }
  if (signed_area2(p.outer).sign() <= 0) return Violation{K::Orientation, 0};
  for (std::size_t h = 0; h < p.holes.size(); ++h) {
    if (signed_area2(p.holes[h]).sign() >= 0) return Violation{K::Orientation, h + 1};
    if (detail::ring_location(p.outer, p.holes[h][0]) != 1)
      return Violation{K::HoleOutside, h + 1, 0, 0, 0, p.holes[h][0]};
    for (std::size_t g = 0; g < p.holes.size(); ++g) {
      if (g == h) continue;
      if (detail::ring_location(p.holes[g], p.holes[h][0]) != -1)
        return Violation{K::HolesOverlap, std::min(g, h) + 1, 0, std::max(g, h) + 1, 0,
                         p.holes[h][0]};
    }
  }
  return std::nullopt;
}

inline void require_valid(const Polygon& p) {
  if (auto v = validate(p)) throw PreconditionError("invalid polygon: " + v->message());
}

enum class Location { Inside, Boundary, Outside };

// Exact classification against the closed region (outer minus open holes).
inline Location point_in_polygon(const Polygon& p, const Point& q) {
  int o = detail::ring_location(p.outer, q);
  if (o == 0) return Location::Boundary;
  if (o < 0) return Location::Outside;
  for (const auto& h : p.holes) {
    int l = detail::ring_location(h, q);
    if (l == 0) return Location::Boundary;
    if (l > 0) return Location::Outside;
  }
  return Location::Inside;
}

// Andrew's monotone chain; counter-clockwise, collinear points dropped.
inline Ring convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw PreconditionError("convex hull needs at least 3 distinct points");
  Ring h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) throw PreconditionError("convex hull of collinear points");
  return h;
}

// True when segment (ring[i], ring[j]) is a diagonal: it lies in the
// interior of the ring except for its endpoints.
inline bool is_diagonal(const Ring& r, std::size_t i, std::size_t j) {
  const std::size_t n = r.size();
  if (i == j || next_index(i, n) == j || next_index(j, n) == i) return false;
  const Point& a = r[i];
  const Point& b = r[j];
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t k2 = next_index(k, n);
    const Point& c = r[k];
    const Point& d = r[k2];
    bool touches_i = (k == i || k2 == i), touches_j = (k == j || k2 == j);
    if (touches_i || touches_j) {
      // Incident edge: only a collinear overlap is a problem.
      const Point& s = touches_i ? a : b;
      const Point& other = (c == s) ? d : c;
      const Point& far = touches_i ? b : a;
      if (orient(s, other, far) == 0 && dot(other - s, far - s).sign() > 0) return false;
      if (touches_i && touches_j) return false;
      continue;
    }
    if (segments_intersect(a, b, c, d)) return false;
  }
  // Locally inside the interior angle at i.
  const Point& p = r[prev_index(i, n)];
  const Point& q = r[next_index(i, n)];
  if (orient(p, a, q) >= 0) return orient(a, q, b) > 0 && orient(p, a, b) > 0;
  return !(orient(a, q, b) <= 0 && orient(p, a, b) <= 0);
}

// Intersection of the closed inner halfplanes of all edges. Empty when the
// result has no interior.
inline std::optional<Polygon> kernel(const Polygon& p) {
  if (!p.holes.empty()) throw PreconditionError("kernel requires a hole-free polygon");
  const Ring& r = p.outer;
  Rational minx = r[0].x, maxx = r[0].x, miny = r[0].y, maxy = r[0].y;
  for (const auto& v : r) {
    minx = std::min(minx, v.x); maxx = std::max(maxx, v.x);
    miny = std::min(miny, v.y); maxy = std::max(maxy, v.y);
  }
  Ring cur = {{minx, miny}, {maxx, miny}, {maxx, maxy}, {minx, maxy}};
  for (std::size_t i = 0; i < r.size() && !cur.empty(); ++i) {
    const Point& a = r[i];
    const Point& b = r[next_index(i, r.size())];
    DirectedLine edge = DirectedLine::through(a, b);
    Ring next;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      const Point& s = cur[k];
      const Point& t = cur[next_index(k, cur.size())];
      int ss = edge.side(s), st = edge.side(t);
      if (ss >= 0) next.push_back(s);
      if ((ss > 0 && st < 0) || (ss < 0 && st > 0)) {
        auto li = line_intersection(edge, DirectedLine::through(s, t));
        next.push_back(*li.point);
      }
    }
    cur.clear();
    for (auto& v : next)
      if (cur.empty() || cur.back() != v) cur.push_back(std::move(v));
    while (cur.size() > 1 && cur.front() == cur.back()) cur.pop_back();
  }
  if (cur.size() < 3 || signed_area2(cur).sign() <= 0) return std::nullopt;
  return Polygon(remove_straight_vertices(cur));
}

}  // namespace sculpt
