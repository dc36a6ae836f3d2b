#pragma once

#include "sculpt/polygon.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace sculpt {

// Angle guard: the closed cone swept counter-clockwise from ray1 to ray2.
// `reflex` marks a sweep of more than 180 degrees; an exactly 180 degree
// sweep (opposite rays) is a closed halfplane and is stored with
// reflex = false.
struct Wedge {
  Point apex;
  Vec ray1;
  Vec ray2;
  bool reflex = false;

  static Wedge make(Point apex, Vec ray1, Vec ray2, bool reflex) {
    Wedge w{std::move(apex), std::move(ray1), std::move(ray2), reflex};
    w.check();
    return w;
  }
  // Flag inferred from the rays; opposite rays give a halfplane.
  static Wedge spanning(Point apex, Vec ray1, Vec ray2) {
    int s = cross(ray1, ray2).sign();
    return make(std::move(apex), ray1, ray2, s < 0);
  }

  void check() const {
    if (ray1.is_zero() || ray2.is_zero()) throw PreconditionError("wedge ray with zero direction");
    int s = cross(ray1, ray2).sign();
    if (s == 0) {
      if (dot(ray1, ray2).sign() > 0) throw PreconditionError("wedge rays coincide");
      return;  // halfplane; either flag describes the same set
    }
    if ((s < 0) != reflex) throw PreconditionError("wedge reflex flag inconsistent with its rays");
  }

  bool is_halfplane() const { return cross(ray1, ray2).sign() == 0; }

  // Closed cone membership; the apex is contained.
  bool contains(const Point& p) const {
    Vec d = p - apex;
    int left_of_1 = cross(ray1, d).sign();
    int right_of_2 = cross(d, ray2).sign();
    if (reflex) return left_of_1 >= 0 || right_of_2 >= 0;
    if (is_halfplane()) return left_of_1 >= 0;
    return left_of_1 >= 0 && right_of_2 >= 0;
  }

  friend bool operator==(const Wedge&, const Wedge&) = default;
};

inline bool wedge_contains(const Wedge& w, const Point& p) { return w.contains(p); }

struct Guard {
  std::string label;
  Wedge wedge;
  friend bool operator==(const Guard&, const Guard&) = default;
};

// Ordered guards with unique labels.
class GuardSet {
 public:
  GuardSet() = default;

  void add(std::string label, Wedge w) {
    if (label.empty()) throw PreconditionError("empty guard label");
    if (index_.count(label)) throw PreconditionError("duplicate guard label '" + label + "'");
    index_.emplace(label, guards_.size());
    guards_.push_back({std::move(label), std::move(w)});
  }

  std::size_t size() const { return guards_.size(); }
  bool empty() const { return guards_.empty(); }
  const Guard& operator[](std::size_t i) const { return guards_[i]; }
  const std::vector<Guard>& guards() const { return guards_; }
  auto begin() const { return guards_.begin(); }
  auto end() const { return guards_.end(); }

  bool contains(const std::string& label) const { return index_.count(label) != 0; }
  std::size_t index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw PreconditionError("unknown guard label '" + label + "'");
    return it->second;
  }
  const Wedge& wedge(const std::string& label) const { return guards_[index_of(label)].wedge; }

  friend bool operator==(const GuardSet& a, const GuardSet& b) { return a.guards_ == b.guards_; }

 private:
  std::vector<Guard> guards_;
  std::map<std::string, std::size_t> index_;
};

namespace detail {
inline const Ring& ring_checked(const Polygon& p, std::size_t ring) {
  if (ring > p.holes.size()) throw PreconditionError("ring index out of range");
  return ring == 0 ? p.outer : p.holes[ring - 1];
}
}  // namespace detail

// The polygon's own interior angle at a vertex: rays along the two incident
// edges, covering the interior side.
inline Wedge natural_guard(const Ring& r, std::size_t i) {
  const std::size_t n = r.size();
  if (i >= n) throw PreconditionError("vertex index out of range");
  const Point& v = r[i];
  const Point& next = r[next_index(i, n)];
  const Point& prev = r[prev_index(i, n)];
  return Wedge::spanning(v, next - v, prev - v);
}

inline Wedge natural_guard(const Polygon& p, std::size_t vertex, std::size_t ring = 0) {
  return natural_guard(detail::ring_checked(p, ring), vertex);
}

// Natural guard at every vertex of every ring: "n{i}" on the outer ring,
// "h{r}.{i}" on hole r (from 1).
inline GuardSet natural_vertex_guards(const Polygon& p) {
  GuardSet g;
  for (std::size_t i = 0; i < p.outer.size(); ++i) g.add("n" + std::to_string(i), natural_guard(p.outer, i));
  for (std::size_t r = 0; r < p.holes.size(); ++r)
    for (std::size_t i = 0; i < p.holes[r].size(); ++i)
      g.add("h" + std::to_string(r + 1) + "." + std::to_string(i), natural_guard(p.holes[r], i));
  return g;
}

// 180 degree guard at the edge midpoint covering the edge's closed inner
// halfplane.
inline Wedge edge_guard(const Ring& r, std::size_t e) {
  const std::size_t n = r.size();
  if (e >= n) throw PreconditionError("edge index out of range");
  const Point& a = r[e];
  const Point& b = r[next_index(e, n)];
  return Wedge::make(midpoint(a, b), b - a, a - b, false);
}

inline Wedge edge_guard(const Polygon& p, std::size_t edge, std::size_t ring = 0) {
  return edge_guard(detail::ring_checked(p, ring), edge);
}

}  // namespace sculpt
