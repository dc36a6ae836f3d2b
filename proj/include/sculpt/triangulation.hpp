#pragma once

#include "sculpt/polygon.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace sculpt {

// Triangles index into `points`, which is the outer ring with every hole
// spliced in through a bridge (bridge endpoints appear twice). For a
// hole-free polygon `points` is the outer ring itself.
struct Triangulation {
  Ring points;
  std::vector<std::array<std::size_t, 3>> triangles;  // counter-clockwise
  std::vector<std::vector<std::size_t>> dual;         // adjacency across shared diagonals

  std::size_t size() const { return triangles.size(); }
};

namespace detail {

// Strict test: direction from ring[k] toward `target` lies inside the
// interior angle at k (interior on the left of the ring edges).
inline bool in_open_cone(const Ring& ring, std::size_t k, const Point& target) {
  const std::size_t n = ring.size();
  const Point& p = ring[prev_index(k, n)];
  const Point& a = ring[k];
  const Point& q = ring[next_index(k, n)];
  if (orient(p, a, q) >= 0) return orient(a, q, target) > 0 && orient(p, a, target) > 0;
  return orient(a, q, target) > 0 || orient(p, a, target) > 0;
}

inline bool crosses_any(const Point& a, const Point& b, const Ring& ring) {
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (segment_properly_intersects(a, b, ring[i], ring[next_index(i, ring.size())])) return true;
  return false;
}

// Splices every hole into the outer ring along mutually visible bridges.
// For each hole (input order) the bridge is the lexicographically smallest
// valid (hole vertex, ring position) pair.
inline Ring join_holes(const Polygon& poly) {
  Ring ring = poly.outer;
  for (std::size_t h = 0; h < poly.holes.size(); ++h) {
    const Ring& hole = poly.holes[h];
    bool done = false;
    for (std::size_t j = 0; j < hole.size() && !done; ++j) {
      for (std::size_t k = 0; k < ring.size() && !done; ++k) {
        const Point& a = hole[j];
        const Point& b = ring[k];
        if (!in_open_cone(ring, k, a) || !in_open_cone(hole, j, b)) continue;
        if (crosses_any(a, b, ring)) continue;
        bool blocked = false;
        for (std::size_t g = h; g < poly.holes.size() && !blocked; ++g)
          blocked = crosses_any(a, b, poly.holes[g]);
        if (blocked) continue;
        if (point_in_polygon(poly, midpoint(a, b)) != Location::Inside) continue;
        Ring joined(ring.begin(), ring.begin() + static_cast<std::ptrdiff_t>(k) + 1);
        for (std::size_t t = 0; t <= hole.size(); ++t) joined.push_back(hole[(j + t) % hole.size()]);
        joined.insert(joined.end(), ring.begin() + static_cast<std::ptrdiff_t>(k), ring.end());
        ring = std::move(joined);
        done = true;
      }
    }
    if (!done) throw Error("no bridge found for hole " + std::to_string(h));
  }
  return ring;
}

}  // namespace detail

inline std::vector<std::vector<std::size_t>> dual_graph(
    const std::vector<std::array<std::size_t, 3>>& triangles) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> owner;
  std::vector<std::vector<std::size_t>> dual(triangles.size());
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    for (int e = 0; e < 3; ++e) {
      std::size_t u = triangles[t][e], v = triangles[t][(e + 1) % 3];
      auto key = std::minmax(u, v);
      auto [it, inserted] = owner.emplace(key, t);
      if (!inserted) {
        dual[t].push_back(it->second);
        dual[it->second].push_back(t);
      }
    }
  }
  for (auto& adj : dual) std::sort(adj.begin(), adj.end());
  return dual;
}

// Ear clipping over a (weakly) simple counter-clockwise ring.
inline std::vector<std::array<std::size_t, 3>> ear_clip(const Ring& pts) {
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<std::array<std::size_t, 3>> tris;
  std::size_t start = 0;
  while (idx.size() > 3) {
    const std::size_t m = idx.size();
    bool clipped = false;
    for (std::size_t s = 0; s < m && !clipped; ++s) {
      std::size_t pos = (start + s) % m;
      std::size_t ia = idx[prev_index(pos, m)], ib = idx[pos], ic = idx[next_index(pos, m)];
      const Point &a = pts[ia], &b = pts[ib], &c = pts[ic];
      if (orient(a, b, c) <= 0) continue;
      bool ok = true;
      for (std::size_t t = 0; t < m && ok; ++t) {
        const Point& v = pts[idx[t]];
        if (v == a || v == b || v == c) continue;
        if (orient(a, b, v) >= 0 && orient(b, c, v) >= 0 && orient(c, a, v) >= 0) ok = false;
      }
      for (std::size_t t = 0; t < m && ok; ++t) {
        const Point& u = pts[idx[t]];
        const Point& w = pts[idx[next_index(t, m)]];
        if (segment_properly_intersects(a, c, u, w)) ok = false;
      }
      if (!ok) continue;
      tris.push_back({ia, ib, ic});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(pos));
      start = pos == 0 ? 0 : pos - 1;
      if (start >= idx.size()) start = 0;
      clipped = true;
    }
    if (!clipped) throw Error("ear clipping found no ear");
  }
  if (orient(pts[idx[0]], pts[idx[1]], pts[idx[2]]) <= 0)
    throw Error("ear clipping left a degenerate triangle");
  tris.push_back({idx[0], idx[1], idx[2]});
  return tris;
}

// n + 2(h - 1) triangles; for a hole-free polygon the dual is a tree.
inline Triangulation triangulate(const Polygon& p) {
  require_valid(p);
  Triangulation t;
  t.points = detail::join_holes(p);
  t.triangles = ear_clip(t.points);
  t.dual = dual_graph(t.triangles);
  return t;
}

// Boundary ring (counter-clockwise, point coordinates) of a connected set of
// triangles of `t`.
inline Ring union_boundary(const Triangulation& t, const std::vector<std::size_t>& tris) {
  std::map<std::pair<std::size_t, std::size_t>, int> directed;
  for (std::size_t k : tris)
    for (int e = 0; e < 3; ++e) directed[{t.triangles[k][e], t.triangles[k][(e + 1) % 3]}]++;
  std::map<std::size_t, std::size_t> succ;
  for (const auto& [edge, count] : directed)
    if (!directed.count({edge.second, edge.first})) succ[edge.first] = edge.second;
  if (succ.empty()) throw Error("empty triangle set");
  // Start at the smallest index for determinism.
  std::size_t first = succ.begin()->first, cur = first;
  Ring ring;
  do {
    ring.push_back(t.points[cur]);
    auto it = succ.find(cur);
    if (it == succ.end() || ring.size() > succ.size()) throw Error("triangle set boundary is not a single cycle");
    cur = it->second;
  } while (cur != first);
  if (ring.size() != succ.size()) throw Error("triangle set boundary is not a single cycle");
  return ring;
}

}  // namespace sculpt
