#pragma once

#include "sculpt/triangulation.hpp"

#include <set>
#include <string>
#include <vector>

namespace sculpt {

enum class PieceKind { Triangle, Tetragon, Pentagon, HexagonStar };

inline std::string to_string(PieceKind k) {
  switch (k) {
    case PieceKind::Triangle: return "triangle";
    case PieceKind::Tetragon: return "tetragon";
    case PieceKind::Pentagon: return "pentagon";
    case PieceKind::HexagonStar: return "hexagon-star";
  }
  return "?";
}

struct SubpolygonPartition {
  std::vector<Polygon> pieces;
  std::vector<PieceKind> kinds;
  std::vector<std::vector<std::size_t>> triangles;  // triangle indices per piece
};

// Repeatedly trims leaves off the dual tree: a leaf whose neighbour has
// degree 2 (and a non-leaf next neighbour) goes out with it as a tetragon; a
// leaf whose degree-3 neighbour has exactly one other leaf goes out with
// both as a pentagon. Stops at a 2-node tree, a 3-node path or a 4-node
// star. Among qualifying leaves the smallest triangle index wins.
inline SubpolygonPartition trim_partition(const Triangulation& t) {
  const std::size_t n = t.size();
  if (n < 2) throw PreconditionError("trim_partition needs a polygon with at least 4 vertices");

  std::vector<std::set<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) adj[i].insert(t.dual[i].begin(), t.dual[i].end());
  std::set<std::size_t> alive;
  for (std::size_t i = 0; i < n; ++i) alive.insert(i);
  std::size_t edges = 0;
  for (const auto& a : adj) edges += a.size();
  if (edges / 2 + 1 != n) throw PreconditionError("dual graph of the triangulation is not a tree");

  SubpolygonPartition out;
  auto emit = [&](std::vector<std::size_t> nodes, PieceKind kind) {
    std::sort(nodes.begin(), nodes.end());
    out.pieces.emplace_back(union_boundary(t, nodes));
    out.kinds.push_back(kind);
    out.triangles.push_back(std::move(nodes));
  };
  auto remove = [&](std::size_t v) {
    for (std::size_t u : adj[v]) adj[u].erase(v);
    adj[v].clear();
    alive.erase(v);
  };
  auto is_leaf = [&](std::size_t v) { return adj[v].size() == 1; };

  while (true) {
    const std::size_t m = alive.size();
    if (m == 2) { emit({alive.begin(), alive.end()}, PieceKind::Tetragon); break; }
    if (m == 3) { emit({alive.begin(), alive.end()}, PieceKind::Pentagon); break; }
    if (m == 4) {
      bool star = false;
      for (std::size_t v : alive) star = star || adj[v].size() == 3;
      if (star) { emit({alive.begin(), alive.end()}, PieceKind::HexagonStar); break; }
    }
    bool trimmed = false;
    for (std::size_t v : alive) {
      if (!is_leaf(v)) continue;
      std::size_t u = *adj[v].begin();
      if (adj[u].size() == 2) {
        std::size_t w = *adj[u].begin() == v ? *adj[u].rbegin() : *adj[u].begin();
        if (is_leaf(w)) continue;
        emit({v, u}, PieceKind::Tetragon);
        remove(v); remove(u);
        trimmed = true;
        break;
      }
      if (adj[u].size() == 3) {
        std::vector<std::size_t> others;
        for (std::size_t x : adj[u]) if (x != v) others.push_back(x);
        int leaves = is_leaf(others[0]) + is_leaf(others[1]);
        if (leaves != 1) continue;
        std::size_t z = is_leaf(others[0]) ? others[0] : others[1];
        emit({v, u, z}, PieceKind::Pentagon);
        remove(v); remove(z); remove(u);
        trimmed = true;
        break;
      }
    }
    if (!trimmed) throw Error("trim_partition: no trimmable leaf (dual tree malformed)");
  }
  return out;
}

inline SubpolygonPartition trim_partition(const Polygon& p, const Triangulation& t) {
  if (p.vertex_count() < 4) throw PreconditionError("trim_partition needs n >= 4");
  return trim_partition(t);
}

}  // namespace sculpt
