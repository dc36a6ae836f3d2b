#pragma once

#include "sculpt/placement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace sculpt {

namespace detail {

// Splits a dual-tree component at the edge that best balances the two sides
// until every component has at most `cap` triangles.
inline void centroid_split(const std::vector<std::vector<std::size_t>>& dual, std::vector<std::size_t> nodes,
                           std::size_t cap, std::vector<std::vector<std::size_t>>& out) {
  std::sort(nodes.begin(), nodes.end());
  if (nodes.size() <= cap) {
    out.push_back(std::move(nodes));
    return;
  }
  auto member = [&](std::size_t v) { return std::binary_search(nodes.begin(), nodes.end(), v); };
  // Iterative DFS from the smallest node: order, parents, subtree sizes.
  std::map<std::size_t, std::size_t> parent, size;
  std::vector<std::size_t> order, stack{nodes.front()};
  parent[nodes.front()] = nodes.front();
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (std::size_t u : dual[v])
      if (member(u) && !parent.count(u)) {
        parent[u] = v;
        stack.push_back(u);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    size[*it] += 1;
    if (parent[*it] != *it) size[parent[*it]] += size[*it];
  }
  const std::size_t total = nodes.size();
  std::size_t best = nodes.front(), best_cost = total;
  for (std::size_t v : nodes) {
    if (parent[v] == v) continue;
    std::size_t cost = std::max(size[v], total - size[v]);
    if (cost < best_cost) { best_cost = cost; best = v; }
  }
  // Everything under `best` versus the rest.
  std::vector<std::size_t> below, above;
  std::set<std::size_t> sub{best};
  for (std::size_t v : order) {
    if (v != best && sub.count(parent[v]) && parent[v] != v) sub.insert(v);
  }
  for (std::size_t v : nodes) (sub.count(v) ? below : above).push_back(v);
  centroid_split(dual, std::move(below), cap, out);
  centroid_split(dual, std::move(above), cap, out);
}

}  // namespace detail

inline Placement place_with(const std::string& strategy, const Polygon& p) {
  if (strategy == "convex") return place_convex(p);
  if (strategy == "general") return general_place(p);
  throw PreconditionError("concise: unsupported base strategy '" + strategy + "' (use convex or general)");
}

// Cuts the triangulation's dual tree into components of at most `c`
// triangles along diagonals and ORs the base placements of the pieces. Each
// piece has at most c + 2 vertices, so a certificate never needs more guards
// than the base strategy uses on a (c + 2)-gon.
inline Placement place_concise(const Polygon& p, std::size_t c, const std::string& base) {
  require_valid(p);
  if (c < 2) throw PreconditionError("concise: piece size c must be at least 2");
  if (base != "convex" && base != "general")
    throw PreconditionError("concise: unsupported base strategy '" + base + "' (use convex or general)");
  Triangulation t = triangulate(p);
  if (t.size() <= c) return place_with(base, p);
  std::vector<std::size_t> all(t.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> comps;
  detail::centroid_split(t.dual, all, c, comps);
  std::vector<Placement> parts;
  // With holes, a component that spans a bridge diagonal has a boundary
  // touching itself at the duplicated bridge vertices; split it further.
  while (!comps.empty()) {
    std::vector<std::size_t> comp = std::move(comps.back());
    comps.pop_back();
    Polygon piece(union_boundary(t, comp));
    if (comp.size() > 1 && validate(piece)) {
      detail::centroid_split(t.dual, comp, comp.size() / 2, comps);
      continue;
    }
    parts.push_back(place_with(base, piece));
  }
  std::reverse(parts.begin(), parts.end());
  return detail::disjunction(parts, "concise", [](std::size_t k) { return "p" + std::to_string(k) + "."; });
}

}  // namespace sculpt
