#pragma once

#include "sculpt/placement.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sculpt {

// Steiner point in the kernel with three fans to the convex corners. Each
// fan is the conjunction of a wedge at the Steiner point with the
// disjunction of natural guards that cover the fan's reflex chain: every
// other reflex vertex, and for a chain with an even number of reflex
// vertices one convex corner, shared with a neighbouring even chain when
// there is one.
inline Placement place_pseudo_triangle(const Polygon& p) {
  require_valid(p);
  if (!p.holes.empty()) throw PreconditionError("pseudo-triangle must be hole-free");
  const Ring& r = p.outer;
  const std::size_t n = r.size();
  std::vector<std::size_t> corners;
  for (std::size_t i = 0; i < n; ++i) {
    int o = orient(r[prev_index(i, n)], r[i], r[next_index(i, n)]);
    if (o == 0) throw PreconditionError("not a pseudo-triangle: straight vertex " + std::to_string(i));
    if (o > 0) corners.push_back(i);
  }
  if (corners.size() != 3)
    throw PreconditionError("not a pseudo-triangle: " + std::to_string(corners.size()) + " convex vertices");
  auto k = kernel(p);
  if (!k) throw PreconditionError("pseudo-triangle has an empty kernel");
  Point v{Rational(0), Rational(0)};
  for (const auto& q : k->outer) v = v + q;
  v = Rational(1, static_cast<long>(k->outer.size())) * v;

  std::vector<std::vector<std::size_t>> chains(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = next_index(corners[i], n); j != corners[(i + 1) % 3]; j = next_index(j, n))
      chains[i].push_back(j);

  // 0 = no corner, 1 = start corner, 2 = end corner.
  std::vector<int> corner_use(3, 0);
  std::vector<std::size_t> even;
  for (std::size_t i = 0; i < 3; ++i)
    if (chains[i].size() % 2 == 0) even.push_back(i);
  if (even.size() == 1) {
    corner_use[even[0]] = 2;
  } else if (even.size() == 2) {
    std::size_t a = even[0], b = even[1];
    if ((a + 1) % 3 == b) { corner_use[a] = 2; corner_use[b] = 1; }
    else { corner_use[b] = 2; corner_use[a] = 1; }
  } else if (even.size() == 3) {
    corner_use[0] = 2; corner_use[1] = 1; corner_use[2] = 2;
  }

  Placement pl{GuardSet{}, Formula::leaf("v0"), "pseudo", std::size_t{2}};
  auto natural = [&](std::size_t idx) {
    std::string label = "n" + std::to_string(idx);
    if (!pl.guards.contains(label)) pl.guards.add(label, natural_guard(r, idx));
    return Formula::leaf(label);
  };
  std::vector<Formula> fans;
  for (std::size_t i = 0; i < 3; ++i) {
    const Point& a = r[corners[i]];
    const Point& b = r[corners[(i + 1) % 3]];
    std::string vl = "v" + std::to_string(i);
    pl.guards.add(vl, Wedge::spanning(v, a - v, b - v));
    const auto& ch = chains[i];
    std::vector<Formula> cover;
    if (corner_use[i] == 1) {
      cover.push_back(natural(corners[i]));
      for (std::size_t t = 1; t < ch.size(); t += 2) cover.push_back(natural(ch[t]));
    } else {
      for (std::size_t t = 0; t < ch.size(); t += 2) cover.push_back(natural(ch[t]));
      if (corner_use[i] == 2) cover.push_back(natural(corners[(i + 1) % 3]));
    }
    fans.push_back(Formula::all_of({Formula::leaf(vl), Formula::any_of(std::move(cover))}));
  }
  pl.formula = Formula::any_of(std::move(fans));
  return pl;
}

struct OrthoPartition {
  std::vector<Polygon> pieces;
};

namespace detail {

inline std::size_t piece_bound(std::size_t n) { return (n - 2 + 3) / 4; }
inline std::size_t ortho_guard_bound(std::size_t n) { return (3 * (n - 2) + 3) / 4; }

inline Ring canonical_rotation(const Ring& r) {
  auto it = std::min_element(r.begin(), r.end());
  Ring out(it, r.end());
  out.insert(out.end(), r.begin(), it);
  return out;
}

// Cut along the extension of an edge through reflex vertex `ri` until the
// first boundary hit.
inline std::optional<std::pair<Ring, Ring>> ortho_cut(const Ring& ring, std::size_t ri, const Vec& dir) {
  const std::size_t n = ring.size();
  const Point& o = ring[ri];
  std::optional<Rational> best;
  std::size_t best_edge = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t k2 = next_index(k, n);
    if (k == ri || k2 == ri) continue;
    const Point& a = ring[k];
    const Point& b = ring[k2];
    Vec e = b - a;
    Rational den = cross(dir, e);
    if (den.sign() == 0) continue;
    Rational t = cross(a - o, e) / den;   // along the ray
    Rational s = cross(a - o, dir) / den; // along the edge
    if (t.sign() <= 0 || s.sign() < 0 || s > Rational(1)) continue;
    if (!best || t < *best) { best = t; best_edge = k; }
  }
  if (!best) return std::nullopt;
  Point x = o + *best * dir;
  Ring a, b;
  for (std::size_t i = ri;; i = next_index(i, n)) {
    a.push_back(ring[i]);
    if (i == best_edge) break;
  }
  if (a.back() != x) a.push_back(x);
  if (b.empty() || b.back() != x) b.push_back(x);
  for (std::size_t i = next_index(best_edge, n);; i = next_index(i, n)) {
    if (ring[i] != b.back()) b.push_back(ring[i]);
    if (i == ri) break;
  }
  a = remove_straight_vertices(a);
  b = remove_straight_vertices(b);
  if (a.size() < 4 || b.size() < 4) return std::nullopt;
  return std::make_pair(std::move(a), std::move(b));
}

class OrthoSearch {
 public:
  std::optional<std::vector<Ring>> run(const Ring& ring) {
    const std::size_t n = ring.size();
    if (n == 4 || n == 6) return std::vector<Ring>{ring};
    Ring key = canonical_rotation(ring);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    struct Cut { std::size_t small; Ring a, b; };
    std::vector<Cut> cuts;
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_reflex(ring, i)) continue;
      const Point& prev = ring[prev_index(i, n)];
      const Point& next = ring[next_index(i, n)];
      for (const Vec& dir : {ring[i] - prev, ring[i] - next}) {
        auto cut = ortho_cut(ring, i, dir);
        if (!cut) continue;
        std::size_t na = cut->first.size(), nb = cut->second.size();
        if (piece_bound(na) + piece_bound(nb) > piece_bound(n)) continue;
        if (ortho_guard_bound(na) + ortho_guard_bound(nb) > ortho_guard_bound(n)) continue;
        cuts.push_back({std::min(na, nb), std::move(cut->first), std::move(cut->second)});
      }
    }
    std::stable_sort(cuts.begin(), cuts.end(), [](const Cut& x, const Cut& y) { return x.small < y.small; });
    std::optional<std::vector<Ring>> result;
    for (const auto& c : cuts) {
      auto pa = run(c.a);
      if (!pa) continue;
      auto pb = run(c.b);
      if (!pb) continue;
      pa->insert(pa->end(), pb->begin(), pb->end());
      result = std::move(pa);
      break;
    }
    memo_[key] = result;
    return result;
  }

 private:
  std::map<Ring, std::optional<std::vector<Ring>>> memo_;
};

inline Ring require_orthogonal(const Polygon& p) {
  require_valid(p);
  if (!p.holes.empty()) throw PreconditionError("orthogonal strategy requires a hole-free polygon");
  if (!is_orthogonal(p)) throw PreconditionError("polygon is not orthogonal (an edge is not axis-parallel)");
  return remove_straight_vertices(p.outer);
}

}  // namespace detail

// Rectangles and L-shapes obtained by recursive cuts along extensions of
// edges at reflex vertices, keeping both the piece count and the guard
// count within budget at every cut.
inline OrthoPartition ortho_partition(const Polygon& p) {
  Ring ring = detail::require_orthogonal(p);
  detail::OrthoSearch search;
  auto pieces = search.run(ring);
  if (!pieces) throw Error("no rectangle/L partition within the piece budget was found");
  OrthoPartition out;
  for (auto& r : *pieces) out.pieces.emplace_back(std::move(r));
  return out;
}

// Two opposite right-angle corners per rectangle; an L-shape is the union of
// two overlapping rectangles sharing the corner opposite the reflex vertex.
inline Placement place_orthogonal(const Polygon& p) {
  OrthoPartition part = ortho_partition(p);
  std::vector<Placement> pieces;
  for (const auto& piece : part.pieces) {
    const Ring& r = piece.outer;
    if (r.size() == 4) {
      pieces.push_back(detail::conjunction_of({natural_guard(r, 0), natural_guard(r, 2)}, "orthogonal"));
      continue;
    }
    std::size_t ri = 0;
    while (!is_reflex(r, ri)) ++ri;
    Placement pl = detail::conjunction_of(
        {natural_guard(r, (ri + 3) % 6), natural_guard(r, (ri + 5) % 6), natural_guard(r, (ri + 1) % 6)}, "orthogonal");
    auto L = [](const char* s) { return Formula::leaf(s); };
    pl.formula = Formula::any_of({Formula::all_of({L("g0"), L("g1")}), Formula::all_of({L("g0"), L("g2")})});
    pl.certificate_bound = 2;
    pieces.push_back(std::move(pl));
  }
  if (pieces.size() == 1) {
    pieces.front().strategy = "orthogonal";
    return pieces.front();
  }
  return detail::disjunction(pieces, "orthogonal");
}

}  // namespace sculpt
