#pragma once

#include "sculpt/triangulation.hpp"
#include "sculpt/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <bitset>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sculpt {

namespace detail {

inline std::string seq_label(std::size_t i) { return "g" + std::to_string(i); }

inline Placement conjunction_of(const std::vector<Wedge>& ws, std::string strategy) {
  Placement pl{GuardSet{}, Formula::leaf(seq_label(0)), std::move(strategy), std::nullopt};
  std::vector<Formula> leaves;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    pl.guards.add(seq_label(i), ws[i]);
    leaves.push_back(Formula::leaf(seq_label(i)));
  }
  pl.formula = Formula::all_of(std::move(leaves));
  pl.certificate_bound = ws.size();
  return pl;
}

inline bool exact_on(const Ring& region, const Placement& pl) {
  return exact_equivalence(Polygon(region), pl).ok;
}

inline Ring pick(const Ring& r, std::initializer_list<std::size_t> idx) {
  Ring out;
  for (std::size_t i : idx) out.push_back(r[i % r.size()]);
  return out;
}

// Simple counter-clockwise quadrilateral test without the full validator.
inline bool simple_quad(const Ring& q) {
  if (q.size() != 4 || signed_area2(q).sign() <= 0) return false;
  return !validate(Polygon(q)).has_value();
}

// Guard pairs for a quadrilateral: the reflex vertex with its opposite
// corner first, otherwise the lowest-index opposite pair first.
inline std::vector<std::pair<Wedge, Wedge>> tetragon_pairs(const Ring& q) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < 4; ++i)
    if (is_reflex(q, i)) order.push_back(i);
  for (std::size_t i : {0u, 1u, 2u, 3u})
    if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
  std::vector<std::pair<Wedge, Wedge>> out;
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i : order) {
    std::pair<std::size_t, std::size_t> key{std::min(i, (i + 2) % 4), std::max(i, (i + 2) % 4)};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    out.emplace_back(natural_guard(q, i), natural_guard(q, (i + 2) % 4));
  }
  return out;
}

inline Placement tetragon_piece(const Ring& q) {
  for (const auto& [a, b] : tetragon_pairs(q)) {
    Placement pl = conjunction_of({a, b}, "general");
    if (exact_on(q, pl)) return pl;
  }
  throw Error("no two-guard placement found for tetragon");
}

inline Placement pentagon_piece(const Ring& p) {
  const std::size_t n = 5;
  auto try_guards = [&](const std::vector<Wedge>& ws) -> std::optional<Placement> {
    Placement pl = conjunction_of(ws, "general");
    if (exact_on(p, pl)) return pl;
    return std::nullopt;
  };
  auto edge_line = [&](std::size_t i) { return Line::through(p[i % n], p[(i + 1) % n]); };

  // Strictly convex: drop the edge whose neighbouring edge lines meet beyond
  // it with the smallest added triangle.
  if (is_convex(p)) {
    std::vector<std::pair<Rational, std::size_t>> drops;
    for (std::size_t i = 0; i < n; ++i) {
      auto f = intersect(edge_line(i + n - 1), edge_line(i + 1));
      if (!f || orient(p[i], p[(i + 1) % n], *f) >= 0) continue;
      drops.emplace_back(signed_area2({p[i], *f, p[(i + 1) % n]}).abs(), i);
    }
    std::sort(drops.begin(), drops.end());
    for (const auto& d : drops) {
      std::size_t i = d.second;
      for (std::size_t third : {i, i + 1})
        if (auto pl = try_guards({natural_guard(p, (i + 2) % n), natural_guard(p, (i + 4) % n),
                                  natural_guard(p, third % n)}))
          return *pl;
    }
  }

  // Tetragon on the other four vertices plus the natural guard at the
  // removed vertex; reflex vertices first.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (is_reflex(p, i)) order.push_back(i);
  for (std::size_t i = 0; i < n; ++i)
    if (!is_reflex(p, i)) order.push_back(i);
  for (std::size_t v : order) {
    Ring q = pick(p, {v + 1, v + 2, v + 3, v + 4});
    if (!simple_quad(q)) continue;
    for (const auto& [a, b] : tetragon_pairs(q))
      if (auto pl = try_guards({a, b, natural_guard(p, v)})) return *pl;
  }

  // Tetragon from four edge lines: edge i replaced by the meeting point of
  // its neighbours' lines.
  for (std::size_t i = 0; i < n; ++i) {
    auto f = intersect(edge_line(i + n - 1), edge_line(i + 1));
    if (!f) continue;
    Ring q = pick(p, {i + 2, i + 3, i + 4});
    q.push_back(*f);
    if (!simple_quad(q)) continue;
    for (const auto& [a, b] : tetragon_pairs(q))
      for (std::size_t third : {i, i + 1})
        if (auto pl = try_guards({a, b, natural_guard(p, third % n)})) return *pl;
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (auto pl = try_guards({natural_guard(p, a), natural_guard(p, b), natural_guard(p, c)}))
          return *pl;
  // Two adjacent reflex vertices can hide part of the pentagon from the
  // single completing guard; there the hull corner opposite the notch,
  // conjoined with either reflex guard, does the job.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        if (a == b || a == c) continue;
        Placement pl = conjunction_of({natural_guard(p, a), natural_guard(p, b), natural_guard(p, c)}, "general");
        pl.formula = Formula::all_of({Formula::leaf("g0"), Formula::any_of({Formula::leaf("g1"), Formula::leaf("g2")})});
        pl.certificate_bound = 2;
        if (exact_on(p, pl)) return pl;
      }
  throw Error("no three-guard placement found for pentagon");
}

// Index i such that (i, i+3) is a diagonal, if any.
inline std::optional<std::size_t> long_diagonal(const Ring& h) {
  for (std::size_t i = 0; i < 3; ++i)
    if (is_diagonal(h, i, i + 3)) return i;
  return std::nullopt;
}

// Exhaustive fallback over wedges whose rays run along lines through two
// hexagon vertices. Every such formula is constant on the faces of the
// arrangement of those (at most 15) lines, so a candidate is a bitset over
// faces. Looks for at most four guards whose valid clauses (intersection
// inside the hexagon, at most three guards) cover every interior face.
inline std::optional<Placement> hexagon_search(const Ring& h) {
  std::vector<Line> lines;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) lines.push_back(Line::through(h[i], h[j]));
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  std::vector<Point> faces = arrangement_face_points(lines);
  if (faces.size() > 128) return std::nullopt;
  using Bits = std::bitset<128>;
  Polygon region(h);
  Bits inside;
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (point_in_polygon(region, faces[f]) == Location::Inside) inside.set(f);

  std::vector<Wedge> pool;
  std::vector<Bits> cover;
  std::map<std::string, bool> seen;
  auto offer = [&](const Wedge& w) {
    Bits b;
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (w.contains(faces[f])) b.set(f);
    if ((b & inside).none()) return;
    if (!seen.emplace(b.to_string(), true).second) return;
    pool.push_back(w);
    cover.push_back(b);
  };
  for (std::size_t v = 0; v < 6; ++v) {
    std::vector<Vec> dirs;
    for (std::size_t u = 0; u < 6; ++u)
      if (u != v) dirs.push_back(h[u] - h[v]);
    dirs.push_back(h[v] - h[(v + 5) % 6]);
    dirs.push_back(h[v] - h[(v + 1) % 6]);
    for (const Vec& a : dirs)
      for (const Vec& b : dirs) {
        if (cross(a, b).sign() == 0 && dot(a, b).sign() > 0) continue;
        offer(Wedge::spanning(h[v], a, b));
      }
  }

  const std::size_t m = pool.size();
  Bits outside = ~inside;
  auto valid = [&](const Bits& b) { return (b & outside).none(); };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Bits ab = cover[a] & cover[b];
      if ((ab & inside).none()) continue;
      for (std::size_t c = b + 1; c < m; ++c) {
        Bits abc = ab & cover[c];
        if (!valid(abc)) continue;
        if ((abc & inside) == inside) {
          Placement pl = conjunction_of({pool[a], pool[b], pool[c]}, "general");
          if (exact_on(h, pl)) return pl;
        }
        // Faces left over by clauses within {a, b, c} must all lie in the
        // fourth guard.
        Bits base;
        for (const Bits& x : {cover[a], cover[b], cover[c], ab, cover[a] & cover[c], cover[b] & cover[c], abc})
          if (valid(x)) base |= x;
        Bits gap = inside & ~base;
        for (std::size_t d = 0; d < m; ++d) {
          if (d == a || d == b || d == c || (gap & ~cover[d]).any()) continue;
          std::array<std::size_t, 4> u{a, b, c, d};
          std::vector<std::vector<std::size_t>> clauses;
          Bits got;
          for (unsigned mask = 1; mask < 15; ++mask) {
            if (std::popcount(mask) > 3) continue;
            Bits x = inside | outside;
            std::vector<std::size_t> cl;
            for (std::size_t k = 0; k < 4; ++k)
              if (mask >> k & 1) { x &= cover[u[k]]; cl.push_back(k); }
            if (!valid(x) || (x & ~got).none()) continue;
            got |= x;
            clauses.push_back(cl);
          }
          if ((got & inside) != inside) continue;
          Placement pl{GuardSet{}, Formula::leaf(seq_label(0)), "general", 3};
          for (std::size_t k = 0; k < 4; ++k) pl.guards.add(seq_label(k), pool[u[k]]);
          std::vector<Formula> terms;
          for (const auto& cl : clauses) {
            std::vector<Formula> leaves;
            for (std::size_t k : cl) leaves.push_back(Formula::leaf(seq_label(k)));
            terms.push_back(Formula::all_of(std::move(leaves)));
          }
          pl.formula = Formula::any_of(std::move(terms));
          pl.certificate_bound = max_clause_size(pl.formula);
          if (exact_on(h, pl)) return pl;
        }
      }
    }
  return std::nullopt;
}

inline Placement hexagon_piece(const Ring& h) {
  std::size_t o = 0;
  if (!(is_diagonal(h, 1, 3) && is_diagonal(h, 3, 5) && is_diagonal(h, 5, 1))) o = 1;
  auto at = [&](std::size_t k) -> const Point& { return h[(o + k) % 6]; };
  auto nat = [&](std::size_t k) { return natural_guard(h, (o + k) % 6); };

  // Inner triangle corners B, D, F (offsets 1, 3, 5): their conjunction.
  Placement pl = conjunction_of({nat(1), nat(3), nat(5)}, "general");
  if (exact_on(h, pl)) return pl;

  auto build = [&](const std::vector<Wedge>& ws) {
    Placement c{GuardSet{}, Formula::leaf("g0"), "general", 3};
    for (std::size_t i = 0; i < ws.size(); ++i) c.guards.add(seq_label(i), ws[i]);
    auto L = [](std::size_t i) { return Formula::leaf(seq_label(i)); };
    c.formula = Formula::any_of({Formula::all_of({L(0), L(1), L(2)}), Formula::all_of({L(2), L(3)})});
    return c;
  };
  // Guards at A and C, an edge guard next to the far corner, and a wedge at
  // the far corner's neighbour; three rotations, two mirror images.
  for (std::size_t r : {0u, 2u, 4u}) {
    const std::size_t A = r, C = r + 2, D = r + 3, E = r + 4, F = r + 5;
    // (edge start, wedge corner, the wedge's other ray target)
    for (auto [edge, corner, other] : {std::array<std::size_t, 3>{E, D, F}, std::array<std::size_t, 3>{D, F, D}}) {
      Wedge eg = edge_guard(h, (o + edge) % 6);
      const Point& w = at(corner);
      Vec to_other = at(other) - w, to_e = at(E) - w;
      if (cross(to_other, to_e).sign() == 0) continue;
      for (bool flip : {false, true}) {
        Placement c = flip ? build({nat(A), nat(C), eg, Wedge::spanning(w, to_e, to_other)})
                           : build({nat(A), nat(C), eg, Wedge::spanning(w, to_other, to_e)});
        if (exact_on(h, c)) return c;
      }
    }
  }
  if (auto pl = hexagon_search(h)) return *pl;
  throw Error("no four-guard placement found for hexagon");
}

}  // namespace detail

inline void require_simple_ngon(const Polygon& q, std::size_t n, const char* what) {
  if (!q.holes.empty() || q.outer.size() != n)
    throw PreconditionError(std::string("expected a hole-free ") + what);
  require_valid(q);
}

inline Placement place_tetragon(const Polygon& q) {
  require_simple_ngon(q, 4, "quadrilateral");
  return detail::tetragon_piece(q.outer);
}

inline Placement place_pentagon(const Polygon& q) {
  require_simple_ngon(q, 5, "pentagon");
  return detail::pentagon_piece(q.outer);
}

inline Placement place_hexagon_star(const Polygon& q) {
  require_simple_ngon(q, 6, "hexagon");
  if (auto i = detail::long_diagonal(q.outer))
    throw PreconditionError("hexagon splits into two tetragons along diagonal (" + std::to_string(*i) +
                            ", " + std::to_string(*i + 3) + "); place each with place_tetragon");
  return detail::hexagon_piece(q.outer);
}

}  // namespace sculpt
