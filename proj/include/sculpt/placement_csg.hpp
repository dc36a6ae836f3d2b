#pragma once

#include "sculpt/placement.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sculpt {

// Closed intersection tests between a ray and a segment or another ray.
inline bool ray_hits_segment(const Point& o, const Vec& d, const Point& a, const Point& b) {
  Vec e = b - a;
  Rational den = cross(d, e);
  if (den.sign() == 0) {
    if (cross(d, a - o).sign() != 0) return false;
    return dot(a - o, d).sign() >= 0 || dot(b - o, d).sign() >= 0;
  }
  Rational t = cross(a - o, e) / den;
  Rational s = cross(a - o, d) / den;
  return t.sign() >= 0 && s.sign() >= 0 && s <= Rational(1);
}

inline bool rays_intersect(const Point& o1, const Vec& d1, const Point& o2, const Vec& d2) {
  Rational den = cross(d1, d2);
  Vec w = o2 - o1;
  if (den.sign() == 0) {
    if (cross(d1, w).sign() != 0) return false;
    if (dot(d1, d2).sign() > 0) return true;
    return dot(w, d1).sign() >= 0;
  }
  Rational t = cross(w, d2) / den;
  Rational u = cross(w, d1) / den;
  return t.sign() >= 0 && u.sign() >= 0;
}

// Edge guards of a polygon, one per distinct supporting halfplane, plus the
// guard label of each edge of `ring` (the straight-merged outer ring).
struct HalfplaneGuards {
  Ring ring;
  GuardSet guards;
  std::vector<std::string> edge_label;
};

inline HalfplaneGuards halfplane_guards(const Polygon& p) {
  HalfplaneGuards h;
  h.ring = remove_straight_vertices(p.outer);
  std::map<std::pair<Line, int>, std::string> seen;
  auto add_ring = [&](const Ring& r, bool record) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      const Point& a = r[i];
      const Point& b = r[next_index(i, r.size())];
      detail::SideTester st(a, b - a);
      auto key = std::make_pair(st.line, st.flip);
      auto it = seen.find(key);
      if (it == seen.end()) {
        std::string label = "h" + std::to_string(seen.size());
        it = seen.emplace(key, label).first;
        h.guards.add(label, edge_guard(r, i));
      }
      if (record) h.edge_label.push_back(it->second);
    }
  };
  add_ring(h.ring, true);
  for (const auto& hole : p.holes) add_ring(remove_straight_vertices(hole), false);
  return h;
}

namespace detail {

// Recursive formula for the region left of an extended chain: the chain of
// polygon edges from vertex i over `len` edges, with rays continuing its
// first edge backwards and its last edge forwards. A chain is split at an
// inner vertex when each half's extension ray there misses the other half's
// extended chain; the halves combine by AND at a left turn and OR at a
// right turn.
class ChainFormula {
 public:
  ChainFormula(const Ring& ring, const std::vector<std::string>& labels) : r_(ring), labels_(labels) {}

  const Point& v(std::size_t i) const { return r_[i % r_.size()]; }
  // Backward ray at the chain start and forward ray at the chain end.
  std::pair<Point, Vec> start_ray(std::size_t i) const { return {v(i), v(i) - v(i + 1)}; }
  std::pair<Point, Vec> end_ray(std::size_t j) const { return {v(j), v(j) - v(j + r_.size() - 1)}; }

  // Whether a ray leaving vertex `skip_at` meets the extended chain (i,len)
  // anywhere except at that vertex.
  bool ray_meets_chain(const Point& o, const Vec& d, std::size_t i, std::size_t len, std::size_t skip_at) const {
    const std::size_t n = r_.size();
    for (std::size_t k = 0; k < len; ++k) {
      std::size_t a = (i + k) % n, b = (i + k + 1) % n;
      if (a == skip_at % n || b == skip_at % n) continue;
      if (ray_hits_segment(o, d, r_[a], r_[b])) return true;
    }
    auto [so, sd] = start_ray(i);
    auto [eo, ed] = end_ray(i + len);
    if ((i % n) != skip_at % n && rays_intersect(o, d, so, sd)) return true;
    if (((i + len) % n) != skip_at % n && rays_intersect(o, d, eo, ed)) return true;
    return false;
  }

  // The extended chain does not cross itself.
  bool simple(std::size_t i, std::size_t len) const {
    if (len == 1) return true;
    auto [so, sd] = start_ray(i);
    auto [eo, ed] = end_ray(i + len);
    if (rays_intersect(so, sd, eo, ed)) return false;
    const std::size_t n = r_.size();
    for (std::size_t k = 1; k < len; ++k)
      if (ray_hits_segment(so, sd, v(i + k), v(i + k + 1))) return false;
    for (std::size_t k = 0; k + 1 < len; ++k)
      if (ray_hits_segment(eo, ed, v(i + k), v(i + k + 1))) return false;
    (void)n;
    return true;
  }

  std::optional<Formula> left(std::size_t i, std::size_t len) {
    i %= r_.size();
    if (len == 1) return Formula::leaf(labels_[i]);
    auto key = std::make_pair(i, len);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    memo_[key] = std::nullopt;  // guards against re-entry
    std::optional<Formula> out;
    if (simple(i, len)) {
      for (std::size_t step = 0; step + 1 < len && !out; ++step) {
        // Middle-out split order.
        std::size_t half = len / 2;
        std::size_t k = (step % 2 == 0) ? half + step / 2 : half - (step + 1) / 2;
        if (k < 1 || k >= len) continue;
        out = split(i, len, k);
      }
    }
    memo_[key] = out;
    return out;
  }

  std::optional<Formula> split(std::size_t i, std::size_t len, std::size_t k) {
    std::size_t m = i + k;
    Vec b1 = v(m) - v(m + r_.size() - 1);
    Vec a2 = v(m) - v(m + 1);
    if (ray_meets_chain(v(m), b1, m, len - k, m)) return std::nullopt;
    if (ray_meets_chain(v(m), a2, i, k, m)) return std::nullopt;
    if (!simple(i, k) || !simple(m, len - k)) return std::nullopt;
    auto f1 = left(i, k);
    if (!f1) return std::nullopt;
    auto f2 = left(m, len - k);
    if (!f2) return std::nullopt;
    bool left_turn = orient(v(m + r_.size() - 1), v(m), v(m + 1)) > 0;
    return left_turn ? Formula::all_of({*f1, *f2}) : Formula::any_of({*f1, *f2});
  }

 private:
  const Ring& r_;
  const std::vector<std::string>& labels_;
  std::map<std::pair<std::size_t, std::size_t>, std::optional<Formula>> memo_;
};

}  // namespace detail

// Formula over the edge halfplanes of a hole-free polygon that uses every
// edge exactly once, or nullopt when the split search finds none. The ring
// is cut at two convex vertices into two extended chains whose regions are
// intersected.
inline std::optional<Formula> chain_csg_formula(const HalfplaneGuards& h, const Polygon& p) {
  const Ring& r = h.ring;
  const std::size_t n = r.size();
  if (!p.holes.empty() || n < 3) return std::nullopt;
  detail::ChainFormula cf(r, h.edge_label);
  Placement trial{h.guards, Formula::leaf(h.edge_label[0]), "approx2", std::nullopt};
  Polygon region(r);
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(r[prev_index(i, n)], r[i], r[next_index(i, n)]) <= 0) continue;
    for (std::size_t len = 1; len < n; ++len) {
      std::size_t j = (i + len) % n;
      if (orient(r[prev_index(j, n)], r[j], r[next_index(j, n)]) <= 0) continue;
      if (!cf.simple(i, len) || !cf.simple(j, n - len)) continue;
      Vec b1 = r[j] - r[prev_index(j, n)], a2 = r[j] - r[next_index(j, n)];
      Vec a1 = r[i] - r[next_index(i, n)], b2 = r[i] - r[prev_index(i, n)];
      if (cf.ray_meets_chain(r[j], b1, j, n - len, j) || cf.ray_meets_chain(r[j], a2, i, len, j)) continue;
      if (cf.ray_meets_chain(r[i], a1, j, n - len, i) || cf.ray_meets_chain(r[i], b2, i, len, i)) continue;
      auto f1 = cf.left(i, len);
      if (!f1) continue;
      auto f2 = cf.left(j, n - len);
      if (!f2) continue;
      trial.formula = Formula::all_of({*f1, *f2});
      if (exact_equivalence(region, trial).ok) return trial.formula;
    }
  }
  return std::nullopt;
}

// Union over interior faces of the conjunction of the halfplanes true there.
// Exact whenever the guards separate the polygon, which halfplane guards on
// every edge line always do.
inline Formula signature_formula(const Polygon& p, const GuardSet& g) {
  std::vector<Clause> clauses;
  for (const auto& s : face_samples(p, g)) {
    if (!s.inside) continue;
    Clause c;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (s.signature[k]) c.push_back(g[k].label);
    std::sort(c.begin(), c.end());
    clauses.push_back(std::move(c));
  }
  clauses = detail::absorb(std::move(clauses));
  std::vector<Formula> terms;
  for (const auto& c : clauses) {
    std::vector<Formula> leaves;
    for (const auto& l : c) leaves.push_back(Formula::leaf(l));
    terms.push_back(Formula::all_of(std::move(leaves)));
  }
  return Formula::any_of(std::move(terms));
}

// One edge guard per distinct edge-supporting halfplane; at least half that
// many guards are necessary, hence a factor-2 approximation.
inline Placement place_approx2(const Polygon& p) {
  require_valid(p);
  HalfplaneGuards h = halfplane_guards(p);
  Placement pl{h.guards, Formula::leaf(h.edge_label[0]), "approx2", std::nullopt};
  if (auto f = chain_csg_formula(h, p)) pl.formula = *f;
  else pl.formula = signature_formula(p, h.guards);
  return pl;
}

}  // namespace sculpt
