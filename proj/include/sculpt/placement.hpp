#pragma once

#include "sculpt/partition.hpp"
#include "sculpt/placement_pieces.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace sculpt {

inline Formula rename_labels(const Formula& f, const std::map<std::string, std::string>& names) {
  if (f.is_leaf()) return Formula::leaf(names.at(f.label()));
  std::vector<Formula> kids;
  for (const auto& c : f.children()) kids.push_back(rename_labels(c, names));
  return f.op() == Formula::Op::And ? Formula::all_of(std::move(kids)) : Formula::any_of(std::move(kids));
}

namespace detail {

// Disjunction of independent placements. Guards are renamed g0, g1, ... in
// order, or `prefix(part) + old label` when a prefix function is given.
inline Placement disjunction(const std::vector<Placement>& parts, std::string strategy,
                             const std::function<std::string(std::size_t)>& prefix = {}) {
  Placement out{GuardSet{}, Formula::leaf("g0"), std::move(strategy), std::size_t{0}};
  std::vector<Formula> terms;
  std::size_t next = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::map<std::string, std::string> names;
    for (const auto& g : parts[k].guards) {
      std::string fresh = prefix ? prefix(k) + g.label : seq_label(next++);
      names[g.label] = fresh;
      out.guards.add(fresh, g.wedge);
    }
    terms.push_back(rename_labels(parts[k].formula, names));
    const auto& cb = parts[k].certificate_bound;
    if (!cb || !out.certificate_bound) out.certificate_bound.reset();
    else out.certificate_bound = std::max(*out.certificate_bound, *cb);
  }
  out.formula = Formula::any_of(std::move(terms));
  return out;
}

}  // namespace detail

// Triangulate, trim the dual tree into tetragons, pentagons and at most one
// star hexagon, and place each piece. Holes are handled by triangulating
// the outer ring with the holes spliced in along bridge diagonals, which
// keeps the dual a tree.
inline Placement general_place(const Polygon& p) {
  require_valid(p);
  if (p.holes.empty() && p.outer.size() == 3)
    return detail::conjunction_of({natural_guard(p.outer, 0), natural_guard(p.outer, 1)}, "general");
  Triangulation t = triangulate(p);
  SubpolygonPartition part = trim_partition(t);
  std::vector<Placement> pieces;
  for (std::size_t k = 0; k < part.pieces.size(); ++k) {
    const Ring& r = part.pieces[k].outer;
    switch (part.kinds[k]) {
      case PieceKind::Triangle:
        pieces.push_back(detail::conjunction_of({natural_guard(r, 0), natural_guard(r, 1)}, "general"));
        break;
      case PieceKind::Tetragon: pieces.push_back(detail::tetragon_piece(r)); break;
      case PieceKind::Pentagon: pieces.push_back(detail::pentagon_piece(r)); break;
      case PieceKind::HexagonStar:
        if (auto i = detail::long_diagonal(r)) {
          pieces.push_back(detail::tetragon_piece(detail::pick(r, {*i, *i + 1, *i + 2, *i + 3})));
          pieces.push_back(detail::tetragon_piece(detail::pick(r, {*i + 3, *i + 4, *i + 5, *i})));
        } else {
          pieces.push_back(detail::hexagon_piece(r));
        }
        break;
    }
  }
  if (pieces.size() == 1) return pieces.front();
  return detail::disjunction(pieces, "general");
}

// Natural guards at every other vertex; their conjunction is the polygon.
inline Placement place_convex(const Polygon& p) {
  require_valid(p);
  if (!p.holes.empty() || !is_convex(p.outer)) throw PreconditionError("place_convex requires a convex polygon");
  const std::size_t n = p.outer.size();
  std::vector<Wedge> ws;
  for (std::size_t i = 0; i + 1 < n; i += 2) ws.push_back(natural_guard(p.outer, i));
  if (n % 2 == 1) ws.push_back(natural_guard(p.outer, n - 1));
  return detail::conjunction_of(ws, "convex");
}

}  // namespace sculpt
