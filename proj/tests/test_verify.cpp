#include "sculpt/generators.hpp"
#include "sculpt/placement_csg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sculpt;

namespace {

Point P(long x, long y) { return {Rational(x), Rational(y)}; }

Polygon square() { return Polygon(Ring{P(0, 0), P(4, 0), P(4, 4), P(0, 4)}); }

Placement with_formula(const Polygon& p, const std::vector<std::size_t>& vertices, const std::string& text) {
  Placement pl{GuardSet{}, Formula::leaf("x"), "custom", std::nullopt};
  for (std::size_t v : vertices) pl.guards.add("n" + std::to_string(v), natural_guard(p, v));
  pl.formula = parse_formula(text, pl.guards);
  return pl;
}

bool general_position(const std::vector<Line>& lines) {
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto x = intersect(lines[i], lines[j]);
      if (!x) return false;
      for (std::size_t k = j + 1; k < lines.size(); ++k)
        if (lines[k].side(*x) == 0) return false;
    }
  return true;
}

}  // namespace

TEST(ExactEquivalence, SquareFromOppositeCorners) {
  Polygon sq = square();
  Verification good = exact_equivalence(sq, with_formula(sq, {0, 2}, "(n0 & n2)"));
  EXPECT_TRUE(good.ok);
  EXPECT_FALSE(good.counterexample.has_value());
  EXPECT_EQ(good.lines, 4u);
  EXPECT_EQ(good.faces_checked, 9u);

  Verification bad = exact_equivalence(sq, with_formula(sq, {0, 1}, "(n0 & n1)"));
  ASSERT_FALSE(bad.ok);
  ASSERT_TRUE(bad.counterexample.has_value());
  EXPECT_TRUE(bad.counterexample_value);
  EXPECT_FALSE(bad.counterexample->inside);
  EXPECT_EQ(point_in_polygon(sq, bad.counterexample->point), Location::Outside);

  Verification too_small = exact_equivalence(sq, with_formula(sq, {0, 1, 2}, "((n0 & n1) & n2 & n0)"));
  EXPECT_TRUE(too_small.ok);
  Verification union_too_big = exact_equivalence(sq, with_formula(sq, {0, 2}, "(n0 | n2)"));
  ASSERT_FALSE(union_too_big.ok);
  EXPECT_TRUE(union_too_big.counterexample_value);
}

TEST(ExactEquivalence, MissingInteriorIsReported) {
  Polygon ell(Ring{P(0, 0), P(4, 0), P(4, 2), P(2, 2), P(2, 4), P(0, 4)});
  Placement pl = with_formula(ell, {0, 2, 4}, "(n0 & n2 & n4)");
  Verification v = exact_equivalence(ell, pl);
  ASSERT_FALSE(v.ok);
  EXPECT_FALSE(v.counterexample_value);
  EXPECT_TRUE(v.counterexample->inside);
  EXPECT_FALSE(evaluate(pl.formula, pl.guards, v.counterexample->point));
}

TEST(ExactEquivalence, SquareWithHoleFromAllCorners) {
  Polygon p(Ring{P(0, 0), P(10, 0), P(10, 10), P(0, 10)}, {Ring{P(4, 4), P(4, 6), P(6, 6), P(6, 4)}});
  GuardSet g = natural_vertex_guards(p);
  // Each hole corner excludes one open quadrant; two opposite ones cover
  // everything but the hole.
  Placement pl{g, parse_formula("(n0 & n2 & (h1.0 | h1.2))", g), "custom", std::nullopt};
  EXPECT_TRUE(exact_equivalence(p, pl).ok);
  pl.formula = parse_formula("(n0 & n2 & h1.0 & h1.2)", g);
  EXPECT_FALSE(exact_equivalence(p, pl).ok);
}

TEST(ExactEquivalence, UnknownLabelIsAPreconditionError) {
  Polygon sq = square();
  Placement pl = with_formula(sq, {0, 2}, "(n0 & n2)");
  pl.formula = parse_formula("(n0 & n3)");
  EXPECT_THROW(exact_equivalence(sq, pl), PreconditionError);
}

TEST(Arrangement, FaceCountInGeneralPosition) {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<long> c(-9, 9);
  int tested = 0;
  for (int it = 0; it < 400 && tested < 60; ++it) {
    std::size_t count = 1 + it % 9;
    std::vector<Line> lines;
    while (lines.size() < count) {
      Vec d = P(c(rng), c(rng));
      if (d.is_zero()) continue;
      lines.emplace_back(P(c(rng), c(rng)), d);
    }
    if (!general_position(lines)) continue;
    ++tested;
    std::size_t L = lines.size();
    EXPECT_EQ(arrangement_face_points(lines).size(), 1 + L + L * (L - 1) / 2);
  }
  EXPECT_GE(tested, 40);
}

TEST(Arrangement, ParallelAndConcurrentFamilies) {
  std::vector<Line> parallel, pencil;
  for (long k = 0; k < 6; ++k) {
    parallel.emplace_back(P(0, k), P(1, 2));
    pencil.emplace_back(P(1, 1), P(1, k - 2));
  }
  EXPECT_EQ(arrangement_face_points(parallel).size(), 7u);
  EXPECT_EQ(arrangement_face_points(pencil).size(), 12u);
  EXPECT_EQ(arrangement_face_points({}).size(), 1u);
}

TEST(Arrangement, SamplesAvoidEveryLineAndDifferInSignature) {
  std::vector<Line> lines{Line::through(P(0, 0), P(1, 0)), Line::through(P(0, 0), P(0, 1)),
                          Line::through(P(0, 0), P(1, 1)), Line::through(P(0, 3), P(3, 0)),
                          Line::through(P(0, 1), P(1, 1))};
  auto pts = arrangement_face_points(lines);
  std::set<std::vector<int>> sigs;
  for (const auto& q : pts) {
    std::vector<int> s;
    for (const auto& l : lines) {
      EXPECT_NE(l.side(q), 0);
      s.push_back(l.side(q));
    }
    sigs.insert(s);
  }
  EXPECT_EQ(sigs.size(), pts.size());
}

TEST(Witness, AgreesWithSeparationCheck) {
  std::mt19937_64 rng(73);
  int with_witness = 0, separated = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto kind = seed % 3 == 0 ? PolygonKind::Simple : seed % 3 == 1 ? PolygonKind::Orthogonal : PolygonKind::Convex;
    Polygon p = gen_random(kind, 6 + 2 * (seed % 5), seed);
    GuardSet g;
    for (std::size_t i = 0; i < p.outer.size(); ++i)
      if (rng() % 3 != 0) g.add("n" + std::to_string(i), natural_guard(p, i));
    if (g.empty()) g.add("n0", natural_guard(p, 0));
    auto w = witness_finder(p, g);
    auto s = separation_check(p, g);
    ASSERT_EQ(w.has_value(), s.has_value()) << "seed " << seed;
    if (w) {
      ++with_witness;
      EXPECT_EQ(point_in_polygon(p, w->inside), Location::Inside);
      EXPECT_EQ(point_in_polygon(p, w->outside), Location::Outside);
      for (const auto& gd : g) EXPECT_EQ(gd.wedge.contains(w->inside), gd.wedge.contains(w->outside));
    } else {
      ++separated;
      // A monotone formula exists iff no interior signature is dominated by
      // an exterior one; the absorbed interior DNF is then exact.
      auto samples = face_samples(p, g);
      bool dominated = false;
      for (const auto& a : samples)
        for (const auto& b : samples)
          if (a.inside && !b.inside) {
            bool below = true;
            for (std::size_t k = 0; k < g.size(); ++k) below &= !a.signature[k] || b.signature[k];
            dominated |= below;
          }
      Placement pl{g, signature_formula(p, g), "custom", std::nullopt};
      EXPECT_EQ(exact_equivalence(p, pl).ok, !dominated) << "seed " << seed;
    }
  }
  EXPECT_GT(with_witness, 0);
  EXPECT_GT(separated, 0);
}

TEST(Witness, EdgeWithoutGuardLineIsStraddled) {
  Polygon sq = square();
  GuardSet g;
  g.add("n0", natural_guard(sq, 0));
  auto w = witness_finder(sq, g);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(point_in_polygon(sq, w->inside), Location::Inside);
  EXPECT_EQ(point_in_polygon(sq, w->outside), Location::Outside);
}

TEST(CountBounds, NecessaryConditionAndClaims) {
  Polygon hept = gen_random(PolygonKind::Convex, 7, 1);
  Placement two = with_formula(hept, {0, 3}, "(n0 & n3)");
  CountReport r = count_bound_check(hept, two);
  EXPECT_EQ(r.guards, 2u);
  EXPECT_FALSE(r.necessary_ok);  // two guards reach at most 6 vertices
  EXPECT_FALSE(r.ok());

  Polygon hex = gen_random(PolygonKind::Convex, 6, 1);
  EXPECT_TRUE(count_bound_check(hex, with_formula(hex, {0, 3}, "(n0 & n3)")).necessary_ok);

  for (std::size_t g = 2; g < 12; ++g) {
    std::size_t reach = g * (2 * g - 1);
    Polygon p = gen_random(PolygonKind::Convex, reach + 1, g);
    std::vector<std::size_t> vs;
    for (std::size_t i = 0; i < g; ++i) vs.push_back(i);
    Placement pl = with_formula(p, vs, "n0");
    EXPECT_FALSE(count_bound_check(p, pl).necessary_ok);
  }

  Polygon sq = square();
  EXPECT_EQ(claimed_bound("general", sq), 2u);
  EXPECT_EQ(claimed_bound("convex", hept), 4u);
  EXPECT_EQ(claimed_bound("orthogonal", sq), 2u);
  EXPECT_EQ(claimed_bound("approx2", sq), 4u);
  EXPECT_FALSE(claimed_bound("custom", sq).has_value());
}

TEST(CountBounds, DistinctHalfplanesMergeCollinearEdges) {
  // Two bottom edges on y = 0 with the interior above both.
  Polygon notch(Ring{P(0, 0), P(2, 0), P(3, 2), P(4, 0), P(6, 0), P(6, 4), P(0, 4)});
  EXPECT_EQ(distinct_halfplanes(notch), 6u);
  EXPECT_EQ(distinct_halfplanes(square()), 4u);
}
