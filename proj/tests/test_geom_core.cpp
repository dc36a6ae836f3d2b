#include "sculpt/geometry.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace sculpt;

namespace {

Point P(long x, long y) { return {Rational(x), Rational(y)}; }

// Reduced fraction over 64-bit integers, used as an independent reference
// for small operands.
struct Frac {
  long long n, d;
  Frac(long long a, long long b) {
    if (b < 0) { a = -a; b = -b; }
    long long g = std::gcd(a < 0 ? -a : a, b);
    n = a / g;
    d = b / g;
  }
};

}  // namespace

TEST(Rational, ParsesIntegerFractionAndDecimal) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("0.125"), Rational(1, 8));
  EXPECT_EQ(Rational::parse(" -2.5 "), Rational(-5, 2));
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("1/-2"), ParseError);
}

TEST(Rational, TextRoundTripIsCanonical) {
  EXPECT_EQ(Rational(10, -4).to_string(), "-5/2");
  EXPECT_EQ(Rational(8, 4).to_string(), "2");
  for (const char* s : {"0", "-1", "355/113", "-123456789012345678901234567891/2"})
    EXPECT_EQ(Rational::parse(s).to_string(), s);
}

TEST(Rational, AgreesWithSmallIntegerReference) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
  for (int it = 0; it < 2000; ++it) {
    long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Rational x(a, b), y(c, d);
    Frac sum(a * d + c * b, b * d), prod(a * c, b * d);
    EXPECT_EQ(x + y, Rational(sum.n, sum.d));
    EXPECT_EQ(x * y, Rational(prod.n, prod.d));
    EXPECT_EQ(x < y, a * d < c * b);
    if (c != 0) {
      Frac quo(a * d, b * c);
      EXPECT_EQ(x / y, Rational(quo.n, quo.d));
    }
  }
}

TEST(Rational, AdditionIsAssociativeAndNormalized) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int it = 0; it < 500; ++it) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    Rational s = a + b;
    EXPECT_EQ(Rational::parse(s.to_string()), s);
    EXPECT_EQ(s.to_string(), Rational(s.numerator(), s.denominator()).to_string());
  }
}

TEST(Rational, LargeMagnitudesStayExact) {
  Rational big = Rational::parse("123456789012345678901234567890");
  Rational r = big * big / big;
  EXPECT_EQ(r, big);
  EXPECT_EQ((big + Rational(1)) - big, Rational(1));
}

TEST(Orient, CanonicalTriples) {
  EXPECT_EQ(orient(P(0, 0), P(1, 0), P(0, 1)), 1);
  EXPECT_EQ(orient(P(0, 0), P(1, 0), P(2, 0)), 0);
  EXPECT_EQ(orient(P(0, 0), P(0, 1), P(1, 1)), -1);
}

TEST(Orient, AntisymmetricAndMatchesIntegerCross) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-20, 20);
  for (int it = 0; it < 3000; ++it) {
    long ax = c(rng), ay = c(rng), bx = c(rng), by = c(rng), cx = c(rng), cy = c(rng);
    Point a = P(ax, ay), b = P(bx, by), q = P(cx, cy);
    long long cr = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    int expect = (cr > 0) - (cr < 0);
    ASSERT_EQ(orient(a, b, q), expect);
    EXPECT_EQ(orient(b, a, q), -expect);
    EXPECT_EQ(orient(a, q, b), -expect);
    EXPECT_EQ(orient(q, b, a), -expect);
  }
}

TEST(Orient, DetectsTinyTurnsThatDoublesMiss) {
  // The third point is off the line by 1e-30; doubles round it away.
  Point a{Rational(0), Rational(0)}, b{Rational(1), Rational(1)};
  Point q{Rational(1, 2), Rational::parse("1/2") + Rational::parse("1/1000000000000000000000000000000")};
  EXPECT_EQ(orient(a, b, q), 1);
}

TEST(LineIntersection, TaggedOutcomes) {
  auto xaxis = DirectedLine::through(P(0, 0), P(1, 0));
  auto yaxis = DirectedLine::through(P(0, 0), P(0, 1));
  auto r = line_intersection(xaxis, yaxis);
  ASSERT_EQ(r.kind, LineIntersection::Kind::Crossing);
  EXPECT_EQ(*r.point, P(0, 0));

  EXPECT_EQ(line_intersection(DirectedLine::through(P(0, 1), P(1, 1)), DirectedLine::through(P(0, 2), P(1, 2))).kind,
            LineIntersection::Kind::Parallel);
  EXPECT_EQ(line_intersection(DirectedLine::through(P(0, 0), P(1, 1)), DirectedLine::through(P(5, 5), P(7, 7))).kind,
            LineIntersection::Kind::Coincident);
}

TEST(LineIntersection, PointSatisfiesBothLines) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> c(-30, 30);
  int crossings = 0;
  for (int it = 0; it < 2000; ++it) {
    DirectedLine l1(P(c(rng), c(rng)), P(c(rng), c(rng)) + Point{Rational(1, 3), Rational(0)});
    DirectedLine l2(P(c(rng), c(rng)), P(c(rng), c(rng)) + Point{Rational(0), Rational(2, 7)});
    auto r = line_intersection(l1, l2);
    if (r.kind != LineIntersection::Kind::Crossing) continue;
    ++crossings;
    EXPECT_TRUE(l1.contains(*r.point));
    EXPECT_TRUE(l2.contains(*r.point));
    auto m = intersect(Line(l1.origin, l1.direction), Line(l2.origin, l2.direction));
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(*m, *r.point);
  }
  EXPECT_GT(crossings, 1900);
}

TEST(ImplicitLine, CanonicalFormIdentifiesEqualLines) {
  Line a = Line::through(P(0, 0), P(2, 4));
  Line b = Line::through(P(3, 6), P(1, 2));
  Line c(P(1, 2), Point{Rational(-1, 2), Rational(-1)});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_NE(a, Line::through(P(0, 1), P(2, 5)));
  EXPECT_EQ(a.side(P(0, 1)), -a.side(P(1, 0)));
  EXPECT_EQ(a.side(P(5, 10)), 0);
}

TEST(ImplicitLine, FilteredSideMatchesExactEvaluation) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> c(-1000, 1000);
  Line l = Line::through(P(-7, 3), P(11, 5));
  for (int it = 0; it < 2000; ++it) {
    // Points on the line, and 1/10^12 off it in y.
    Rational t(c(rng), 97);
    Point on{Rational(-7) + t * Rational(18), Rational(3) + t * Rational(2)};
    Point above{on.x, on.y + Rational(1, 1000000000000L)};
    EXPECT_EQ(l.side(on), 0);
    EXPECT_EQ(l.side(above), l.eval(above).sign());
    EXPECT_NE(l.side(above), 0);
  }
}

TEST(Segments, ProperIntersectionCases) {
  EXPECT_TRUE(segment_properly_intersects(P(0, 0), P(2, 2), P(0, 2), P(2, 0)));
  EXPECT_FALSE(segment_properly_intersects(P(0, 0), P(1, 0), P(2, 0), P(3, 0)));
  EXPECT_FALSE(segment_properly_intersects(P(0, 0), P(1, 0), P(1, 0), P(2, 1)));
  // T-junction: an endpoint inside the other segment.
  EXPECT_TRUE(segment_properly_intersects(P(0, 0), P(2, 0), P(1, 0), P(1, 5)));
  // Collinear overlap.
  EXPECT_TRUE(segment_properly_intersects(P(0, 0), P(2, 0), P(1, 0), P(3, 0)));
  EXPECT_THROW(segment_properly_intersects(P(0, 0), P(0, 0), P(1, 0), P(3, 0)), PreconditionError);
}

TEST(Segments, ClosedTestAgreesWithParametricReference) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> c(-6, 6);
  for (int it = 0; it < 3000; ++it) {
    Point a = P(c(rng), c(rng)), b = P(c(rng), c(rng)), p = P(c(rng), c(rng)), q = P(c(rng), c(rng));
    if (a == b || p == q) continue;
    Vec d = b - a, e = q - p;
    Rational den = cross(d, e);
    bool ref;
    if (den.sign() != 0) {
      Rational t = cross(p - a, e) / den, s = cross(p - a, d) / den;
      ref = t.sign() >= 0 && t <= Rational(1) && s.sign() >= 0 && s <= Rational(1);
    } else if (cross(d, p - a).sign() != 0) {
      ref = false;
    } else {
      // Collinear: compare projections onto d.
      Rational lo = dot(p - a, d), hi = dot(q - a, d);
      if (hi < lo) std::swap(lo, hi);
      ref = hi.sign() >= 0 && lo <= dot(d, d);
    }
    ASSERT_EQ(segments_intersect(a, b, p, q), ref);
  }
}
