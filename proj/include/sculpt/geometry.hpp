#pragma once

#include "sculpt/rational.hpp"

#include <cmath>
#include <compare>
#include <optional>
#include <ostream>
#include <utility>

namespace sculpt {

// A point of the plane. Also used for direction vectors.
struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator-(const Point& a) { return {-a.x, -a.y}; }
  friend Point operator*(const Rational& s, const Point& a) { return {s * a.x, s * a.y}; }

  bool is_zero() const { return x.sign() == 0 && y.sign() == 0; }

  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.x << ", " << p.y << ')';
  }
};

using Vec = Point;

inline Rational cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }

inline Point midpoint(const Point& a, const Point& b) {
  return {(a.x + b.x) / Rational(2), (a.y + b.y) / Rational(2)};
}

// Sign of (b - a) x (c - a): +1 for a left turn (counter-clockwise).
inline int orient(const Point& a, const Point& b, const Point& c) {
  return cross(b - a, c - a).sign();
}

// True when c lies on the closed segment [a, b]; a == b is allowed.
inline bool on_segment(const Point& a, const Point& b, const Point& c) {
  if (orient(a, b, c) != 0) return false;
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

// True when c lies on the open segment (a, b).
inline bool in_segment_interior(const Point& a, const Point& b, const Point& c) {
  return on_segment(a, b, c) && c != a && c != b;
}

struct DirectedLine {
  Point origin;
  Vec direction;

  DirectedLine(Point o, Vec d) : origin(std::move(o)), direction(std::move(d)) {
    if (direction.is_zero()) throw PreconditionError("directed line with zero direction");
  }
  static DirectedLine through(const Point& a, const Point& b) { return {a, b - a}; }

  // Sign of the side of p: +1 left of the direction, -1 right, 0 on the line.
  int side(const Point& p) const { return cross(direction, p - origin).sign(); }
  bool contains(const Point& p) const { return side(p) == 0; }
  bool same_line(const DirectedLine& o) const {
    return cross(direction, o.direction).sign() == 0 && contains(o.origin);
  }
};

struct LineIntersection {
  enum class Kind { Crossing, Parallel, Coincident };
  Kind kind;
  std::optional<Point> point;
};

inline LineIntersection line_intersection(const DirectedLine& l1, const DirectedLine& l2) {
  Rational denom = cross(l1.direction, l2.direction);
  if (denom.sign() == 0) {
    if (l1.contains(l2.origin)) return {LineIntersection::Kind::Coincident, std::nullopt};
    return {LineIntersection::Kind::Parallel, std::nullopt};
  }
  Rational t = cross(l2.origin - l1.origin, l2.direction) / denom;
  return {LineIntersection::Kind::Crossing, l1.origin + t * l1.direction};
}

// Closed test: the segments share at least one point.
inline bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
         on_segment(c, d, b);
}

// Interiors cross, or an endpoint of one lies in the open interior of the
// other. Touching at a shared endpoint only is not a proper intersection.
inline bool segment_properly_intersects(const Point& a, const Point& b, const Point& c,
                                        const Point& d) {
  if (a == b || c == d) throw PreconditionError("degenerate segment");
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return in_segment_interior(a, b, c) || in_segment_interior(a, b, d) ||
         in_segment_interior(c, d, a) || in_segment_interior(c, d, b);
}

// Implicit line a*x + b*y + c = 0 with coprime integer coefficients and a
// canonical sign, so equal point sets compare equal.
class Line {
 public:
  Line(const Point& p, const Vec& dir) {
    if (dir.is_zero()) throw PreconditionError("line with zero direction");
    // Normal (-dy, dx); c = -(normal . p).
    Rational a = -dir.y, b = dir.x;
    Rational c = -(a * p.x + b * p.y);
    mpz_class l = lcm(lcm(a.denominator(), b.denominator()), c.denominator());
    mpz_class ia = a.numerator() * (l / a.denominator());
    mpz_class ib = b.numerator() * (l / b.denominator());
    mpz_class ic = c.numerator() * (l / c.denominator());
    mpz_class g = gcd(gcd(ia, ib), ic);
    ia /= g; ib /= g; ic /= g;
    if (ia < 0 || (ia == 0 && ib < 0)) { ia = -ia; ib = -ib; ic = -ic; }
    a_ = Rational(ia, 1); b_ = Rational(ib, 1); c_ = Rational(ic, 1);
    da_ = ia.get_d(); db_ = ib.get_d(); dc_ = ic.get_d();
  }
  static Line through(const Point& p, const Point& q) { return Line(p, q - p); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  double a_approx() const { return da_; }
  double b_approx() const { return db_; }
  double c_approx() const { return dc_; }

  Rational eval(const Point& p) const { return a_ * p.x + b_ * p.y + c_; }
  // Exact sign of eval(p), with a floating-point filter in front.
  int side(const Point& p) const { return side(p, p.x.to_double(), p.y.to_double()); }
  int side(const Point& p, double px, double py) const {
    double v = da_ * px + db_ * py + dc_;
    double bound = 1e-12 * (std::fabs(da_ * px) + std::fabs(db_ * py) + std::fabs(dc_));
    if (std::isfinite(v) && std::isfinite(bound) && std::fabs(v) > bound && bound > 0)
      return v > 0 ? 1 : -1;
    return eval(p).sign();
  }
  bool is_vertical() const { return b_.sign() == 0; }
  Vec direction() const { return {b_, -a_}; }
  Point some_point() const {
    if (b_.sign() != 0) return {Rational(0), -c_ / b_};
    return {-c_ / a_, Rational(0)};
  }

  friend bool operator==(const Line& l, const Line& m) {
    return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_;
  }
  friend std::strong_ordering operator<=>(const Line& l, const Line& m) {
    if (auto c = l.a_ <=> m.a_; c != 0) return c;
    if (auto c = l.b_ <=> m.b_; c != 0) return c;
    return l.c_ <=> m.c_;
  }

 private:
  Rational a_, b_, c_;
  double da_ = 0, db_ = 0, dc_ = 0;
};

inline std::optional<Point> intersect(const Line& l, const Line& m) {
  Rational det = l.a() * m.b() - m.a() * l.b();
  if (det.sign() == 0) return std::nullopt;
  Rational x = (l.b() * m.c() - m.b() * l.c()) / det;
  Rational y = (m.a() * l.c() - l.a() * m.c()) / det;
  return Point{x, y};
}

}  // namespace sculpt
