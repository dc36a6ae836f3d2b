#pragma once

#include "sculpt/formula.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

namespace sculpt {

namespace detail {

inline std::string fmt4(double v) {
  if (std::fabs(v) < 5e-5) v = 0.0;  // no "-0.0000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};

}  // namespace detail

// Polygon in grey, one colour per guard: translucent cone clipped to the
// frame, both boundary rays, and a dot at the apex. Output depends only on
// the inputs.
inline std::string render_svg(const Polygon& p, const GuardSet* guards = nullptr, double width = 600.0) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& q : p.outer) pts.emplace_back(q.x.to_double(), q.y.to_double());
  for (const auto& h : p.holes)
    for (const auto& q : h) pts.emplace_back(q.x.to_double(), q.y.to_double());
  if (guards)
    for (const auto& g : *guards) pts.emplace_back(g.wedge.apex.x.to_double(), g.wedge.apex.y.to_double());
  double x0 = pts[0].first, x1 = x0, y0 = pts[0].second, y1 = y0;
  for (auto [x, y] : pts) {
    x0 = std::min(x0, x); x1 = std::max(x1, x);
    y0 = std::min(y0, y); y1 = std::max(y1, y);
  }
  double span = std::max({x1 - x0, y1 - y0, 1e-9});
  double pad = 0.1 * span;
  x0 -= pad; x1 += pad; y0 -= pad; y1 += pad;
  double scale = width / (x1 - x0);
  double height = (y1 - y0) * scale;
  auto X = [&](double x) { return detail::fmt4((x - x0) * scale); };
  auto Y = [&](double y) { return detail::fmt4((y1 - y) * scale); };
  auto pair = [&](double x, double y) { return X(x) + "," + Y(y); };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt4(width) + "\" height=\"" +
       detail::fmt4(height) + "\" viewBox=\"0 0 " + detail::fmt4(width) + " " + detail::fmt4(height) + "\">\n";
  s += "<clipPath id=\"frame\"><rect x=\"0\" y=\"0\" width=\"" + detail::fmt4(width) + "\" height=\"" +
       detail::fmt4(height) + "\"/></clipPath>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + detail::fmt4(width) + "\" height=\"" + detail::fmt4(height) +
       "\" fill=\"#ffffff\"/>\n";

  std::string d;
  auto ring_path = [&](const Ring& r) {
    for (std::size_t i = 0; i < r.size(); ++i)
      d += (i == 0 ? "M" : " L") + pair(r[i].x.to_double(), r[i].y.to_double());
    d += " Z ";
  };
  ring_path(p.outer);
  for (const auto& h : p.holes) ring_path(h);
  s += "<path d=\"" + d + "\" fill=\"#e0e0e0\" fill-rule=\"evenodd\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";

  if (guards) {
    const double reach = 3.0 * (span + 2 * pad);
    std::size_t k = 0;
    for (const auto& g : *guards) {
      const char* colour = detail::kPalette[k++ % std::size(detail::kPalette)];
      const Wedge& w = g.wedge;
      double ax = w.apex.x.to_double(), ay = w.apex.y.to_double();
      double a1 = std::atan2(w.ray1.y.to_double(), w.ray1.x.to_double());
      double a2 = std::atan2(w.ray2.y.to_double(), w.ray2.x.to_double());
      double sweep = a2 - a1;
      if (w.is_halfplane()) sweep = std::numbers::pi;
      while (sweep <= 0) sweep += 2 * std::numbers::pi;
      while (sweep > 2 * std::numbers::pi) sweep -= 2 * std::numbers::pi;
      int steps = std::max(1, static_cast<int>(std::ceil(sweep / (std::numbers::pi / 8))));
      std::string cone = "M" + pair(ax, ay);
      for (int i = 0; i <= steps; ++i) {
        double a = a1 + sweep * i / steps;
        cone += " L" + pair(ax + reach * std::cos(a), ay + reach * std::sin(a));
      }
      cone += " Z";
      s += "<g clip-path=\"url(#frame)\">\n";
      s += "<path d=\"" + cone + "\" fill=\"" + colour + "\" fill-opacity=\"0.12\" stroke=\"none\"/>\n";
      for (double a : {a1, a1 + sweep})
        s += "<line x1=\"" + X(ax) + "\" y1=\"" + Y(ay) + "\" x2=\"" + X(ax + reach * std::cos(a)) + "\" y2=\"" +
             Y(ay + reach * std::sin(a)) + "\" stroke=\"" + colour + "\" stroke-width=\"1\"/>\n";
      s += "</g>\n";
      s += "<circle cx=\"" + X(ax) + "\" cy=\"" + Y(ay) + "\" r=\"3.0000\" fill=\"" + colour + "\"><title>" +
           g.label + "</title></circle>\n";
    }
  }
  s += "</svg>\n";
  return s;
}

}  // namespace sculpt
