#pragma once

#include "sculpt/formula.hpp"
#include "sculpt/verify.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace sculpt {

using Json = nlohmann::ordered_json;

namespace detail {

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("coordinate must be a rational string or an integer");
}

inline Json pair_json(const Rational& a, const Rational& b) { return Json::array({a.to_string(), b.to_string()}); }

template <class T>
T pair_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw ParseError(std::string(what) + " must be a two-element array");
  return T{rational_from_json(j[0]), rational_from_json(j[1])};
}

inline Json ring_json(const Ring& r) {
  Json a = Json::array();
  for (const auto& p : r) a.push_back(pair_json(p.x, p.y));
  return a;
}

inline Ring ring_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("ring must be an array of points");
  Ring r;
  for (const auto& p : j) r.push_back(pair_from_json<Point>(p, "point"));
  return r;
}

}  // namespace detail

inline Json polygon_to_json(const Polygon& p) {
  Json holes = Json::array();
  for (const auto& h : p.holes) holes.push_back(detail::ring_json(h));
  return Json{{"outer", detail::ring_json(p.outer)}, {"holes", holes}};
}

// Parses and validates.
inline Polygon polygon_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("outer")) throw ParseError("polygon file needs an 'outer' ring");
  Polygon p(detail::ring_from_json(j.at("outer")));
  if (j.contains("holes")) {
    if (!j.at("holes").is_array()) throw ParseError("'holes' must be an array of rings");
    for (const auto& h : j.at("holes")) p.holes.push_back(detail::ring_from_json(h));
  }
  if (auto v = validate(p)) throw PreconditionError("invalid polygon: " + v->message());
  return p;
}

inline Json placement_to_json(const Placement& pl) {
  Json guards = Json::array();
  for (const auto& g : pl.guards)
    guards.push_back(Json{{"label", g.label},
                          {"apex", detail::pair_json(g.wedge.apex.x, g.wedge.apex.y)},
                          {"ray1", detail::pair_json(g.wedge.ray1.x, g.wedge.ray1.y)},
                          {"ray2", detail::pair_json(g.wedge.ray2.x, g.wedge.ray2.y)},
                          {"reflex", g.wedge.reflex}});
  Json bound = pl.certificate_bound ? Json(*pl.certificate_bound) : Json("unbounded");
  return Json{{"strategy", pl.strategy}, {"guards", guards}, {"formula", pl.formula.to_string()},
              {"certificate_bound", bound}};
}

inline Placement placement_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("placement file must be a JSON object");
  for (const char* key : {"guards", "formula"})
    if (!j.contains(key)) throw ParseError(std::string("placement file lacks '") + key + "'");
  Placement pl{GuardSet{}, Formula::leaf("_"), j.value("strategy", std::string()), std::nullopt};
  try {
    for (const auto& g : j.at("guards")) {
      Wedge w{detail::pair_from_json<Point>(g.at("apex"), "apex"), detail::pair_from_json<Vec>(g.at("ray1"), "ray1"),
              detail::pair_from_json<Vec>(g.at("ray2"), "ray2"), g.value("reflex", false)};
      w.check();
      pl.guards.add(g.at("label").get<std::string>(), std::move(w));
    }
    pl.formula = parse_formula(j.at("formula").get<std::string>(), pl.guards);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  if (j.contains("certificate_bound")) {
    const auto& b = j.at("certificate_bound");
    if (b.is_number_unsigned()) pl.certificate_bound = b.get<std::size_t>();
    else if (!(b.is_string() && b.get<std::string>() == "unbounded"))
      throw ParseError("certificate_bound must be a non-negative integer or \"unbounded\"");
  }
  return pl;
}

inline Json point_json(const Point& p) { return detail::pair_json(p.x, p.y); }

// "x,y" with rational or decimal components.
inline Point parse_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("point must be written as x,y");
  return Point{Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
}

inline Json verification_report(const Polygon& p, const Placement& pl, const Verification& v) {
  Json r{{"status", v.ok ? "ok" : "fail"}};
  if (!v.ok && v.counterexample) {
    r["counterexample"] = point_json(v.counterexample->point);
    r["formula_value"] = v.counterexample_value;
  }
  r["faces_checked"] = v.faces_checked;
  r["lines"] = v.lines;
  r["guard_count"] = pl.guard_count();
  auto claimed = claimed_bound(pl.strategy, p);
  r["bounds"] = Json{{"claimed", claimed ? Json(*claimed) : Json(nullptr)}, {"observed", pl.guard_count()}};
  return r;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ParseError("write to '" + path + "' failed");
}

inline Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

inline Polygon load_polygon(const std::string& path) { return polygon_from_json(parse_json_text(read_text(path), path)); }
inline Placement load_placement(const std::string& path) {
  return placement_from_json(parse_json_text(read_text(path), path));
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace sculpt
