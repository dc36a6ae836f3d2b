#include "sculpt/generators.hpp"
#include "sculpt/io.hpp"
#include "sculpt/placement_concise.hpp"
#include "sculpt/placement_csg.hpp"
#include "sculpt/placement_special.hpp"
#include "sculpt/svg.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <iterator>

using namespace sculpt;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kPrecondition = 2, kParse = 3 };

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  return read_text(path);
}

Polygon polygon_arg(const std::string& path) { return polygon_from_json(parse_json_text(read_input(path), path)); }
Placement placement_arg(const std::string& path) {
  return placement_from_json(parse_json_text(read_input(path), path));
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") std::cout << text;
  else write_text(path, text);
}

std::size_t max_lines() {
  const char* env = std::getenv("SCULPT_MAX_LINES");
  if (!env || !*env) return 512;
  try {
    return static_cast<std::size_t>(std::stoul(env));
  } catch (const std::exception&) {
    throw ParseError(std::string("SCULPT_MAX_LINES is not a number: '") + env + "'");
  }
}

void check_line_budget(const Polygon& p, const GuardSet& g) {
  std::size_t lines = supporting_lines(p, g).size(), cap = max_lines();
  if (lines > cap)
    throw PreconditionError("arrangement has " + std::to_string(lines) + " lines, above SCULPT_MAX_LINES=" +
                            std::to_string(cap));
}

Placement place(const std::string& strategy, const Polygon& p, std::size_t c, const std::string& base) {
  if (strategy == "general") return general_place(p);
  if (strategy == "convex") return place_convex(p);
  if (strategy == "pseudo") return place_pseudo_triangle(p);
  if (strategy == "orthogonal") return place_orthogonal(p);
  if (strategy == "approx2") return place_approx2(p);
  if (strategy == "concise") return place_concise(p, c, base);
  throw PreconditionError("unknown strategy '" + strategy + "'");
}

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return Json{{"witness", nullptr}};
  return Json{{"witness", Json{{"inside", point_json(w->inside)}, {"outside", point_json(w->outside)}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sculpt: angle-guard placements that define polygons"};
  app.require_subcommand(1);

  std::string strategy = "general", in_path, out_path, base = "general";
  std::size_t piece_size = 8;
  auto* place_cmd = app.add_subcommand("place", "Place guards and write a placement file");
  place_cmd->add_option("--strategy,-s", strategy, "general|convex|pseudo|orthogonal|approx2|concise");
  place_cmd->add_option("-i,--input", in_path, "polygon JSON ('-' for stdin)")->required();
  place_cmd->add_option("-o,--output", out_path, "placement JSON (stdout when omitted)");
  place_cmd->add_option("--c", piece_size, "concise: max triangles per piece");
  place_cmd->add_option("--base", base, "concise: base strategy (convex|general)");

  std::string poly_path, guards_path, point_text;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a placement defines the polygon exactly");
  verify_cmd->add_option("-p,--polygon", poly_path, "polygon JSON")->required();
  verify_cmd->add_option("-g,--guards", guards_path, "placement JSON")->required();

  auto* certify_cmd = app.add_subcommand("certify", "Guards proving a point is inside");
  certify_cmd->add_option("-p,--polygon", poly_path, "polygon JSON")->required();
  certify_cmd->add_option("-g,--guards", guards_path, "placement JSON")->required();
  certify_cmd->add_option("--point", point_text, "x,y as rationals or decimals")->required();

  auto* witness_cmd = app.add_subcommand("witness", "Find an inside/outside pair no guard tells apart");
  witness_cmd->add_option("-p,--polygon", poly_path, "polygon JSON ('-' for stdin)")->required();
  witness_cmd->add_option("-g,--guards", guards_path, "placement JSON (default: natural guards at all vertices)");

  std::string gen_what, kind = "simple", placement_out;
  std::size_t k = 1, n = 12, holes = 1;
  std::uint64_t seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Generate polygons");
  gen_cmd->add_option("what", gen_what, "zigzag|counterexample|random|holed")->required();
  gen_cmd->add_option("--k", k, "zigzag teeth");
  gen_cmd->add_option("--kind", kind, "random: convex|simple|orthogonal|pseudo-triangle");
  gen_cmd->add_option("--n", n, "vertex count (outer ring for holed)");
  gen_cmd->add_option("--holes", holes, "holed: number of holes");
  gen_cmd->add_option("--seed", seed, "random seed");
  gen_cmd->add_option("-o,--output", out_path, "polygon JSON (stdout when omitted)");
  gen_cmd->add_option("--placement", placement_out, "zigzag: also write its placement here");

  std::string svg_path;
  auto* render_cmd = app.add_subcommand("render", "Draw a polygon and its guards as SVG");
  render_cmd->add_option("-p,--polygon", poly_path, "polygon JSON")->required();
  render_cmd->add_option("-g,--guards", guards_path, "placement JSON");
  render_cmd->add_option("-o,--output", svg_path, "SVG file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*place_cmd) {
      Polygon p = polygon_arg(in_path);
      emit(out_path, dump(placement_to_json(place(strategy, p, piece_size, base))));
      return kOk;
    }
    if (*verify_cmd) {
      Polygon p = polygon_arg(poly_path);
      Placement pl = placement_arg(guards_path);
      check_line_budget(p, pl.guards);
      Verification v = exact_equivalence(p, pl);
      std::cout << dump(verification_report(p, pl, v));
      return v.ok ? kOk : kVerifyFailed;
    }
    if (*certify_cmd) {
      polygon_arg(poly_path);  // validates the input
      Placement pl = placement_arg(guards_path);
      Point q = parse_point(point_text);
      auto cert = extract_certificate(pl.formula, pl.guards, q);
      if (!cert) std::cout << "outside\n";
      else std::cout << Json(*cert).dump() << "\n";
      return kOk;
    }
    if (*witness_cmd) {
      Polygon p = polygon_arg(poly_path);
      GuardSet g = guards_path.empty() ? natural_vertex_guards(p) : placement_arg(guards_path).guards;
      check_line_budget(p, g);
      auto w = witness_finder(p, g);
      std::cout << dump(witness_json(w));
      return w ? kOk : kVerifyFailed;
    }
    if (*gen_cmd) {
      if (gen_what == "zigzag") {
        ZigzagInstance z = gen_zigzag(k);
        emit(out_path, dump(polygon_to_json(z.polygon)));
        if (!placement_out.empty()) write_text(placement_out, dump(placement_to_json(z.placement)));
      } else if (gen_what == "counterexample") {
        emit(out_path, dump(polygon_to_json(gen_counterexample_pentagon().polygon)));
      } else if (gen_what == "random") {
        emit(out_path, dump(polygon_to_json(gen_random(parse_polygon_kind(kind), n, seed))));
      } else if (gen_what == "holed") {
        emit(out_path, dump(polygon_to_json(gen_holed(n, holes, seed))));
      } else {
        throw ParseError("unknown generator '" + gen_what + "'");
      }
      return kOk;
    }
    if (*render_cmd) {
      Polygon p = polygon_arg(poly_path);
      if (guards_path.empty()) {
        emit(svg_path, render_svg(p));
      } else {
        Placement pl = placement_arg(guards_path);
        emit(svg_path, render_svg(p, &pl.guards));
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kOk;
}
