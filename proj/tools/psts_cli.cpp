#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "psts/constructions.hpp"
#include "psts/detect.hpp"
#include "psts/groups.hpp"
#include "psts/incidence.hpp"
#include "psts/io.hpp"
#include "psts/morphisms.hpp"
#include "psts/search.hpp"
#include "psts/verify.hpp"

namespace {

using nlohmann::json;
using namespace psts;

struct Options {
  std::string input = "-";
  std::string output = "-";
  int workers = 1;
  long limit = -1;
  bool seedless = false;  // reserved; everything is deterministic already
};

void emit(const Options& opt, const std::string& text) { save_text(opt.output, text); }

json map_json(const PointMap& f) {
  json out = json::array();
  for (Point p : f) out.push_back(p);
  return out;
}

json hits_json(const std::vector<SubconfigHit>& hits) {
  json out = json::array();
  for (const auto& h : hits) {
    json lines = json::array();
    for (const Line& l : h.lines) lines.push_back({l[0], l[1], l[2]});
    out.push_back({{"points", h.points}, {"lines", lines}});
  }
  return out;
}

int cmd_analyze(const Options& opt) {
  auto s = load_structure(opt.input);
  auto p = params(s);
  json out;
  out["name"] = s.name();
  out["points"] = p.v;
  out["lines"] = p.b;
  out["regular"] = p.regular;
  if (p.r) out["degree"] = *p.r;
  out["components"] = connected_components(s).size();
  out["triangles"] = triangles(s).size();
  out["veblens"] = veblen_point_sets(s).size();
  out["linear_space"] = is_linear_space(s);
  auto violations = validate(s);
  out["valid"] = violations.empty();
  emit(opt, out.dump(2) + "\n");
  return 0;
}

int cmd_detect(const Options& opt, const std::string& pattern_text) {
  auto host = load_structure(opt.input);
  auto pat = Pattern::parse(pattern_text);
  auto hits = find_subconfig(host, pat, opt.limit, opt.workers);
  json out;
  out["pattern"] = pat.describe();
  out["count"] = hits.size();
  out["hits"] = hits_json(hits);
  emit(opt, out.dump(2) + "\n");
  return hits.empty() ? 1 : 0;
}

int cmd_check(const Options& opt, const std::string& prop_text) {
  auto s = load_structure(opt.input);
  int m = 0;
  auto prop = parse_property(prop_text, &m);
  auto res = check_property(s, prop, m, opt.workers);
  json out;
  out["property"] = prop_text;
  out["holds"] = res.holds;
  if (!res.holds) {
    out["detail"] = res.detail;
    out["witness"] = res.witness;
  }
  emit(opt, out.dump(2) + "\n");
  return res.holds ? 0 : 1;
}

int cmd_map(const Options& opt, const std::string& file_a, const std::string& file_b, bool iso) {
  auto a = load_structure(file_a);
  auto b = load_structure(file_b);
  auto f = iso ? isomorphism(a, b, opt.workers) : embedding(a, b, opt.workers);
  json out;
  out["kind"] = iso ? "isomorphism" : "embedding";
  out["found"] = f.has_value();
  if (f) out["map"] = map_json(*f);
  emit(opt, out.dump(2) + "\n");
  return f ? 0 : 1;
}

int cmd_aut(const Options& opt) {
  auto s = load_structure(opt.input);
  auto aut = automorphism_group(s, opt.workers);
  json out;
  out["order"] = aut.order;
  json gens = json::array();
  for (const auto& g : aut.generators) gens.push_back(map_json(g));
  out["generators"] = gens;
  emit(opt, out.dump(2) + "\n");
  return 0;
}

int cmd_verify(const Options& opt, const std::vector<std::string>& ids, bool junit, bool list) {
  if (list) {
    std::string text;
    for (const auto& e : list_checks()) text += e.id + ": " + e.summary + "\n";
    emit(opt, text);
    return 0;
  }
  auto report = run_paper_suite(ids, opt.workers);
  emit(opt, junit ? junit_xml(report) : render_report(report));
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial Steiner triple system toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--input", opt.input, "input structure (path or '-')")->capture_default_str();
  app.add_option("--output", opt.output, "output destination (path or '-')")
      ->capture_default_str();
  app.add_option("--workers", opt.workers, "search worker threads")->capture_default_str();
  app.add_option("--limit", opt.limit, "stop after this many results (-1 = all)")
      ->capture_default_str();
  app.add_flag("--seedless", opt.seedless, "reserved; outputs are always deterministic");
  app.fallthrough();

  // build
  auto* build = app.add_subcommand("build", "construct a structure and write it as JSON");
  build->require_subcommand(1);
  int m = 3, eps_i = 1, n = 2;
  std::string base_name, group_spec = "c3", eps_str = "0", gamma = "id", cat_name;
  auto add_base = [&](CLI::App* cmd) {
    cmd->add_option("--base", base_name, "catalog name for the base (otherwise --input)");
  };
  auto* b_weave = build->add_subcommand("weave", "m-weaved configuration");
  b_weave->add_option("--m", m, "number of levels")->required();
  b_weave->add_option("--eps", eps_i, "level step")->capture_default_str();
  add_base(b_weave);
  auto* b_conv = build->add_subcommand("convolve", "group convolution");
  b_conv->add_option("--group", group_spec, "abelian group, e.g. c3, c3^2")
      ->capture_default_str();
  b_conv->add_option("--eps", eps_str, "target sum, e.g. 0 or (1,2)")->capture_default_str();
  add_base(b_conv);
  auto* b_poly = build->add_subcommand("poly", "cyclically inscribed triangles");
  b_poly->add_option("--m", m, "number of triangles")->required();
  b_poly->add_option("--gamma", gamma, "closing permutation: id, t1, t2, s0, s1, s2")
      ->capture_default_str();
  auto* b_quot = build->add_subcommand("quotient", "fiber quotient of a product structure");
  auto* b_comp = build->add_subcommand("complete", "linear completion by fibers");
  auto* b_bose = build->add_subcommand("bose", "bose triple system over c3^n");
  b_bose->add_option("--n", n, "exponent")->required();
  auto* b_cat = build->add_subcommand("catalog", "named catalog structure");
  b_cat->add_option("name", cat_name, "catalog name, e.g. veblen, ag(2)")->required();

  // other subcommands
  auto* analyze = app.add_subcommand("analyze", "basic invariants as JSON");
  std::string pattern_text;
  auto* detect = app.add_subcommand("detect", "search for a subconfiguration");
  detect->add_option("pattern", pattern_text, "veblen, fano, desargues, miter, pappus, "
                                              "k4closure, poly:<m>:<gamma>, or a catalog name")
      ->required();
  std::string prop_text;
  auto* check = app.add_subcommand("check", "evaluate a property predicate");
  check->add_option("property", prop_text,
                    "pasch-free, moufangian, anti-fano, anti-desargues, miter-free, "
                    "anti-polypappian:<m>, pappus-diagonals")
      ->required();
  std::string file_a, file_b;
  auto* iso_cmd = app.add_subcommand("iso", "isomorphism witness between two structures");
  iso_cmd->add_option("a", file_a, "first structure")->required();
  iso_cmd->add_option("b", file_b, "second structure")->required();
  auto* embed_cmd = app.add_subcommand("embed", "embedding witness of the first into the second");
  embed_cmd->add_option("a", file_a, "pattern structure")->required();
  embed_cmd->add_option("b", file_b, "host structure")->required();
  auto* aut_cmd = app.add_subcommand("aut", "automorphism group order and generators");
  std::vector<std::string> verify_ids;
  bool junit = false, list_ids = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the structural check suite");
  verify_cmd->add_option("checks", verify_ids, "check ids (default: all)");
  verify_cmd->add_flag("--junit", junit, "emit a JUnit XML report");
  verify_cmd->add_flag("--list", list_ids, "list available check ids");
  auto* export_cmd = app.add_subcommand("export", "export to other formats");
  export_cmd->require_subcommand(1);
  auto* export_dot = export_cmd->add_subcommand("dot", "graphviz output");
  std::string style = "cliques";
  export_dot->add_option("--style", style, "cliques or line-nodes")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      auto base = [&]() {
        return base_name.empty() ? load_structure(opt.input) : catalog(base_name);
      };
      IncidenceStructure out = single_line();
      if (b_weave->parsed()) {
        out = eps_i == 1 ? weave(m, base()) : weave_eps(m, eps_i, base());
      } else if (b_conv->parsed()) {
        auto g = AbelianGroup::parse(group_spec);
        out = convolve(base(), g, g.parse_elem(eps_str));
      } else if (b_poly->parsed()) {
        out = poly_triangle(m, parse_gamma(gamma));
      } else if (b_quot->parsed()) {
        out = quotient_by_base(load_structure(opt.input));
      } else if (b_comp->parsed()) {
        out = linear_completion(load_structure(opt.input));
      } else if (b_bose->parsed()) {
        out = bose(n);
      } else if (b_cat->parsed()) {
        out = catalog(cat_name);
      }
      emit(opt, to_json(out));
      return 0;
    }
    if (analyze->parsed()) return cmd_analyze(opt);
    if (detect->parsed()) return cmd_detect(opt, pattern_text);
    if (check->parsed()) return cmd_check(opt, prop_text);
    if (iso_cmd->parsed()) return cmd_map(opt, file_a, file_b, true);
    if (embed_cmd->parsed()) return cmd_map(opt, file_a, file_b, false);
    if (aut_cmd->parsed()) return cmd_aut(opt);
    if (verify_cmd->parsed()) return cmd_verify(opt, verify_ids, junit, list_ids);
    if (export_cmd->parsed()) {
      auto s = load_structure(opt.input);
      if (style != "cliques" && style != "line-nodes") {
        std::cerr << "unknown dot style: " << style << "\n";
        return 2;
      }
      emit(opt, to_dot(s, style == "cliques" ? DotStyle::Cliques : DotStyle::LineNodes));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
