// Command-line front end: expansion of circulant product forms, blow-up trace
// replay, point classification, discriminants, splitting over ramified
// covers, the minimal-singularity catalog, and the scenario corpus.

#include <cctype>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "minsing/blowup.hpp"
#include "minsing/catalog.hpp"
#include "minsing/circulant.hpp"
#include "minsing/classify.hpp"
#include "minsing/error.hpp"
#include "minsing/poly_io.hpp"
#include "minsing/scenario.hpp"
#include "minsing/splitting.hpp"
#include "minsing/zpoly.hpp"

using namespace minsing;
using nlohmann::json;

namespace {

// Builds a variable table from an explicit declaration
// ("w:exceptional,u:parameter,x,z") or by scanning the input text for
// identifiers (skipping Delta blocks and root-of-unity literals).
VarTablePtr table_for(const std::string& decl, const std::string& text) {
  std::vector<std::pair<std::string, VarRole>> vars;
  if (!decl.empty()) {
    std::string cur;
    std::vector<std::string> parts;
    for (char c : decl) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) parts.push_back(cur);
    for (const auto& p : parts) {
      auto colon = p.find(':');
      if (colon == std::string::npos)
        vars.emplace_back(p, VarRole::ambient);
      else
        vars.emplace_back(p.substr(0, colon), var_role_from_string(p.substr(colon + 1)));
    }
    return VarTable::make(std::move(vars));
  }
  std::set<std::string> seen;
  for (size_t i = 0; i < text.size();) {
    if (!(std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
      ++i;
    std::string name = text.substr(start, i - start);
    if (name.rfind("Delta", 0) == 0) continue;
    bool zeta = name.size() > 1 && name[0] == 'z' &&
                std::all_of(name.begin() + 1, name.end(),
                            [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (zeta) continue;
    if (seen.insert(name).second) vars.emplace_back(name, VarRole::ambient);
  }
  return VarTable::make(std::move(vars));
}

int run_scenarios_cmd(const std::string& data, const std::string& id, bool all,
                      const std::string& format, unsigned jobs, long trunc) {
  Catalog cat = load_catalog(data);
  auto corpus = load_corpus(data);
  std::vector<Scenario> selected;
  for (auto& s : corpus) {
    if (all || s.id == id) {
      if (trunc > 0) s.trunc = Rat(trunc);
      selected.push_back(std::move(s));
    }
  }
  if (selected.empty()) {
    std::cerr << "no scenario matches '" << id << "'\n";
    return 2;
  }
  auto reports = run_scenarios(selected, cat, jobs);
  bool ok = true;
  if (format == "json") {
    std::cout << "[";
    for (size_t i = 0; i < reports.size(); ++i) {
      if (i) std::cout << ",\n";
      std::cout << reports[i].to_json();
    }
    std::cout << "]\n";
  }
  for (const auto& r : reports) {
    if (format != "json") std::cout << r.to_text();
    if (!r.ok()) ok = false;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact blow-up charts, circulant normal forms and splitting of singularities"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string data = default_data_dir();
  long trunc = 12;
  unsigned jobs = 1;
  std::string vars_decl;
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--data", data, "directory with catalog.json and scenarios/");
  app.add_option("--trunc", trunc, "truncation order N");
  app.add_option("--jobs", jobs, "worker threads for scenario runs");
  app.add_option("--vars", vars_decl,
                 "variable declaration, e.g. 'w:exceptional,x,z' (default: scan the input)");

  std::string expand_form;
  auto* cmd_expand = app.add_subcommand("expand", "expand a circulant product form");
  cmd_expand->add_option("form", expand_form, "e.g. \"Delta2(z; w^(1/2)*x)\"")->required();

  std::string trace_file;
  auto* cmd_blowup = app.add_subcommand("blowup", "replay a blow-up trace file");
  cmd_blowup->add_option("trace", trace_file, "JSON trace file")->required();

  std::string classify_poly;
  auto* cmd_classify = app.add_subcommand("classify", "classify a point at the origin");
  cmd_classify->add_option("poly", classify_poly)->required();

  std::string disc_poly, zvar = "z";
  auto* cmd_disc = app.add_subcommand("disc", "discriminant of a monic polynomial in z");
  cmd_disc->add_option("zpoly", disc_poly)->required();
  cmd_disc->add_option("--zvar", zvar, "distinguished variable (default z)");

  std::string split_poly, cover_arg, wvars_arg;
  auto* cmd_split = app.add_subcommand("split", "split over a ramified cover");
  cmd_split->add_option("zpoly", split_poly)->required();
  cmd_split->add_option("--cover", cover_arg, "cover exponents, e.g. 2,2")->required();
  cmd_split->add_option("--wvars", wvars_arg, "cover variables (default: names starting with w)");
  cmd_split->add_option("--zvar", zvar, "distinguished variable (default z)");

  int dim_filter = 0;
  auto* cmd_catalog = app.add_subcommand("catalog", "print the minimal-singularity catalog");
  cmd_catalog->add_option("--dim", dim_filter, "only entries in this many variables");

  auto* cmd_scenario = app.add_subcommand("scenario", "scenario corpus");
  std::string run_id;
  bool run_all = false;
  auto* cmd_run = cmd_scenario->add_subcommand("run", "run scenarios");
  cmd_run->add_option("id", run_id, "scenario id");
  cmd_run->add_flag("--all", run_all, "run the whole corpus");
  auto* cmd_list = cmd_scenario->add_subcommand("list", "list scenario ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit with 2
  }

  try {
    if (*cmd_expand) {
      auto vt = table_for(vars_decl, expand_form);
      ProductForm form = parse_product_form(vt, expand_form);
      PuiseuxPoly e = expand(form, /*require_rational=*/false);
      if (format == "json") {
        json j{{"form", to_string(form)}, {"expansion", e.str()}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << e.str() << "\n";
      }
      return 0;
    }
    if (*cmd_blowup) {
      BlowupTrace trace = load_trace_file(trace_file);
      TraceReport report = run_sequence(trace);
      bool ok = report.all_passed();
      if (format == "json") {
        json j = json::array();
        for (const auto& c : report.charts) {
          json jc{{"path", c.path},     {"form", c.computed_form},
                  {"order", c.order_after.str()}, {"divisors", c.divisors}};
          if (c.checked) {
            jc["status"] = c.pass ? "pass" : "fail";
            jc["anchor"] = c.anchor;
            if (!c.pass) jc["expected"] = c.expected;
          }
          j.push_back(std::move(jc));
        }
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& c : report.charts) {
          std::cout << c.path << ": " << c.computed_form << "   [";
          bool first = true;
          for (const auto& [l, v] : c.divisors) {
            if (!first) std::cout << ", ";
            std::cout << l << "=" << v;
            first = false;
          }
          std::cout << "]";
          if (c.checked) std::cout << (c.pass ? "  ok" : "  FAIL (expected " + c.expected + ")");
          std::cout << "\n";
        }
      }
      return ok ? 0 : 1;
    }
    if (*cmd_classify) {
      auto vt = table_for(vars_decl, classify_poly);
      PuiseuxPoly f = parse_poly(vt, classify_poly);
      Classification cl = classify_point(f, Truncation(Rat(trunc)));
      if (format == "json") {
        json j{{"verdict", cl.str()}, {"k", cl.k}, {"field_order", cl.field_order}};
        json w = json::array();
        for (const auto& g : cl.witness) w.push_back(g.str());
        j["witness"] = std::move(w);
        j["pinch_point"] = is_pinch_point(f);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << cl.str();
        if (cl.field_order > 1) std::cout << "  [needs z" << cl.field_order << "]";
        if (is_pinch_point(f)) std::cout << "  [pinch point]";
        std::cout << "\n";
        for (const auto& g : cl.witness) std::cout << "  factor: " << g.str() << "\n";
      }
      return 0;
    }
    if (*cmd_disc) {
      auto vt = table_for(vars_decl, disc_poly);
      ZPoly f = ZPoly::from_poly(parse_poly(vt, disc_poly), vt->index_of(zvar));
      PuiseuxPoly d = discriminant(f);
      if (format == "json")
        std::cout << json{{"discriminant", d.str()}}.dump(2) << "\n";
      else
        std::cout << d.str() << "\n";
      return 0;
    }
    if (*cmd_split) {
      auto vt = table_for(vars_decl, split_poly);
      ZPoly f = ZPoly::from_poly(parse_poly(vt, split_poly), vt->index_of(zvar));
      VarSet wvars;
      if (!wvars_arg.empty()) {
        std::string cur;
        for (char c : std::string(wvars_arg) + ",") {
          if (c == ',') {
            if (!cur.empty()) wvars.push_back(vt->index_of(cur));
            cur.clear();
          } else {
            cur += c;
          }
        }
      } else {
        for (size_t i = 0; i < vt->size(); ++i)
          if (vt->name(static_cast<int>(i))[0] == 'w') wvars.push_back(static_cast<int>(i));
      }
      std::vector<unsigned> cover;
      {
        std::string cur;
        for (char c : cover_arg + ",") {
          if (c == ',') {
            if (!cur.empty()) cover.push_back(static_cast<unsigned>(std::stoul(cur)));
            cur.clear();
          } else {
            cur += c;
          }
        }
      }
      auto w = try_split(f, wvars, cover, Truncation(Rat(trunc)));
      if (format == "json") {
        json j{{"splits", w.has_value()}};
        if (w) {
          json roots = json::array();
          for (const auto& r : w->roots) roots.push_back(r.str());
          j["roots"] = std::move(roots);
        }
        std::cout << j.dump(2) << "\n";
      } else if (w) {
        std::cout << "splits; roots:\n";
        for (const auto& r : w->roots) std::cout << "  " << r.str() << "\n";
      } else {
        std::cout << "does not split over this cover (to order " << trunc << ")\n";
      }
      return w ? 0 : 1;
    }
    if (*cmd_catalog) {
      Catalog cat = load_catalog(data);
      json j = json::array();
      for (const auto& e : cat.entries()) {
        if (dim_filter > 0 && e.dim != dim_filter) continue;
        if (format == "json") {
          j.push_back(json{{"id", e.id},
                           {"dim", e.dim},
                           {"form", e.form_text},
                           {"neighbors", e.neighbors}});
        } else {
          std::cout << e.id << "  (dim " << e.dim << "): " << e.form_text;
          if (!e.neighbors.empty()) {
            std::cout << "   neighbours:";
            for (const auto& n : e.neighbors) std::cout << " " << n;
          }
          std::cout << "\n";
        }
      }
      if (format == "json") std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*cmd_scenario) {
      if (*cmd_list) {
        for (const auto& s : load_corpus(data)) std::cout << s.id << "\n";
        return 0;
      }
      if (*cmd_run) {
        if (!run_all && run_id.empty()) {
          std::cerr << "scenario run needs an id or --all\n";
          return 2;
        }
        return run_scenarios_cmd(data, run_id, run_all, format, jobs, trunc);
      }
      std::cerr << "scenario needs a subcommand (run / list)\n";
      return 2;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
