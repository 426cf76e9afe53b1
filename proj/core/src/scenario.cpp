#include "minsing/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "minsing/circulant.hpp"
#include "minsing/classify.hpp"
#include "minsing/error.hpp"
#include "minsing/poly_io.hpp"
#include "minsing/splitting.hpp"
#include "minsing/zpoly.hpp"

namespace minsing {

using nlohmann::json;

bool RunReport::ok() const {
  if (!error.empty()) return false;
  for (const auto& i : items)
    if (!i.pass) return false;
  return true;
}

std::string RunReport::to_json() const {
  json j;
  j["scenario"] = scenario;
  j["trunc"] = trunc.str();
  j["seconds"] = seconds;
  if (!error.empty()) j["error"] = error;
  j["assertions"] = json::array();
  for (const auto& i : items) {
    json ji;
    ji["anchor"] = i.anchor;
    ji["status"] = i.pass ? "pass" : "fail";
    ji["expected"] = i.expected;
    ji["got"] = i.got;
    j["assertions"].push_back(std::move(ji));
  }
  return j.dump(2);
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  size_t failed = 0;
  for (const auto& i : items)
    if (!i.pass) ++failed;
  os << scenario << ": " << (items.size() - failed) << "/" << items.size()
     << " assertions passed";
  if (!error.empty()) os << " [error: " << error << "]";
  os << "\n";
  for (const auto& i : items) {
    if (i.pass) continue;
    os << "  FAIL " << i.anchor << "\n    expected: " << i.expected
       << "\n    got:      " << i.got << "\n";
  }
  return os.str();
}

namespace {

std::vector<std::string> string_list(const json& j) {
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(e.get<std::string>());
  return out;
}

Scenario::Op parse_op(const json& jop) {
  Scenario::Op op;
  op.kind = jop.at("op").get<std::string>();
  op.anchor = jop.value("anchor", "");
  if (op.kind == "blowup") {
    op.step.centre = string_list(jop.at("centre"));
    if (jop.contains("label")) op.step.fresh_label = jop.at("label").get<std::string>();
    for (const auto& jc : jop.at("charts")) {
      ChartRequest req;
      req.path = string_list(jc.at("path"));
      if (jc.contains("expect_form")) req.expect_form = jc.at("expect_form").get<std::string>();
      if (jc.contains("expect_divisors")) {
        std::map<std::string, std::string> d;
        for (auto it = jc.at("expect_divisors").begin(); it != jc.at("expect_divisors").end(); ++it)
          d[it.key()] = it.value().get<std::string>();
        req.expect_divisors = std::move(d);
      }
      req.asserted = jc.value("assert", true);
      req.anchor = jc.value("anchor", "");
      op.step.charts.push_back(std::move(req));
    }
    return op;
  }
  if (jop.contains("path")) op.path = string_list(jop.at("path"));
  op.expect = jop.value("expect", "");
  op.expect_field = jop.value("expect_field", 0u);
  if (jop.contains("nonzero")) op.nonzero = string_list(jop.at("nonzero"));
  if (jop.contains("vars")) op.op_vars = string_list(jop.at("vars"));
  if (jop.contains("wvars")) op.op_vars = string_list(jop.at("wvars"));
  op.zvar = jop.value("zvar", "z");
  if (jop.contains("cover"))
    for (const auto& e : jop.at("cover")) op.cover.push_back(e.get<unsigned>());
  op.bound = jop.value("bound", 3u);
  if (jop.contains("expect_cover")) {
    if (jop.at("expect_cover").is_null()) {
      op.expect_cover = std::nullopt;
    } else {
      std::vector<unsigned> q;
      for (const auto& e : jop.at("expect_cover")) q.push_back(e.get<unsigned>());
      op.expect_cover = std::move(q);
    }
  }
  op.expect_pass = jop.value("expect_pass", true);
  op.phi = jop.value("phi", "");
  op.supplied_sqrt = jop.value("A", "");
  if (jop.contains("expect_alpha"))
    for (const auto& e : jop.at("expect_alpha")) op.expect_alpha.push_back(e.get<long>());
  return op;
}

Scenario parse_scenario(const json& js) {
  Scenario s;
  s.id = js.at("id").get<std::string>();
  s.description = js.value("description", "");
  if (js.contains("trunc")) s.trunc = Rat(static_cast<long>(js.at("trunc").get<long>()));
  std::vector<std::pair<std::string, VarRole>> vars;
  std::vector<std::pair<std::string, std::string>> labels;
  for (const auto& jv : js.at("vars")) {
    std::string name = jv.at("name").get<std::string>();
    VarRole role = var_role_from_string(jv.value("role", "ambient"));
    vars.emplace_back(name, role);
    if (jv.contains("label")) labels.emplace_back(name, jv.at("label").get<std::string>());
  }
  s.vt = VarTable::make(std::move(vars));
  for (auto& [name, label] : labels) s.divisors.labels[s.vt->index_of(name)] = label;
  const auto& init = js.at("initial");
  std::string kind = init.value("kind", "product_form");
  std::string text = init.at("form").get<std::string>();
  if (kind == "poly")
    s.initial = parse_poly(s.vt, text);
  else
    s.initial = parse_product_form(s.vt, text);
  for (const auto& jop : js.at("script")) s.script.push_back(parse_op(jop));
  return s;
}

}  // namespace

Scenario parse_scenario_json(const std::string& text) {
  return parse_scenario(json::parse(text));
}

std::vector<Scenario> load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open scenario file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error("scenario parse error in " + path + ": " + e.what());
  }
  std::vector<Scenario> out;
  try {
    if (doc.contains("scenarios")) {
      for (const auto& js : doc.at("scenarios")) out.push_back(parse_scenario(js));
    } else {
      out.push_back(parse_scenario(doc));
    }
  } catch (const json::exception& e) {
    throw Error("scenario schema error in " + path + ": " + e.what());
  }
  return out;
}

BlowupTrace load_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open trace file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error("trace parse error in " + path + ": " + e.what());
  }
  BlowupTrace trace;
  std::vector<std::pair<std::string, VarRole>> vars;
  std::vector<std::pair<std::string, std::string>> labels;
  for (const auto& jv : doc.at("vars")) {
    std::string name = jv.at("name").get<std::string>();
    vars.emplace_back(name, var_role_from_string(jv.value("role", "ambient")));
    if (jv.contains("label")) labels.emplace_back(name, jv.at("label").get<std::string>());
  }
  trace.vt = VarTable::make(std::move(vars));
  for (auto& [name, label] : labels) trace.divisors.labels[trace.vt->index_of(name)] = label;
  const auto& init = doc.at("initial");
  std::string kind = init.value("kind", "product_form");
  std::string text = init.at("form").get<std::string>();
  if (kind == "poly")
    trace.initial = parse_poly(trace.vt, text);
  else
    trace.initial = parse_product_form(trace.vt, text);
  for (const auto& js : doc.at("steps")) {
    Scenario::Op op = parse_op([&] {
      json j = js;
      j["op"] = "blowup";
      return j;
    }());
    trace.steps.push_back(op.step);
  }
  return trace;
}

std::vector<Scenario> load_corpus(const std::string& data_dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  fs::path dir = fs::path(data_dir) / "scenarios";
  if (!fs::exists(dir)) throw Error("no scenario directory at " + dir.string());
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Scenario> out;
  for (const auto& f : files) {
    auto batch = load_scenario_file(f.string());
    for (auto& s : batch) out.push_back(std::move(s));
  }
  return out;
}

Catalog load_catalog(const std::string& data_dir) {
  return Catalog::load_file((std::filesystem::path(data_dir) / "catalog.json").string());
}

std::string default_data_dir() {
  if (const char* env = std::getenv("MINSING_DATA")) return env;
#ifdef MINSING_DEFAULT_DATA_DIR
  return MINSING_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

namespace {

struct Runner {
  const Scenario& s;
  const Catalog& catalog;
  RunReport& report;
  std::map<std::string, TraceNode> nodes;
  int step_no = 0;

  const TraceNode& node_at(const std::vector<std::string>& path) {
    auto it = nodes.find(join_path(path));
    if (it == nodes.end())
      throw Error("no chart at path '" + join_path(path) + "'");
    return it->second;
  }

  PuiseuxPoly expanded_at(const std::vector<std::string>& path) {
    const TraceNode& n = node_at(path);
    if (std::holds_alternative<ProductForm>(n.form))
      return expand(reduced_form(std::get<ProductForm>(n.form)));
    return std::get<PuiseuxPoly>(n.form);
  }

  void add(const std::string& anchor, bool pass, std::string expected, std::string got) {
    report.items.push_back({anchor, pass, std::move(expected), std::move(got)});
  }

  Truncation trunc_all() const { return Truncation(s.trunc); }

  void run_blowup(const Scenario::Op& op) {
    ++step_no;
    // Reuse the trace machinery for a single step rooted at the stored nodes.
    std::map<std::string, std::vector<const ChartRequest*>> by_parent;
    for (const auto& req : op.step.charts) {
      if (req.path.empty()) throw Error("chart request with empty path");
      std::vector<std::string> parent(req.path.begin(), req.path.end() - 1);
      by_parent[join_path(parent)].push_back(&req);
    }
    for (auto& [parent_key, reqs] : by_parent) {
      auto it = nodes.find(parent_key);
      if (it == nodes.end()) throw Error("no chart at path '" + parent_key + "'");
      TraceNode& parent = it->second;
      DivisorState d = parent.divisors;
      d.next_fresh = step_no;
      VarSet centre_vars;
      for (const auto& n : op.step.centre) {
        int v = s.vt->find(n);
        if (v < 0) v = d.var_of(n);
        if (v < 0) throw Error("centre entry '" + n + "' unknown in chart '" + parent_key + "'");
        centre_vars.push_back(v);
      }
      Centre centre{make_varset(std::move(centre_vars))};
      std::vector<Chart> charts;
      if (std::holds_alternative<ProductForm>(parent.form))
        charts = blow_up_factored(std::get<ProductForm>(parent.form), centre, d);
      else
        charts = blow_up(std::get<PuiseuxPoly>(parent.form), centre, d);
      if (op.step.fresh_label)
        for (auto& ch : charts) ch.divisors.labels[ch.chart_var] = *op.step.fresh_label;

      for (const ChartRequest* req : reqs) {
        int cv = s.vt->find(req->path.back());
        const Chart* found = nullptr;
        for (const auto& ch : charts)
          if (ch.chart_var == cv) found = &ch;
        if (!found)
          throw Error("chart '" + req->path.back() + "' is not a centre variable");
        TraceNode node;
        node.divisors = found->divisors;
        if (found->strict_form)
          node.form = *found->strict_form;
        else
          node.form = found->strict;

        if (req->asserted && req->expect_form) {
          bool pass;
          std::string got;
          if (std::holds_alternative<ProductForm>(node.form)) {
            ProductForm want = parse_product_form(s.vt, *req->expect_form);
            ProductForm have = reduced_form(std::get<ProductForm>(node.form));
            pass = expand(have, false) == expand(want, false);
            got = to_string(have);
          } else {
            PuiseuxPoly want = parse_poly(s.vt, *req->expect_form);
            pass = std::get<PuiseuxPoly>(node.form) == want;
            got = std::get<PuiseuxPoly>(node.form).str();
          }
          add(req->anchor.empty() ? join_path(req->path) + "/form" : req->anchor + "/form",
              pass, *req->expect_form, got);
        }
        if (req->asserted && req->expect_divisors) {
          auto got = node.divisors.named(s.vt);
          bool pass = true;
          std::string got_str, want_str;
          for (const auto& [label, var] : *req->expect_divisors) {
            want_str += label + "=" + var + " ";
            auto g = got.find(label);
            std::string gv = g == got.end() ? "?" : g->second;
            got_str += label + "=" + gv + " ";
            if (gv != var) pass = false;
          }
          add(req->anchor.empty() ? join_path(req->path) + "/divisors" : req->anchor + "/divisors",
              pass, want_str, got_str);
        }
        nodes[join_path(req->path)] = std::move(node);
      }
    }
  }

  void run_classify_point(const Scenario::Op& op) {
    PuiseuxPoly f = expanded_at(op.path);
    Classification cl = classify_point(f, trunc_all());
    bool pass = cl.str() == op.expect;
    // "nc(k)" also accepts the stronger snc verdict.
    if (!pass && op.expect.rfind("nc(", 0) == 0 && cl.verdict == Verdict::snc)
      pass = ("s" + op.expect == cl.str());
    std::string got = cl.str();
    if (op.expect_field != 0) {
      got += " field=" + std::to_string(cl.field_order);
      if (cl.field_order != op.expect_field) pass = false;
    }
    add(op.anchor, pass, op.expect, got);
  }

  void run_classify_form(const Scenario::Op& op) {
    const TraceNode& n = node_at(op.path);
    if (!std::holds_alternative<ProductForm>(n.form))
      throw Error("classify_form needs a factored chart");
    VarSet nonzero;
    for (const auto& name : op.nonzero) nonzero.push_back(s.vt->index_of(name));
    std::set<int> exceptional;
    for (const auto& [v, label] : n.divisors.labels) exceptional.insert(v);
    for (size_t i = 0; i < s.vt->size(); ++i)
      if (s.vt->role(static_cast<int>(i)) == VarRole::exceptional)
        exceptional.insert(static_cast<int>(i));
    auto match = catalog.classify_form(std::get<ProductForm>(n.form),
                                       make_varset(std::move(nonzero)), exceptional);
    std::string got = match.id ? *match.id : ("unclassified: " + match.canonical_text);
    add(op.anchor, match.id && *match.id == op.expect, op.expect, got);
  }

  void run_pinch(const Scenario::Op& op) {
    PuiseuxPoly f = expanded_at(op.path);
    bool got = is_pinch_point(f);
    add(op.anchor, got == op.expect_pass, op.expect_pass ? "pinch point" : "not a pinch point",
        got ? "pinch point" : "not a pinch point");
  }

  void run_expand_equals(const Scenario::Op& op) {
    PuiseuxPoly f = expanded_at(op.path);
    PuiseuxPoly want = parse_poly(s.vt, op.expect);
    add(op.anchor, f == want, op.expect, f.str());
  }

  void run_order_check(const Scenario::Op& op) {
    PuiseuxPoly f = expanded_at(op.path);
    VarSet vars;
    for (const auto& nme : op.op_vars) vars.push_back(s.vt->index_of(nme));
    ExtRat got = f.order(make_varset(std::move(vars)));
    add(op.anchor, got.str() == op.expect, op.expect, got.str());
  }

  ZPoly zpoly_at(const Scenario::Op& op) {
    return ZPoly::from_poly(expanded_at(op.path), s.vt->index_of(op.zvar));
  }

  VarSet wvars_of(const Scenario::Op& op) {
    VarSet w;
    for (const auto& nme : op.op_vars) w.push_back(s.vt->index_of(nme));
    return w;  // order preserved as declared
  }

  void run_min_split(const Scenario::Op& op) {
    ZPoly f = zpoly_at(op);
    auto q = min_split_exponents(f, wvars_of(op), op.bound, trunc_all());
    auto fmt = [](const std::optional<std::vector<unsigned>>& v) {
      if (!v) return std::string("none");
      std::string s = "(";
      for (size_t i = 0; i < v->size(); ++i) s += (i ? "," : "") + std::to_string((*v)[i]);
      return s + ")";
    };
    bool pass = (q == op.expect_cover);
    std::string got = fmt(q);
    if (op.expect_field != 0 && q) {
      auto w = try_split(f, wvars_of(op), *q, trunc_all());
      unsigned fo = 1;
      if (w)
        for (const auto& r : w->roots)
          for (const auto& [m, c] : r.terms()) fo = lcm_u(fo, c.demoted().order());
      got += " field=" + std::to_string(fo);
      if (fo != op.expect_field) pass = false;
    }
    add(op.anchor, pass, fmt(op.expect_cover), got);
  }

  void run_split_check(const Scenario::Op& op) {
    ZPoly f = zpoly_at(op);
    auto w = try_split(f, wvars_of(op), op.cover, trunc_all());
    bool pass = w.has_value() == op.expect_pass;
    add(op.anchor, pass, op.expect_pass ? "splits" : "does not split",
        w ? "splits" : "does not split");
  }

  void run_cubic_chain(const Scenario::Op& op) {
    ZPoly f0 = zpoly_at(op);
    auto [f, shift] = tschirnhausen(f0);
    VarSet wvars = wvars_of(op);
    VarSet xvars;
    int zv = s.vt->index_of(op.zvar);
    for (size_t i = 0; i < s.vt->size(); ++i) {
      int v = static_cast<int>(i);
      if (v != zv && !varset_contains(wvars, v)) xvars.push_back(v);
    }
    PuiseuxPoly Phi = parse_poly(s.vt, op.phi.empty() ? "1" : op.phi);
    std::optional<PuiseuxPoly> supplied;
    if (!op.supplied_sqrt.empty()) supplied = parse_poly(s.vt, op.supplied_sqrt);
    DiscSquareResult ds = make_disc_square(f, Phi, xvars, wvars, trunc_all(), supplied);
    if (!op.expect_alpha.empty()) {
      bool pass = ds.alpha == op.expect_alpha;
      auto fmt = [](const std::vector<long>& v) {
        std::string s = "(";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
      };
      add(op.anchor + "/alpha", pass, fmt(op.expect_alpha), fmt(ds.alpha));
    }
    // Split the transformed cubic over the cube cover and verify.
    std::vector<unsigned> cover(wvars.size(), 3);
    PuiseuxPoly content = disc_square_content(ds.transformed);
    VarSet all;
    for (size_t i = 0; i < s.vt->size(); ++i) all.push_back(static_cast<int>(i));
    std::optional<PuiseuxPoly> A;
    if (supplied && (*supplied) * (*supplied) == content) A = supplied;
    if (!A)
      A = content.is_zero() ? std::make_optional(PuiseuxPoly::zero(s.vt))
                            : try_series_sqrt(content, trunc_all(), all, true);
    bool pass = false;
    std::string got = "no square root of the discriminant content";
    if (A) {
      SplitWitness w = split_cubic_with_square_disc(ds.transformed, *A, wvars, cover,
                                                    trunc_all());
      auto rep = verify_split(ds.transformed, w, xvars);
      pass = rep.pass;
      got = rep.pass ? "split verified" : "re-multiplication failed";
    }
    add(op.anchor, pass == op.expect_pass, op.expect_pass ? "split verified" : "failure",
        got);
  }

  void run() {
    nodes.emplace("", TraceNode{s.initial, s.divisors});
    for (const auto& op : s.script) {
      if (op.kind == "blowup") run_blowup(op);
      else if (op.kind == "classify_point") run_classify_point(op);
      else if (op.kind == "classify_form") run_classify_form(op);
      else if (op.kind == "pinch") run_pinch(op);
      else if (op.kind == "expand_equals") run_expand_equals(op);
      else if (op.kind == "order_check") run_order_check(op);
      else if (op.kind == "min_split") run_min_split(op);
      else if (op.kind == "split_check") run_split_check(op);
      else if (op.kind == "cubic_chain") run_cubic_chain(op);
      else throw Error("unknown scenario op '" + op.kind + "'");
    }
  }
};

}  // namespace

RunReport run_scenario(const Scenario& s, const Catalog& catalog) {
  RunReport report;
  report.scenario = s.id;
  report.trunc = s.trunc;
  auto start = std::chrono::steady_clock::now();
  Runner runner{s, catalog, report};
  try {
    runner.run();
  } catch (const Error& e) {
    report.error = e.what();
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<RunReport> run_scenarios(const std::vector<Scenario>& list,
                                     const Catalog& catalog, unsigned jobs) {
  std::vector<RunReport> reports(list.size());
  if (jobs <= 1 || list.size() <= 1) {
    for (size_t i = 0; i < list.size(); ++i) reports[i] = run_scenario(list[i], catalog);
    return reports;
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= list.size()) break;
      reports[i] = run_scenario(list[i], catalog);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return reports;
}

}  // namespace minsing
