#include "minsing/blowup.hpp"

#include <algorithm>
#include <sstream>

#include "minsing/circulant.hpp"
#include "minsing/error.hpp"
#include "minsing/poly_io.hpp"

namespace minsing {

int DivisorState::var_of(const std::string& label) const {
  for (const auto& [v, l] : labels)
    if (l == label) return v;
  return -1;
}

std::map<std::string, std::string> DivisorState::named(const VarTablePtr& vt) const {
  std::map<std::string, std::string> out;
  for (const auto& [v, l] : labels) out[l] = vt->name(v);
  return out;
}

namespace {

void check_centre(const VarTablePtr& vt, const Centre& c) {
  if (c.vars.size() < 2) throw Error("blow-up centre must have codimension >= 2");
  for (int v : c.vars)
    if (v < 0 || static_cast<size_t>(v) >= vt->size())
      throw Error("centre variable out of range");
}

std::map<int, PuiseuxPoly> chart_map(const VarTablePtr& vt, const Centre& c,
                                     int chart_var) {
  std::map<int, PuiseuxPoly> sub;
  PuiseuxPoly cv = PuiseuxPoly::variable(vt, chart_var);
  for (int v : c.vars) {
    if (v == chart_var) continue;
    sub.emplace(v, cv * PuiseuxPoly::variable(vt, v));
  }
  return sub;
}

DivisorState relabel(const DivisorState& d, int chart_var) {
  DivisorState nd = d;
  nd.labels.erase(chart_var);  // old divisor moved away in this chart
  nd.labels[chart_var] = nd.fresh_label();
  ++nd.next_fresh;
  return nd;
}

Monomial substituted_monomial(const VarTablePtr& vt, const Monomial& m,
                              const Centre& c, int chart_var) {
  // Image of a monomial under the chart map is again a monomial: the chart
  // variable absorbs the whole centre degree.
  Monomial out = m;
  Rat extra(0);
  for (int v : c.vars) {
    if (v == chart_var) continue;
    extra += m[static_cast<size_t>(v)];
  }
  out.set(chart_var, out[static_cast<size_t>(chart_var)] + extra);
  return out;
}

}  // namespace

Rat order_along(const PuiseuxPoly& f, const Centre& c) {
  if (f.is_zero()) throw Error("order along a centre of the zero polynomial");
  return f.order(c.vars).finite();
}

std::vector<Chart> blow_up(const PuiseuxPoly& f, const Centre& c,
                           const DivisorState& d) {
  check_centre(f.vars(), c);
  const VarTablePtr& vt = f.vars();
  Rat m = order_along(f, c);
  std::vector<Chart> charts;
  for (int cv : c.vars) {
    Chart chart;
    chart.chart_var = cv;
    chart.divisors = relabel(d, cv);
    chart.multiplicity = m;
    chart.total = f.substitute(chart_map(vt, c, cv));
    Monomial div(vt->size());
    div.set(cv, m);
    PuiseuxPoly strict(vt);
    for (const auto& [mono, coeff] : chart.total.terms()) {
      auto q = mono.divided_by(div);
      if (!q) throw Error("internal: strict transform left a negative exponent");
      strict += PuiseuxPoly::term(vt, std::move(*q), coeff);
    }
    chart.strict = std::move(strict);
    charts.push_back(std::move(chart));
  }
  return charts;
}

std::vector<Chart> blow_up_factored(const ProductForm& p, const Centre& c,
                                    const DivisorState& d) {
  check_centre(p.vt, c);
  const VarTablePtr& vt = p.vt;
  PuiseuxPoly expanded = expand(p);
  Rat m = order_along(expanded, c);
  std::vector<Chart> charts;
  for (int cv : c.vars) {
    Chart chart;
    chart.chart_var = cv;
    chart.divisors = relabel(d, cv);
    chart.multiplicity = m;

    ProductForm out(vt);
    // Prefactor: image divided by its own centre content.
    Monomial pf = substituted_monomial(vt, p.prefactor, c, cv);
    Rat pf_content = p.prefactor.degree(c.vars);
    Rat removed = pf_content;
    {
      Monomial div(vt->size());
      div.set(cv, pf_content);
      auto q = pf.divided_by(div);
      if (!q) throw Error("internal: prefactor division failed");
      out.prefactor = std::move(*q);
    }
    for (const auto& block : p.blocks) {
      FactoredCirculant nb;
      nb.k = block.k;
      std::vector<Monomial> images;
      images.reserve(block.k);
      bool first = true;
      Rat g(0);
      for (const auto& arg : block.args) {
        Monomial img = substituted_monomial(vt, arg.mono, c, cv);
        Rat e = img[static_cast<size_t>(cv)];
        if (first || e < g) g = e;
        first = false;
        images.push_back(std::move(img));
      }
      Monomial div(vt->size());
      div.set(cv, g);
      for (unsigned j = 0; j < block.k; ++j) {
        auto q = images[j].divided_by(div);
        if (!q) throw Error("internal: block argument division failed");
        nb.args.push_back(CircArg{std::move(*q), block.args[j].coeff});
      }
      removed += g * Rat(static_cast<long>(block.k));
      out.blocks.push_back(std::move(nb));
    }
    if (removed != m)
      throw Error("factored strict transform does not match the expanded order");

    // Cross-check against the expanded route.
    chart.total = expanded.substitute(chart_map(vt, c, cv));
    Monomial div(vt->size());
    div.set(cv, m);
    PuiseuxPoly strict(vt);
    for (const auto& [mono, coeff] : chart.total.terms()) {
      auto q = mono.divided_by(div);
      if (!q) throw Error("internal: strict transform left a negative exponent");
      strict += PuiseuxPoly::term(vt, std::move(*q), coeff);
    }
    if (!(expand(out) == strict))
      throw Error("factored and expanded strict transforms disagree");
    chart.strict = std::move(strict);
    chart.strict_form = std::move(out);
    charts.push_back(std::move(chart));
  }
  return charts;
}

ProductForm reduced_form(const ProductForm& p) {
  ProductForm out(p.vt);
  out.prefactor = p.prefactor;
  for (const auto& block : p.blocks) {
    bool unit_arg = false;
    for (const auto& arg : block.args)
      if (arg.mono.is_one()) unit_arg = true;
    if (!unit_arg) {
      out.blocks.push_back(block);
      continue;
    }
    PuiseuxPoly value = circulant_expand(p.vt, block, /*require_rational=*/false);
    if (value.constant_term().is_zero())
      throw Error("degenerate block: constant arguments cancel at the origin");
    // Unit at the origin; drop it.
  }
  return out;
}

std::optional<Rat> weighted_homogeneous_degree(const PuiseuxPoly& f,
                                               const std::vector<Rat>& weights) {
  return f.weighted_degree(weights);
}

std::string join_path(const std::vector<std::string>& path) {
  std::string out;
  for (const auto& p : path) out += p;
  return out;
}

bool TraceReport::all_passed() const {
  for (const auto& c : charts)
    if (c.checked && !c.pass) return false;
  return true;
}

namespace {

VarSet resolve_centre(const VarTablePtr& vt, const DivisorState& d,
                      const std::vector<std::string>& names) {
  std::vector<int> vars;
  for (const auto& n : names) {
    int v = vt->find(n);
    if (v < 0) v = d.var_of(n);
    if (v < 0) throw Error("centre entry '" + n + "' is neither a variable nor a divisor label here");
    vars.push_back(v);
  }
  return make_varset(std::move(vars));
}

std::string render_form(const VarTablePtr& vt, const TraceNode& node) {
  if (std::holds_alternative<ProductForm>(node.form))
    return to_string(reduced_form(std::get<ProductForm>(node.form)));
  return std::get<PuiseuxPoly>(node.form).str();
}

bool forms_equal(const VarTablePtr& vt, const TraceNode& node,
                 const std::string& expected) {
  if (std::holds_alternative<ProductForm>(node.form)) {
    ProductForm want = parse_product_form(vt, expected);
    return expand(reduced_form(std::get<ProductForm>(node.form)), false) ==
           expand(want, false);
  }
  return std::get<PuiseuxPoly>(node.form) == parse_poly(vt, expected);
}

}  // namespace

TraceReport run_sequence(const BlowupTrace& trace) {
  TraceReport report;
  report.nodes.emplace("", TraceNode{trace.initial, trace.divisors});

  int step_no = 0;
  for (const auto& step : trace.steps) {
    ++step_no;
    // Group requested charts by parent path.
    std::map<std::string, std::vector<const ChartRequest*>> by_parent;
    std::map<std::string, std::vector<std::string>> parent_paths;
    for (const auto& req : step.charts) {
      if (req.path.empty()) throw Error("chart request with empty path");
      std::vector<std::string> parent(req.path.begin(), req.path.end() - 1);
      by_parent[join_path(parent)].push_back(&req);
      parent_paths[join_path(parent)] = parent;
    }
    for (const auto& [parent_key, reqs] : by_parent) {
      auto node_it = report.nodes.find(parent_key);
      if (node_it == report.nodes.end())
        throw Error("chart parent '" + parent_key + "' was not computed by an earlier step");
      TraceNode& parent = node_it->second;
      DivisorState d = parent.divisors;
      d.next_fresh = step_no;  // one fresh label per step, shared across charts
      Centre centre{resolve_centre(trace.vt, d, step.centre)};

      std::vector<Chart> charts;
      if (std::holds_alternative<ProductForm>(parent.form))
        charts = blow_up_factored(std::get<ProductForm>(parent.form), centre, d);
      else
        charts = blow_up(std::get<PuiseuxPoly>(parent.form), centre, d);
      if (step.fresh_label) {
        for (auto& ch : charts)
          ch.divisors.labels[ch.chart_var] = *step.fresh_label;
      }

      for (const ChartRequest* req : reqs) {
        const std::string& chart_name = req->path.back();
        int cv = trace.vt->find(chart_name);
        const Chart* found = nullptr;
        for (const auto& ch : charts)
          if (ch.chart_var == cv) found = &ch;
        if (!found)
          throw Error("chart '" + chart_name + "' is not a centre variable of step " +
                      std::to_string(step_no));

        TraceNode node;
        node.divisors = found->divisors;
        if (found->strict_form)
          node.form = *found->strict_form;
        else
          node.form = found->strict;
        std::string key = join_path(req->path);

        ChartOutcome outcome;
        outcome.path = key;
        outcome.anchor = req->anchor;
        outcome.computed_form = render_form(trace.vt, node);
        outcome.divisors = node.divisors.named(trace.vt);
        outcome.order_after = found->multiplicity;
        outcome.checked = req->asserted && (req->expect_form || req->expect_divisors);
        if (req->asserted && req->expect_form) {
          outcome.expected = *req->expect_form;
          if (!forms_equal(trace.vt, node, *req->expect_form)) outcome.pass = false;
        }
        if (req->asserted && req->expect_divisors) {
          auto got = node.divisors.named(trace.vt);
          for (const auto& [label, var] : *req->expect_divisors) {
            auto it = got.find(label);
            if (it == got.end() || it->second != var) {
              outcome.pass = false;
              outcome.expected += (outcome.expected.empty() ? "" : " ; ") + label + "=" + var;
            }
          }
        }
        report.charts.push_back(std::move(outcome));
        report.nodes.emplace(std::move(key), std::move(node));
      }
    }
  }
  return report;
}

}  // namespace minsing
