#include "doctest.h"
#include "minsing/blowup.hpp"
#include "minsing/circulant.hpp"
#include "minsing/error.hpp"
#include "minsing/poly_io.hpp"
#include "test_util.hpp"

using namespace minsing;
using namespace minsing::testing;

namespace {

VarTablePtr wxz() { return VarTable::make({"w", "x", "z"}); }

const Chart& chart_of(const std::vector<Chart>& charts, int var) {
  for (const auto& c : charts)
    if (c.chart_var == var) return c;
  throw Error("no such chart");
}

VarTablePtr cp4_table() {
  return VarTable::make({{std::string("w"), VarRole::exceptional},
                         {std::string("x1"), VarRole::ambient},
                         {std::string("x2"), VarRole::ambient},
                         {std::string("x3"), VarRole::ambient},
                         {std::string("z"), VarRole::ambient}});
}

}  // namespace

TEST_CASE("order along a centre") {
  auto vt = wxz();
  PuiseuxPoly f = parse_poly(vt, "z^2 - w*x^2");
  CHECK(order_along(f, Centre{{vt->index_of("z"), vt->index_of("x")}}) == Rat(2));
  CHECK(order_along(f, Centre{{vt->index_of("z"), vt->index_of("w")}}) == Rat(1));
  CHECK(order_along(parse_poly(vt, "z"), Centre{{1, 2}}) == Rat(1));

  auto vt4 = cp4_table();
  PuiseuxPoly p4 = expand(parse_product_form(
      vt4, "Delta4(z; w^(1/4)*x1; w^(2/4)*x2; w^(3/4)*x3)"));
  CHECK(order_along(p4, Centre{{0, 1, 2, 3, 4}}) == Rat(4));
  CHECK_THROWS_AS(order_along(PuiseuxPoly::zero(vt), Centre{{0, 1}}), Error);
}

TEST_CASE("point blow-up of the basic example") {
  auto vt = wxz();
  PuiseuxPoly f = parse_poly(vt, "z^2 + (w^3 + x)*x^2");
  DivisorState d;
  auto charts = blow_up(f, Centre{{0, 1, 2}}, d);
  const Chart& w = chart_of(charts, 0);
  CHECK(w.strict == parse_poly(vt, "z^2 + w*(w^2 + x)*x^2"));
  CHECK(w.multiplicity == Rat(2));
  CHECK(w.divisors.labels.at(0) == "D1");
  // Total transform = chart_var^m * strict, exactly.
  Monomial m(vt->size());
  m.set(0, w.multiplicity);
  CHECK(w.total == w.strict.mul_term(m, CycNum(1)));
}

TEST_CASE("Whitney family step: centre {z = w = 0}") {
  auto vt = wxz();
  for (int k = 2; k <= 6; ++k) {
    PuiseuxPoly f = parse_poly(vt, "z^2 - w^" + std::to_string(k) + "*x^2");
    DivisorState d;
    auto charts = blow_up(f, Centre{{vt->index_of("w"), vt->index_of("z")}}, d);
    const Chart& w = chart_of(charts, vt->index_of("w"));
    CHECK(w.strict == parse_poly(vt, "z^2 - w^" + std::to_string(k - 2) + "*x^2"));
  }
  // Smooth surface: strict transform in the x-chart stays z.
  PuiseuxPoly lin = parse_poly(vt, "z");
  auto charts = blow_up(lin, Centre{{vt->index_of("x"), vt->index_of("z")}}, DivisorState{});
  CHECK(chart_of(charts, vt->index_of("x")).strict == parse_poly(vt, "z"));
}

TEST_CASE("codimension-one centres are rejected") {
  auto vt = wxz();
  CHECK_THROWS_AS(blow_up(parse_poly(vt, "z"), Centre{{2}}, DivisorState{}), Error);
}

TEST_CASE("factored blow-up reproduces the first cp(4) charts") {
  auto vt = cp4_table();
  ProductForm cp4 = parse_product_form(vt, "Delta4(z; w^(1/4)*x1; w^(2/4)*x2; w^(3/4)*x3)");
  DivisorState d;
  d.labels[vt->index_of("w")] = "Dold";
  auto charts = blow_up_factored(cp4, Centre{{0, 1, 2, 3, 4}}, d);

  const Chart& w = chart_of(charts, vt->index_of("w"));
  REQUIRE(w.strict_form.has_value());
  CHECK(expand(*w.strict_form) ==
        expand(parse_product_form(vt, "Delta4(z; w^(1/4)*x1; w^(2/4)*x2; w^(3/4)*x3)")));
  CHECK(w.divisors.labels.at(vt->index_of("w")) == "D1");
  CHECK(w.divisors.labels.count(vt->index_of("x1")) == 0);

  const Chart& x1 = chart_of(charts, vt->index_of("x1"));
  CHECK(expand(*x1.strict_form) ==
        expand(parse_product_form(
            vt, "Delta4(z; w^(1/4)*x1^(1/4); w^(2/4)*x1^(2/4)*x2; w^(3/4)*x1^(3/4)*x3)")));
  CHECK(x1.divisors.labels.at(vt->index_of("x1")) == "D1");
  CHECK(x1.divisors.labels.at(vt->index_of("w")) == "Dold");
  CHECK(x1.multiplicity == Rat(4));
}

TEST_CASE("factored and expanded blow-ups commute on circulant forms") {
  auto vt = cp4_table();
  std::vector<std::string> forms{
      "Delta2(z; w^(1/2)*x1)",
      "Delta3(z; w^(1/3)*x1; w^(2/3)*x2)",
      "Delta4(z; w^(1/4)*x1; w^(2/4)*x2; w^(3/4)*x3)",
      "Delta2(z; w^(1/2)*x1)*Delta2(x2; w^(1/2)*x3)",
      "x3*Delta3(z; w^(1/3)*x1; w^(2/3)*x2)"};
  std::vector<VarSet> centres{{0, 1, 2, 3, 4}, {0, 1, 4}, {0, 2, 3}, {1, 2, 4}};
  for (const auto& text : forms) {
    ProductForm p = parse_product_form(vt, text);
    PuiseuxPoly e = expand(p);
    for (const auto& cv : centres) {
      Centre c{cv};
      auto fact = blow_up_factored(p, c, DivisorState{});
      auto expd = blow_up(e, c, DivisorState{});
      for (size_t i = 0; i < fact.size(); ++i) {
        CHECK(expand(*fact[i].strict_form) == expd[i].strict);
        CHECK(fact[i].multiplicity == expd[i].multiplicity);
      }
    }
  }
}

TEST_CASE("strict transform has no chart-variable content") {
  auto vt = VarTable::make({"a", "b", "c"});
  for (int rep = 0; rep < 300; ++rep) {
    PuiseuxPoly f = rand_poly(vt, 4, false, true);
    if (f.is_zero()) continue;
    Centre c{{0, 1}};
    for (const auto& chart : blow_up(f, c, DivisorState{})) {
      auto [m, r] = chart.strict.monomial_part(VarSet{chart.chart_var});
      CHECK(m.is_one());
      // Exactly one fresh label, on the chart variable.
      int fresh = 0;
      for (const auto& [v, l] : chart.divisors.labels)
        if (l == "D1") {
          ++fresh;
          CHECK(v == chart.chart_var);
        }
      CHECK(fresh == 1);
      // total = chart^m * strict
      Monomial mm(vt->size());
      mm.set(chart.chart_var, chart.multiplicity);
      CHECK(chart.total == chart.strict.mul_term(mm, CycNum(1)));
    }
  }
}

TEST_CASE("unit blocks drop from the reduced form") {
  auto vt = VarTable::make({"w", "y", "x1", "x2", "z"});
  ProductForm p = parse_product_form(vt, "Delta1(y)*Delta3(z; w^(1/3)*x1; w^(2/3)*x2)");
  DivisorState d;
  auto charts = blow_up_factored(p, Centre{{0, 1, 2, 3, 4}}, d);
  const Chart& z = chart_of(charts, vt->index_of("z"));
  // In the z-chart the Delta_3 block becomes a unit; the reduced form is y.
  ProductForm red = reduced_form(*z.strict_form);
  CHECK(expand(red) == parse_poly(vt, "y"));
}

TEST_CASE("scripted sequence: replay, divisor labels per step, empty trace") {
  auto vt = wxz();
  BlowupTrace trace;
  trace.vt = vt;
  trace.initial = parse_poly(vt, "z^2 - w^4*x^2");
  // Two Whitney steps in the w-chart; labels resolve through the state.
  for (int s = 0; s < 2; ++s) {
    TraceStep step;
    step.centre = {"w", "z"};
    ChartRequest req;
    req.path = std::vector<std::string>(s + 1, "w");
    req.expect_form = s == 0 ? "z^2 - w^2*x^2" : "z^2 - x^2";
    req.expect_divisors = std::map<std::string, std::string>{{"D" + std::to_string(s + 1), "w"}};
    req.anchor = "whitney/step" + std::to_string(s + 1);
    step.charts.push_back(req);
    trace.steps.push_back(step);
  }
  auto report = run_sequence(trace);
  CHECK(report.all_passed());
  REQUIRE(report.charts.size() == 2);
  CHECK(report.charts[1].computed_form == "z^2 - x^2");

  BlowupTrace empty;
  empty.vt = vt;
  empty.initial = parse_poly(vt, "z^2 - w*x^2");
  auto rep2 = run_sequence(empty);
  CHECK(rep2.all_passed());
  CHECK(std::get<PuiseuxPoly>(rep2.nodes.at("").form) == parse_poly(vt, "z^2 - w*x^2"));
}

TEST_CASE("centres given by divisor labels resolve per chart") {
  auto vt = cp4_table();
  BlowupTrace trace;
  trace.vt = vt;
  trace.initial = parse_product_form(vt, "Delta4(z; w^(1/4)*x1; w^(2/4)*x2; w^(3/4)*x3)");
  trace.divisors.labels[vt->index_of("w")] = "Dold";

  TraceStep b1;
  b1.centre = {"w", "x1", "x2", "x3", "z"};
  for (const std::string& c : {"x2", "x3"}) {
    ChartRequest r;
    r.path = {c};
    r.asserted = false;
    b1.charts.push_back(r);
  }
  trace.steps.push_back(b1);

  TraceStep b2;
  b2.centre = {"D1", "z", "w", "x1"};  // resolves to x3 or x2 per parent
  ChartRequest r1;
  r1.path = {"x3", "w"};
  r1.expect_form = "Delta4(z; w^(2/4)*x3^(1/4)*x1; x3^(2/4)*x2; w^(2/4)*x3^(3/4))";
  r1.expect_divisors = std::map<std::string, std::string>{{"D1", "x3"}, {"D2", "w"}};
  b2.charts.push_back(r1);
  ChartRequest r2;
  r2.path = {"x2", "w"};
  r2.expect_form = "Delta4(z; w^(2/4)*x2^(1/4)*x1; x2^(2/4); w^(2/4)*x2^(3/4)*x3)";
  r2.expect_divisors = std::map<std::string, std::string>{{"D1", "x2"}, {"D2", "w"}};
  b2.charts.push_back(r2);
  trace.steps.push_back(b2);

  auto report = run_sequence(trace);
  for (const auto& c : report.charts) {
    CAPTURE(c.path);
    CAPTURE(c.expected);
    CAPTURE(c.computed_form);
    CHECK(c.pass);
  }
}
