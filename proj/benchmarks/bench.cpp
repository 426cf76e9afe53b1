#include "benchmark/benchmark.h"

#include "minsing/blowup.hpp"
#include "minsing/circulant.hpp"
#include "minsing/classify.hpp"
#include "minsing/poly_io.hpp"
#include "minsing/splitting.hpp"
#include "minsing/zpoly.hpp"

using namespace minsing;

namespace {

VarTablePtr cp_table(unsigned k) {
  std::vector<std::pair<std::string, VarRole>> vars;
  vars.emplace_back("w", VarRole::exceptional);
  vars.emplace_back("z", VarRole::ambient);
  for (unsigned i = 1; i < k; ++i)
    vars.emplace_back("x" + std::to_string(i), VarRole::ambient);
  return VarTable::make(std::move(vars));
}

ProductForm cp_form(const VarTablePtr& vt, unsigned k) {
  std::vector<int> slots{vt->index_of("z")};
  for (unsigned i = 1; i < k; ++i) slots.push_back(vt->index_of("x" + std::to_string(i)));
  return make_cp(vt, k, vt->index_of("w"), slots);
}

void BM_circulant_expand(benchmark::State& state) {
  unsigned k = static_cast<unsigned>(state.range(0));
  auto vt = cp_table(k);
  ProductForm form = cp_form(vt, k);
  for (auto _ : state) {
    PuiseuxPoly e = expand(form);
    benchmark::DoNotOptimize(e.term_count());
  }
}
BENCHMARK(BM_circulant_expand)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_blow_up_factored(benchmark::State& state) {
  auto vt = cp_table(4);
  ProductForm form = cp_form(vt, 4);
  Centre origin{{0, 1, 2, 3, 4}};
  for (auto _ : state) {
    auto charts = blow_up_factored(form, origin, DivisorState{});
    benchmark::DoNotOptimize(charts.size());
  }
}
BENCHMARK(BM_blow_up_factored);

void BM_discriminant_cubic(benchmark::State& state) {
  auto vt = VarTable::make({"w", "x1", "x2", "z"});
  ZPoly f = ZPoly::from_poly(
      parse_poly(vt, "z^3 + w*x1^3 + w^2*x2^3 - 3*w*x1*x2*z"), 3);
  for (auto _ : state) {
    PuiseuxPoly d = discriminant(f);
    benchmark::DoNotOptimize(d.term_count());
  }
}
BENCHMARK(BM_discriminant_cubic);

void BM_hensel_lift_nodal(benchmark::State& state) {
  auto vt = VarTable::make({"x", "y"});
  PuiseuxPoly f = parse_poly(vt, "y^2 - x^2 - x^3");
  std::vector<PuiseuxPoly> init{parse_poly(vt, "y - x"), parse_poly(vt, "y + x")};
  Truncation t(Rat(state.range(0)));
  for (auto _ : state) {
    auto r = hensel_lift(f, init, t);
    benchmark::DoNotOptimize(r.ok);
  }
}
BENCHMARK(BM_hensel_lift_nodal)->Arg(8)->Arg(12)->Arg(16);

void BM_classify_umbrella_localized(benchmark::State& state) {
  auto vt = VarTable::make({"w", "x", "z"});
  PuiseuxPoly f = parse_poly(vt, "z^2 - (1 + w)*x^2");
  for (auto _ : state) {
    Classification cl = classify_point(f, Truncation(Rat(12)));
    benchmark::DoNotOptimize(cl.k);
  }
}
BENCHMARK(BM_classify_umbrella_localized);

void BM_cubic_split(benchmark::State& state) {
  auto vt = VarTable::make({"w", "x1", "x2", "z"});
  ZPoly f = ZPoly::from_poly(
      parse_poly(vt, "z^3 + w*x1^3 + w^2*x2^3 - 3*w*x1*x2*z"), 3);
  for (auto _ : state) {
    auto w = try_split(f, {0}, {3}, Truncation(Rat(12)));
    benchmark::DoNotOptimize(w.has_value());
  }
}
BENCHMARK(BM_cubic_split);

void BM_series_sqrt(benchmark::State& state) {
  auto vt = VarTable::make({"w", "x"});
  PuiseuxPoly g = parse_poly(vt, "w^2*(1 + x)");
  VarSet all{0, 1};
  Truncation t(Rat(state.range(0)));
  for (auto _ : state) {
    auto h = try_series_sqrt(g, t, all, false);
    benchmark::DoNotOptimize(h.has_value());
  }
}
BENCHMARK(BM_series_sqrt)->Arg(8)->Arg(16)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
