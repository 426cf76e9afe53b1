#include "doctest.h"
#include "minsing/blowup.hpp"
#include "minsing/circulant.hpp"
#include "minsing/error.hpp"
#include "minsing/poly_io.hpp"
#include "test_util.hpp"

using namespace minsing;
using namespace minsing::testing;

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
  std::vector<int> slots;
  slots.push_back(vt->index_of("z"));
  for (unsigned i = 1; i < k; ++i) slots.push_back(vt->index_of("x" + std::to_string(i)));
  return make_cp(vt, k, vt->index_of("w"), slots);
}

}  // namespace

TEST_CASE("pinch point and cp(3) expansions match the printed normal forms") {
  auto vt = VarTable::make({"w", "z", "y", "x"});
  ProductForm pp = parse_product_form(vt, "Delta2(z; w^(1/2)*x)");
  CHECK(expand(pp) == parse_poly(vt, "z^2 - w*x^2"));

  ProductForm cp3 = parse_product_form(vt, "Delta3(z; w^(1/3)*y; w^(2/3)*x)");
  CHECK(expand(cp3) == parse_poly(vt, "z^3 + w*y^3 + w^2*x^3 - 3*w*x*y*z"));

  ProductForm d1 = parse_product_form(vt, "Delta1(x)");
  CHECK(expand(d1) == parse_poly(vt, "x"));
}

TEST_CASE("circulant expansion agrees with the cofactor determinant oracle") {
  for (unsigned k = 1; k <= 6; ++k) {
    std::vector<std::pair<std::string, VarRole>> names;
    for (unsigned i = 0; i < k; ++i)
      names.emplace_back("X" + std::to_string(i), VarRole::ambient);
    auto vt = VarTable::make(std::move(names));
    FactoredCirculant block;
    block.k = k;
    std::vector<PuiseuxPoly> entries;
    for (unsigned i = 0; i < k; ++i) {
      Monomial m(vt->size());
      m.set(static_cast<int>(i), Rat(1));
      block.args.push_back(CircArg{m, CycNum(1)});
      entries.push_back(PuiseuxPoly::variable(vt, static_cast<int>(i)));
    }
    PuiseuxPoly eig = circulant_expand(vt, block);
    PuiseuxPoly det = circulant_det_oracle(vt, k, entries);
    CHECK(eig == det);
    for (const auto& [m, c] : eig.terms()) CHECK(c.is_rational());
  }
}

TEST_CASE("known small circulant determinants") {
  auto vt = VarTable::make({"X0", "X1", "X2"});
  std::vector<PuiseuxPoly> e2{PuiseuxPoly::variable(vt, 0), PuiseuxPoly::variable(vt, 1)};
  CHECK(circulant_det_oracle(vt, 2, e2) == parse_poly(vt, "X0^2 - X1^2"));
  std::vector<PuiseuxPoly> e3{PuiseuxPoly::variable(vt, 0), PuiseuxPoly::variable(vt, 1),
                              PuiseuxPoly::variable(vt, 2)};
  CHECK(circulant_det_oracle(vt, 3, e3) ==
        parse_poly(vt, "X0^3 + X1^3 + X2^3 - 3*X0*X1*X2"));
}

TEST_CASE("eigen transform round trip") {
  auto vt = VarTable::make({"a", "b", "c", "d"});
  for (unsigned k = 2; k <= 4; ++k) {
    for (int rep = 0; rep < 30; ++rep) {
      std::vector<PuiseuxPoly> v;
      for (unsigned i = 0; i < k; ++i) v.push_back(rand_poly(vt, 3));
      auto fwd = eigen_transform(v, false);
      auto back = eigen_transform(fwd, true);
      for (unsigned i = 0; i < k; ++i) CHECK(back[i] == v[i]);
    }
  }
}

TEST_CASE("forward eigen transform rows") {
  auto vt = VarTable::make({"w", "z", "y", "x"});
  std::vector<PuiseuxPoly> x{parse_poly(vt, "z"), parse_poly(vt, "w^(1/3)*y"),
                             parse_poly(vt, "w^(2/3)*x")};
  auto y = eigen_transform(x, false);
  CHECK(y[0] == parse_poly(vt, "z + w^(1/3)*y + w^(2/3)*x"));
  CHECK(y[1] == parse_poly(vt, "z + (z3)*w^(1/3)*y + (z3^2)*w^(2/3)*x"));
  // Component 0 of the inverse transform of Y_j = z + b(eps^j v, x) is z
  // whenever b has no pure v^{0 mod k} part.
  auto vt2 = VarTable::make({"v", "x", "z"});
  PuiseuxPoly z = PuiseuxPoly::variable(vt2, 2);
  std::vector<PuiseuxPoly> ys;
  for (int j = 0; j < 3; ++j) {
    CycNum e1 = CycNum::zeta(3, j);
    CycNum e2 = CycNum::zeta(3, 2 * j);
    PuiseuxPoly b = parse_poly(vt2, "v*x").mul_scalar(e1) +
                    parse_poly(vt2, "v^2*x^2").mul_scalar(e2);
    ys.push_back(z + b);
  }
  auto xs = eigen_transform(ys, true);
  CHECK(xs[0] == z);
}

TEST_CASE("make_cp produces the circulant point normal forms") {
  auto vt2 = cp_table(2);
  CHECK(expand(cp_form(vt2, 2)) == parse_poly(vt2, "z^2 - w*x1^2"));

  auto vt1 = cp_table(1);
  CHECK(expand(cp_form(vt1, 1)) == parse_poly(vt1, "z"));

  auto vt3 = cp_table(3);
  CHECK(expand(cp_form(vt3, 3)) ==
        parse_poly(vt3, "z^3 + w*x1^3 + w^2*x2^3 - 3*w*x1*x2*z"));
}

TEST_CASE("weighted homogeneity of the circulant forms") {
  auto vt = cp_table(4);
  PuiseuxPoly p4 = expand(cp_form(vt, 4));
  // (w, z, x1, x2, x3) weights (1, 1, 3/4, 2/4, 1/4)
  std::vector<Rat> weights{Rat(1), Rat(1), Rat(3, 4), Rat(2, 4), Rat(1, 4)};
  auto deg = weighted_homogeneous_degree(p4, weights);
  REQUIRE(deg.has_value());
  CHECK(*deg == Rat(4));

  auto vt3 = VarTable::make({"w", "z", "y", "x"});
  PuiseuxPoly p3 = parse_poly(vt3, "z^3 + w*y^3 + w^2*x^3 - 3*w*x*y*z");
  std::vector<Rat> w3{Rat(1), Rat(1), Rat(2, 3), Rat(1, 3)};
  CHECK(*weighted_homogeneous_degree(p3, w3) == Rat(3));

  auto vt2 = VarTable::make({"x", "y"});
  CHECK(!weighted_homogeneous_degree(parse_poly(vt2, "x + y^2"), {Rat(1), Rat(1)}).has_value());
}

TEST_CASE("substituting w = v^k splits cp(k) into smooth branches") {
  for (unsigned k = 2; k <= 4; ++k) {
    auto vt = cp_table(k);
    PuiseuxPoly expanded = expand(cp_form(vt, k));
    int wv = vt->index_of("w");
    PuiseuxPoly v_to_k = PuiseuxPoly::variable(vt, wv).pow_int(k);  // reuse w as v
    PuiseuxPoly covered = expanded.substitute(wv, v_to_k);
    // Product of the k eigen factors z + eps^l v x1 + eps^{2l} v^2 x2 + ...
    PuiseuxPoly prod = PuiseuxPoly::constant(vt, CycNum(1));
    for (unsigned l = 0; l < k; ++l) {
      PuiseuxPoly factor = PuiseuxPoly::variable(vt, vt->index_of("z"));
      for (unsigned j = 1; j < k; ++j) {
        Monomial m(vt->size());
        m.set(wv, Rat(static_cast<long>(j)));
        m.set(vt->index_of("x" + std::to_string(j)), Rat(1));
        factor += PuiseuxPoly::term(vt, m, CycNum::zeta(k, static_cast<long>(j) * l));
      }
      // Nonzero linear part: the z coefficient is 1.
      Monomial zm(vt->size());
      zm.set(vt->index_of("z"), Rat(1));
      CHECK(factor.coeff(zm) == CycNum(1));
      prod = prod * factor;
    }
    CHECK(prod == covered);
  }
}

TEST_CASE("component extraction from a Z_k root system") {
  auto vt = VarTable::make({"v", "w", "x", "z"});
  int vv = vt->index_of("v"), wv = vt->index_of("w");

  // Roots of Delta_2(z, w^{1/2} x) over w = v^2: +-(v x).
  std::vector<PuiseuxPoly> roots{parse_poly(vt, "v*x"), parse_poly(vt, "-v*x")};
  auto comps = circulant_components_from_roots(roots, 2, vv, wv, Truncation(Rat(12)));
  REQUIRE(comps.size() == 1);
  CHECK(!comps[0].degenerate);
  CHECK(comps[0].m == 0);
  CHECK(comps[0].unit_part == parse_poly(vt, "x"));

  // Roots of z^2 - w^3 x^2 over w = v^2: +-(v^3 x) gives m = 1.
  std::vector<PuiseuxPoly> roots3{parse_poly(vt, "v^3*x"), parse_poly(vt, "-v^3*x")};
  auto comps3 = circulant_components_from_roots(roots3, 2, vv, wv, Truncation(Rat(12)));
  REQUIRE(comps3.size() == 1);
  CHECK(comps3[0].m == 1);
  CHECK(comps3[0].unit_part == parse_poly(vt, "x"));

  // Roots independent of v: every nontrivial component degenerates.
  std::vector<PuiseuxPoly> flat{parse_poly(vt, "x"), parse_poly(vt, "x")};
  auto dcomp = circulant_components_from_roots(flat, 2, vv, wv, Truncation(Rat(12)));
  REQUIRE(dcomp.size() == 1);
  CHECK(dcomp[0].degenerate);

  // Roots that are not permuted by v -> eps v are rejected.
  std::vector<PuiseuxPoly> bad{parse_poly(vt, "v*x"), parse_poly(vt, "v*x + x^2")};
  CHECK_THROWS_WITH_AS(circulant_components_from_roots(bad, 2, vv, wv, Truncation(Rat(12))),
                       doctest::Contains("not a Z_k root system"), Error);
}

TEST_CASE("cp(3) root system recovers the normal form data") {
  auto vt = VarTable::make({"v", "w", "x1", "x2", "z"});
  int vv = vt->index_of("v"), wv = vt->index_of("w");
  std::vector<PuiseuxPoly> roots;
  for (int l = 0; l < 3; ++l) {
    PuiseuxPoly r = parse_poly(vt, "v*x1").mul_scalar(-CycNum::zeta(3, l)) +
                    parse_poly(vt, "v^2*x2").mul_scalar(-CycNum::zeta(3, 2 * l));
    roots.push_back(r);
  }
  auto comps = circulant_components_from_roots(roots, 3, vv, wv, Truncation(Rat(12)));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].m == 0);
  CHECK(comps[0].unit_part == parse_poly(vt, "x1"));
  CHECK(comps[1].m == 0);
  CHECK(comps[1].unit_part == parse_poly(vt, "x2"));
}
