#include "minsing/circulant.hpp"

#include <algorithm>

#include "minsing/error.hpp"

namespace minsing {

namespace {

PuiseuxPoly arg_poly(const VarTablePtr& vt, const CircArg& a) {
  return PuiseuxPoly::term(vt, a.mono, a.coeff);
}

void assert_rational_coeffs(const PuiseuxPoly& p, const char* what) {
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_rational())
      throw Error(std::string("internal-consistency: non-rational coefficient in ") + what);
  }
}

}  // namespace

PuiseuxPoly circulant_expand(const VarTablePtr& vt, const FactoredCirculant& block,
                             bool require_rational) {
  if (block.k == 0 || block.args.size() != block.k)
    throw Error("circulant block arity mismatch");
  PuiseuxPoly result = PuiseuxPoly::constant(vt, CycNum(1));
  for (unsigned l = 0; l < block.k; ++l) {
    PuiseuxPoly factor = PuiseuxPoly::zero(vt);
    for (unsigned j = 0; j < block.k; ++j) {
      CycNum eps = CycNum::zeta(block.k, static_cast<long>(j) * l);
      factor += arg_poly(vt, block.args[j]).mul_scalar(eps);
    }
    result = result * factor;
  }
  if (require_rational) assert_rational_coeffs(result, "circulant expansion");
  return result;
}

PuiseuxPoly expand(const ProductForm& form, bool require_rational) {
  PuiseuxPoly result = PuiseuxPoly::term(form.vt, form.prefactor, CycNum(1));
  for (const auto& block : form.blocks)
    result = result * circulant_expand(form.vt, block, require_rational);
  return result;
}

PuiseuxPoly circulant_det_oracle(const VarTablePtr& vt, unsigned k,
                                 const std::vector<PuiseuxPoly>& entries) {
  if (k == 0 || entries.size() != k) throw Error("oracle arity mismatch");
  if (k > 6) throw Error("cofactor oracle limited to k <= 6");
  // Row i, column j holds entry (j - i) mod k.
  std::vector<PuiseuxPoly> m(k * k, PuiseuxPoly::zero(vt));
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) m[i * k + j] = entries[(j + k - i) % k];

  // Cofactor expansion along the first column, recursively on index lists.
  struct Det {
    const std::vector<PuiseuxPoly>& m;
    unsigned k;
    const VarTablePtr& vt;
    PuiseuxPoly run(std::vector<unsigned> rows, std::vector<unsigned> cols) {
      if (rows.size() == 1) return m[rows[0] * k + cols[0]];
      PuiseuxPoly sum = PuiseuxPoly::zero(vt);
      for (size_t i = 0; i < rows.size(); ++i) {
        std::vector<unsigned> sub_rows;
        for (size_t t = 0; t < rows.size(); ++t)
          if (t != i) sub_rows.push_back(rows[t]);
        std::vector<unsigned> sub_cols(cols.begin() + 1, cols.end());
        PuiseuxPoly minor = run(std::move(sub_rows), std::move(sub_cols));
        PuiseuxPoly contrib = m[rows[i] * k + cols[0]] * minor;
        if (i % 2 == 0) sum += contrib;
        else sum -= contrib;
      }
      return sum;
    }
  };
  std::vector<unsigned> rows(k), cols(k);
  for (unsigned i = 0; i < k; ++i) rows[i] = cols[i] = i;
  return Det{m, k, vt}.run(std::move(rows), std::move(cols));
}

std::vector<PuiseuxPoly> eigen_transform(const std::vector<PuiseuxPoly>& values,
                                         bool inverse) {
  unsigned k = static_cast<unsigned>(values.size());
  if (k == 0) throw Error("empty eigen transform");
  const VarTablePtr& vt = values[0].vars();
  std::vector<PuiseuxPoly> out;
  out.reserve(k);
  CycNum scale = inverse ? CycNum(Rat(1, static_cast<long>(k))) : CycNum(1);
  for (unsigned l = 0; l < k; ++l) {
    PuiseuxPoly acc = PuiseuxPoly::zero(vt);
    for (unsigned j = 0; j < k; ++j) {
      long e = inverse ? -static_cast<long>(l) * j : static_cast<long>(l) * j;
      acc += values[j].mul_scalar(CycNum::zeta(k, e));
    }
    out.push_back(acc.mul_scalar(scale));
  }
  return out;
}

ProductForm make_cp(const VarTablePtr& vt, unsigned k, int wvar,
                    const std::vector<int>& slots) {
  if (k == 0) throw Error("cp(k) needs k >= 1");
  if (slots.size() != k) throw Error("cp(k) needs k slot variables");
  ProductForm form(vt);
  FactoredCirculant block;
  block.k = k;
  for (unsigned j = 0; j < k; ++j) {
    Monomial m(vt->size());
    m.set(slots[j], Rat(1));
    if (j > 0) m.set(wvar, Rat(static_cast<long>(j), static_cast<long>(k)));
    block.args.push_back(CircArg{std::move(m), CycNum(1)});
  }
  form.blocks.push_back(std::move(block));
  return form;
}

std::vector<CircComponent> circulant_components_from_roots(
    const std::vector<PuiseuxPoly>& roots, unsigned k, int vvar, int wvar,
    const Truncation& trunc) {
  if (roots.size() != k || k == 0) throw Error("root system arity mismatch");
  const VarTablePtr& vt = roots[0].vars();
  PuiseuxPoly eps_v =
      PuiseuxPoly::variable(vt, vvar).mul_scalar(CycNum::zeta(k, 1));
  for (unsigned j = 0; j < k; ++j) {
    PuiseuxPoly rotated = roots[j].substitute(vvar, eps_v).truncated(trunc);
    if (!(rotated == roots[(j + 1) % k].truncated(trunc)))
      throw Error("not a Z_k root system");
  }
  // X_l from the inverse eigen transform of Y_j = z - r_j; the z summand
  // cancels for l >= 1, so work with the -r_j part directly.
  std::vector<PuiseuxPoly> y;
  y.reserve(k);
  for (unsigned j = 0; j < k; ++j) y.push_back(-roots[j]);
  std::vector<PuiseuxPoly> x = eigen_transform(y, /*inverse=*/true);

  std::vector<CircComponent> out;
  for (unsigned l = 1; l < k; ++l) {
    CircComponent comp;
    PuiseuxPoly xl = x[l].truncated(trunc);
    if (xl.is_zero()) {
      comp.degenerate = true;
      out.push_back(std::move(comp));
      continue;
    }
    // Every v-exponent must be congruent to l mod k (Z_k-invariance of
    // v^{k-l} X_l), and after extracting the minimal power the rest of the
    // v-content must be a multiple of k, to rewrite in w = v^k.
    Rat vmin = xl.max_degree(vvar);
    for (const auto& [m, c] : xl.terms()) {
      const Rat& e = m[static_cast<size_t>(vvar)];
      if (!e.is_integer()) throw Error("not a Z_k root system");
      mpz_class rem = e.num() % k;
      if (rem < 0) rem += k;
      if (rem != l % k) throw Error("not a Z_k root system");
      if (e < vmin) vmin = e;
    }
    mpz_class mm = (vmin.num() - static_cast<long>(l)) / k;
    if (!mm.fits_slong_p()) throw Error("w-power out of range");
    comp.m = mm.get_si();
    if (comp.m < 0) throw Error("not a Z_k root system");
    // zeta_l(w, x) = X_l / v^{k m + l} with v^k rewritten as w.
    PuiseuxPoly unit(vt);
    Monomial shift(vt->size());
    shift.set(vvar, vmin);
    for (const auto& [m, c] : xl.terms()) {
      auto q = m.divided_by(shift);
      if (!q) throw Error("internal: extraction shift does not divide");
      Rat ve = (*q)[static_cast<size_t>(vvar)];
      mpz_class wexp = ve.num() / k;
      Monomial rewritten = *q;
      rewritten.set(vvar, Rat(0));
      if (wexp != 0)
        rewritten.set(wvar, rewritten[static_cast<size_t>(wvar)] + Rat(wexp));
      unit += PuiseuxPoly::term(vt, std::move(rewritten), c);
    }
    // Sign-normalize: leading coefficient made positive when rational.
    const auto& lead = *unit.terms().begin();
    if (lead.second.is_rational() && lead.second.rational_value().is_negative())
      unit = -unit;
    comp.unit_part = std::move(unit);
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace minsing
