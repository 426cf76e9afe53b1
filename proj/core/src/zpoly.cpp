#include "minsing/zpoly.hpp"

#include <algorithm>

#include "minsing/error.hpp"

namespace minsing {

ZPoly::ZPoly(VarTablePtr vt, int zvar, std::vector<PuiseuxPoly> coeffs)
    : vt_(std::move(vt)), zvar_(zvar), a_(std::move(coeffs)) {
  if (a_.empty()) throw Error("monic polynomial needs degree >= 1");
  for (const auto& c : a_) {
    if (!c.max_degree(zvar_).is_zero())
      throw Error("coefficient involves the distinguished variable");
  }
}

namespace {

// Coefficients of f as a polynomial in zvar, lowest degree first.
std::vector<PuiseuxPoly> z_coeffs(const PuiseuxPoly& f, int zvar) {
  Rat maxdeg = f.max_degree(zvar);
  if (!maxdeg.is_integer()) throw Error("fractional degree in the distinguished variable");
  size_t n = static_cast<size_t>(maxdeg.num().get_ui());
  std::vector<PuiseuxPoly> out(n + 1, PuiseuxPoly::zero(f.vars()));
  for (const auto& [m, c] : f.terms()) {
    const Rat& e = m[static_cast<size_t>(zvar)];
    if (!e.is_integer()) throw Error("fractional degree in the distinguished variable");
    Monomial rest = m;
    rest.set(zvar, Rat(0));
    out[e.num().get_ui()] += PuiseuxPoly::term(f.vars(), std::move(rest), c);
  }
  return out;
}

}  // namespace

ZPoly ZPoly::from_poly(const PuiseuxPoly& f, int zvar) {
  auto cs = z_coeffs(f, zvar);
  if (cs.size() < 2) throw Error("monic polynomial needs degree >= 1");
  const PuiseuxPoly& lead = cs.back();
  if (!(lead == PuiseuxPoly::constant(f.vars(), CycNum(1))))
    throw Error("polynomial is not monic in the distinguished variable");
  std::vector<PuiseuxPoly> a;
  for (size_t i = cs.size() - 1; i-- > 0;) a.push_back(cs[i]);
  return ZPoly(f.vars(), zvar, std::move(a));
}

PuiseuxPoly ZPoly::to_poly() const {
  PuiseuxPoly z = PuiseuxPoly::variable(vt_, zvar_);
  PuiseuxPoly acc = PuiseuxPoly::constant(vt_, CycNum(1));
  for (const auto& ai : a_) acc = acc * z + ai;
  return acc;
}

ZPoly ZPoly::map_coeffs(const std::map<int, PuiseuxPoly>& bindings) const {
  if (bindings.count(zvar_)) throw Error("cannot substitute the distinguished variable");
  std::vector<PuiseuxPoly> out;
  out.reserve(a_.size());
  for (const auto& ai : a_) out.push_back(ai.substitute(bindings));
  return ZPoly(vt_, zvar_, std::move(out));
}

PuiseuxPoly resultant_z(const PuiseuxPoly& f, const PuiseuxPoly& g, int zvar) {
  const VarTablePtr& vt = f.vars();
  auto fc = z_coeffs(f, zvar);
  auto gc = z_coeffs(g, zvar);
  size_t n = fc.size() - 1, m = gc.size() - 1;
  if (n == 0 && m == 0) return PuiseuxPoly::constant(vt, CycNum(1));
  size_t dim = n + m;
  // Sylvester matrix, row-major.
  std::vector<PuiseuxPoly> M(dim * dim, PuiseuxPoly::zero(vt));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= n; ++j) M[i * dim + i + j] = fc[n - j];
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= m; ++j) M[(m + i) * dim + i + j] = gc[m - j];

  // Bareiss fraction-free elimination; divisions are exact.
  PuiseuxPoly prev = PuiseuxPoly::constant(vt, CycNum(1));
  int sign = 1;
  for (size_t kstep = 0; kstep + 1 < dim; ++kstep) {
    if (M[kstep * dim + kstep].is_zero()) {
      size_t swap_row = kstep + 1;
      while (swap_row < dim && M[swap_row * dim + kstep].is_zero()) ++swap_row;
      if (swap_row == dim) return PuiseuxPoly::zero(vt);
      for (size_t j = 0; j < dim; ++j)
        std::swap(M[kstep * dim + j], M[swap_row * dim + j]);
      sign = -sign;
    }
    for (size_t i = kstep + 1; i < dim; ++i) {
      for (size_t j = kstep + 1; j < dim; ++j) {
        PuiseuxPoly num = M[i * dim + j] * M[kstep * dim + kstep] -
                          M[i * dim + kstep] * M[kstep * dim + j];
        auto q = num.exact_div(prev);
        if (!q) throw Error("internal: Bareiss division failed");
        M[i * dim + j] = std::move(*q);
      }
      M[i * dim + kstep] = PuiseuxPoly::zero(vt);
    }
    prev = M[kstep * dim + kstep];
    if (prev.is_zero()) return PuiseuxPoly::zero(vt);
  }
  PuiseuxPoly det = M[(dim - 1) * dim + (dim - 1)];
  if (sign < 0) det = -det;
  return det;
}

}  // namespace minsing
