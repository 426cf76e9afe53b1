#pragma once

#include <optional>
#include <vector>

#include "minsing/circulant_fwd.hpp"
#include "minsing/poly.hpp"

namespace minsing {

/// Expands Delta_k(args) = prod_l (a_0 + eps^l a_1 + ... + eps^{(k-1)l} a_{k-1})
/// over Q(zeta_k). With require_rational set (the default), every coefficient
/// of the result must come out rational; a residue signals an arithmetic bug.
PuiseuxPoly circulant_expand(const VarTablePtr& vt, const FactoredCirculant& block,
                             bool require_rational = true);

PuiseuxPoly expand(const ProductForm& form, bool require_rational = true);

/// Determinant of the k x k circulant matrix of the given entries by cofactor
/// expansion. Independent of the eigen-product route; k <= 6.
PuiseuxPoly circulant_det_oracle(const VarTablePtr& vt, unsigned k,
                                 const std::vector<PuiseuxPoly>& entries);

/// Applies the Vandermonde matrix of k-th roots of unity (forward) or its
/// inverse (1/k times the conjugate matrix) to a vector of k polynomials.
std::vector<PuiseuxPoly> eigen_transform(const std::vector<PuiseuxPoly>& values,
                                         bool inverse);

/// The circulant point normal form cp(k):
/// Delta_k(x0, w^{1/k} x1, ..., w^{(k-1)/k} x_{k-1}) as a one-block form.
ProductForm make_cp(const VarTablePtr& vt, unsigned k, int wvar,
                    const std::vector<int>& slots);

/// Roots of the k factors of cp-like data over the cover w = v^k:
/// root_l = -(eps^l v x_1 + eps^{2l} v^2 x_2 + ...) for make_cp; general
/// helper building Y_l = z - root_l factor lists is in the tests.
struct CircComponent {
  bool degenerate = false;  // component vanished up to the truncation
  long m = 0;               // X_l = w^{m + l/k} * unit_part
  PuiseuxPoly unit_part;    // not divisible by w; sign-normalized
};

/// From a Z_k-permuted root system over the v-cover, computes the components
/// X_l by the inverse eigen transform, checks invariance of v^{k-l} X_l under
/// v -> eps v (to the truncation), rewrites v^k = w and extracts the maximal
/// w-power. Roots are the actual roots r_l (f = prod (z - r_l)); their order
/// must realize r_{l+1}(v) = r_l(eps v).
std::vector<CircComponent> circulant_components_from_roots(
    const std::vector<PuiseuxPoly>& roots, unsigned k, int vvar, int wvar,
    const Truncation& trunc);

}  // namespace minsing
