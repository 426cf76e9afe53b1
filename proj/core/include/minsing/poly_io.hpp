#pragma once

#include <string>
#include <string_view>

#include "minsing/circulant_fwd.hpp"
#include "minsing/poly.hpp"

namespace minsing {

/// Parses the polynomial grammar: terms joined by + / -, a term being
/// coeff*v1^(p/q)*v2^e..., exponent 1 and coefficient 1 omitted, fractional
/// exponents parenthesized. Compound cyclotomic coefficients are
/// parenthesized, with z{n} denoting the n-th root of unity when {n} follows
/// "z" and no such variable is declared. Delta{k}(arg0; ...; argk-1) blocks
/// are accepted and expanded inline.
PuiseuxPoly parse_poly(const VarTablePtr& vt, std::string_view text);

/// Parses a product of an optional monomial prefactor and Delta blocks into
/// the factored representation; plain single-variable factors become
/// prefactor entries.
ProductForm parse_product_form(const VarTablePtr& vt, std::string_view text);

std::string to_string(const ProductForm& form);

}  // namespace minsing
