#pragma once

#include <vector>

#include "minsing/cyclotomic.hpp"
#include "minsing/poly.hpp"
#include "minsing/vartable.hpp"

namespace minsing {

/// One argument slot of a circulant block: a single Puiseux term.
struct CircArg {
  Monomial mono;
  CycNum coeff{1};
};

/// Delta_k(arg0, ..., arg_{k-1}): the determinant of the circulant matrix of
/// the k argument terms, kept factored.
struct FactoredCirculant {
  unsigned k = 0;
  std::vector<CircArg> args;
};

/// A monomial prefactor times a product of circulant blocks.
struct ProductForm {
  VarTablePtr vt;
  Monomial prefactor;
  std::vector<FactoredCirculant> blocks;

  ProductForm() = default;
  explicit ProductForm(VarTablePtr t) : vt(std::move(t)), prefactor(vt->size()) {}
};

}  // namespace minsing
