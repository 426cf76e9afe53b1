#pragma once

#include <utility>
#include <vector>

#include "minsing/poly.hpp"

namespace minsing {

/// Monic polynomial z^k + a_1 z^{k-1} + ... + a_k with coefficients free of
/// the distinguished variable z.
class ZPoly {
 public:
  ZPoly(VarTablePtr vt, int zvar, std::vector<PuiseuxPoly> coeffs);

  /// Collects a polynomial that is monic of degree k in zvar with z-free
  /// coefficients; throws otherwise. Exponents of zvar must be integers.
  static ZPoly from_poly(const PuiseuxPoly& f, int zvar);

  unsigned degree() const { return static_cast<unsigned>(a_.size()); }
  int zvar() const { return zvar_; }
  const VarTablePtr& vars() const { return vt_; }
  /// a_i for i = 1..k.
  const PuiseuxPoly& coeff(unsigned i) const { return a_[i - 1]; }
  const std::vector<PuiseuxPoly>& coeffs() const { return a_; }

  PuiseuxPoly to_poly() const;

  /// Applies a substitution to every coefficient (must not involve zvar).
  ZPoly map_coeffs(const std::map<int, PuiseuxPoly>& bindings) const;

  friend bool operator==(const ZPoly& f, const ZPoly& g) {
    return f.zvar_ == g.zvar_ && f.a_ == g.a_;
  }

 private:
  VarTablePtr vt_;
  int zvar_;
  std::vector<PuiseuxPoly> a_;
};

/// Resultant of two polynomials in zvar (Sylvester matrix, fraction-free
/// Gaussian elimination). Inputs need integer zvar-exponents.
PuiseuxPoly resultant_z(const PuiseuxPoly& f, const PuiseuxPoly& g, int zvar);

}  // namespace minsing
