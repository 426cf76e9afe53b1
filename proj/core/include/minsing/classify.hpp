#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minsing/poly.hpp"

namespace minsing {

/// Outcome of factoring a homogeneous form into linear factors over
/// cyclotomic extensions of bounded order.
struct TangentConeFactors {
  bool ok = false;
  bool repeated = false;          // some factor occurs with multiplicity > 1
  std::vector<PuiseuxPoly> factors;  // product equals the form when ok
  unsigned field_order = 1;       // lcm of coefficient field orders
};

/// Factors the lowest-degree form of f (which must be homogeneous input
/// here) into linear forms: direct for one essential variable, univariate
/// root-finding on the dehomogenization for two, and lifting of the
/// restriction's factors for three. Honest failure when no split is found.
TangentConeFactors tangent_cone_factors(const PuiseuxPoly& form, const VarSet& vars,
                                        unsigned max_order = 12);

struct HenselResult {
  bool ok = false;
  std::vector<PuiseuxPoly> factors;
  Rat obstruction_degree{0};  // first obstructed total degree when !ok
};

/// Degree-by-degree lift of a pairwise coprime factorization of the initial
/// form to a factorization of f modulo degree > N. Failure is data: it
/// reports the first total degree whose membership equation has no solution.
HenselResult hensel_lift(const PuiseuxPoly& f, const std::vector<PuiseuxPoly>& initial,
                         const Truncation& t);

enum class Verdict { unit, smooth, nc, snc, non_nc, unresolved };

struct Classification {
  Verdict verdict = Verdict::unresolved;
  unsigned k = 0;
  unsigned field_order = 1;  // 1 = rational data
  std::vector<PuiseuxPoly> witness;
  Rat trunc{0};

  bool is_nc(unsigned order) const {
    return (verdict == Verdict::nc || verdict == Verdict::snc) && k == order;
  }
  std::string str() const;
};

/// Point classifier at the origin: order 0 -> unit, linear initial form ->
/// smooth, distinct independent linear tangent-cone factors + successful
/// Hensel lift -> nc(k) (snc when everything is rational), repeated or
/// dependent factors or an obstructed lift -> non-nc of that order,
/// factorization failure -> unresolved. Integer exponents required.
Classification classify_point(const PuiseuxPoly& f, const Truncation& t,
                              unsigned max_order = 12);

/// Recognizes the pinch-point shape z^2 - (odd w-power) * x^2 * unit in some
/// ambient coordinate z (after the degree-2 Tschirnhausen shift).
bool is_pinch_point(const PuiseuxPoly& f);

/// Desingularization-invariant value tuples for nc points:
/// (p, r, 1, 0, ..., 1, 0, inf) with p + r pairs; lexicographic order with
/// infinity greatest.
class InvTuple {
 public:
  static InvTuple nc(unsigned p, unsigned r);
  explicit InvTuple(std::vector<ExtRat> entries) : e_(std::move(entries)) {}

  const std::vector<ExtRat>& entries() const { return e_; }
  size_t size() const { return e_.size(); }

  /// -1, 0, 1.
  static int lex_compare(const InvTuple& a, const InvTuple& b);
  friend bool operator<(const InvTuple& a, const InvTuple& b) { return lex_compare(a, b) < 0; }
  friend bool operator==(const InvTuple& a, const InvTuple& b) { return lex_compare(a, b) == 0; }

  std::string str() const;

 private:
  std::vector<ExtRat> e_;
};

}  // namespace minsing
