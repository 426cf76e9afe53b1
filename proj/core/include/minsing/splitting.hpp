#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "minsing/blowup.hpp"
#include "minsing/poly.hpp"
#include "minsing/zpoly.hpp"

namespace minsing {

/// z -> z - a_1/k; the returned polynomial has a_1 = 0 and the shift is
/// recorded for inversion.
std::pair<ZPoly, PuiseuxPoly> tschirnhausen(const ZPoly& f);

/// Discriminant of a monic polynomial in z, normalized per degree:
/// (-1)^{k(k-1)/2} Res(f, f') / norm_k with norm_3 = 729 (so the cubic
/// z^3 - 3Bz + C yields -(1/27)(C^2 - 4B^3)) and norm_k = 1 otherwise.
PuiseuxPoly discriminant(const ZPoly& f);

/// The quantity whose exact squareness governs splitting, equal to the
/// discriminant up to the degree-dependent unit constant: a_1^2 - 4 a_2 for
/// k = 2 and C^2 - 4B^3 = -27 D for k = 3 (requires a_1 = 0 there).
PuiseuxPoly disc_square_content(const ZPoly& f);

/// D = Phi^2 * Psi with Psi nonvanishing off the exceptional locus: divides
/// by Phi twice (checked), splits off the x-free part xi of Psi, and writes
/// xi = w^alpha * eta with eta a unit.
struct SquareCofactor {
  PuiseuxPoly psi;
  std::vector<long> alpha;  // parallel to the wvars argument
  PuiseuxPoly eta;
};
SquareCofactor square_cofactor(const PuiseuxPoly& D, const PuiseuxPoly& Phi,
                               const VarSet& xvars, const VarSet& wvars);

/// Newton square root of a truncated series whose lowest-degree form is a
/// single perfect-square term; exponents of `integral_vars` must stay
/// integers. allow_extension permits a zeta_4 factor for negative leading
/// constants.
std::optional<PuiseuxPoly> try_series_sqrt(const PuiseuxPoly& g, const Truncation& t,
                                           const VarSet& integral_vars,
                                           bool allow_extension);

/// k-th root of monomial * unit, term-by-term binomial recursion to the
/// truncation order. Throws when the monomial exponents are not divisible by
/// k on integral variables or the constant term has no k-th root in the
/// coefficient field (a 2k-th root of unity is adjoined for -1 when
/// allow_extension is set).
PuiseuxPoly series_kth_root(const PuiseuxPoly& g, unsigned k, const Truncation& t,
                            const VarSet& integral_vars, bool allow_extension);

struct SplitWitness {
  VarSet wvars;
  std::vector<unsigned> cover;  // parallel to wvars
  std::vector<PuiseuxPoly> roots;
  Rat trunc{12};
};

/// Emits the blow-up sequence of Lemma-style centres {z = x = w_j = 0}
/// (alpha_j steps for each j, w_j-chart each time), then checks that the
/// square content of the transformed polynomial becomes an exact square
/// after the w_j -> v_j^2 cover.
struct DiscSquareResult {
  BlowupTrace trace;
  ZPoly transformed;
  PuiseuxPoly sqrt_after_cover;
  std::vector<long> alpha;
};
DiscSquareResult make_disc_square(const ZPoly& f, const PuiseuxPoly& Phi,
                                  const VarSet& xvars, const VarSet& wvars,
                                  const Truncation& t,
                                  const std::optional<PuiseuxPoly>& supplied_sqrt = std::nullopt);

/// Constructive cubic splitting from a square discriminant content:
/// eta_i^3 = (C +/- A)/2, cube roots after the w -> v^3 cover on `wvars`
/// (cover exponent per variable given by `cover`), roots
/// -(eps^i eta_1 + eps^{2i} eta_2); re-multiplication verified to order N.
SplitWitness split_cubic_with_square_disc(const ZPoly& f, const PuiseuxPoly& A,
                                          const VarSet& wvars,
                                          const std::vector<unsigned>& cover,
                                          const Truncation& t,
                                          bool allow_extension = true);

struct SplitReport {
  bool pass = false;
  std::optional<Rat> fail_degree;
  bool roots_in_x_ideal = true;
};
/// prod (z - root_j) == f(w -> v^q) to order N; optionally checks each root
/// lies in the ideal of the x variables.
SplitReport verify_split(const ZPoly& f, const SplitWitness& w,
                         const VarSet& xvars = {});

/// Permutation induced on the root list by v_i -> zeta_{q_i} v_i; perm[j] is
/// the index of the image of root j. Throws when the witness is not closed
/// under the action.
std::vector<unsigned> root_action(const SplitWitness& w, size_t i);

/// Lexicographically smallest cover exponent vector (entries in 1..bound)
/// under which f splits to order N, or nullopt. Constructive for degree
/// <= 3 (square root / cubic machinery); higher degrees are not searched.
std::optional<std::vector<unsigned>> min_split_exponents(const ZPoly& f,
                                                         const VarSet& wvars,
                                                         unsigned bound,
                                                         const Truncation& t,
                                                         bool allow_extension = true);

/// Split attempt for a fixed cover; degree <= 3.
std::optional<SplitWitness> try_split(const ZPoly& f, const VarSet& wvars,
                                      const std::vector<unsigned>& cover,
                                      const Truncation& t, bool allow_extension = true);

/// Upper unitriangular nonnegative integer matrix acting on the exponent
/// block (x_1, ..., x_{k-1}, w) by alpha -> alpha * A.
struct LexMatrix {
  std::vector<std::vector<long>> a;
  void validate() const;
  size_t dim() const { return a.size(); }
};

PuiseuxPoly lex_monomial_transform(const PuiseuxPoly& f, const LexMatrix& A,
                                   const VarSet& block_vars);
ZPoly lex_monomial_transform(const ZPoly& f, const LexMatrix& A,
                             const VarSet& block_vars);

/// Root with a w-power denominator: num / wvar^den_exp.
struct FracRoot {
  PuiseuxPoly num;
  Rat den_exp{0};
};

/// mu point blow-ups of the origin, followed in the w-chart: roots transform
/// as b -> b(sigma)/w. Verifies the cleared roots have nonnegative
/// w-exponents (the linear denominator-growth bound).
struct ClearedRoots {
  BlowupTrace trace;
  std::vector<PuiseuxPoly> roots;
};
ClearedRoots clear_root_denominators(const ZPoly& f, const std::vector<FracRoot>& roots,
                                     int wvar, unsigned mu);

}  // namespace minsing
