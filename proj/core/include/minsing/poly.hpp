#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minsing/cyclotomic.hpp"
#include "minsing/rat.hpp"
#include "minsing/vartable.hpp"

namespace minsing {

/// Exponent vector over a VarTable. All exponents are nonnegative rationals
/// (Puiseux monomials).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(size_t nvars) : e_(nvars, Rat(0)) {}
  explicit Monomial(std::vector<Rat> exps);

  size_t size() const { return e_.size(); }
  const Rat& operator[](size_t i) const { return e_[i]; }
  const std::vector<Rat>& exponents() const { return e_; }

  bool is_one() const;
  /// Sum of exponents over the given variables (all variables if empty set
  /// semantics are needed, pass the full set).
  Rat degree(const VarSet& vars) const;
  Rat total_degree() const;

  Monomial& set(int var, Rat e);
  Monomial operator*(const Monomial& o) const;
  /// Componentwise difference; nullopt if any exponent would go negative.
  std::optional<Monomial> divided_by(const Monomial& o) const;
  Monomial pow(const Rat& e) const;
  static Monomial componentwise_min(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  /// Lexicographic along the VarTable order.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::vector<Rat> e_;
};

/// Total-degree cutoff: terms of degree > bound (measured in `vars`, or in
/// all variables when unset) are discarded.
struct Truncation {
  Rat bound;
  std::optional<VarSet> vars;

  explicit Truncation(Rat b, std::optional<VarSet> v = std::nullopt)
      : bound(std::move(b)), vars(std::move(v)) {}
};

/// Sparse multivariate polynomial with Puiseux-monomial exponents and
/// cyclotomic coefficients. Immutable in spirit: operations return new
/// values. Canonical: no zero coefficients, terms ordered lexicographically.
class PuiseuxPoly {
 public:
  PuiseuxPoly() = default;
  explicit PuiseuxPoly(VarTablePtr vt) : vt_(std::move(vt)) {}

  static PuiseuxPoly zero(VarTablePtr vt) { return PuiseuxPoly(std::move(vt)); }
  static PuiseuxPoly constant(VarTablePtr vt, CycNum c);
  static PuiseuxPoly variable(VarTablePtr vt, int var);
  static PuiseuxPoly term(VarTablePtr vt, Monomial m, CycNum c);

  const VarTablePtr& vars() const { return vt_; }
  const std::map<Monomial, CycNum>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The coefficient of the empty monomial (zero if absent).
  CycNum constant_term() const;
  CycNum coeff(const Monomial& m) const;

  /// True when f is c * m for a single term; returns it.
  std::optional<std::pair<Monomial, CycNum>> single_term() const;

  bool has_integer_exponents() const;
  /// Variables that actually occur.
  VarSet support() const;

  PuiseuxPoly operator-() const;
  PuiseuxPoly& operator+=(const PuiseuxPoly& o);
  PuiseuxPoly& operator-=(const PuiseuxPoly& o);
  friend PuiseuxPoly operator+(PuiseuxPoly a, const PuiseuxPoly& b) { return a += b; }
  friend PuiseuxPoly operator-(PuiseuxPoly a, const PuiseuxPoly& b) { return a -= b; }
  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);

  PuiseuxPoly mul_term(const Monomial& m, const CycNum& c) const;
  PuiseuxPoly mul_scalar(const CycNum& c) const;
  PuiseuxPoly pow_int(unsigned e) const;

  friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend bool operator!=(const PuiseuxPoly& a, const PuiseuxPoly& b) { return !(a == b); }

  /// Composition f(bindings). Unbound variables stay. A variable carrying a
  /// fractional exponent anywhere in f may only be bound to a single term
  /// whose coefficient has an exact rational root of the needed index.
  PuiseuxPoly substitute(const std::map<int, PuiseuxPoly>& bindings) const;
  /// Convenience: bind one variable.
  PuiseuxPoly substitute(int var, const PuiseuxPoly& value) const;

  /// Minimum over terms of the degree in `vars`; infinity for zero.
  ExtRat order(const VarSet& vars) const;
  ExtRat order_all() const;

  /// Componentwise-minimum monomial in `vars` over all terms and the
  /// residual cofactor: f = mono * residual, residual divisible by no
  /// variable of `vars`. f must be nonzero.
  std::pair<Monomial, PuiseuxPoly> monomial_part(const VarSet& vars) const;

  /// Sum of terms of minimal `vars`-degree. f must be nonzero.
  PuiseuxPoly initial_form(const VarSet& vars) const;

  PuiseuxPoly truncated(const Truncation& t) const;

  /// Exact division test; nullopt when the divisor does not divide f.
  std::optional<PuiseuxPoly> exact_div(const PuiseuxPoly& d) const;

  /// d/dv; exponents of v may be rational.
  PuiseuxPoly derivative(int var) const;

  /// Max degree of v over terms (0 for zero polynomial).
  Rat max_degree(int var) const;

  /// Weighted degree common to all terms, if any (none for 0-term input too).
  std::optional<Rat> weighted_degree(const std::vector<Rat>& weights) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const CycNum& c);
  void check_same_table(const PuiseuxPoly& o) const;

  VarTablePtr vt_;
  std::map<Monomial, CycNum> terms_;
};

std::ostream& operator<<(std::ostream& os, const PuiseuxPoly& p);

}  // namespace minsing
