#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "minsing/rat.hpp"

namespace minsing {

/// Element of a cyclotomic field Q(zeta_n), stored reduced modulo the n-th
/// cyclotomic polynomial: coefficients of zeta_n^0 .. zeta_n^{phi(n)-1}.
/// Purely rational values are normalized down to order 1, so reduced data is
/// canonical per order and equality across orders goes through promotion to
/// the lcm order. Immutable value type; thread-safe to share.
class CycNum {
 public:
  CycNum() : order_(1), c_{Rat(0)} {}
  CycNum(Rat r) : order_(1), c_{std::move(r)} {}  // NOLINT
  CycNum(long n) : CycNum(Rat(n)) {}              // NOLINT
  CycNum(int n) : CycNum(Rat(n)) {}               // NOLINT

  /// zeta_n^p, canonical (p taken mod n; demoted to Q when rational).
  static CycNum zeta(unsigned n, long p);

  unsigned order() const { return order_; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return order_ == 1; }
  const Rat& rational_value() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  CycNum inverse() const;

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Image in Q(zeta_m); n must divide m.
  CycNum promoted(unsigned m) const;

  /// Canonical copy in the smallest cyclotomic field containing the value.
  CycNum demoted() const;

  /// Galois conjugate zeta_n -> zeta_n^a; requires gcd(a, n) = 1.
  CycNum galois(unsigned long a) const;

  /// "c0 + c1*z{n} + c2*z{n}^2 + ..." with zero terms suppressed; pure
  /// rationals print as "p/q". Uses the minimal field of the value.
  std::string str() const;

  /// Coefficients of the n-th cyclotomic polynomial (degree phi(n)), cached.
  static const std::vector<Rat>& cyclotomic_polynomial(unsigned n);

  static unsigned phi(unsigned n);

 private:
  CycNum(unsigned order, std::vector<Rat> reduced);
  static CycNum from_raw(unsigned n, std::vector<Rat> raw);
  /// Reduced coordinates of the value in Q(zeta_m), n | m; length phi(m).
  std::vector<Rat> coords_in(unsigned m) const;
  void normalize();

  unsigned order_;
  std::vector<Rat> c_;  // size phi(order_)
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

unsigned lcm_u(unsigned a, unsigned b);

/// Square root of a rational inside a cyclotomic field of order at most
/// max_order (quadratic Gauss sums: sqrt(-1) in Q(zeta_4), sqrt(2) in
/// Q(zeta_8), sqrt(p) in Q(zeta_p) or Q(zeta_{4p})). nullopt when no such
/// field of admissible order exists or the radicand cannot be factored.
std::optional<CycNum> sqrt_in_cyclotomic(const Rat& q, unsigned max_order);

}  // namespace minsing
