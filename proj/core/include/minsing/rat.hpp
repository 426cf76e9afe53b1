#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace minsing {

/// Exact rational number. Always in lowest terms with positive denominator;
/// the canonical zero is 0/1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, scalars mix freely
  Rat(int n) : v_(static_cast<long>(n)) {}
  Rat(long num, long den);
  explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
  explicit Rat(const mpz_class& z) : v_(z) {}

  static std::optional<Rat> parse(std::string_view s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_negative() const { return sgn(v_) < 0; }
  int sign() const { return sgn(v_); }

  /// Truncated toward negative infinity.
  mpz_class floor() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  /// x^e for integer e; e < 0 requires x != 0.
  Rat pow(long e) const;

  std::string str() const;

 private:
  mpq_class v_;
};

Rat abs(const Rat& x);

std::ostream& operator<<(std::ostream& os, const Rat& x);

/// Exact k-th root of a rational if one exists in Q (for even k the
/// nonnegative root). k >= 1.
std::optional<Rat> rat_root(const Rat& x, unsigned long k);

/// Rat extended with +infinity (the order of the zero polynomial, the tail of
/// invariant tuples). Infinity compares greater than every rational.
class ExtRat {
 public:
  ExtRat() : inf_(false), r_(0) {}
  ExtRat(Rat r) : inf_(false), r_(std::move(r)) {}  // NOLINT
  static ExtRat infinity() { ExtRat e; e.inf_ = true; return e; }

  bool is_infinite() const { return inf_; }
  const Rat& finite() const;

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.r_ == b.r_;
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.r_ < b.r_;
  }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

  std::string str() const;

 private:
  bool inf_;
  Rat r_;
};

std::ostream& operator<<(std::ostream& os, const ExtRat& x);

}  // namespace minsing
