#include "minsing/rat.hpp"

#include <ostream>

#include "minsing/error.hpp"

namespace minsing {

Rat::Rat(long num, long den) : v_(num, den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_.canonicalize();
}

std::optional<Rat> Rat::parse(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      mpz_class n(std::string(s), 10);
      return Rat(mpq_class(n));
    }
    mpz_class n(std::string(s.substr(0, slash)), 10);
    mpz_class d(std::string(s.substr(slash + 1)), 10);
    if (d == 0) return std::nullopt;
    mpq_class q(n, d);
    q.canonicalize();
    return Rat(q);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

mpz_class Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rat Rat::pow(long e) const {
  if (e == 0) return Rat(1);
  bool inv = e < 0;
  unsigned long ue = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (inv && is_zero()) throw Error("zero to a negative power");
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), ue);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), ue);
  mpq_class q = inv ? mpq_class(d, n) : mpq_class(n, d);
  q.canonicalize();
  return Rat(q);
}

std::string Rat::str() const {
  return v_.get_str();
}

Rat abs(const Rat& x) {
  return x.is_negative() ? -x : x;
}

std::ostream& operator<<(std::ostream& os, const Rat& x) {
  return os << x.str();
}

std::optional<Rat> rat_root(const Rat& x, unsigned long k) {
  if (k == 0) throw Error("zeroth root");
  if (k == 1) return x;
  if (x.is_zero()) return Rat(0);
  if (x.is_negative() && k % 2 == 0) return std::nullopt;
  mpz_class n = x.num(), d = x.den();
  bool neg = n < 0;
  if (neg) n = -n;
  mpz_class rn, rd;
  int exact_n = mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k);
  int exact_d = mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k);
  if (!exact_n || !exact_d) return std::nullopt;
  if (neg) rn = -rn;
  mpq_class q(rn, rd);
  q.canonicalize();
  return Rat(q);
}

const Rat& ExtRat::finite() const {
  if (inf_) throw Error("infinite order has no rational value");
  return r_;
}

std::string ExtRat::str() const {
  return inf_ ? "inf" : r_.str();
}

std::ostream& operator<<(std::ostream& os, const ExtRat& x) {
  return os << x.str();
}

}  // namespace minsing
