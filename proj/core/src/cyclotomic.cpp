#include "minsing/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "minsing/error.hpp"

namespace minsing {

namespace {

// Dense univariate polynomials over Q, used only for the cyclotomic modulus
// machinery. Coefficient of x^i at index i; no trailing zeros.

using UPoly = std::vector<Rat>;

void utrim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) {
  return static_cast<int>(p.size()) - 1;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  utrim(r);
  return r;
}

UPoly usub(UPoly a, const UPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  utrim(a);
  return a;
}

UPoly uscale(UPoly a, const Rat& c) {
  for (auto& x : a) x *= c;
  utrim(a);
  return a;
}

// Quotient and remainder; divisor must be nonzero.
std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b) {
  if (b.empty()) throw Error("univariate division by zero");
  UPoly q;
  while (udeg(a) >= udeg(b)) {
    int shift = udeg(a) - udeg(b);
    Rat c = a.back() / b.back();
    if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, Rat(0));
    q[shift] += c;
    UPoly t(shift, Rat(0));
    t.insert(t.end(), b.begin(), b.end());
    a = usub(std::move(a), uscale(std::move(t), c));
    if (a.empty()) break;
  }
  utrim(q);
  return {q, a};
}

std::vector<unsigned> divisors_of(unsigned n) {
  std::vector<unsigned> d;
  for (unsigned i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

std::mutex g_cache_mutex;
std::map<unsigned, UPoly> g_cyclo_cache;
// powers_of_zeta[n][i] = coordinates of zeta_n^i in the reduced basis,
// for i in [0, n + 2*phi(n)).
std::map<unsigned, std::vector<std::vector<Rat>>> g_power_cache;

UPoly cyclotomic_locked(unsigned n) {
  auto it = g_cyclo_cache.find(n);
  if (it != g_cyclo_cache.end()) return it->second;
  // x^n - 1 divided by all lower cyclotomic polynomials.
  UPoly f(n + 1, Rat(0));
  f[0] = Rat(-1);
  f[n] = Rat(1);
  for (unsigned d : divisors_of(n)) {
    if (d == n) continue;
    auto [q, r] = udivmod(f, cyclotomic_locked(d));
    if (!r.empty()) throw Error("cyclotomic polynomial division left a remainder");
    f = std::move(q);
  }
  g_cyclo_cache[n] = f;
  return f;
}

const std::vector<std::vector<Rat>>& power_table(unsigned n) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto it = g_power_cache.find(n);
  if (it != g_power_cache.end()) return it->second;
  UPoly phi_n = cyclotomic_locked(n);
  unsigned deg = static_cast<unsigned>(udeg(phi_n));
  unsigned count = n + 2 * deg + 1;
  std::vector<std::vector<Rat>> table;
  table.reserve(count);
  // Running value of x^i reduced mod Phi_n, as a dense vector of size deg.
  std::vector<Rat> cur(deg, Rat(0));
  cur[0] = Rat(1);
  for (unsigned i = 0; i < count; ++i) {
    table.push_back(cur);
    // Multiply by x: shift up, fold the overflowing top coefficient through
    // x^deg = -(Phi_n - x^deg).
    Rat top = deg > 0 ? cur[deg - 1] : Rat(0);
    for (unsigned j = deg; j-- > 1;) cur[j] = cur[j - 1];
    if (deg > 0) cur[0] = Rat(0);
    if (!top.is_zero()) {
      for (unsigned j = 0; j < deg; ++j) cur[j] -= top * phi_n[j];
    }
  }
  return g_power_cache[n] = std::move(table);
}

}  // namespace

unsigned CycNum::phi(unsigned n) {
  unsigned result = n, m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

unsigned lcm_u(unsigned a, unsigned b) {
  return a / std::gcd(a, b) * b;
}

const std::vector<Rat>& CycNum::cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  cyclotomic_locked(n);
  return g_cyclo_cache[n];
}

CycNum::CycNum(unsigned order, std::vector<Rat> reduced)
    : order_(order), c_(std::move(reduced)) {
  normalize();
}

CycNum CycNum::from_raw(unsigned n, std::vector<Rat> raw) {
  const auto& table = power_table(n);
  unsigned deg = phi(n);
  std::vector<Rat> out(deg, Rat(0));
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].is_zero()) continue;
    const auto& basis = table[i % n];
    for (unsigned j = 0; j < deg; ++j) out[j] += raw[i] * basis[j];
  }
  return CycNum(n, std::move(out));
}

void CycNum::normalize() {
  if (order_ == 0) throw Error("cyclotomic order must be positive");
  c_.resize(phi(order_), Rat(0));
  if (order_ == 1) return;
  bool rational = true;
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) { rational = false; break; }
  if (rational) {
    Rat v = c_[0];
    order_ = 1;
    c_ = {std::move(v)};
  }
}

CycNum CycNum::zeta(unsigned n, long p) {
  if (n == 0) throw Error("zeta order must be positive");
  long pm = p % static_cast<long>(n);
  if (pm < 0) pm += n;
  std::vector<Rat> raw(static_cast<size_t>(pm) + 1, Rat(0));
  raw[static_cast<size_t>(pm)] = Rat(1);
  return from_raw(n, std::move(raw)).demoted();
}

bool CycNum::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

const Rat& CycNum::rational_value() const {
  if (!is_rational()) throw Error("value is not rational");
  return c_[0];
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::vector<Rat> CycNum::coords_in(unsigned m) const {
  if (m % order_ != 0) throw Error("promotion target is not a multiple of the order");
  if (m == order_) return c_;
  unsigned step = m / order_;
  const auto& table = power_table(m);
  unsigned deg = phi(m);
  std::vector<Rat> out(deg, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    const auto& basis = table[(i * step) % m];
    for (unsigned j = 0; j < deg; ++j) out[j] += c_[i] * basis[j];
  }
  return out;
}

CycNum CycNum::promoted(unsigned m) const {
  if (m == order_) return *this;
  return CycNum(m, coords_in(m));
}

CycNum& CycNum::operator+=(const CycNum& o) {
  unsigned m = lcm_u(order_, o.order_);
  std::vector<Rat> a = coords_in(m), b = o.coords_in(m);
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return *this = CycNum(m, std::move(a));
}

CycNum& CycNum::operator-=(const CycNum& o) {
  return *this += -o;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  // Fast path: rational scalar.
  if (o.is_rational()) {
    for (auto& x : c_) x *= o.c_[0];
    normalize();
    return *this;
  }
  if (is_rational()) {
    CycNum r = o;
    for (auto& x : r.c_) x *= c_[0];
    r.normalize();
    return *this = std::move(r);
  }
  unsigned m = lcm_u(order_, o.order_);
  std::vector<Rat> a = coords_in(m), b = o.coords_in(m);
  std::vector<Rat> raw(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      raw[i + j] += a[i] * b[j];
    }
  }
  return *this = from_raw(m, std::move(raw));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (is_rational()) return CycNum(Rat(1) / c_[0]);
  // Extended Euclid in Q[x] against the cyclotomic modulus.
  UPoly a(c_.begin(), c_.end());
  utrim(a);
  UPoly b = cyclotomic_polynomial(order_);
  UPoly r0 = b, r1 = a;
  UPoly s0 = {}, s1 = {Rat(1)};  // s tracks the coefficient of `a`
  while (!r1.empty()) {
    auto [q, r2] = udivmod(r0, r1);
    UPoly s2 = usub(s0, umul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (udeg(r0) != 0) throw Error("element is a zero divisor; not invertible");
  UPoly inv = uscale(std::move(s0), Rat(1) / r0[0]);
  inv.resize(phi(order_), Rat(0));
  return CycNum(order_, std::move(inv));
}

CycNum& CycNum::operator/=(const CycNum& o) {
  return *this *= o.inverse();
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  unsigned m = lcm_u(a.order_, b.order_);
  return a.coords_in(m) == b.coords_in(m);
}

CycNum CycNum::galois(unsigned long a) const {
  if (std::gcd(a, static_cast<unsigned long>(order_)) != 1)
    throw Error("galois exponent not coprime to the order");
  std::vector<Rat> raw(static_cast<size_t>(order_), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    raw[(i * a) % order_] += c_[i];
  }
  return from_raw(order_, std::move(raw));
}

CycNum CycNum::demoted() const {
  if (order_ == 1) return *this;
  for (unsigned d : divisors_of(order_)) {
    if (d == order_) continue;
    bool fixed = true;
    for (unsigned a = 2; a < order_ && fixed; ++a) {
      if (std::gcd(a, order_) != 1 || a % d != 1) continue;
      if (!(galois(a) == *this)) fixed = false;
    }
    if (!fixed) continue;
    // Solve for coordinates in the subfield basis.
    unsigned dn = phi(order_), dd = phi(d);
    std::vector<std::vector<Rat>> cols;
    cols.reserve(dd);
    for (unsigned j = 0; j < dd; ++j) {
      CycNum bj = from_raw(d, [&] {
        std::vector<Rat> raw(j + 1, Rat(0));
        raw[j] = Rat(1);
        return raw;
      }());
      cols.push_back(bj.promoted(order_).c_);
    }
    // Gaussian elimination on the dn x dd system cols * y = c_.
    std::vector<std::vector<Rat>> m(dn, std::vector<Rat>(dd + 1, Rat(0)));
    for (unsigned i = 0; i < dn; ++i) {
      for (unsigned j = 0; j < dd; ++j) m[i][j] = cols[j][i];
      m[i][dd] = c_[i];
    }
    std::vector<int> pivot_col_of_row;
    unsigned row = 0;
    for (unsigned col = 0; col < dd && row < dn; ++col) {
      unsigned sel = row;
      while (sel < dn && m[sel][col].is_zero()) ++sel;
      if (sel == dn) continue;
      std::swap(m[sel], m[row]);
      Rat inv = Rat(1) / m[row][col];
      for (unsigned j = col; j <= dd; ++j) m[row][j] *= inv;
      for (unsigned i = 0; i < dn; ++i) {
        if (i == row || m[i][col].is_zero()) continue;
        Rat f = m[i][col];
        for (unsigned j = col; j <= dd; ++j) m[i][j] -= f * m[row][j];
      }
      pivot_col_of_row.push_back(static_cast<int>(col));
      ++row;
    }
    bool consistent = true;
    for (unsigned i = row; i < dn; ++i)
      if (!m[i][dd].is_zero()) { consistent = false; break; }
    if (!consistent) continue;
    std::vector<Rat> y(dd, Rat(0));
    for (unsigned i = 0; i < row; ++i) y[pivot_col_of_row[i]] = m[i][dd];
    return CycNum(d, std::move(y)).demoted();
  }
  return *this;
}

std::string CycNum::str() const {
  CycNum v = demoted();
  if (v.is_rational()) return v.c_[0].str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < v.c_.size(); ++i) {
    const Rat& c = v.c_[i];
    if (c.is_zero()) continue;
    Rat a = abs(c);
    if (first) {
      if (c.is_negative()) os << "-";
      first = false;
    } else {
      os << (c.is_negative() ? " - " : " + ");
    }
    if (i == 0) {
      os << a.str();
    } else {
      if (!a.is_one()) os << a.str() << "*";
      os << "z" << v.order_;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) {
  return os << x.str();
}

std::optional<CycNum> sqrt_in_cyclotomic(const Rat& q, unsigned max_order) {
  if (q.is_zero()) return CycNum(0);
  // sqrt(n/m) = sqrt(n*m)/m; peel the square part of n*m by trial division.
  mpz_class nm = q.num() * q.den();
  bool neg = nm < 0;
  if (neg) nm = -nm;
  mpz_class square_part(1);
  std::vector<unsigned long> squarefree_primes;
  mpz_class rest = nm;
  for (unsigned long p = 2; mpz_class(p) * p <= rest; ++p) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) square_part *= p;
    if (e % 2 == 1) squarefree_primes.push_back(p);
    if (p > 100000) return std::nullopt;  // give up on large radicands
  }
  if (rest > 1) {
    if (!rest.fits_ulong_p()) return std::nullopt;
    squarefree_primes.push_back(rest.get_ui());
  }

  Rat scale = Rat(square_part) / Rat(q.den());
  CycNum value{scale};
  bool residual_negative = neg;
  unsigned order = 1;
  for (unsigned long p : squarefree_primes) {
    if (p == 2) {
      // sqrt(2) = zeta_8 + zeta_8^{-1}
      order = lcm_u(order, 8);
      if (order > max_order) return std::nullopt;
      value *= CycNum::zeta(8, 1) + CycNum::zeta(8, -1);
      continue;
    }
    // Quadratic Gauss sum: g_p^2 = p for p = 1 mod 4, -p for p = 3 mod 4.
    order = lcm_u(order, static_cast<unsigned>(p));
    if (order > max_order) return std::nullopt;
    CycNum g(0);
    for (unsigned long a = 1; a < p; ++a) {
      // Legendre symbol by Euler's criterion on machine integers.
      unsigned long e = (p - 1) / 2, base = a % p, acc = 1;
      unsigned long b = base;
      while (e > 0) {
        if (e & 1) acc = (acc * b) % p;
        b = (b * b) % p;
        e >>= 1;
      }
      bool qr = acc == 1;
      g += qr ? CycNum::zeta(static_cast<unsigned>(p), static_cast<long>(a))
              : -CycNum::zeta(static_cast<unsigned>(p), static_cast<long>(a));
    }
    value *= g;
    if (p % 4 == 3) residual_negative = !residual_negative;
  }
  if (residual_negative) {
    order = lcm_u(order, 4);
    if (order > max_order) return std::nullopt;
    value *= CycNum::zeta(4, 1);
  }
  if (!(value * value == CycNum(q))) return std::nullopt;
  return value;
}

}  // namespace minsing
