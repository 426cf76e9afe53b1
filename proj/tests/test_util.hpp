#pragma once

#include <random>

#include "minsing/cyclotomic.hpp"
#include "minsing/poly.hpp"

namespace minsing::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);
  return gen;
}

inline long rand_int(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng());
}

inline Rat rand_rat(long max_num = 9, long max_den = 4) {
  return Rat(rand_int(-max_num, max_num), rand_int(1, max_den));
}

inline Rat rand_positive_rat(long max_num = 9, long max_den = 4) {
  return Rat(rand_int(1, max_num), rand_int(1, max_den));
}

inline CycNum rand_cyc(unsigned order) {
  unsigned deg = CycNum::phi(order);
  CycNum acc(0);
  for (unsigned i = 0; i < deg; ++i) {
    long c = rand_int(-4, 4);
    if (c != 0) acc += CycNum(Rat(c)) * CycNum::zeta(order, i);
  }
  return acc;
}

inline Monomial rand_monomial(const VarTablePtr& vt, long max_exp = 3, long max_den = 3) {
  Monomial m(vt->size());
  for (size_t i = 0; i < vt->size(); ++i) {
    if (rand_int(0, 2) == 0) continue;
    m.set(static_cast<int>(i), Rat(rand_int(0, max_exp), rand_int(1, max_den)));
  }
  return m;
}

inline PuiseuxPoly rand_poly(const VarTablePtr& vt, int terms = 4, bool positive = false,
                             bool integer_exponents = false) {
  PuiseuxPoly p(vt);
  for (int t = 0; t < terms; ++t) {
    Rat c = positive ? rand_positive_rat() : rand_rat();
    if (c.is_zero()) continue;
    Monomial m = integer_exponents ? rand_monomial(vt, 3, 1) : rand_monomial(vt);
    p += PuiseuxPoly::term(vt, m, CycNum(c));
  }
  return p;
}

}  // namespace minsing::testing
