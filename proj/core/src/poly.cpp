#include "minsing/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "minsing/error.hpp"

namespace minsing {

Monomial::Monomial(std::vector<Rat> exps) : e_(std::move(exps)) {
  for (const auto& x : e_)
    if (x.is_negative()) throw Error("negative exponent in Puiseux monomial");
}

bool Monomial::is_one() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Rat Monomial::degree(const VarSet& vars) const {
  Rat d(0);
  for (int v : vars) d += e_[static_cast<size_t>(v)];
  return d;
}

Rat Monomial::total_degree() const {
  Rat d(0);
  for (const auto& x : e_) d += x;
  return d;
}

Monomial& Monomial::set(int var, Rat e) {
  if (e.is_negative()) throw Error("negative exponent in Puiseux monomial");
  e_[static_cast<size_t>(var)] = std::move(e);
  return *this;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < e_.size(); ++i) {
    r.e_[i] -= o.e_[i];
    if (r.e_[i].is_negative()) return std::nullopt;
  }
  return r;
}

Monomial Monomial::pow(const Rat& e) const {
  if (e.is_negative()) throw Error("negative exponent in Puiseux monomial");
  Monomial r = *this;
  for (auto& x : r.e_) x *= e;
  return r;
}

Monomial Monomial::componentwise_min(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e_.size(); ++i)
    if (b.e_[i] < r.e_[i]) r.e_[i] = b.e_[i];
  return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.e_.size(); ++i) {
    if (a.e_[i] < b.e_[i]) return true;
    if (b.e_[i] < a.e_[i]) return false;
  }
  return false;
}

PuiseuxPoly PuiseuxPoly::constant(VarTablePtr vt, CycNum c) {
  PuiseuxPoly p(std::move(vt));
  if (!c.is_zero()) p.terms_.emplace(Monomial(p.vt_->size()), std::move(c));
  return p;
}

PuiseuxPoly PuiseuxPoly::variable(VarTablePtr vt, int var) {
  Monomial m(vt->size());
  m.set(var, Rat(1));
  return term(std::move(vt), std::move(m), CycNum(1));
}

PuiseuxPoly PuiseuxPoly::term(VarTablePtr vt, Monomial m, CycNum c) {
  PuiseuxPoly p(std::move(vt));
  if (m.size() != p.vt_->size()) throw Error("monomial size does not match variable table");
  if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

bool PuiseuxPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

CycNum PuiseuxPoly::constant_term() const {
  return coeff(Monomial(vt_->size()));
}

CycNum PuiseuxPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycNum(0) : it->second;
}

std::optional<std::pair<Monomial, CycNum>> PuiseuxPoly::single_term() const {
  if (terms_.size() != 1) return std::nullopt;
  return std::make_pair(terms_.begin()->first, terms_.begin()->second);
}

bool PuiseuxPoly::has_integer_exponents() const {
  for (const auto& [m, c] : terms_)
    for (const auto& e : m.exponents())
      if (!e.is_integer()) return false;
  return true;
}

VarSet PuiseuxPoly::support() const {
  std::vector<int> vars;
  for (size_t i = 0; i < vt_->size(); ++i) {
    for (const auto& [m, c] : terms_) {
      if (!m[i].is_zero()) {
        vars.push_back(static_cast<int>(i));
        break;
      }
    }
  }
  return vars;
}

void PuiseuxPoly::add_term(const Monomial& m, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PuiseuxPoly::check_same_table(const PuiseuxPoly& o) const {
  if (vt_ != o.vt_) throw Error("variable table mismatch");
}

PuiseuxPoly PuiseuxPoly::operator-() const {
  PuiseuxPoly r(vt_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

PuiseuxPoly& PuiseuxPoly::operator+=(const PuiseuxPoly& o) {
  check_same_table(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PuiseuxPoly& PuiseuxPoly::operator-=(const PuiseuxPoly& o) {
  check_same_table(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  a.check_same_table(b);
  PuiseuxPoly r(a.vt_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

PuiseuxPoly PuiseuxPoly::mul_term(const Monomial& m, const CycNum& c) const {
  PuiseuxPoly r(vt_);
  if (c.is_zero()) return r;
  for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
  return r;
}

PuiseuxPoly PuiseuxPoly::mul_scalar(const CycNum& c) const {
  return mul_term(Monomial(vt_->size()), c);
}

PuiseuxPoly PuiseuxPoly::pow_int(unsigned e) const {
  PuiseuxPoly r = constant(vt_, CycNum(1));
  PuiseuxPoly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  if (a.vt_ != b.vt_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = a.terms_.begin();
  auto jt = b.terms_.begin();
  for (; it != a.terms_.end(); ++it, ++jt) {
    if (!(it->first == jt->first)) return false;
    if (!(it->second == jt->second)) return false;
  }
  return true;
}

PuiseuxPoly PuiseuxPoly::substitute(const std::map<int, PuiseuxPoly>& bindings) const {
  for (const auto& [v, b] : bindings) {
    if (v < 0 || static_cast<size_t>(v) >= vt_->size()) throw Error("binding for unknown variable");
    b.check_same_table(*this);
  }
  PuiseuxPoly out(vt_);
  for (const auto& [m, c] : terms_) {
    // Unbound part of the monomial passes through unchanged.
    Monomial rest(vt_->size());
    PuiseuxPoly acc = PuiseuxPoly::constant(vt_, c);
    for (size_t i = 0; i < vt_->size(); ++i) {
      const Rat& e = m[i];
      if (e.is_zero()) continue;
      auto bit = bindings.find(static_cast<int>(i));
      if (bit == bindings.end()) {
        rest.set(static_cast<int>(i), e);
        continue;
      }
      const PuiseuxPoly& b = bit->second;
      if (e.is_integer()) {
        // Integer power of an arbitrary binding.
        unsigned long ue = e.num().get_ui();
        acc = acc * b.pow_int(static_cast<unsigned>(ue));
      } else {
        auto st = b.single_term();
        if (!st) throw Error("non-monomial Puiseux substitution");
        auto [bm, bc] = *st;
        CycNum cpow(1);
        if (!(bc == CycNum(1))) {
          if (!bc.is_rational()) throw Error("non-monomial Puiseux substitution");
          // c^(p/q) must stay rational.
          auto root = rat_root(bc.rational_value(), e.den().get_ui());
          if (!root) throw Error("non-monomial Puiseux substitution");
          mpz_class nn = e.num();
          if (!nn.fits_slong_p()) throw Error("exponent too large");
          cpow = CycNum(root->pow(nn.get_si()));
        }
        acc = acc.mul_term(bm.pow(e), cpow);
      }
    }
    out += acc.mul_term(rest, CycNum(1));
  }
  return out;
}

PuiseuxPoly PuiseuxPoly::substitute(int var, const PuiseuxPoly& value) const {
  return substitute(std::map<int, PuiseuxPoly>{{var, value}});
}

ExtRat PuiseuxPoly::order(const VarSet& vars) const {
  if (terms_.empty()) return ExtRat::infinity();
  bool first = true;
  Rat best(0);
  for (const auto& [m, c] : terms_) {
    Rat d = m.degree(vars);
    if (first || d < best) {
      best = d;
      first = false;
    }
  }
  return best;
}

ExtRat PuiseuxPoly::order_all() const {
  if (terms_.empty()) return ExtRat::infinity();
  bool first = true;
  Rat best(0);
  for (const auto& [m, c] : terms_) {
    Rat d = m.total_degree();
    if (first || d < best) {
      best = d;
      first = false;
    }
  }
  return best;
}

std::pair<Monomial, PuiseuxPoly> PuiseuxPoly::monomial_part(const VarSet& vars) const {
  if (terms_.empty()) throw Error("monomial part of the zero polynomial");
  Monomial gcd(vt_->size());
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Monomial masked(vt_->size());
    for (int v : vars) masked.set(v, m[static_cast<size_t>(v)]);
    gcd = first ? masked : Monomial::componentwise_min(gcd, masked);
    first = false;
  }
  PuiseuxPoly residual(vt_);
  for (const auto& [m, c] : terms_) {
    auto q = m.divided_by(gcd);
    if (!q) throw Error("internal: monomial part does not divide");
    residual.terms_.emplace(std::move(*q), c);
  }
  return {gcd, residual};
}

PuiseuxPoly PuiseuxPoly::initial_form(const VarSet& vars) const {
  if (terms_.empty()) throw Error("initial form of the zero polynomial");
  Rat d = order(vars).finite();
  PuiseuxPoly r(vt_);
  for (const auto& [m, c] : terms_)
    if (m.degree(vars) == d) r.terms_.emplace(m, c);
  return r;
}

PuiseuxPoly PuiseuxPoly::truncated(const Truncation& t) const {
  PuiseuxPoly r(vt_);
  for (const auto& [m, c] : terms_) {
    Rat d = t.vars ? m.degree(*t.vars) : m.total_degree();
    if (!(d > t.bound)) r.terms_.emplace(m, c);
  }
  return r;
}

std::optional<PuiseuxPoly> PuiseuxPoly::exact_div(const PuiseuxPoly& d) const {
  check_same_table(d);
  if (d.is_zero()) throw Error("division by the zero polynomial");
  PuiseuxPoly rem = *this;
  PuiseuxPoly quot(vt_);
  // Reduce the lexicographically largest remaining term against the largest
  // divisor term. The leading monomial strictly decreases within a finite
  // exponent lattice, so the loop ends at zero or at a divisibility failure.
  const auto& dlead = *d.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    auto q = rlead.first.divided_by(dlead.first);
    if (!q) return std::nullopt;
    CycNum qc = rlead.second / dlead.second;
    quot.add_term(*q, qc);
    rem -= d.mul_term(*q, qc);
  }
  return quot;
}

PuiseuxPoly PuiseuxPoly::derivative(int var) const {
  PuiseuxPoly r(vt_);
  for (const auto& [m, c] : terms_) {
    const Rat& e = m[static_cast<size_t>(var)];
    if (e.is_zero()) continue;
    Monomial m2 = m;
    m2.set(var, e - Rat(1));
    r.add_term(m2, c * CycNum(e));
  }
  return r;
}

Rat PuiseuxPoly::max_degree(int var) const {
  Rat best(0);
  for (const auto& [m, c] : terms_)
    if (m[static_cast<size_t>(var)] > best) best = m[static_cast<size_t>(var)];
  return best;
}

std::optional<Rat> PuiseuxPoly::weighted_degree(const std::vector<Rat>& weights) const {
  if (weights.size() != vt_->size()) throw Error("weight vector size mismatch");
  std::optional<Rat> deg;
  for (const auto& [m, c] : terms_) {
    Rat d(0);
    for (size_t i = 0; i < weights.size(); ++i) d += weights[i] * m[i];
    if (!deg) {
      deg = d;
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return deg;
}

namespace {

void print_exponent(std::ostringstream& os, const Rat& e) {
  if (e.is_one()) return;
  if (e.is_integer()) {
    os << "^" << e.str();
  } else {
    os << "^(" << e.str() << ")";
  }
}

}  // namespace

std::string PuiseuxPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    CycNum cc = c;
    bool neg = false;
    if (cc.is_rational() && cc.rational_value().is_negative()) {
      neg = true;
      cc = -cc;
    }
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string coeff_str;
    bool coeff_is_one = cc.is_rational() && cc.rational_value().is_one();
    if (!coeff_is_one) {
      coeff_str = cc.is_rational() ? cc.rational_value().str() : "(" + cc.str() + ")";
    }
    if (m.is_one()) {
      os << (coeff_is_one ? "1" : coeff_str);
      continue;
    }
    bool wrote = false;
    if (!coeff_is_one) {
      os << coeff_str;
      wrote = true;
    }
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i].is_zero()) continue;
      if (wrote) os << "*";
      os << vt_->name(static_cast<int>(i));
      print_exponent(os, m[i]);
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PuiseuxPoly& p) {
  return os << p.str();
}

}  // namespace minsing
