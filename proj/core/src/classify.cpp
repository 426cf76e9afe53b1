#include "minsing/classify.hpp"

#include <algorithm>
#include <sstream>

#include "minsing/error.hpp"
#include "minsing/splitting.hpp"
#include "minsing/zpoly.hpp"

namespace minsing {

namespace {

VarSet all_vars(const VarTablePtr& vt) {
  VarSet v;
  for (size_t i = 0; i < vt->size(); ++i) v.push_back(static_cast<int>(i));
  return v;
}

// ---- small exact linear algebra over the cyclotomic field ------------------

// Row-reduces [A | b]; returns any solution of A x = b, or nullopt.
std::optional<std::vector<CycNum>> solve_linear(std::vector<std::vector<CycNum>> m,
                                                size_t cols) {
  size_t rows = m.size();
  std::vector<int> pivot_of_col(cols, -1);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && m[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    CycNum inv = m[row][col].inverse();
    for (size_t j = col; j <= cols; ++j) m[row][j] = m[row][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      CycNum f = m[i][col];
      for (size_t j = col; j <= cols; ++j) m[i][j] = m[i][j] - f * m[row][j];
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  for (size_t i = row; i < rows; ++i)
    if (!m[i][cols].is_zero()) return std::nullopt;
  std::vector<CycNum> x(cols, CycNum(0));
  for (size_t col = 0; col < cols; ++col)
    if (pivot_of_col[col] >= 0) x[col] = m[pivot_of_col[col]][cols];
  return x;
}

size_t matrix_rank(std::vector<std::vector<CycNum>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size(), row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && m[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    CycNum inv = m[row][col].inverse();
    for (size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
    for (size_t i = row + 1; i < rows; ++i) {
      if (m[i][col].is_zero()) continue;
      CycNum f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[row][j];
    }
    ++row;
  }
  return row;
}

// ---- univariate root finding over cyclotomic extensions --------------------

struct UnivRoots {
  bool ok = false;
  std::vector<std::pair<CycNum, unsigned>> roots;  // root, multiplicity
};

std::vector<CycNum> synth_div(const std::vector<CycNum>& p, const CycNum& tau,
                              CycNum* remainder) {
  // p given lowest-degree first; divide by (t - tau).
  std::vector<CycNum> q(p.size() - 1, CycNum(0));
  CycNum acc(0);
  for (size_t i = p.size(); i-- > 1;) {
    acc = p[i] + acc * tau;
    q[i - 1] = acc;
  }
  if (remainder) *remainder = p[0] + acc * tau;
  return q;
}

bool poly_at_is_zero(const std::vector<CycNum>& p, const CycNum& tau) {
  CycNum acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * tau + p[i];
  return acc.is_zero();
}

std::vector<mpz_class> int_divisors(const mpz_class& n0) {
  mpz_class n = ::abs(n0);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  if (n > 1000000) return out;  // too large for candidate search
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
    }
  }
  return out;
}

void find_roots(std::vector<CycNum> p, unsigned max_order, UnivRoots& out);

// Records tau and all its repetitions, then continues on the quotient.
void take_root(std::vector<CycNum> p, const CycNum& tau, unsigned max_order,
               UnivRoots& out) {
  unsigned mult = 0;
  while (p.size() > 1) {
    CycNum rem;
    auto q = synth_div(p, tau, &rem);
    if (!rem.is_zero()) break;
    ++mult;
    p = std::move(q);
  }
  out.roots.emplace_back(tau, mult);
  if (p.size() <= 1) {
    out.ok = true;
    return;
  }
  find_roots(std::move(p), max_order, out);
}

void find_roots(std::vector<CycNum> p, unsigned max_order, UnivRoots& out) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  if (p.empty()) {
    out.ok = false;
    return;
  }
  if (p.size() == 1) {
    out.ok = true;
    return;
  }
  // Zero roots first.
  if (p[0].is_zero()) {
    size_t m = 0;
    while (m < p.size() && p[m].is_zero()) ++m;
    out.roots.emplace_back(CycNum(0), static_cast<unsigned>(m));
    p.erase(p.begin(), p.begin() + static_cast<long>(m));
    if (p.size() == 1) {
      out.ok = true;
      return;
    }
  }
  size_t deg = p.size() - 1;
  if (deg == 1) {
    CycNum tau = -(p[0] / p[1]);
    take_root(std::move(p), tau, max_order, out);
    return;
  }
  if (deg == 2) {
    CycNum disc = p[1] * p[1] - CycNum(4) * p[2] * p[0];
    CycNum root_disc(0);
    if (!disc.is_zero()) {
      CycNum d = disc.demoted();
      if (!d.is_rational()) {
        out.ok = false;
        return;
      }
      auto s = sqrt_in_cyclotomic(d.rational_value(), max_order);
      if (!s) {
        out.ok = false;
        return;
      }
      root_disc = *s;
    }
    CycNum tau = (-p[1] + root_disc) / (CycNum(2) * p[2]);
    take_root(std::move(p), tau, max_order, out);
    return;
  }
  // Degree >= 3: rational root candidates when the coefficients are rational.
  bool rational = true;
  for (const auto& c : p)
    if (!c.is_rational()) rational = false;
  if (rational) {
    // Scale to integers.
    mpz_class den(1);
    for (const auto& c : p) den = lcm(den, c.rational_value().den());
    std::vector<mpz_class> ic;
    for (const auto& c : p) {
      Rat scaled = c.rational_value() * Rat(den);
      ic.push_back(scaled.num());
    }
    for (const auto& dn : int_divisors(ic.front()))
      for (const auto& dd : int_divisors(ic.back())) {
        for (int sign : {1, -1}) {
          mpq_class cand(sign * dn, dd);
          cand.canonicalize();
          CycNum tau{Rat(cand)};
          if (poly_at_is_zero(p, tau)) {
            take_root(std::move(p), tau, max_order, out);
            return;
          }
        }
      }
  }
  // Binomial pattern c_d t^d + c_0.
  bool binomial = true;
  for (size_t i = 1; i + 1 < p.size(); ++i)
    if (!p[i].is_zero()) binomial = false;
  if (binomial && rational) {
    Rat target = -(p[0] / p.back()).rational_value();
    unsigned d = static_cast<unsigned>(deg);
    std::optional<Rat> rho = rat_root(target, d);
    unsigned extension = d;
    if (!rho && d % 2 == 0) {
      rho = rat_root(-target, d);
      extension = 2 * d;
    }
    if (rho && extension <= max_order && d <= max_order) {
      CycNum base = extension == d ? CycNum(*rho)
                                   : CycNum(*rho) * CycNum::zeta(extension, 1);
      out.ok = true;
      for (unsigned i = 0; i < d; ++i)
        out.roots.emplace_back(base * CycNum::zeta(d, i), 1);
      return;
    }
  }
  out.ok = false;
}

UnivRoots univ_roots(const std::vector<CycNum>& coeffs, unsigned max_order) {
  UnivRoots out;
  find_roots(coeffs, max_order, out);
  return out;
}

// ---- helpers on forms -------------------------------------------------------

bool proportional(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto& [ma, ca] = *a.terms().begin();
  const auto& [mb, cb] = *b.terms().begin();
  if (!(ma == mb)) return false;
  return a.mul_scalar(cb) == b.mul_scalar(ca);
}

unsigned field_order_of(const PuiseuxPoly& p) {
  unsigned o = 1;
  for (const auto& [m, c] : p.terms()) o = lcm_u(o, c.demoted().order());
  return o;
}

}  // namespace

TangentConeFactors tangent_cone_factors(const PuiseuxPoly& form, const VarSet& vars,
                                        unsigned max_order) {
  TangentConeFactors out;
  if (form.is_zero()) return out;
  const VarTablePtr& vt = form.vars();
  if (!form.has_integer_exponents()) throw Error("tangent cone needs integer exponents");

  VarSet ess;
  VarSet sup = form.support();
  for (int v : sup)
    if (varset_contains(vars, v)) ess.push_back(v);

  auto finish = [&](std::vector<PuiseuxPoly> factors) {
    // Safety: the factors must multiply back to the form.
    PuiseuxPoly prod = PuiseuxPoly::constant(vt, CycNum(1));
    for (const auto& f : factors) prod = prod * f;
    if (!(prod == form)) {
      out.ok = false;
      return;
    }
    out.ok = true;
    out.factors = std::move(factors);
    out.field_order = 1;
    for (const auto& f : out.factors) out.field_order = lcm_u(out.field_order, field_order_of(f));
    for (size_t i = 0; i < out.factors.size() && !out.repeated; ++i)
      for (size_t j = i + 1; j < out.factors.size(); ++j)
        if (proportional(out.factors[i], out.factors[j])) {
          out.repeated = true;
          break;
        }
  };

  if (ess.empty()) return out;

  if (ess.size() == 1) {
    auto st = form.single_term();
    if (!st) return out;
    int x = ess[0];
    Rat deg = st->first[static_cast<size_t>(x)];
    if (!deg.is_integer()) return out;
    long d = deg.num().get_si();
    std::vector<PuiseuxPoly> factors;
    for (long i = 0; i < d; ++i) {
      CycNum c = i == 0 ? st->second : CycNum(1);
      factors.push_back(PuiseuxPoly::variable(vt, x).mul_scalar(c));
    }
    finish(std::move(factors));
    return out;
  }

  if (ess.size() == 2) {
    int x = ess[0], y = ess[1];
    Rat degr = form.order(ess).finite();  // homogeneous: any term's degree
    long d = degr.num().get_si();
    std::vector<CycNum> p(static_cast<size_t>(d) + 1, CycNum(0));
    for (const auto& [m, c] : form.terms()) {
      long a = m[static_cast<size_t>(x)].num().get_si();
      p[static_cast<size_t>(a)] = c;
    }
    auto roots = univ_roots(p, max_order);
    if (!roots.ok) return out;
    std::vector<PuiseuxPoly> factors;
    // x-degree of the dehomogenization may be < d: remaining factors are y.
    long pdeg = static_cast<long>(p.size()) - 1;
    while (!p.empty() && p.back().is_zero()) --pdeg, p.pop_back();
    CycNum lead = p.empty() ? CycNum(1) : p.back();
    for (long i = 0; i < d - pdeg; ++i) factors.push_back(PuiseuxPoly::variable(vt, y));
    bool lead_used = false;
    for (const auto& [tau, mult] : roots.roots) {
      for (unsigned i = 0; i < mult; ++i) {
        PuiseuxPoly f = PuiseuxPoly::variable(vt, x) -
                        PuiseuxPoly::variable(vt, y).mul_scalar(tau);
        if (!lead_used) {
          f = f.mul_scalar(lead);
          lead_used = true;
        }
        factors.push_back(f);
      }
    }
    if (!lead_used && !factors.empty()) factors[0] = factors[0].mul_scalar(lead);
    finish(std::move(factors));
    return out;
  }

  if (ess.size() == 3) {
    // Peel single-variable factors, then lift the factors of the restriction
    // to the last variable's hyperplane, candidate by candidate.
    std::vector<PuiseuxPoly> factors;
    PuiseuxPoly rest = form;
    for (int v : ess) {
      auto [mono, residual] = rest.monomial_part(VarSet{v});
      Rat e = mono[static_cast<size_t>(v)];
      for (long i = 0; i < e.num().get_si(); ++i)
        factors.push_back(PuiseuxPoly::variable(vt, v));
      rest = residual;
    }

    // Recursive lift of the remaining (x-variable-free of single factors) form.
    struct Lifter {
      const VarTablePtr& vt;
      VarSet ess;
      unsigned max_order;
      bool lift(const PuiseuxPoly& g, std::vector<PuiseuxPoly>& acc) {
        if (g.is_constant()) {
          if (g.is_zero() || acc.empty()) return false;
          CycNum c = g.constant_term();
          if (!(c == CycNum(1))) acc.back() = acc.back().mul_scalar(c);
          return true;
        }
        VarSet sup = g.support();
        if (sup.size() <= 2) {
          TangentConeFactors inner = tangent_cone_factors(g, sup, max_order);
          if (!inner.ok) return false;
          for (auto& f : inner.factors) acc.push_back(std::move(f));
          return true;
        }
        int x1 = ess[0], x2 = ess[1], x3 = ess[2];
        // Restriction to x3 = 0 gives the (x1, x2) parts of the factors.
        PuiseuxPoly restr = g.substitute(x3, PuiseuxPoly::zero(vt));
        if (restr.is_zero()) return false;  // x3 divides; should be peeled
        TangentConeFactors base = tangent_cone_factors(restr, VarSet{x1, x2}, max_order);
        if (!base.ok || base.factors.empty()) return false;
        const PuiseuxPoly& l0 = base.factors.front();
        Monomial mx1(vt->size());
        mx1.set(x1, Rat(1));
        int main_var = l0.coeff(mx1).is_zero() ? x2 : x1;
        Monomial mmain(vt->size());
        mmain.set(main_var, Rat(1));
        CycNum alpha = l0.coeff(mmain);
        // Candidates for the x3 coefficient come from the roots of
        // g(main_var, other = 0, x3 = 1).
        std::map<int, PuiseuxPoly> dehom;
        dehom.emplace(x3, PuiseuxPoly::constant(vt, CycNum(1)));
        dehom.emplace(main_var == x1 ? x2 : x1, PuiseuxPoly::zero(vt));
        PuiseuxPoly uni = g.substitute(dehom);
        Rat maxd = uni.max_degree(main_var);
        std::vector<CycNum> coeffs(static_cast<size_t>(maxd.num().get_si()) + 1, CycNum(0));
        for (const auto& [m, c] : uni.terms())
          coeffs[static_cast<size_t>(m[static_cast<size_t>(main_var)].num().get_si())] = c;
        auto roots = univ_roots(coeffs, max_order);
        if (!roots.ok) return false;
        for (const auto& [tau, mult] : roots.roots) {
          PuiseuxPoly cand = l0 - PuiseuxPoly::variable(vt, x3).mul_scalar(alpha * tau);
          auto q = g.exact_div(cand);
          if (!q) continue;
          acc.push_back(cand);
          return lift(*q, acc);
        }
        return false;
      }
    };
    Lifter lifter{vt, ess, max_order};
    if (!lifter.lift(rest, factors)) return out;
    finish(std::move(factors));
    return out;
  }

  return out;  // more than three essential variables: no method
}

HenselResult hensel_lift(const PuiseuxPoly& f, const std::vector<PuiseuxPoly>& initial,
                         const Truncation& t) {
  HenselResult out;
  const VarTablePtr& vt = f.vars();
  if (!f.has_integer_exponents()) throw Error("Hensel lifting needs integer exponents");
  if (initial.empty()) throw Error("no initial factors");
  VarSet vars = all_vars(vt);

  std::vector<long> deg;
  long D = 0;
  for (const auto& g : initial) {
    if (g.is_zero()) throw Error("zero initial factor");
    Rat d0 = g.order(vars).finite();
    deg.push_back(d0.num().get_si());
    D += deg.back();
  }
  std::vector<PuiseuxPoly> cofactors;  // P_i = prod_{j != i} initial_j
  for (size_t i = 0; i < initial.size(); ++i) {
    PuiseuxPoly p = PuiseuxPoly::constant(vt, CycNum(1));
    for (size_t j = 0; j < initial.size(); ++j)
      if (j != i) p = p * initial[j];
    cofactors.push_back(std::move(p));
  }

  // Monomials of exact total degree n.
  auto monomials_of_degree = [&](long n) {
    std::vector<Monomial> out_m;
    std::vector<long> exps(vt->size(), 0);
    struct Rec {
      long n;
      std::vector<long>& exps;
      std::vector<Monomial>& out_m;
      const VarTablePtr& vt;
      void go(size_t i, long left) {
        if (i + 1 == exps.size()) {
          exps[i] = left;
          Monomial m(vt->size());
          for (size_t j = 0; j < exps.size(); ++j)
            m.set(static_cast<int>(j), Rat(exps[j]));
          out_m.push_back(std::move(m));
          return;
        }
        for (long e = 0; e <= left; ++e) {
          exps[i] = e;
          go(i + 1, left - e);
        }
      }
    };
    if (vt->size() == 0) return out_m;
    Rec{n, exps, out_m, vt}.go(0, n);
    return out_m;
  };

  std::vector<PuiseuxPoly> factors = initial;
  Rat last_order(-1);
  while (true) {
    PuiseuxPoly prod = PuiseuxPoly::constant(vt, CycNum(1));
    for (const auto& g : factors) prod = prod * g;
    PuiseuxPoly R = (f - prod).truncated(t);
    if (R.is_zero()) {
      out.ok = true;
      out.factors = std::move(factors);
      return out;
    }
    Rat tstar = R.order(vars).finite();
    if (tstar == last_order) {
      out.obstruction_degree = tstar;  // no progress possible
      return out;
    }
    last_order = tstar;
    PuiseuxPoly E = R.initial_form(vars);

    // Unknowns: coefficients of h_i over monomials of degree tstar - (D - d_i).
    std::vector<std::pair<size_t, Monomial>> unknowns;
    std::vector<PuiseuxPoly> columns;
    for (size_t i = 0; i < factors.size(); ++i) {
      long hdeg = tstar.num().get_si() - (D - deg[i]);
      if (hdeg < 0) continue;
      for (auto& m : monomials_of_degree(hdeg)) {
        columns.push_back(cofactors[i].mul_term(m, CycNum(1)));
        unknowns.emplace_back(i, m);
      }
    }
    // Equations: coefficients of monomials of degree tstar.
    auto eq_monos = monomials_of_degree(tstar.num().get_si());
    std::vector<std::vector<CycNum>> mat(eq_monos.size(),
                                         std::vector<CycNum>(unknowns.size() + 1, CycNum(0)));
    for (size_t r = 0; r < eq_monos.size(); ++r) {
      for (size_t cidx = 0; cidx < columns.size(); ++cidx)
        mat[r][cidx] = columns[cidx].coeff(eq_monos[r]);
      mat[r][unknowns.size()] = E.coeff(eq_monos[r]);
    }
    auto sol = solve_linear(std::move(mat), unknowns.size());
    if (!sol) {
      out.obstruction_degree = tstar;
      return out;
    }
    for (size_t u = 0; u < unknowns.size(); ++u) {
      if ((*sol)[u].is_zero()) continue;
      auto [i, m] = unknowns[u];
      factors[i] += PuiseuxPoly::term(vt, m, (*sol)[u]);
    }
  }
}

std::string Classification::str() const {
  std::ostringstream os;
  switch (verdict) {
    case Verdict::unit: return "unit";
    case Verdict::smooth: return "smooth";
    case Verdict::nc: os << "nc(" << k << ")"; break;
    case Verdict::snc: os << "snc(" << k << ")"; break;
    case Verdict::non_nc: os << "non-nc(" << k << ")"; break;
    case Verdict::unresolved: os << "unresolved"; break;
  }
  return os.str();
}

Classification classify_point(const PuiseuxPoly& f, const Truncation& t,
                              unsigned max_order) {
  if (f.is_zero()) throw Error("cannot classify the zero polynomial");
  if (!f.has_integer_exponents())
    throw Error("classification needs integer exponents (expand first)");
  const VarTablePtr& vt = f.vars();
  VarSet vars = all_vars(vt);

  Classification cl;
  cl.trunc = t.bound;
  Rat ordr = f.order(vars).finite();
  long ord = ordr.num().get_si();
  if (ord == 0) {
    cl.verdict = Verdict::unit;
    return cl;
  }
  cl.k = static_cast<unsigned>(ord);
  if (ord == 1) {
    cl.verdict = Verdict::smooth;
    cl.k = 1;
    return cl;
  }
  PuiseuxPoly in = f.initial_form(vars);
  TangentConeFactors tcf = tangent_cone_factors(in, vars, max_order);
  if (!tcf.ok) {
    cl.verdict = Verdict::unresolved;
    return cl;
  }
  if (tcf.repeated) {
    cl.verdict = Verdict::non_nc;
    return cl;
  }
  // Linear independence of the factors' linear parts.
  std::vector<std::vector<CycNum>> rows;
  for (const auto& fac : tcf.factors) {
    std::vector<CycNum> row;
    for (int v : vars) {
      Monomial m(vt->size());
      m.set(v, Rat(1));
      row.push_back(fac.coeff(m));
    }
    rows.push_back(std::move(row));
  }
  if (matrix_rank(rows) < tcf.factors.size()) {
    cl.verdict = Verdict::non_nc;
    return cl;
  }
  HenselResult lift = hensel_lift(f, tcf.factors, t);
  if (!lift.ok) {
    cl.verdict = Verdict::non_nc;
    return cl;
  }
  cl.witness = std::move(lift.factors);
  cl.field_order = tcf.field_order;
  for (const auto& w : cl.witness) cl.field_order = lcm_u(cl.field_order, field_order_of(w));
  cl.verdict = cl.field_order == 1 ? Verdict::snc : Verdict::nc;
  return cl;
}

bool is_pinch_point(const PuiseuxPoly& f) {
  if (f.is_zero() || !f.has_integer_exponents()) return false;
  const VarTablePtr& vt = f.vars();
  VarSet vars = all_vars(vt);
  if (!(f.order(vars) == ExtRat(Rat(2)))) return false;
  PuiseuxPoly in = f.initial_form(vars);
  auto st = in.single_term();
  if (!st) return false;
  // Initial form must be a pure square of one variable.
  int zv = -1;
  for (size_t i = 0; i < vt->size(); ++i) {
    const Rat& e = st->first[i];
    if (e.is_zero()) continue;
    if (e != Rat(2) || zv >= 0) return false;
    zv = static_cast<int>(i);
  }
  if (zv < 0) return false;
  if (!st->second.is_rational()) return false;
  PuiseuxPoly g = f.mul_scalar(CycNum(Rat(1) / st->second.rational_value()));
  std::optional<ZPoly> zp;
  try {
    zp = ZPoly::from_poly(g, zv);
  } catch (const Error&) {
    return false;
  }
  if (zp->degree() != 2) return false;
  auto [shifted, shift] = tschirnhausen(*zp);
  PuiseuxPoly c = shifted.coeff(2);
  if (c.is_zero()) return false;
  auto [mono, unit] = c.monomial_part(vars);
  if (unit.constant_term().is_zero()) return false;
  int odd_var = -1;
  Rat even_total(0);
  for (size_t i = 0; i < vt->size(); ++i) {
    const Rat& e = mono[i];
    if (e.is_zero()) continue;
    if (!e.is_integer()) return false;
    if (e.num() % 2 != 0) {
      if (odd_var >= 0) return false;
      if (e != Rat(1)) return false;  // higher odd powers are not yet pinch
      odd_var = static_cast<int>(i);
    } else {
      even_total += e;
    }
  }
  return odd_var >= 0 && even_total >= Rat(2);
}

InvTuple InvTuple::nc(unsigned p, unsigned r) {
  if (p < 1) throw Error("nc invariant needs order >= 1");
  std::vector<ExtRat> e;
  e.emplace_back(Rat(static_cast<long>(p)));
  e.emplace_back(Rat(static_cast<long>(r)));
  for (unsigned i = 1; i < p + r; ++i) {
    e.emplace_back(Rat(1));
    e.emplace_back(Rat(0));
  }
  e.push_back(ExtRat::infinity());
  return InvTuple(std::move(e));
}

int InvTuple::lex_compare(const InvTuple& a, const InvTuple& b) {
  size_t n = std::min(a.e_.size(), b.e_.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.e_[i] < b.e_[i]) return -1;
    if (b.e_[i] < a.e_[i]) return 1;
  }
  if (a.e_.size() < b.e_.size()) return -1;
  if (a.e_.size() > b.e_.size()) return 1;
  return 0;
}

std::string InvTuple::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ",";
    os << e_[i].str();
  }
  os << ")";
  return os.str();
}

}  // namespace minsing
