#include "minsing/poly_io.hpp"

#include <cctype>
#include <sstream>

#include "minsing/circulant.hpp"
#include "minsing/error.hpp"

namespace minsing {

namespace {

struct Parser {
  const VarTablePtr& vt;
  std::string_view s;
  size_t pos = 0;

  // When non-null, top-level Delta blocks and monomial factors are collected
  // here instead of being expanded.
  ProductForm* collect = nullptr;
  int depth = 0;

  explicit Parser(const VarTablePtr& v, std::string_view text) : vt(v), s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(pos) + " in \"" + std::string(s) + "\"");
  }

  mpz_class parse_digits() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return mpz_class(std::string(s.substr(start, pos - start)), 10);
  }

  Rat parse_rational_literal() {
    mpz_class n = parse_digits();
    if (peek() == '/') {
      ++pos;
      mpz_class d = parse_digits();
      if (d == 0) fail("zero denominator");
      mpq_class q(n, d);
      q.canonicalize();
      return Rat(q);
    }
    return Rat(mpq_class(n));
  }

  std::string parse_name() {
    skip_ws();
    size_t start = pos;
    if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      fail("expected a name");
    ++pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return std::string(s.substr(start, pos - start));
  }

  Rat parse_exponent() {
    expect('^');
    if (accept('(')) {
      Rat e = parse_rational_literal();
      expect(')');
      if (e.is_negative()) fail("negative exponent");
      return e;
    }
    return Rat(mpq_class(parse_digits()));
  }

  PuiseuxPoly pow_poly(const PuiseuxPoly& base, const Rat& e) {
    if (e.is_integer()) {
      mpz_class n = e.num();
      if (!n.fits_uint_p()) fail("exponent too large");
      return base.pow_int(n.get_ui());
    }
    auto st = base.single_term();
    if (!st) fail("fractional power of a non-monomial");
    auto [m, c] = *st;
    if (!(c == CycNum(1))) {
      if (!c.is_rational()) fail("fractional power of a non-rational coefficient");
      auto root = rat_root(c.rational_value(), e.den().get_ui());
      if (!root) fail("coefficient has no exact root");
      mpz_class nn = e.num();
      if (!nn.fits_slong_p()) fail("exponent too large");
      return PuiseuxPoly::term(vt, m.pow(e), CycNum(root->pow(nn.get_si())));
    }
    return PuiseuxPoly::term(vt, m.pow(e), CycNum(1));
  }

  bool is_zeta_name(const std::string& name, unsigned& order) {
    if (name.size() < 2 || name[0] != 'z') return false;
    for (size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    if (vt->find(name) >= 0) return false;
    order = static_cast<unsigned>(std::stoul(name.substr(1)));
    return order >= 1;
  }

  bool is_delta_name(const std::string& name, unsigned& k) {
    if (name.rfind("Delta", 0) != 0 || name.size() == 5) return false;
    for (size_t i = 5; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    k = static_cast<unsigned>(std::stoul(name.substr(5)));
    return k >= 1;
  }

  FactoredCirculant parse_delta_args(unsigned k) {
    FactoredCirculant block;
    block.k = k;
    expect('(');
    for (unsigned i = 0; i < k; ++i) {
      if (i > 0) expect(';');
      PuiseuxPoly arg = parse_expr();
      auto st = arg.single_term();
      if (!st) fail("circulant argument must be a single term");
      block.args.push_back(CircArg{st->first, st->second});
    }
    expect(')');
    return block;
  }

  PuiseuxPoly parse_atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return PuiseuxPoly::constant(vt, CycNum(parse_rational_literal()));
    }
    if (c == '(') {
      ++pos;
      ++depth;
      PuiseuxPoly e = parse_expr();
      --depth;
      expect(')');
      return e;
    }
    std::string name = parse_name();
    unsigned k = 0;
    if (is_delta_name(name, k)) {
      FactoredCirculant block = parse_delta_args(k);
      if (collect && depth == 0) {
        collect->blocks.push_back(block);
        return PuiseuxPoly::constant(vt, CycNum(1));
      }
      return circulant_expand(vt, block, /*require_rational=*/false);
    }
    unsigned order = 0;
    if (is_zeta_name(name, order)) {
      return PuiseuxPoly::constant(vt, CycNum::zeta(order, 1));
    }
    int idx = vt->find(name);
    if (idx < 0) fail("unknown variable '" + name + "'");
    return PuiseuxPoly::variable(vt, idx);
  }

  PuiseuxPoly parse_power() {
    PuiseuxPoly base = parse_atom();
    if (peek() == '^') {
      Rat e = parse_exponent();
      return pow_poly(base, e);
    }
    return base;
  }

  PuiseuxPoly parse_product() {
    PuiseuxPoly r = parse_power();
    while (accept('*')) r = r * parse_power();
    return r;
  }

  PuiseuxPoly parse_expr() {
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    PuiseuxPoly r = parse_product();
    if (neg) r = -r;
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        r += parse_product();
      } else if (c == '-') {
        ++pos;
        r -= parse_product();
      } else {
        break;
      }
    }
    return r;
  }
};

}  // namespace

PuiseuxPoly parse_poly(const VarTablePtr& vt, std::string_view text) {
  Parser p(vt, text);
  PuiseuxPoly r = p.parse_expr();
  if (!p.eof()) p.fail("trailing input");
  return r;
}

ProductForm parse_product_form(const VarTablePtr& vt, std::string_view text) {
  ProductForm form(vt);
  Parser p(vt, text);
  p.collect = &form;
  PuiseuxPoly rest = p.parse_expr();
  if (!p.eof()) p.fail("trailing input");
  auto st = rest.single_term();
  if (!st || !(st->second == CycNum(1)))
    throw ParseError("product form must be a monomial times circulant blocks: " +
                     std::string(text));
  form.prefactor = st->first;
  if (form.blocks.empty() && form.prefactor.is_one())
    throw ParseError("empty product form");
  return form;
}

std::string to_string(const ProductForm& form) {
  std::ostringstream os;
  bool wrote = false;
  if (!form.prefactor.is_one()) {
    os << PuiseuxPoly::term(form.vt, form.prefactor, CycNum(1)).str();
    wrote = true;
  }
  for (const auto& block : form.blocks) {
    if (wrote) os << "*";
    os << "Delta" << block.k << "(";
    for (unsigned i = 0; i < block.k; ++i) {
      if (i > 0) os << "; ";
      os << PuiseuxPoly::term(form.vt, block.args[i].mono, block.args[i].coeff).str();
    }
    os << ")";
    wrote = true;
  }
  if (!wrote) return "1";
  return os.str();
}

}  // namespace minsing
