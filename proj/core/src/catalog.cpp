#include "minsing/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "minsing/blowup.hpp"
#include "minsing/circulant.hpp"
#include "minsing/error.hpp"
#include "minsing/poly_io.hpp"

namespace minsing {

using nlohmann::json;

Catalog Catalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_json_text(ss.str());
}

Catalog Catalog::load_json_text(const std::string& text) {
  Catalog cat;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("catalog parse error: ") + e.what());
  }
  for (const auto& je : doc.at("entries")) {
    CatalogEntry entry;
    entry.id = je.at("id").get<std::string>();
    std::vector<std::pair<std::string, VarRole>> vars;
    std::vector<std::string> exceptional_names;
    for (const auto& jv : je.at("vars")) {
      std::string name = jv.at("name").get<std::string>();
      bool exc = jv.value("exceptional", false);
      vars.emplace_back(name, exc ? VarRole::exceptional : VarRole::ambient);
      if (exc) exceptional_names.push_back(name);
    }
    entry.vt = VarTable::make(std::move(vars));
    entry.form_text = je.at("form").get<std::string>();
    entry.form = parse_product_form(entry.vt, entry.form_text);
    entry.dim = static_cast<int>(entry.vt->size());
    if (je.contains("dim") && je.at("dim").get<int>() != entry.dim)
      throw Error("catalog entry '" + entry.id + "' declares a wrong dimension");
    for (const auto& jn : je.value("neighbors", json::array()))
      entry.neighbors.push_back(jn.get<std::string>());
    for (const auto& n : exceptional_names)
      entry.must_exceptional.insert(entry.vt->index_of(n));
    // Variables under fractional powers must always be exceptional.
    for (const auto& block : entry.form.blocks)
      for (const auto& arg : block.args)
        for (size_t i = 0; i < entry.vt->size(); ++i)
          if (!arg.mono[i].is_zero() && !arg.mono[i].is_integer())
            entry.must_exceptional.insert(static_cast<int>(i));
    cat.entries_.push_back(std::move(entry));
  }
  for (const auto& e : cat.entries_)
    for (const auto& n : e.neighbors)
      if (!cat.find(n))
        throw Error("catalog entry '" + e.id + "' references unknown neighbor '" + n + "'");
  return cat;
}

const CatalogEntry* Catalog::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

namespace {

/// Unit absorption: sets the given variables to 1 in every argument and the
/// prefactor.
ProductForm absorb_units(const ProductForm& p, const VarSet& nonzero) {
  ProductForm out(p.vt);
  auto clear = [&](const Monomial& m) {
    Monomial r = m;
    for (int v : nonzero) r.set(v, Rat(0));
    return r;
  };
  out.prefactor = clear(p.prefactor);
  for (const auto& block : p.blocks) {
    FactoredCirculant nb;
    nb.k = block.k;
    for (const auto& arg : block.args) nb.args.push_back(CircArg{clear(arg.mono), arg.coeff});
    out.blocks.push_back(std::move(nb));
  }
  return out;
}

bool is_plain_variable_block(const VarTablePtr& vt, const FactoredCirculant& b,
                             std::vector<int>* vars_out) {
  std::set<int> seen;
  for (const auto& arg : b.args) {
    int var = -1;
    for (size_t i = 0; i < vt->size(); ++i) {
      const Rat& e = arg.mono[i];
      if (e.is_zero()) continue;
      if (e != Rat(1) || var >= 0) return false;
      var = static_cast<int>(i);
    }
    if (var < 0) return false;
    if (!seen.insert(var).second) return false;
    if (!arg.coeff.is_rational() || arg.coeff.is_zero()) return false;
    if (vars_out) vars_out->push_back(var);
  }
  return true;
}

/// Canonicalization: prefactor variables and all-plain-variable blocks become
/// Delta_1 blocks; blocks with a constant argument are unit factors and are
/// dropped. Blocks sorted by size for cheap shape comparison.
ProductForm canonicalize(const ProductForm& p) {
  ProductForm reduced = reduced_form(p);
  ProductForm out(p.vt);
  for (size_t i = 0; i < p.vt->size(); ++i) {
    const Rat& e = reduced.prefactor[i];
    if (e.is_zero()) continue;
    if (!e.is_integer()) throw Error("fractional prefactor exponent");
    for (long j = 0; j < e.num().get_si(); ++j) {
      FactoredCirculant b;
      b.k = 1;
      Monomial m(p.vt->size());
      m.set(static_cast<int>(i), Rat(1));
      b.args.push_back(CircArg{std::move(m), CycNum(1)});
      out.blocks.push_back(std::move(b));
    }
  }
  for (const auto& block : reduced.blocks) {
    std::vector<int> plain_vars;
    if (block.k > 1 && is_plain_variable_block(p.vt, block, &plain_vars)) {
      for (int v : plain_vars) {
        FactoredCirculant b;
        b.k = 1;
        Monomial m(p.vt->size());
        m.set(v, Rat(1));
        b.args.push_back(CircArg{std::move(m), CycNum(1)});
        out.blocks.push_back(std::move(b));
      }
      continue;
    }
    out.blocks.push_back(block);
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const FactoredCirculant& a, const FactoredCirculant& b) { return a.k < b.k; });
  return out;
}

PuiseuxPoly remap(const PuiseuxPoly& p, const VarTablePtr& target,
                  const std::vector<int>& var_map) {
  PuiseuxPoly out(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial nm(target->size());
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i].is_zero()) continue;
      int tv = var_map[i];
      if (tv < 0) throw Error("internal: unmapped variable in remap");
      nm.set(tv, m[i]);
    }
    out += PuiseuxPoly::term(target, std::move(nm), c);
  }
  return out;
}

bool equal_up_to_scalar(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  const auto& [ma, ca] = *a.terms().begin();
  const auto& [mb, cb] = *b.terms().begin();
  if (!(ma == mb)) return false;
  return a.mul_scalar(cb) == b.mul_scalar(ca);
}

}  // namespace

Catalog::MatchResult Catalog::classify_form(const ProductForm& candidate,
                                            const VarSet& nonzero,
                                            const std::set<int>& exceptional_vars) const {
  MatchResult result;
  ProductForm canon = canonicalize(absorb_units(candidate, nonzero));
  result.canonical_text = to_string(canon);
  PuiseuxPoly cand_exp = expand(canon, /*require_rational=*/false);
  if (cand_exp.is_zero()) return result;

  VarSet cand_vars = cand_exp.support();
  std::multiset<unsigned> cand_shape;
  for (const auto& b : canon.blocks) cand_shape.insert(b.k);

  for (const auto& entry : entries_) {
    if (entry.vt->size() != cand_vars.size()) continue;
    std::multiset<unsigned> entry_shape;
    for (const auto& b : entry.form.blocks) entry_shape.insert(b.k);
    if (entry_shape != cand_shape) continue;

    PuiseuxPoly entry_exp = expand(entry.form, /*require_rational=*/false);

    // Try every bijection candidate variable -> template variable.
    std::vector<int> perm(cand_vars.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end());
    do {
      bool roles_ok = true;
      std::vector<int> var_map(candidate.vt->size(), -1);
      for (size_t i = 0; i < cand_vars.size(); ++i) {
        int cv = cand_vars[i];
        int tv = perm[i];
        if (entry.must_exceptional.count(tv) && !exceptional_vars.count(cv)) {
          roles_ok = false;
          break;
        }
        var_map[static_cast<size_t>(cv)] = tv;
      }
      if (!roles_ok) continue;
      PuiseuxPoly mapped = remap(cand_exp, entry.vt, var_map);
      if (equal_up_to_scalar(mapped, entry_exp)) {
        result.id = entry.id;
        return result;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return result;
}

}  // namespace minsing
