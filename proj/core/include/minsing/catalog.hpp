#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "minsing/circulant_fwd.hpp"

namespace minsing {

/// One minimal-singularity normal form: a product-of-circulants template with
/// role constraints and the list of its neighbours.
struct CatalogEntry {
  std::string id;
  int dim = 0;  // number of variables in the form
  VarTablePtr vt;
  ProductForm form;
  std::string form_text;
  std::vector<std::string> neighbors;
  std::set<int> must_exceptional;  // template variables that must match
                                   // exceptional candidate variables
};

/// The finite catalog of minimal singularities with neighbour relations,
/// loaded from JSON; every neighbour id must resolve.
class Catalog {
 public:
  static Catalog load_file(const std::string& path);
  static Catalog load_json_text(const std::string& text);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(const std::string& id) const;

  /// Classifies a product form against the catalog: substitutes 1 for the
  /// `nonzero` variables (unit absorption), drops unit blocks, rewrites
  /// all-plain-variable blocks as Delta_1 products (the linear eigen change),
  /// and matches the expansion against each template under variable
  /// bijections respecting the exceptional-role constraints.
  struct MatchResult {
    std::optional<std::string> id;
    std::string canonical_text;
  };
  MatchResult classify_form(const ProductForm& candidate, const VarSet& nonzero,
                            const std::set<int>& exceptional_vars) const;

 private:
  std::vector<CatalogEntry> entries_;
};

}  // namespace minsing
