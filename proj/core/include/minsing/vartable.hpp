#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace minsing {

enum class VarRole { ambient, exceptional, parameter };

VarRole var_role_from_string(std::string_view s);
std::string_view to_string(VarRole r);

/// Ordered table of variable names with role tags. Frozen at creation; the
/// term order on monomials is lexicographic along this ordering. Shared by
/// pointer between all polynomials of one computation.
class VarTable {
 public:
  using Ptr = std::shared_ptr<const VarTable>;

  static Ptr make(std::vector<std::pair<std::string, VarRole>> vars);
  /// All-ambient convenience constructor.
  static Ptr make(std::initializer_list<std::string_view> names);

  size_t size() const { return names_.size(); }
  const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
  VarRole role(int i) const { return roles_[static_cast<size_t>(i)]; }

  /// Index of a name, or -1.
  int find(std::string_view name) const;
  /// Index of a name; throws if absent.
  int index_of(std::string_view name) const;

  std::vector<int> indices_of(const std::vector<std::string>& names) const;

 private:
  std::vector<std::string> names_;
  std::vector<VarRole> roles_;
};

using VarTablePtr = VarTable::Ptr;

/// Sorted, duplicate-free set of variable indices.
using VarSet = std::vector<int>;

VarSet make_varset(std::vector<int> indices);
bool varset_contains(const VarSet& s, int i);

}  // namespace minsing
