#include "minsing/vartable.hpp"

#include <algorithm>
#include <set>

#include "minsing/error.hpp"

namespace minsing {

VarRole var_role_from_string(std::string_view s) {
  if (s == "ambient") return VarRole::ambient;
  if (s == "exceptional") return VarRole::exceptional;
  if (s == "parameter") return VarRole::parameter;
  throw Error("unknown variable role: " + std::string(s));
}

std::string_view to_string(VarRole r) {
  switch (r) {
    case VarRole::ambient: return "ambient";
    case VarRole::exceptional: return "exceptional";
    case VarRole::parameter: return "parameter";
  }
  return "?";
}

VarTablePtr VarTable::make(std::vector<std::pair<std::string, VarRole>> vars) {
  auto vt = std::make_shared<VarTable>();
  std::set<std::string> seen;
  for (auto& [name, role] : vars) {
    if (name.empty()) throw Error("empty variable name");
    if (!seen.insert(name).second) throw Error("duplicate variable name: " + name);
    vt->names_.push_back(std::move(name));
    vt->roles_.push_back(role);
  }
  return vt;
}

VarTablePtr VarTable::make(std::initializer_list<std::string_view> names) {
  std::vector<std::pair<std::string, VarRole>> vars;
  for (auto n : names) vars.emplace_back(std::string(n), VarRole::ambient);
  return make(std::move(vars));
}

int VarTable::find(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

int VarTable::index_of(std::string_view name) const {
  int i = find(name);
  if (i < 0) throw Error("unknown variable: " + std::string(name));
  return i;
}

std::vector<int> VarTable::indices_of(const std::vector<std::string>& names) const {
  std::vector<int> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(index_of(n));
  return out;
}

VarSet make_varset(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return indices;
}

bool varset_contains(const VarSet& s, int i) {
  return std::binary_search(s.begin(), s.end(), i);
}

}  // namespace minsing
