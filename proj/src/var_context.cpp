#include "loopforge/var_context.hpp"

#include "loopforge/error.hpp"

namespace loopforge {

std::string_view to_string(VarClass cls) {
  switch (cls) {
    case VarClass::Program: return "program";
    case VarClass::Coefficient: return "coefficient";
    case VarClass::GuardFlag: return "guard-flag";
    case VarClass::GuardCoeff: return "guard-coeff";
    case VarClass::Auxiliary: return "auxiliary";
    case VarClass::Initial: return "initial";
  }
  return "?";
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s[0])) return false;
  for (char c : s)
    if (!alpha(c) && !digit(c) && c != '_') return false;
  return true;
}

}  // namespace

VarContext::VarContext(std::vector<Var> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!valid_identifier(vars_[i].name))
      throw Error("invalid variable name '" + vars_[i].name + "'");
    if (!lookup_.emplace(vars_[i].name, i).second)
      throw Error("duplicate variable name '" + vars_[i].name + "'");
  }
}

ContextPtr VarContext::create(std::vector<Var> vars) {
  return ContextPtr(new VarContext(std::move(vars)));
}

ContextPtr VarContext::of_class(const std::vector<std::string>& names, VarClass cls) {
  std::vector<Var> vars;
  vars.reserve(names.size());
  for (const auto& n : names) vars.push_back({n, cls});
  return create(std::move(vars));
}

ContextPtr VarContext::of_program_vars(const std::vector<std::string>& names) {
  return of_class(names, VarClass::Program);
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t VarContext::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw Error("unknown variable '" + std::string(name) + "'");
}

std::vector<std::size_t> VarContext::indices_of(VarClass cls) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].cls == cls) out.push_back(i);
  return out;
}

std::vector<std::string> VarContext::names() const {
  std::vector<std::string> out;
  out.reserve(vars_.size());
  for (const auto& v : vars_) out.push_back(v.name);
  return out;
}

ContextPtr VarContext::extended(const std::vector<Var>& extra) const {
  std::vector<Var> all = vars_;
  all.insert(all.end(), extra.begin(), extra.end());
  return create(std::move(all));
}

ContextPtr VarContext::restricted(const std::vector<std::size_t>& keep) const {
  std::vector<Var> sub;
  sub.reserve(keep.size());
  for (std::size_t i : keep) sub.push_back(vars_.at(i));
  return create(std::move(sub));
}

std::string VarContext::fresh_name(std::string_view base) const {
  std::string candidate(base);
  for (std::size_t k = 1; index_of(candidate); ++k) candidate = std::string(base) + std::to_string(k);
  return candidate;
}

bool VarContext::same_as(const VarContext& other) const {
  if (this == &other) return true;
  if (vars_.size() != other.vars_.size()) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name != other.vars_[i].name || vars_[i].cls != other.vars_[i].cls) return false;
  return true;
}

}  // namespace loopforge
