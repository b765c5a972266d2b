#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace loopforge {

/// Role of a variable inside a synthesis problem.
enum class VarClass : std::uint8_t {
  Program,      // x: loop state
  Coefficient,  // y: template coefficient unknowns
  GuardFlag,    // z: tracks whether the guard has held so far
  GuardCoeff,   // w: guard-template unknowns
  Auxiliary,    // t: fresh variables introduced by algorithms
  Initial,      // a: initial-value unknowns retained when no initial state is given
};

std::string_view to_string(VarClass cls);

class VarContext;
using ContextPtr = std::shared_ptr<const VarContext>;

/// Ordered, immutable list of distinct variable names with class tags.
/// Index 0 is the largest variable in every monomial order.
class VarContext {
 public:
  struct Var {
    std::string name;
    VarClass cls = VarClass::Program;
  };

  static ContextPtr create(std::vector<Var> vars);
  static ContextPtr of_program_vars(const std::vector<std::string>& names);
  static ContextPtr of_class(const std::vector<std::string>& names, VarClass cls);

  std::size_t size() const { return vars_.size(); }
  const std::string& name(std::size_t i) const { return vars_.at(i).name; }
  VarClass var_class(std::size_t i) const { return vars_.at(i).cls; }
  const std::vector<Var>& vars() const { return vars_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws loopforge::Error naming the variable when absent.
  std::size_t require(std::string_view name) const;
  std::vector<std::size_t> indices_of(VarClass cls) const;
  std::vector<std::string> names() const;

  ContextPtr extended(const std::vector<Var>& extra) const;
  /// Context holding only the listed indices, in the given order.
  ContextPtr restricted(const std::vector<std::size_t>& keep) const;

  /// A name of the form base, base1, base2, ... not present in this context.
  std::string fresh_name(std::string_view base) const;

  bool same_as(const VarContext& other) const;

 private:
  explicit VarContext(std::vector<Var> vars);

  std::vector<Var> vars_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || a->same_as(*b);
}

}  // namespace loopforge
