#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "loopforge/error.hpp"
#include "loopforge/synth.hpp"

namespace loopforge {

enum class NumberSort { Int, Real };
enum class NonzeroPolicy {
  Any,        // some coefficient unknown is nonzero
  PerBranch,  // every branch has a nonzero coefficient unknown
  None,
  Custom,     // only the caller-supplied assertion lines
};

struct SmtJob {
  PolynomialSystem system;
  NumberSort sort = NumberSort::Int;
  NonzeroPolicy nonzero = NonzeroPolicy::Any;
  std::vector<std::string> custom_assertions;  // full "(assert ...)" lines, emitted under every policy
  double timeout_seconds = 300;
};

/// SMT-LIB 2.6 script: logic, one declare-const per unknown, one
/// `(assert (= term 0))` per equation with denominators cleared, the
/// nonzero assertion, check-sat and get-model. Deterministic.
std::string emit_smtlib(const SmtJob& job);

/// Prefix rendering of p with rational coefficients cleared by the lcm of
/// their denominators: `y - 1` becomes `(- y 1)`.
std::string smt_term(const Polynomial& p, NumberSort sort = NumberSort::Int);

/// `3`, `(- 3)`, `(/ 1 2)` (Real: `3.0`, `(/ 1.0 2.0)`).
std::string smt_literal(const Rational& value, NumberSort sort);

class MalformedModel : public Error {
 public:
  MalformedModel(const std::string& what, std::string raw) : Error(what), raw_(std::move(raw)) {}
  const std::string& raw() const { return raw_; }

 private:
  std::string raw_;
};

/// Values of the `define-fun` entries of a model. Accepts integers,
/// decimals, `(- k)` and `(/ p q)` (nested). Unknown symbols are ignored.
Assignment parse_model(std::string_view text, const ContextPtr& unknowns);

/// Reads back the `(assert (= term 0))` lines of an emitted script.
PolynomialSeq parse_smt_equations(std::string_view script, const ContextPtr& unknowns);

}  // namespace loopforge
