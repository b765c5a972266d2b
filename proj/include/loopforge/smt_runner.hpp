#pragma once

#include <string>

#include "loopforge/smtlib.hpp"

namespace loopforge {

enum class SolveStatus { Sat, Unsat, Unknown, Timeout };

std::string_view to_string(SolveStatus status);

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unknown;
  /// Binds every unknown when sat; exact values.
  Assignment model;
  double wall_time = 0;
  std::string raw_output;
};

class SolverNotFound : public Error {
 public:
  explicit SolverNotFound(const std::string& command)
      : Error("SMT solver not found: '" + command + "' (set --solver-cmd or LOOPFORGE_SOLVER)") {}
};

/// `LOOPFORGE_SOLVER` when set and non-empty, otherwise "z3 -in".
std::string default_solver_command();

/// Runs `solver_command` (split on whitespace, no shell) with the emitted
/// script on standard input and parses the answer. The child is killed
/// once job.timeout_seconds have elapsed. Every sat model is substituted
/// into every equation; a model that fails this check raises MalformedModel.
SolveOutcome run_smt(const SmtJob& job, const std::string& solver_command);

/// True when `model` binds all unknowns and zeroes every equation.
bool model_satisfies(const PolynomialSystem& system, const Assignment& model, std::string* failure = nullptr);

}  // namespace loopforge
