#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loopforge/problem_file.hpp"
#include "loopforge/smt_runner.hpp"
#include "loopforge/universal.hpp"
#include "loopforge/verify.hpp"
#include "loopforge/zero_dim.hpp"

namespace loopforge {

enum class Backend { Smt, ZeroDim };

struct PipelineOptions {
  /// Budget of each stage (generation, solving) in seconds.
  double timeout_seconds = 300;
  std::string solver_command = default_solver_command();
  NumberSort sort = NumberSort::Int;
  NonzeroPolicy nonzero = NonzeroPolicy::Any;
  Backend backend = Backend::Smt;
  std::size_t max_rounds = kDefaultMaxRounds;
  bool solve = true;
  bool finiteness = false;
  /// When the first loop found is the identity, ask for another one.
  std::size_t identity_retries = 3;
  std::size_t simulation_steps = 8;
  std::uint64_t word_limit = 256;
  std::uint64_t seed = 1;
};

/// Solver statuses use the benchmark vocabulary: sat, unsat, unknown, TL
/// (time limit), NI (no input: generation did not finish), Id (the identity
/// is the only loop), error, and "-" when solving was not requested.
struct PipelineResult {
  ProblemFile::Shape shape;
  ProblemMode mode = ProblemMode::General;
  std::string generation = "-";  // ok, TL, error
  double generation_time = 0;
  std::optional<PolynomialSystem> system;
  std::optional<AffineSpace> affine;
  std::string status = "-";
  double solve_time = 0;
  std::optional<FinitenessReport> finiteness;
  std::optional<Assignment> model;
  std::optional<ConcreteLoop> loop;
  std::vector<VerificationReport> checks;
  std::string verdict = "-";  // pass, fail, -
  std::string detail;

  bool verified() const { return verdict == "pass"; }
};

/// Generation, optional finiteness classification, solving and
/// verification of one problem. Concrete-loop files are only verified.
/// Errors inside a stage are recorded in the result, never thrown.
PipelineResult run_pipeline(const ProblemFile& file, const PipelineOptions& options);

/// Every applicable check for a concrete loop: the polynomial identity when
/// `universal`, invariant-set membership and simulation when an initial
/// value is known.
std::vector<VerificationReport> verify_loop(const ConcreteLoop& loop, const PolynomialSeq& g, bool universal,
                                            const PipelineOptions& options);

bool is_identity(const ConcreteLoop& loop);

}  // namespace loopforge
