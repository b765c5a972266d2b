#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopforge/invariant.hpp"
#include "loopforge/poly_map.hpp"

namespace loopforge {

/// Update-map structure: branches[i][j] lists the generators whose unknown
/// linear combination becomes the new value of program variable j in
/// branch i. All generators live in the program context.
struct LoopTemplate {
  std::vector<std::vector<PolynomialSeq>> branches;
  /// Optional known part of each update: fixed[i][j] is added to the
  /// combination for x_j in branch i. Empty, or one entry per branch and variable.
  std::vector<PolynomialSeq> fixed;

  std::size_t branch_count() const { return branches.size(); }
  /// Total number of coefficient unknowns.
  std::size_t unknown_count() const;
  /// fixed[i][j] moved to `target` (zero when there is no known part).
  Polynomial fixed_part(std::size_t i, std::size_t j, const ContextPtr& target) const;
};

enum class GuardKind { None, Concrete, Template };

struct SynthesisProblem {
  ContextPtr program;  // program variables only
  PolynomialSeq invariants;
  GuardKind guard_kind = GuardKind::None;
  /// Concrete guard h (loop runs while h != 0); several inequations are multiplied into one.
  std::optional<Polynomial> guard;
  /// Guard template h_1..h_r; the guard becomes w_1*h_1 + ... + w_r*h_r.
  PolynomialSeq guard_template;
  std::optional<std::vector<Rational>> initial;
  LoopTemplate templ;

  /// Throws loopforge::Error describing the first inconsistency.
  void validate() const;
};

/// Names given to generated unknowns. They never clash with program variables.
struct UnknownNaming {
  std::string coefficient_prefix;  // y1, y2, ... numbered across branches, variables, generators
  std::string initial_prefix;      // a1..an when no initial value is given
  std::string guard_prefix;        // w1..wr for a guard template
  std::string guard_flag;          // z
  std::string coefficient(std::size_t k) const { return coefficient_prefix + std::to_string(k + 1); }
  std::string initial(std::size_t j) const { return initial_prefix + std::to_string(j + 1); }
  std::string guard_coeff(std::size_t q) const { return guard_prefix + std::to_string(q + 1); }
};
UnknownNaming naming_for(const ContextPtr& program);

struct ExtendedMaps {
  /// x, y, z, then w when the guard is a template.
  ContextPtr ctx;
  std::vector<PolyMap> maps;  // one per branch
  /// coefficient[i][j][l] = context index of the unknown multiplying generator l of x_j in branch i.
  std::vector<std::vector<std::vector<std::size_t>>> coefficient;
  std::size_t guard_flag = 0;
  std::vector<std::size_t> guard_coeffs;
  UnknownNaming naming;
};

/// The maps H_i(x, y, z[, w]) = (sum_l y_{i,j,l} f_{i,j,l}(x) for each j, y, z*h[, w]).
ExtendedMaps build_extended_maps(const SynthesisProblem& prob);

struct PolynomialSystem {
  /// Unknown variables: initial values (class Initial), coefficients, guard coefficients.
  ContextPtr unknowns;
  PolynomialSeq equations;
  /// provenance[k] describes equations[k]: for generated loops, the invariant
  /// seed and branch word of the polynomial it came from.
  std::vector<Origin> provenance;
  /// Unknown indices belonging to each branch's coefficients.
  std::vector<std::vector<std::size_t>> branch_unknowns;
  std::size_t rounds = 0;

  std::string to_string() const;
};

struct GenerateOptions {
  std::size_t max_rounds = kDefaultMaxRounds;
  /// Drop equations lying in the ideal of the remaining ones.
  bool interreduce = false;
};

/// Runs the invariant-set fixed point on (z*g) under the extended maps and
/// substitutes z = 1 (and x = a when an initial value is given). The common
/// zeros of the result are exactly the admissible unknown values.
PolynomialSystem generate_loops(const SynthesisProblem& prob, const GenerateOptions& options = {});

struct ConcreteLoop {
  ContextPtr program;
  std::optional<std::vector<Rational>> initial;
  Polynomial guard;  // constant 1 when unguarded
  std::vector<PolyMap> maps;

  std::string to_string() const;
};

using Assignment = std::map<std::string, Rational>;

/// Substitutes solved unknowns into the template. Unknowns absent from the
/// problem's system are an error only if the template needs them.
ConcreteLoop instantiate_loop(const SynthesisProblem& prob, const Assignment& solution);

/// Interreduction used by generate_loops: keeps equations not in the ideal of the others.
PolynomialSeq interreduce_system(const ContextPtr& ctx, const PolynomialSeq& eqs, std::vector<std::size_t>* kept = nullptr);

}  // namespace loopforge
