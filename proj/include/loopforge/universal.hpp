#pragma once

#include <vector>

#include "loopforge/linear.hpp"
#include "loopforge/synth.hpp"

namespace loopforge {

/// Equations in the template unknowns saying g_i∘F_j = g_i for every
/// invariant and branch: the x-monomial coefficients of g_i∘F_j - g_i,
/// deduplicated up to nonzero scalar multiples. No Gröbner bases involved.
PolynomialSystem compute_loops_universal(const ContextPtr& program, const PolynomialSeq& g,
                                         const LoopTemplate& templ);

/// Affine solution set v + span(basis) in the template unknowns.
struct AffineSpace {
  ContextPtr unknowns;
  std::size_t ambient_dim = 0;
  /// False when the linear system has no solution at all ("no loop with this
  /// structure"); distinct from a feasible space with an empty basis.
  bool feasible = false;
  RationalVector particular;
  std::vector<RationalVector> basis;
  PolynomialSystem system;

  std::size_t dimension() const { return basis.size(); }
  /// True when x = particular + combination of basis vectors.
  bool contains(const RationalVector& x) const;
  std::string to_string() const;
};

/// For affine invariants the universal system is linear; solves it exactly.
AffineSpace compute_loops_linear_universal(const ContextPtr& program, const PolynomialSeq& g,
                                           const LoopTemplate& templ);

}  // namespace loopforge
