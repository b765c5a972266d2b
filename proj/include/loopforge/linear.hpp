#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "loopforge/polynomial.hpp"

namespace loopforge {

using RationalVector = std::vector<Rational>;

/// Solution set of a linear system in reduced row echelon form.
struct LinearSolution {
  bool feasible = false;
  /// Free variables set to zero. Empty when infeasible.
  RationalVector particular;
  /// One vector per free column: that variable 1, the other free ones 0.
  std::vector<RationalVector> nullspace;
  std::vector<std::size_t> pivots;
};

/// Exact fraction-free (Bareiss) elimination of the system eqs = 0, where
/// every equation has total degree <= 1 in the variables of `ctx`. Pivots
/// are taken leftmost, so the output is canonical for the context order.
LinearSolution solve_linear_system(const ContextPtr& ctx, const PolynomialSeq& eqs);

/// Particular solution, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve_linear(const ContextPtr& ctx, const PolynomialSeq& eqs);
/// Basis of the solution space of the homogeneous part.
std::vector<RationalVector> nullspace_basis(const ContextPtr& ctx, const PolynomialSeq& eqs);

/// Rank of a list of vectors of equal length.
std::size_t rank_of(const std::vector<RationalVector>& vectors);

}  // namespace loopforge
