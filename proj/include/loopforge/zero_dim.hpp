#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loopforge/error.hpp"
#include "loopforge/linear.hpp"
#include "loopforge/synth.hpp"

namespace loopforge {

enum class Finiteness { Empty, Finite, Infinite };

struct FinitenessReport {
  Finiteness kind = Finiteness::Infinite;
  /// Points counted with multiplicity; meaningful only for Finite.
  std::uint64_t count = 0;
  std::string to_string() const;
};

FinitenessReport classify_finiteness(const ContextPtr& ctx, const PolynomialSeq& eqs);
FinitenessReport classify_finiteness(const PolynomialSystem& system);

class NotZeroDimensional : public Error {
 public:
  NotZeroDimensional() : Error("the system has infinitely many complex solutions; rational enumeration needs a finite variety") {}
};

class RootCapExceeded : public Error {
 public:
  explicit RootCapExceeded(const std::string& what) : Error(what) {}
};

inline constexpr std::uint64_t kDefaultRootCandidateCap = 1'000'000;

/// Rational roots of c[0] + c[1] t + ... + c[d] t^d, ascending, without
/// repetition. Candidates come from the rational-root theorem; more than
/// `cap` candidates, or a constant term that cannot be factored by trial
/// division, raises RootCapExceeded.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs,
                                     std::uint64_t cap = kDefaultRootCandidateCap);

/// All rational points of a zero-dimensional system, coordinates ordered as
/// in `ctx`, sorted lexicographically. Works by lex elimination down to a
/// univariate polynomial in the last variable, rational roots of that
/// polynomial, and back-substitution.
std::vector<RationalVector> solve_zero_dim_rational(const ContextPtr& ctx, const PolynomialSeq& eqs,
                                                    std::uint64_t cap = kDefaultRootCandidateCap);
std::vector<RationalVector> solve_zero_dim_rational(const PolynomialSystem& system,
                                                    std::uint64_t cap = kDefaultRootCandidateCap);

}  // namespace loopforge
