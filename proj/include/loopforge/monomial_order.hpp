#pragma once

#include <cstddef>
#include <string>

#include "loopforge/polynomial.hpp"

namespace loopforge {

/// Admissible monomial orders. Variable 0 is the largest variable.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Lex on the first `front` variables, ties broken by grevlex on the rest.
  /// An elimination order for the front block.
  static MonomialOrder block(std::size_t front) { return MonomialOrder(Kind::Block, front); }

  Kind kind() const { return kind_; }
  std::size_t front() const { return front_; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Exponent* a, const Exponent* b, std::size_t n) const;

  /// Index of the leading term of p under this order (p nonzero).
  std::size_t leading_index(const Polynomial& p) const;
  Monomial leading_monomial(const Polynomial& p) const;
  Rational leading_coefficient(const Polynomial& p) const;

  std::string to_string() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t front) : kind_(kind), front_(front) {}
  Kind kind_;
  std::size_t front_;
};

}  // namespace loopforge
