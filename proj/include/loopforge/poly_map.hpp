#pragma once

#include <optional>
#include <span>
#include <vector>

#include "loopforge/polynomial.hpp"

namespace loopforge {

/// Polynomial self-map of a context. Every program-class variable has an
/// image; other variables may optionally be given one (the guard flag z of
/// an extended map is updated to z*h). Variables without an image are
/// mapped to themselves, so coefficient unknowns pass through unchanged.
class PolyMap {
 public:
  /// `components` lists the images of the program variables in context order.
  PolyMap(ContextPtr ctx, std::vector<Polynomial> components);
  static PolyMap identity(ContextPtr ctx);

  /// Copy with an explicit image for a non-program variable.
  PolyMap with_image(std::size_t var, Polynomial image) const;

  const ContextPtr& context() const { return ctx_; }
  /// Images of the program variables, in context order.
  std::vector<Polynomial> components() const;
  const std::optional<Polynomial>& image(std::size_t var) const { return images_.at(var); }

  /// g(F(x)): substitutes the image of every mapped variable.
  Polynomial apply(const Polynomial& g) const;
  /// Image of a concrete point (one value per context variable).
  std::vector<Rational> apply_to_point(std::span<const Rational> point) const;

  /// Composite map x -> second(first(x)); both maps share one context.
  static PolyMap then(const PolyMap& first, const PolyMap& second);

  std::string to_string() const;

 private:
  ContextPtr ctx_;
  std::vector<std::optional<Polynomial>> images_;
};

/// (g_1(F(x)), ..., g_m(F(x))).
PolynomialSeq compose(std::span<const Polynomial> g, const PolyMap& F);

}  // namespace loopforge
