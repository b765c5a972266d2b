#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "loopforge/monomial_order.hpp"
#include "loopforge/polynomial.hpp"

namespace loopforge {

namespace detail {
class Engine;
}

/// Reduced Gröbner basis of an ideal of Q[ctx] under a fixed order.
class GroebnerBasis {
 public:
  const ContextPtr& context() const { return ctx_; }
  const MonomialOrder& order() const { return order_; }
  /// Reduced, monic, sorted by increasing leading monomial.
  const PolynomialSeq& generators() const { return gens_; }
  const PolynomialSeq& source_generators() const { return source_; }
  /// True when the ideal is all of Q[ctx].
  bool is_unit() const;
  bool is_zero_ideal() const { return gens_.empty(); }

  /// Remainder of p on division by the basis.
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const;

 private:
  friend GroebnerBasis buchberger(const ContextPtr&, const PolynomialSeq&, const MonomialOrder&);
  friend class RadicalOracle;
  GroebnerBasis(ContextPtr ctx, MonomialOrder order) : ctx_(std::move(ctx)), order_(order) {}

  ContextPtr ctx_;
  MonomialOrder order_;
  PolynomialSeq gens_;
  PolynomialSeq source_;
  std::shared_ptr<const detail::Engine> engine_;
};

/// Reduced Gröbner basis of <gens>. The context is taken from the
/// generators; the first overload accepts an empty list.
GroebnerBasis buchberger(const ContextPtr& ctx, const PolynomialSeq& gens,
                         const MonomialOrder& order = MonomialOrder::grevlex());
GroebnerBasis buchberger(const PolynomialSeq& gens, const MonomialOrder& order = MonomialOrder::grevlex());

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);

/// Answers radical-membership queries against a fixed ideal <S> using the
/// Rabinowitsch construction: p lies in the radical iff 1 belongs to
/// <S, 1 - t*p> for a fresh variable t ordered last. The basis of <S> is
/// computed once and reused; p already in <S> is answered without a new
/// basis computation.
///
/// When the context mixes program variables with other classes, a negative
/// answer is first sought after substituting fixed random values for the
/// non-program variables: substitution is a ring homomorphism, so p outside
/// the radical of the specialized ideal is outside the radical of <S>.
class RadicalOracle {
 public:
  RadicalOracle(const ContextPtr& ctx, const PolynomialSeq& S);
  ~RadicalOracle();
  RadicalOracle(RadicalOracle&&) noexcept;
  RadicalOracle& operator=(RadicalOracle&&) noexcept;

  bool contains(const Polynomial& p) const;
  bool contains_all(std::span<const Polynomial> ps) const;
  /// Enlarges S; the basis is updated incrementally.
  void extend(const PolynomialSeq& more);
  /// The ideal <S> is the whole ring (the variety is empty).
  bool trivial() const;
  /// Number of Rabinowitsch basis computations performed so far.
  std::size_t full_checks() const { return full_checks_; }
  /// Negative answers certified by the specialized ideal alone.
  std::size_t specialized_rejections() const { return specialized_rejections_; }

 private:
  ContextPtr ctx_;
  ContextPtr ext_;
  std::unique_ptr<detail::Engine> engine_;
  mutable std::size_t full_checks_ = 0;
  mutable std::size_t specialized_rejections_ = 0;

  struct Specialization;
  std::unique_ptr<Specialization> special_;
};

/// True iff every p in `polys` lies in the radical of <S>.
bool in_radical(const PolynomialSeq& polys, const PolynomialSeq& S);
bool in_radical(const ContextPtr& ctx, const PolynomialSeq& polys, const PolynomialSeq& S);

/// Every variable has a pure power among the leading monomials (this
/// includes the unit ideal, whose variety is empty).
bool is_zero_dimensional(const GroebnerBasis& G);

/// Dimension of Q[ctx]/I as a vector space (number of standard monomials,
/// counting multiplicity); nullopt when infinite.
std::optional<std::uint64_t> solution_count(const GroebnerBasis& G);

/// Generators of <gens> ∩ Q[last k variables], obtained from a block-order
/// basis; the result lives in the input context.
PolynomialSeq elimination_ideal(const ContextPtr& ctx, const PolynomialSeq& gens, std::size_t keep_last_k);
/// Eliminates the named variable indices, whatever their position.
PolynomialSeq eliminate(const ContextPtr& ctx, const PolynomialSeq& gens, const std::vector<std::size_t>& vars);

}  // namespace loopforge
