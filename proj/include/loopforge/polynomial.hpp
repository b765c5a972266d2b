#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loopforge/rational.hpp"
#include "loopforge/var_context.hpp"

namespace loopforge {

using Exponent = std::uint32_t;

/// Sparse power product: (variable index, positive exponent) pairs sorted by index.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<std::size_t, Exponent>> powers);
  static Monomial from_dense(std::span<const Exponent> exponents);

  const std::vector<std::pair<std::size_t, Exponent>>& powers() const { return powers_; }
  Exponent exponent(std::size_t var) const;
  unsigned total_degree() const;
  bool is_one() const { return powers_.empty(); }
  std::vector<Exponent> dense(std::size_t nvars) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<std::size_t, Exponent>> powers_;
};

/// Exact multivariate polynomial over the rationals in a fixed variable
/// context. Terms are stored densely (one exponent row per term), sorted
/// strictly decreasing in graded reverse lexicographic order, with no zero
/// coefficients, so equal polynomials have identical storage.
class Polynomial {
 public:
  explicit Polynomial(ContextPtr ctx);

  static Polynomial constant(ContextPtr ctx, const Rational& value);
  static Polynomial variable(ContextPtr ctx, std::size_t index);
  static Polynomial variable(ContextPtr ctx, std::string_view name);
  static Polynomial term(ContextPtr ctx, const Monomial& m, const Rational& coeff);
  /// Builds a canonical polynomial from unsorted terms; `exponents` holds
  /// one row of ctx->size() entries per coefficient. Like terms are merged.
  static Polynomial from_terms(ContextPtr ctx, std::vector<Exponent> exponents,
                               std::vector<Rational> coeffs);

  const ContextPtr& context() const { return ctx_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;

  std::span<const Exponent> exponents(std::size_t term) const {
    return {exps_.data() + term * nvars_, nvars_};
  }
  const Rational& coefficient(std::size_t term) const { return coeffs_[term]; }
  Monomial monomial(std::size_t term) const;
  Rational coefficient_of(const Monomial& m) const;
  Rational constant_term() const;
  /// Leading coefficient in grevlex; zero for the zero polynomial.
  Rational leading_coefficient() const;

  unsigned total_degree() const;
  Exponent degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const;
  std::vector<std::size_t> support() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  Polynomial primitive() const;

  /// Full evaluation; `point` has one value per context variable.
  Rational evaluate(std::span<const Rational> point) const;
  /// Partial evaluation by variable name. The result lives in the context
  /// obtained by dropping the bound variables.
  Polynomial substitute(const std::map<std::string, Rational>& bindings) const;
  /// Partial evaluation by index, keeping the current context.
  Polynomial substitute_indices(const std::map<std::size_t, Rational>& bindings) const;
  /// Moves the polynomial to `target`; variable i becomes target variable
  /// index_map[i]. Variables that occur must be mapped.
  Polynomial remap(ContextPtr target, std::span<const std::size_t> index_map) const;
  /// Remap by variable name; every occurring variable must exist in `target`.
  Polynomial embed(ContextPtr target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void require_same_context(const Polynomial& other) const;
  Polynomial add_scaled(const Polynomial& other, bool negate) const;

  ContextPtr ctx_;
  std::size_t nvars_;
  std::vector<Exponent> exps_;
  std::vector<Rational> coeffs_;
};

using PolynomialSeq = std::vector<Polynomial>;

/// Graded reverse lexicographic comparison of two exponent rows:
/// negative when a < b, zero when equal, positive when a > b.
int grevlex_compare(const Exponent* a, const Exponent* b, std::size_t n);

/// One x-monomial together with its coefficient in the remaining variables.
struct CoefficientEntry {
  Monomial monomial;
  Polynomial coefficient;
};

/// Views p as a polynomial in `vars` with coefficients in the other
/// variables and returns the nonzero coefficients, ordered by decreasing
/// x-monomial in grevlex. A polynomial free of `vars` yields itself.
std::vector<CoefficientEntry> coefficients_wrt(const Polynomial& p,
                                               std::span<const std::size_t> vars);

/// True when q = c * p for some nonzero rational c.
bool proportional(const Polynomial& p, const Polynomial& q);

}  // namespace loopforge
