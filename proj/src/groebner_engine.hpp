#pragma once

// Buchberger engine over primitive integer polynomials. Internal to the
// library; the public surface is loopforge/groebner.hpp.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "loopforge/monomial_order.hpp"
#include "loopforge/polynomial.hpp"

namespace loopforge::detail {

/// Terms sorted strictly decreasing in the engine order.
struct GbPoly {
  std::vector<Exponent> exps;
  std::vector<Integer> coeffs;
  unsigned sugar = 0;

  std::size_t size() const { return coeffs.size(); }
  bool empty() const { return coeffs.empty(); }
};

class Engine {
 public:
  Engine(std::size_t nvars, MonomialOrder order);

  std::size_t nvars() const { return n_; }
  const MonomialOrder& order() const { return order_; }

  /// Primitive integer image of p; `scale` (if given) receives s with result = s*p.
  GbPoly import(const Polynomial& p, Rational* scale = nullptr) const;
  /// Monic rational polynomial in `ctx` (which must have nvars() variables).
  Polynomial export_monic(const GbPoly& p, const ContextPtr& ctx) const;
  /// p / divisor as a rational polynomial in `ctx`.
  Polynomial export_scaled(const GbPoly& p, const Rational& divisor, const ContextPtr& ctx) const;

  /// Installs polynomials already known to form a reduced Gröbner basis;
  /// no S-pairs among them are generated.
  void seed(std::vector<GbPoly> basis);
  /// Reduces p against the current basis and, if nonzero, inserts it with
  /// the Gebauer–Möller pair update.
  void add(GbPoly p);
  /// Processes S-pairs until none remain or the unit ideal is detected.
  void run();

  bool unit() const { return unit_; }
  /// Interreduced basis, primitive, sorted by increasing leading monomial.
  std::vector<GbPoly> reduced_basis() const;
  /// Full normal form w.r.t. the current basis (primitive, sign-normalized).
  /// `factor` (if given) receives f with result = f * (true remainder of p).
  GbPoly normal_form(GbPoly p, Rational* factor = nullptr) const;
  const std::vector<std::size_t>& basis_indices() const { return basis_; }
  const GbPoly& poly(std::size_t idx) const { return polys_[idx]; }

 private:
  struct Pair {
    std::size_t i, j;
    std::vector<Exponent> lcm;
    unsigned lcm_degree;
    unsigned sugar;
  };

  const Exponent* row(const GbPoly& p, std::size_t t) const { return p.exps.data() + t * n_; }
  int cmp(const Exponent* a, const Exponent* b) const { return order_.compare(a, b, n_); }
  std::uint64_t mask(const Exponent* r) const;
  bool divides(const Exponent* a, const Exponent* b) const;
  unsigned degree(const Exponent* r) const;
  void sort_terms(GbPoly& p) const;
  /// Divides out the content and fixes the sign; returns the divisor used.
  Integer make_primitive(GbPoly& p) const;
  bool is_constant(const GbPoly& p) const;

  /// Index of a basis element whose leading monomial divides `m`, or -1.
  long find_divisor(const Exponent* m, std::uint64_t m_mask, long skip) const;
  GbPoly reduce(GbPoly p, long skip, Rational* factor = nullptr) const;
  GbPoly spoly(const Pair& pr) const;
  void insert(GbPoly h);

  std::size_t n_;
  MonomialOrder order_;
  std::vector<GbPoly> polys_;
  std::vector<std::uint64_t> lead_masks_;
  std::vector<std::size_t> basis_;  // indices into polys_
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

}  // namespace loopforge::detail
