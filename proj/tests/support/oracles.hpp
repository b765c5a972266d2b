#pragma once

// Reference implementations used to cross-check the library. They favour
// obviousness over speed and share no code with the engine under test.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "loopforge/monomial_order.hpp"
#include "loopforge/parse.hpp"
#include "loopforge/polynomial.hpp"

namespace oracle {

using loopforge::ContextPtr;
using loopforge::Exponent;
using loopforge::MonomialOrder;
using loopforge::Polynomial;
using loopforge::PolynomialSeq;
using loopforge::Rational;

inline Polynomial P(const std::string& text, const ContextPtr& ctx) { return loopforge::parse_poly(text, ctx); }

inline std::vector<Exponent> lead_row(const Polynomial& p, const MonomialOrder& order) {
  auto e = p.exponents(order.leading_index(p));
  return {e.begin(), e.end()};
}

inline Polynomial monomial_poly(const ContextPtr& ctx, const std::vector<Exponent>& e, const Rational& c) {
  return Polynomial::from_terms(ctx, e, {c});
}

/// Textbook multivariate division with rational coefficients; returns the remainder.
inline Polynomial divide(Polynomial p, const PolynomialSeq& G, const MonomialOrder& order) {
  const ContextPtr& ctx = p.context();
  const std::size_t n = ctx->size();
  Polynomial rem(ctx);
  while (!p.is_zero()) {
    auto lp = lead_row(p, order);
    Rational cp = order.leading_coefficient(p);
    bool divided = false;
    for (const auto& g : G) {
      if (g.is_zero()) continue;
      auto lg = lead_row(g, order);
      bool div = true;
      for (std::size_t v = 0; v < n && div; ++v) div = lg[v] <= lp[v];
      if (!div) continue;
      std::vector<Exponent> q(n);
      for (std::size_t v = 0; v < n; ++v) q[v] = lp[v] - lg[v];
      p -= monomial_poly(ctx, q, cp / order.leading_coefficient(g)) * g;
      divided = true;
      break;
    }
    if (!divided) {
      Polynomial lt = monomial_poly(ctx, lp, cp);
      rem += lt;
      p -= lt;
    }
  }
  return rem;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const ContextPtr& ctx = f.context();
  const std::size_t n = ctx->size();
  auto lf = lead_row(f, order), lg = lead_row(g, order);
  std::vector<Exponent> mf(n), mg(n);
  for (std::size_t v = 0; v < n; ++v) {
    Exponent l = std::max(lf[v], lg[v]);
    mf[v] = l - lf[v];
    mg[v] = l - lg[v];
  }
  return monomial_poly(ctx, mf, 1 / order.leading_coefficient(f)) * f -
         monomial_poly(ctx, mg, 1 / order.leading_coefficient(g)) * g;
}

/// Every S-polynomial of G reduces to zero modulo G.
inline bool buchberger_criterion(const PolynomialSeq& G, const MonomialOrder& order) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!divide(s_polynomial(G[i], G[j], order), G, order).is_zero()) return false;
  return true;
}

/// Reduced: monic, and no term of any element divisible by another's leading monomial.
inline bool is_reduced(const PolynomialSeq& G, const MonomialOrder& order) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (order.leading_coefficient(G[i]) != 1) return false;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      auto lj = lead_row(G[j], order);
      for (std::size_t t = 0; t < G[i].size(); ++t) {
        auto e = G[i].exponents(t);
        bool div = true;
        for (std::size_t v = 0; v < e.size() && div; ++v) div = lj[v] <= e[v];
        if (div) return false;
      }
    }
  }
  return true;
}

inline Rational random_rational(std::mt19937_64& rng, int num_range = 9, int den_range = 4) {
  std::uniform_int_distribution<int> num(-num_range, num_range), den(1, den_range);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n, int num_range = 1000) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_rational(rng, num_range, 97));
  return out;
}

inline Polynomial random_poly(const ContextPtr& ctx, std::mt19937_64& rng, std::size_t terms = 4,
                              Exponent max_exp = 2) {
  const std::size_t n = ctx->size();
  std::uniform_int_distribution<Exponent> exp(0, max_exp);
  std::vector<Exponent> rows;
  std::vector<Rational> coeffs;
  for (std::size_t t = 0; t < terms; ++t) {
    for (std::size_t v = 0; v < n; ++v) rows.push_back(exp(rng));
    coeffs.push_back(random_rational(rng));
  }
  return Polynomial::from_terms(ctx, std::move(rows), std::move(coeffs));
}

/// Evaluates by Horner-free brute force: sum of c * prod x_v^e_v.
inline Rational evaluate(const Polynomial& p, const std::vector<Rational>& x) {
  Rational s = 0;
  for (std::size_t t = 0; t < p.size(); ++t) {
    Rational m = p.coefficient(t);
    auto e = p.exponents(t);
    for (std::size_t v = 0; v < e.size(); ++v)
      for (Exponent k = 0; k < e[v]; ++k) m *= x[v];
    s += m;
  }
  return s;
}

/// prod_j (y_i - c_ij) for every variable i, with the roots kept per variable.
struct ProductSystem {
  PolynomialSeq eqs;
  std::vector<std::vector<Rational>> roots;  // with repetition
};

inline ProductSystem random_product(const ContextPtr& ctx, std::mt19937_64& rng, int max_roots = 3) {
  ProductSystem s;
  std::uniform_int_distribution<int> count(1, max_roots);
  for (std::size_t i = 0; i < ctx->size(); ++i) {
    Polynomial f = Polynomial::constant(ctx, 1);
    std::vector<Rational> r;
    for (int j = count(rng); j > 0; --j) {
      Rational c = random_rational(rng, 6, 3);
      r.push_back(c);
      f *= Polynomial::variable(ctx, i) - Polynomial::constant(ctx, c);
    }
    s.eqs.push_back(f);
    s.roots.push_back(r);
  }
  return s;
}

/// Sorted Cartesian product of the distinct roots of each variable.
inline std::vector<std::vector<Rational>> cartesian(const std::vector<std::vector<Rational>>& roots) {
  std::vector<std::vector<Rational>> out{{}};
  for (const auto& r : roots) {
    std::set<Rational> distinct(r.begin(), r.end());
    std::vector<std::vector<Rational>> next;
    for (const auto& prefix : out)
      for (const auto& c : distinct) {
        auto v = prefix;
        v.push_back(c);
        next.push_back(v);
      }
    out = next;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
