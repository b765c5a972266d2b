#include "loopforge/poly_map.hpp"

#include "loopforge/deadline.hpp"
#include "loopforge/error.hpp"

namespace loopforge {

PolyMap::PolyMap(ContextPtr ctx, std::vector<Polynomial> components)
    : ctx_(std::move(ctx)), images_(ctx_->size()) {
  auto program = ctx_->indices_of(VarClass::Program);
  if (components.size() != program.size())
    throw Error("polynomial map needs one component per program variable (" +
                std::to_string(program.size()) + "), got " + std::to_string(components.size()));
  for (std::size_t k = 0; k < program.size(); ++k) {
    if (!same_context(components[k].context(), ctx_)) throw ContextMismatch();
    images_[program[k]] = std::move(components[k]);
  }
}

PolyMap PolyMap::identity(ContextPtr ctx) {
  std::vector<Polynomial> comps;
  for (std::size_t v : ctx->indices_of(VarClass::Program)) comps.push_back(Polynomial::variable(ctx, v));
  return PolyMap(ctx, std::move(comps));
}

PolyMap PolyMap::with_image(std::size_t var, Polynomial image) const {
  if (!same_context(image.context(), ctx_)) throw ContextMismatch();
  PolyMap copy = *this;
  copy.images_.at(var) = std::move(image);
  return copy;
}

std::vector<Polynomial> PolyMap::components() const {
  std::vector<Polynomial> out;
  for (std::size_t v : ctx_->indices_of(VarClass::Program)) out.push_back(*images_[v]);
  return out;
}

Polynomial PolyMap::apply(const Polynomial& g) const {
  if (!same_context(g.context(), ctx_)) throw ContextMismatch();
  const std::size_t n = ctx_->size();
  // powers[v][e] = image_v^e, filled on demand.
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t v, Exponent e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(ctx_, 1));
    while (cache.size() <= e) {
      check_deadline();
      cache.push_back(cache.back() * *images_[v]);
    }
    return cache[e];
  };
  std::vector<Exponent> rows;
  std::vector<Rational> coeffs;
  for (std::size_t t = 0; t < g.size(); ++t) {
    auto e = g.exponents(t);
    std::vector<Exponent> fixed(e.begin(), e.end());
    Polynomial product = Polynomial::constant(ctx_, g.coefficient(t));
    for (std::size_t v = 0; v < n; ++v) {
      if (e[v] == 0 || !images_[v]) continue;
      fixed[v] = 0;
      product = product * power(v, e[v]);
    }
    for (std::size_t k = 0; k < product.size(); ++k) {
      auto pe = product.exponents(k);
      for (std::size_t v = 0; v < n; ++v) rows.push_back(pe[v] + fixed[v]);
      coeffs.push_back(product.coefficient(k));
    }
  }
  return Polynomial::from_terms(ctx_, std::move(rows), std::move(coeffs));
}

std::vector<Rational> PolyMap::apply_to_point(std::span<const Rational> point) const {
  if (point.size() != ctx_->size()) throw Error("apply_to_point: dimension mismatch");
  std::vector<Rational> out(point.begin(), point.end());
  for (std::size_t v = 0; v < images_.size(); ++v)
    if (images_[v]) out[v] = images_[v]->evaluate(point);
  return out;
}

PolyMap PolyMap::then(const PolyMap& first, const PolyMap& second) {
  if (!same_context(first.ctx_, second.ctx_)) throw ContextMismatch();
  PolyMap out = first;
  for (std::size_t v = 0; v < out.images_.size(); ++v)
    if (second.images_[v]) out.images_[v] = first.apply(*second.images_[v]);
  return out;
}

std::string PolyMap::to_string() const {
  std::string s = "(";
  bool first = true;
  for (std::size_t v = 0; v < images_.size(); ++v) {
    if (!images_[v]) continue;
    if (!first) s += ", ";
    s += images_[v]->to_string();
    first = false;
  }
  return s + ")";
}

PolynomialSeq compose(std::span<const Polynomial> g, const PolyMap& F) {
  PolynomialSeq out;
  out.reserve(g.size());
  for (const auto& p : g) out.push_back(F.apply(p));
  return out;
}

}  // namespace loopforge
