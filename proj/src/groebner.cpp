#include "loopforge/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "groebner_engine.hpp"
#include "loopforge/deadline.hpp"
#include "loopforge/error.hpp"

namespace loopforge {

namespace {

// Feeds generators smallest-leading-monomial first; the result does not
// depend on the input order but the work done does.
void add_sorted(detail::Engine& engine, std::vector<detail::GbPoly> polys) {
  const std::size_t n = engine.nvars();
  std::stable_sort(polys.begin(), polys.end(), [&](const detail::GbPoly& a, const detail::GbPoly& b) {
    int c = engine.order().compare(a.exps.data(), b.exps.data(), n);
    return c < 0 || (c == 0 && a.size() < b.size());
  });
  for (auto& p : polys) engine.add(std::move(p));
}

std::unique_ptr<detail::Engine> reseeded(const detail::Engine& engine) {
  auto fresh = std::make_unique<detail::Engine>(engine.nvars(), engine.order());
  fresh->seed(engine.reduced_basis());
  return fresh;
}

}  // namespace

bool GroebnerBasis::is_unit() const { return gens_.size() == 1 && gens_.front().is_constant(); }

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  if (!same_context(p.context(), ctx_)) throw ContextMismatch();
  if (p.is_zero() || gens_.empty()) return p;
  Rational scale, factor;
  detail::GbPoly q = engine_->import(p, &scale);
  detail::GbPoly r = engine_->normal_form(std::move(q), &factor);
  return engine_->export_scaled(r, scale * factor, ctx_);
}

bool GroebnerBasis::contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

GroebnerBasis buchberger(const ContextPtr& ctx, const PolynomialSeq& gens, const MonomialOrder& order) {
  GroebnerBasis G(ctx, order);
  G.source_ = gens;
  detail::Engine engine(ctx->size(), order);
  std::vector<detail::GbPoly> input;
  for (const auto& p : gens) {
    if (!same_context(p.context(), ctx)) throw ContextMismatch();
    if (!p.is_zero()) input.push_back(engine.import(p));
  }
  add_sorted(engine, std::move(input));
  engine.run();
  std::shared_ptr<detail::Engine> final_engine = reseeded(engine);
  for (std::size_t idx : final_engine->basis_indices())
    G.gens_.push_back(final_engine->export_monic(final_engine->poly(idx), ctx));
  G.engine_ = std::move(final_engine);
  return G;
}

GroebnerBasis buchberger(const PolynomialSeq& gens, const MonomialOrder& order) {
  if (gens.empty()) throw Error("buchberger: empty generator list needs an explicit context");
  return buchberger(gens.front().context(), gens, order);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) { return G.normal_form(p); }

namespace {

// True when 1 lies in <basis of `base`, 1 - t*r>, t being the last variable.
bool rabinowitsch_unit(const detail::Engine& base, const detail::GbPoly& r) {
  const std::size_t n = base.nvars();
  detail::GbPoly rab;
  for (std::size_t k = 0; k < r.size(); ++k) {
    rab.exps.insert(rab.exps.end(), r.exps.begin() + k * n, r.exps.begin() + (k + 1) * n);
    rab.exps.back() += 1;
    rab.coeffs.emplace_back(-r.coeffs[k]);
  }
  rab.exps.resize(rab.exps.size() + n, 0);
  rab.coeffs.emplace_back(1);
  rab.sugar = r.sugar + 1;
  detail::Engine trial = base;
  trial.add(std::move(rab));
  trial.run();
  return trial.unit();
}

}  // namespace

// Image of the ideal under x_v -> value for every non-program variable v,
// living in (program variables, t).
struct RadicalOracle::Specialization {
  std::map<std::size_t, Rational> values;
  ContextPtr small;
  std::vector<std::size_t> index_map;  // ctx index -> small index (unused for specialized ones)
  std::unique_ptr<detail::Engine> engine;
  bool useful = true;  // false once the specialized ideal is the unit ideal

  detail::GbPoly image(const Polynomial& p) const {
    return engine->import(p.substitute_indices(values).remap(small, index_map));
  }
};

RadicalOracle::RadicalOracle(const ContextPtr& ctx, const PolynomialSeq& S)
    : ctx_(ctx),
      ext_(ctx->extended({{ctx->fresh_name("t"), VarClass::Auxiliary}})),
      engine_(std::make_unique<detail::Engine>(ext_->size(), MonomialOrder::grevlex())) {
  std::vector<std::size_t> program = ctx->indices_of(VarClass::Program);
  if (!program.empty() && program.size() < ctx->size()) {
    special_ = std::make_unique<Specialization>();
    std::vector<std::size_t> keep = program;
    std::vector<VarContext::Var> vars;
    for (std::size_t v : program) vars.push_back(ctx->vars()[v]);
    vars.push_back(ext_->vars().back());
    special_->small = VarContext::create(std::move(vars));
    special_->index_map.assign(ctx->size(), ctx->size());
    for (std::size_t k = 0; k < program.size(); ++k) special_->index_map[program[k]] = k;
    // Fixed seed: answers never depend on it, only the work done does.
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(1, 29);
    for (std::size_t v = 0; v < ctx->size(); ++v)
      if (ctx->var_class(v) != VarClass::Program) special_->values[v] = Rational(pick(rng) * (rng() & 1 ? 1 : -1));
    special_->engine = std::make_unique<detail::Engine>(special_->small->size(), MonomialOrder::grevlex());
  }
  extend(S);
}

RadicalOracle::~RadicalOracle() = default;
RadicalOracle::RadicalOracle(RadicalOracle&&) noexcept = default;
RadicalOracle& RadicalOracle::operator=(RadicalOracle&&) noexcept = default;

void RadicalOracle::extend(const PolynomialSeq& more) {
  std::vector<detail::GbPoly> input;
  for (const auto& p : more) {
    if (!same_context(p.context(), ctx_)) throw ContextMismatch();
    if (!p.is_zero()) input.push_back(engine_->import(p.embed(ext_)));
  }
  if (input.empty()) return;
  add_sorted(*engine_, std::move(input));
  engine_->run();
  engine_ = reseeded(*engine_);
  if (special_ && special_->useful) {
    std::vector<detail::GbPoly> images;
    for (const auto& p : more) {
      detail::GbPoly q = special_->image(p);
      if (!q.empty()) images.push_back(std::move(q));
    }
    add_sorted(*special_->engine, std::move(images));
    special_->engine->run();
    special_->engine = reseeded(*special_->engine);
    if (special_->engine->unit()) special_->useful = false;
  }
}

bool RadicalOracle::trivial() const { return engine_->unit(); }

bool RadicalOracle::contains(const Polynomial& p) const {
  if (!same_context(p.context(), ctx_)) throw ContextMismatch();
  if (p.is_zero() || trivial()) return true;
  detail::GbPoly r = engine_->normal_form(engine_->import(p.embed(ext_)));
  if (r.empty()) return true;
  if (special_ && special_->useful) {
    detail::GbPoly q = special_->engine->normal_form(special_->image(p));
    if (!q.empty() && !rabinowitsch_unit(*special_->engine, q)) {
      ++specialized_rejections_;
      return false;
    }
  }
  // p and its remainder differ by an element of <S>, so 1 - t*r works as well.
  ++full_checks_;
  return rabinowitsch_unit(*engine_, r);
}

bool RadicalOracle::contains_all(std::span<const Polynomial> ps) const {
  return std::all_of(ps.begin(), ps.end(), [&](const Polynomial& p) { return contains(p); });
}

bool in_radical(const ContextPtr& ctx, const PolynomialSeq& polys, const PolynomialSeq& S) {
  if (polys.empty()) return true;
  return RadicalOracle(ctx, S).contains_all(polys);
}

bool in_radical(const PolynomialSeq& polys, const PolynomialSeq& S) {
  if (polys.empty()) return true;
  return in_radical(polys.front().context(), polys, S);
}

namespace {

std::vector<std::vector<Exponent>> leading_rows(const GroebnerBasis& G) {
  std::vector<std::vector<Exponent>> out;
  for (const auto& g : G.generators()) {
    auto e = g.exponents(G.order().leading_index(g));
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

}  // namespace

bool is_zero_dimensional(const GroebnerBasis& G) {
  if (G.is_unit()) return true;
  const std::size_t n = G.context()->size();
  std::vector<bool> pure(n, false);
  for (const auto& lm : leading_rows(G)) {
    std::size_t nonzero = 0, var = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (lm[v]) ++nonzero, var = v;
    if (nonzero == 1) pure[var] = true;
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

std::optional<std::uint64_t> solution_count(const GroebnerBasis& G) {
  if (G.is_unit()) return 0;
  if (!is_zero_dimensional(G)) return std::nullopt;
  const std::size_t n = G.context()->size();
  const auto lms = leading_rows(G);
  std::vector<Exponent> bound(n, 0);
  for (const auto& lm : lms)
    for (std::size_t v = 0; v < n; ++v) {
      bool is_pure = true;
      for (std::size_t u = 0; u < n; ++u)
        if (u != v && lm[u]) is_pure = false;
      if (is_pure && lm[v] && (bound[v] == 0 || lm[v] < bound[v])) bound[v] = lm[v];
    }
  std::vector<Exponent> e(n, 0);
  auto standard = [&] {
    for (const auto& lm : lms) {
      bool div = true;
      for (std::size_t v = 0; v < n && div; ++v) div = lm[v] <= e[v];
      if (div) return false;
    }
    return true;
  };
  std::uint64_t count = 0;
  // Standard monomials form an order ideal, so a non-standard prefix prunes its subtree.
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == n) {
      ++count;
      if ((count & 1023) == 0) check_deadline();
      return;
    }
    for (Exponent k = 0; k < bound[v]; ++k) {
      e[v] = k;
      if (!standard()) break;
      walk(v + 1);
    }
    e[v] = 0;
  };
  walk(0);
  return count;
}

PolynomialSeq elimination_ideal(const ContextPtr& ctx, const PolynomialSeq& gens, std::size_t keep_last_k) {
  const std::size_t n = ctx->size();
  if (keep_last_k > n) throw Error("elimination_ideal: more variables kept than exist");
  const std::size_t front = n - keep_last_k;
  GroebnerBasis G = buchberger(ctx, gens, MonomialOrder::block(front));
  PolynomialSeq out;
  for (const auto& g : G.generators()) {
    bool free = true;
    for (std::size_t v = 0; v < front && free; ++v) free = !g.depends_on(v);
    if (free) out.push_back(g);
  }
  return out;
}

PolynomialSeq eliminate(const ContextPtr& ctx, const PolynomialSeq& gens, const std::vector<std::size_t>& vars) {
  const std::size_t n = ctx->size();
  std::vector<bool> drop(n, false);
  for (std::size_t v : vars) drop.at(v) = true;
  std::vector<std::size_t> perm;
  for (std::size_t v = 0; v < n; ++v)
    if (drop[v]) perm.push_back(v);
  const std::size_t front = perm.size();
  for (std::size_t v = 0; v < n; ++v)
    if (!drop[v]) perm.push_back(v);
  ContextPtr reordered = ctx->restricted(perm);
  std::vector<std::size_t> to_new(n), to_old(n);
  for (std::size_t k = 0; k < n; ++k) {
    to_new[perm[k]] = k;
    to_old[k] = perm[k];
  }
  PolynomialSeq moved;
  for (const auto& g : gens) moved.push_back(g.remap(reordered, to_new));
  PolynomialSeq out;
  for (const auto& g : elimination_ideal(reordered, moved, n - front)) out.push_back(g.remap(ctx, to_old).monic());
  return out;
}

}  // namespace loopforge
