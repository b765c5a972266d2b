#include "groebner_engine.hpp"

#include <algorithm>
#include <numeric>

#include "loopforge/deadline.hpp"
#include "loopforge/error.hpp"

namespace loopforge::detail {

namespace {

// out = a * (shift_p . P[ps..]) + b * (shift_q . Q[qs..]); shifts may be null.
void combine(std::size_t n, const MonomialOrder& order, const GbPoly& P, std::size_t ps, const Integer& a,
             const Exponent* shift_p, const GbPoly& Q, std::size_t qs, const Integer& b,
             const Exponent* shift_q, GbPoly& out) {
  auto shifted = [n](const GbPoly& X, std::size_t from, const Exponent* shift) {
    std::vector<Exponent> rows(X.exps.begin() + from * n, X.exps.end());
    if (shift)
      for (std::size_t t = 0; t < rows.size(); t += n)
        for (std::size_t v = 0; v < n; ++v) rows[t + v] += shift[v];
    return rows;
  };
  std::vector<Exponent> pr = shifted(P, ps, shift_p);
  std::vector<Exponent> qr = shifted(Q, qs, shift_q);
  const std::size_t np = P.size() - ps, nq = Q.size() - qs;
  out.exps.clear();
  out.coeffs.clear();
  out.exps.reserve((np + nq) * n);
  out.coeffs.reserve(np + nq);
  const bool a_one = a == 1;
  std::size_t i = 0, j = 0;
  Integer c;
  while (i < np || j < nq) {
    int s;
    if (i == np)
      s = -1;
    else if (j == nq)
      s = 1;
    else
      s = order.compare(pr.data() + i * n, qr.data() + j * n, n);
    if (s > 0) {
      out.exps.insert(out.exps.end(), pr.begin() + i * n, pr.begin() + (i + 1) * n);
      if (a_one)
        out.coeffs.push_back(P.coeffs[ps + i]);
      else
        out.coeffs.emplace_back(a * P.coeffs[ps + i]);
      ++i;
    } else if (s < 0) {
      out.exps.insert(out.exps.end(), qr.begin() + j * n, qr.begin() + (j + 1) * n);
      out.coeffs.emplace_back(b * Q.coeffs[qs + j]);
      ++j;
    } else {
      mpz_mul(c.get_mpz_t(), a.get_mpz_t(), P.coeffs[ps + i].get_mpz_t());
      mpz_addmul(c.get_mpz_t(), b.get_mpz_t(), Q.coeffs[qs + j].get_mpz_t());
      if (c != 0) {
        out.exps.insert(out.exps.end(), pr.begin() + i * n, pr.begin() + (i + 1) * n);
        out.coeffs.push_back(c);
      }
      ++i;
      ++j;
    }
  }
}

}  // namespace

Engine::Engine(std::size_t nvars, MonomialOrder order) : n_(nvars), order_(order) {}

std::uint64_t Engine::mask(const Exponent* r) const {
  std::uint64_t m = 0;
  for (std::size_t v = 0; v < n_; ++v)
    if (r[v]) m |= std::uint64_t{1} << (v & 63);
  return m;
}

bool Engine::divides(const Exponent* a, const Exponent* b) const {
  for (std::size_t v = 0; v < n_; ++v)
    if (a[v] > b[v]) return false;
  return true;
}

unsigned Engine::degree(const Exponent* r) const {
  unsigned d = 0;
  for (std::size_t v = 0; v < n_; ++v) d += r[v];
  return d;
}

bool Engine::is_constant(const GbPoly& p) const {
  return p.size() == 1 && degree(row(p, 0)) == 0;
}

void Engine::sort_terms(GbPoly& p) const {
  std::vector<std::size_t> idx(p.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return cmp(row(p, a), row(p, b)) > 0; });
  GbPoly out;
  out.sugar = p.sugar;
  out.exps.reserve(p.exps.size());
  for (std::size_t k : idx) {
    out.exps.insert(out.exps.end(), row(p, k), row(p, k) + n_);
    out.coeffs.push_back(std::move(p.coeffs[k]));
  }
  p = std::move(out);
}

Integer Engine::make_primitive(GbPoly& p) const {
  if (p.empty()) return 1;
  Integer g = 0;
  for (const auto& c : p.coeffs) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.coeffs[0] < 0) g = -g;
  if (g != 1)
    for (auto& c : p.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return g;
}

GbPoly Engine::import(const Polynomial& p, Rational* scale) const {
  if (p.nvars() != n_) throw Error("Gröbner engine: variable count mismatch");
  GbPoly out;
  Integer den = 1;
  for (std::size_t t = 0; t < p.size(); ++t)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.coefficient(t).get_den_mpz_t());
  for (std::size_t t = 0; t < p.size(); ++t) {
    auto e = p.exponents(t);
    out.exps.insert(out.exps.end(), e.begin(), e.end());
    const Rational& c = p.coefficient(t);
    out.coeffs.emplace_back(c.get_num() * (den / c.get_den()));
    out.sugar = std::max(out.sugar, degree(e.data()));
  }
  if (order_.kind() != MonomialOrder::Kind::Grevlex) sort_terms(out);
  Integer g = make_primitive(out);
  if (scale) {
    *scale = Rational(den, g);
    scale->canonicalize();
  }
  return out;
}

Polynomial Engine::export_monic(const GbPoly& p, const ContextPtr& ctx) const {
  std::vector<Rational> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p.coeffs) {
    Rational q(c, p.coeffs[0]);
    q.canonicalize();
    coeffs.push_back(std::move(q));
  }
  return Polynomial::from_terms(ctx, p.exps, std::move(coeffs));
}

Polynomial Engine::export_scaled(const GbPoly& p, const Rational& divisor, const ContextPtr& ctx) const {
  std::vector<Rational> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p.coeffs) coeffs.push_back(Rational(c) / divisor);
  return Polynomial::from_terms(ctx, p.exps, std::move(coeffs));
}

long Engine::find_divisor(const Exponent* m, std::uint64_t m_mask, long skip) const {
  long best = -1;
  for (std::size_t idx : basis_) {
    if (static_cast<long>(idx) == skip) continue;
    if ((lead_masks_[idx] & ~m_mask) != 0) continue;
    if (!divides(row(polys_[idx], 0), m)) continue;
    if (best < 0 || polys_[idx].size() < polys_[static_cast<std::size_t>(best)].size()) best = static_cast<long>(idx);
  }
  return best;
}

GbPoly Engine::reduce(GbPoly p, long skip, Rational* factor) const {
  Rational mult = 1;
  GbPoly r;
  r.sugar = p.sugar;
  std::size_t head = 0;
  std::vector<Exponent> shift(n_);
  Integer g, a, b;
  GbPoly next;
  std::size_t steps = 0;
  while (head < p.size()) {
    const Exponent* lm = row(p, head);
    long d = find_divisor(lm, mask(lm), skip);
    if (d < 0) {
      r.exps.insert(r.exps.end(), lm, lm + n_);
      r.coeffs.push_back(std::move(p.coeffs[head]));
      ++head;
      continue;
    }
    if ((++steps & 7) == 0) check_deadline();
    const GbPoly& q = polys_[static_cast<std::size_t>(d)];
    const Exponent* qlm = row(q, 0);
    for (std::size_t v = 0; v < n_; ++v) shift[v] = lm[v] - qlm[v];
    mpz_gcd(g.get_mpz_t(), q.coeffs[0].get_mpz_t(), p.coeffs[head].get_mpz_t());
    mpz_divexact(a.get_mpz_t(), q.coeffs[0].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), p.coeffs[head].get_mpz_t(), g.get_mpz_t());
    b = -b;
    combine(n_, order_, p, head + 1, a, nullptr, q, 1, b, shift.data(), next);
    next.sugar = std::max(p.sugar, q.sugar + degree(shift.data()));
    if (a != 1) {
      for (auto& c : r.coeffs) c *= a;
      if (factor) mult *= a;
    }
    std::swap(p, next);
    head = 0;
    // Keep coefficient growth in check on long reductions.
    if ((steps & 31) == 0 && !p.empty()) {
      Integer content = 0;
      for (const auto& c : r.coeffs) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
      for (const auto& c : p.coeffs) {
        if (content == 1) break;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
      }
      if (content > 1) {
        for (auto& c : r.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
        for (auto& c : p.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
        if (factor) mult /= content;
      }
    }
  }
  r.sugar = std::max(r.sugar, p.sugar);
  Integer content_r = make_primitive(r);
  if (factor) *factor = mult / content_r;
  return r;
}

GbPoly Engine::normal_form(GbPoly p, Rational* factor) const { return reduce(std::move(p), -1, factor); }

GbPoly Engine::spoly(const Pair& pr) const {
  const GbPoly& f = polys_[pr.i];
  const GbPoly& h = polys_[pr.j];
  std::vector<Exponent> mf(n_), mh(n_);
  for (std::size_t v = 0; v < n_; ++v) {
    mf[v] = pr.lcm[v] - row(f, 0)[v];
    mh[v] = pr.lcm[v] - row(h, 0)[v];
  }
  Integer g, a, b;
  mpz_gcd(g.get_mpz_t(), f.coeffs[0].get_mpz_t(), h.coeffs[0].get_mpz_t());
  mpz_divexact(a.get_mpz_t(), h.coeffs[0].get_mpz_t(), g.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), f.coeffs[0].get_mpz_t(), g.get_mpz_t());
  b = -b;
  GbPoly s;
  combine(n_, order_, f, 1, a, mf.data(), h, 1, b, mh.data(), s);
  s.sugar = pr.sugar;
  return s;
}

void Engine::seed(std::vector<GbPoly> basis) {
  for (auto& p : basis) {
    if (p.empty()) continue;
    if (is_constant(p)) unit_ = true;
    polys_.push_back(std::move(p));
    lead_masks_.push_back(mask(row(polys_.back(), 0)));
    basis_.push_back(polys_.size() - 1);
  }
}

void Engine::add(GbPoly p) {
  if (unit_) return;
  p = reduce(std::move(p), -1);
  if (p.empty()) return;
  insert(std::move(p));
}

void Engine::insert(GbPoly h) {
  if (is_constant(h)) {
    unit_ = true;
    h.coeffs[0] = 1;
    polys_.push_back(std::move(h));
    lead_masks_.push_back(0);
    basis_.assign(1, polys_.size() - 1);
    pairs_.clear();
    return;
  }
  const std::size_t hi = polys_.size();
  polys_.push_back(std::move(h));
  const Exponent* hl = row(polys_[hi], 0);
  lead_masks_.push_back(mask(hl));

  auto lcm_of = [&](const Exponent* a, const Exponent* b) {
    std::vector<Exponent> l(n_);
    for (std::size_t v = 0; v < n_; ++v) l[v] = std::max(a[v], b[v]);
    return l;
  };
  auto coprime = [&](const Exponent* a, const Exponent* b) {
    for (std::size_t v = 0; v < n_; ++v)
      if (a[v] && b[v]) return false;
    return true;
  };

  std::vector<Pair> candidates;
  for (std::size_t g : basis_) {
    Pair pr{g, hi, lcm_of(row(polys_[g], 0), hl), 0, 0};
    pr.lcm_degree = degree(pr.lcm.data());
    std::vector<Exponent> mg(n_), mh(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      mg[v] = pr.lcm[v] - row(polys_[g], 0)[v];
      mh[v] = pr.lcm[v] - hl[v];
    }
    pr.sugar = std::max(polys_[g].sugar + degree(mg.data()), polys_[hi].sugar + degree(mh.data()));
    candidates.push_back(std::move(pr));
  }

  // Gebauer–Möller: chain criterion among the new pairs, then product criterion.
  std::vector<Pair> kept;
  std::vector<bool> disjoint(candidates.size());
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    disjoint[k] = coprime(row(polys_[candidates[k].i], 0), hl);
    bool keep = true;
    if (!disjoint[k]) {
      for (std::size_t k2 = k + 1; k2 < candidates.size() && keep; ++k2)
        if (divides(candidates[k2].lcm.data(), candidates[k].lcm.data())) keep = false;
      for (std::size_t d = 0; d < kept.size() && keep; ++d)
        if (divides(kept[d].lcm.data(), candidates[k].lcm.data())) keep = false;
    }
    if (keep) {
      kept.push_back(candidates[k]);
      if (disjoint[k]) kept.back().lcm_degree = ~0u;  // marker: dropped below
    }
  }

  // Old pairs made redundant by h.
  std::erase_if(pairs_, [&](const Pair& pr) {
    if (!divides(hl, pr.lcm.data())) return false;
    auto l1 = lcm_of(row(polys_[pr.i], 0), hl);
    auto l2 = lcm_of(row(polys_[pr.j], 0), hl);
    return l1 != pr.lcm && l2 != pr.lcm;
  });
  for (auto& pr : kept)
    if (pr.lcm_degree != ~0u) pairs_.push_back(std::move(pr));

  std::erase_if(basis_, [&](std::size_t g) { return divides(hl, row(polys_[g], 0)); });
  basis_.push_back(hi);
}

void Engine::run() {
  while (!pairs_.empty() && !unit_) {
    check_deadline();
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.lcm_degree != b.lcm_degree) {
        if (a.lcm_degree < b.lcm_degree) best = k;
        continue;
      }
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      int c = cmp(a.lcm.data(), b.lcm.data());
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    Pair pr = std::move(pairs_[best]);
    pairs_[best] = std::move(pairs_.back());
    pairs_.pop_back();
    GbPoly s = reduce(spoly(pr), -1);
    if (s.empty()) continue;
    insert(std::move(s));
  }
}

std::vector<GbPoly> Engine::reduced_basis() const {
  std::vector<GbPoly> out;
  for (std::size_t idx : basis_) {
    if (unit_) {
      out.push_back(polys_[idx]);
      return out;
    }
    out.push_back(reduce(polys_[idx], static_cast<long>(idx)));
  }
  std::sort(out.begin(), out.end(), [&](const GbPoly& a, const GbPoly& b) { return cmp(row(a, 0), row(b, 0)) < 0; });
  return out;
}

}  // namespace loopforge::detail
