#include "loopforge/zero_dim.hpp"

#include <algorithm>
#include <set>

#include "loopforge/groebner.hpp"

namespace loopforge {

std::string FinitenessReport::to_string() const {
  switch (kind) {
    case Finiteness::Empty:
      return "empty";
    case Finiteness::Finite:
      return "finite(" + std::to_string(count) + ")";
    case Finiteness::Infinite:
      return "infinite";
  }
  return "infinite";
}

FinitenessReport classify_finiteness(const ContextPtr& ctx, const PolynomialSeq& eqs) {
  GroebnerBasis G = buchberger(ctx, eqs);
  FinitenessReport r;
  if (G.is_unit()) {
    r.kind = Finiteness::Empty;
    return r;
  }
  if (auto n = solution_count(G)) {
    r.kind = Finiteness::Finite;
    r.count = *n;
  }
  return r;
}

FinitenessReport classify_finiteness(const PolynomialSystem& system) {
  return classify_finiteness(system.unknowns, system.equations);
}

namespace {

using PrimePowers = std::vector<std::pair<Integer, unsigned>>;

constexpr unsigned long kTrialLimit = 1'000'000;

// Full factorization of |n| > 0, or false when a cofactor beyond the trial
// bound is composite.
bool factor(Integer n, PrimePowers& out) {
  n = abs(n);
  for (unsigned long p = 2; p <= kTrialLimit && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    if (e) out.emplace_back(Integer(p), e);
  }
  if (n == 1) return true;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return false;
  out.emplace_back(n, 1);
  return true;
}

std::uint64_t divisor_count(const PrimePowers& f, std::uint64_t cap) {
  std::uint64_t c = 1;
  for (const auto& [p, e] : f) {
    c *= e + 1;
    if (c > cap) return cap + 1;
  }
  return c;
}

std::vector<Integer> divisors(const PrimePowers& f) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

Rational horner(const std::vector<Integer>& c, const Rational& t) {
  Rational v = 0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * t + c[k];
  return v;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs, std::uint64_t cap) {
  Integer den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> c;
  for (const auto& q : coeffs) c.push_back(Integer(q * den));
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw Error("rational_roots: the zero polynomial has every number as a root");
  std::set<Rational> roots;
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) {
    roots.insert(Rational(0));
    c.erase(c.begin(), c.begin() + static_cast<long>(low));
  }
  if (c.size() > 1) {
    PrimePowers fa, fd;
    if (!factor(c.front(), fa) || !factor(c.back(), fd))
      throw RootCapExceeded("rational root search: a coefficient is too large to factor by trial division");
    const std::uint64_t na = divisor_count(fa, cap), nd = divisor_count(fd, cap);
    if (na > cap || nd > cap || 2 * na * nd > cap)
      throw RootCapExceeded("rational root search: more than " + std::to_string(cap) + " candidates");
    const auto ps = divisors(fa), qs = divisors(fd);
    for (const auto& q : qs)
      for (const auto& p : ps) {
        if (gcd(p, q) != 1) continue;
        for (int sign : {1, -1}) {
          Rational t(Integer(sign * p), q);
          if (horner(c, t) == 0) roots.insert(t);
        }
      }
  }
  return {roots.begin(), roots.end()};
}

namespace {

void solve_rec(const ContextPtr& ctx, const PolynomialSeq& eqs, std::uint64_t cap, std::vector<RationalVector>& out) {
  const std::size_t n = ctx->size();
  if (n == 0) {
    for (const auto& e : eqs)
      if (!e.is_zero()) return;
    out.emplace_back();
    return;
  }
  GroebnerBasis G = buchberger(ctx, eqs, MonomialOrder::lex());
  if (G.is_unit()) return;
  const std::size_t last = n - 1;
  const Polynomial* uni = nullptr;
  for (const auto& g : G.generators()) {
    if (g.support() == std::vector<std::size_t>{last}) {
      uni = &g;
      break;
    }
  }
  if (!uni) throw NotZeroDimensional();
  std::vector<Rational> coeffs(uni->degree_in(last) + 1);
  for (std::size_t t = 0; t < uni->size(); ++t) coeffs[uni->exponents(t)[last]] = uni->coefficient(t);
  const std::string& name = ctx->name(last);
  for (const auto& root : rational_roots(coeffs, cap)) {
    PolynomialSeq reduced;
    ContextPtr sub_ctx = ctx->restricted([&] {
      std::vector<std::size_t> keep(last);
      for (std::size_t k = 0; k < last; ++k) keep[k] = k;
      return keep;
    }());
    for (const auto& g : G.generators()) {
      Polynomial r = g.substitute({{name, root}});
      reduced.push_back(r.embed(sub_ctx));
    }
    std::vector<RationalVector> partial;
    solve_rec(sub_ctx, reduced, cap, partial);
    for (auto& pt : partial) {
      pt.push_back(root);
      out.push_back(std::move(pt));
    }
  }
}

}  // namespace

std::vector<RationalVector> solve_zero_dim_rational(const ContextPtr& ctx, const PolynomialSeq& eqs,
                                                    std::uint64_t cap) {
  GroebnerBasis G = buchberger(ctx, eqs);
  if (G.is_unit()) return {};
  if (!is_zero_dimensional(G)) throw NotZeroDimensional();
  std::vector<RationalVector> out;
  solve_rec(ctx, eqs, cap, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RationalVector> solve_zero_dim_rational(const PolynomialSystem& system, std::uint64_t cap) {
  return solve_zero_dim_rational(system.unknowns, system.equations, cap);
}

}  // namespace loopforge
