#include <gtest/gtest.h>

#include <random>

#include "loopforge/groebner.hpp"
#include "loopforge/poly_map.hpp"
#include "oracles.hpp"

using namespace loopforge;
using oracle::P;

namespace {

ContextPtr xs(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VarContext::of_program_vars(names);
}

void expect_valid_basis(const GroebnerBasis& G) {
  EXPECT_TRUE(oracle::buchberger_criterion(G.generators(), G.order()));
  EXPECT_TRUE(oracle::is_reduced(G.generators(), G.order()));
}

}  // namespace

TEST(MonomialOrder, TotalMultiplicativeWellFounded) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<Exponent> e(0, 3);
  const std::size_t n = 4;
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(2)}) {
    std::vector<Exponent> one(n, 0);
    for (int k = 0; k < 300; ++k) {
      std::vector<Exponent> a(n), b(n), c(n), ac(n), bc(n);
      for (std::size_t v = 0; v < n; ++v) {
        a[v] = e(rng), b[v] = e(rng), c[v] = e(rng);
        ac[v] = a[v] + c[v], bc[v] = b[v] + c[v];
      }
      int ab = order.compare(a.data(), b.data(), n);
      EXPECT_EQ(ab, -order.compare(b.data(), a.data(), n));
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(ab > 0, order.compare(ac.data(), bc.data(), n) > 0);
      if (a != one) {
        EXPECT_GT(order.compare(a.data(), one.data(), n), 0);
      }
    }
  }
}

TEST(NormalForm, SmallCases) {
  auto ctx = xs(2);
  Polynomial g = P("x1^2 - x2", ctx);
  auto G = buchberger({g});
  EXPECT_TRUE(normal_form(g, G).is_zero());
  EXPECT_EQ(normal_form(P("x1^2 + x2", ctx), G), P("2*x2", ctx));
  auto M = buchberger({P("x1", ctx)});
  EXPECT_EQ(normal_form(P("1", ctx), M), P("1", ctx));
  EXPECT_EQ(normal_form(P("3/2*x1^3 + 1/3*x2", ctx), G), P("3/2*x1*x2 + 1/3*x2", ctx));
}

TEST(NormalForm, AgreesWithTextbookDivisionOnBases) {
  auto ctx = xs(3);
  std::mt19937_64 rng(21);
  for (int k = 0; k < 15; ++k) {
    PolynomialSeq gens{oracle::random_poly(ctx, rng, 3, 2), oracle::random_poly(ctx, rng, 3, 2)};
    auto G = buchberger(gens);
    Polynomial p = oracle::random_poly(ctx, rng, 5, 3);
    // Remainders modulo a Gröbner basis are unique.
    EXPECT_EQ(normal_form(p, G), oracle::divide(p, G.generators(), G.order()));
  }
}

TEST(Buchberger, LexBackSubstitution) {
  auto ctx = xs(2);
  auto G = buchberger({P("x1 - x2", ctx), P("x2 - 1", ctx)}, MonomialOrder::lex());
  ASSERT_EQ(G.generators().size(), 2u);
  EXPECT_EQ(G.generators()[0], P("x2 - 1", ctx));
  EXPECT_EQ(G.generators()[1], P("x1 - 1", ctx));
  expect_valid_basis(G);
}

TEST(Buchberger, PrincipalAndEmpty) {
  auto ctx = xs(2);
  auto G = buchberger({P("3*x1^2*x2 - x2 + 5", ctx)});
  ASSERT_EQ(G.generators().size(), 1u);
  EXPECT_EQ(G.generators()[0], P("x1^2*x2 - 1/3*x2 + 5/3", ctx));
  auto Z = buchberger(ctx, {});
  EXPECT_TRUE(Z.is_zero_ideal());
  EXPECT_EQ(normal_form(P("x1", ctx), Z), P("x1", ctx));
}

TEST(Buchberger, MonomialIdealClosure) {
  auto ctx = xs(2);
  auto G = buchberger({P("x1*x2", ctx), P("x1^2", ctx)});
  EXPECT_EQ(G.generators().size(), 2u);
  expect_valid_basis(G);
}

TEST(Buchberger, UnitIdeal) {
  auto ctx = xs(2);
  auto G = buchberger({P("x1", ctx), P("x1 + 1", ctx)});
  EXPECT_TRUE(G.is_unit());
  EXPECT_TRUE(G.contains(P("x2^7 - 3", ctx)));
}

TEST(Buchberger, RandomIdealsSatisfyCriterionAndMembership) {
  auto ctx = xs(3);
  std::mt19937_64 rng(42);
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(1)}) {
    for (int k = 0; k < 8; ++k) {
      PolynomialSeq gens{oracle::random_poly(ctx, rng, 3, 2), oracle::random_poly(ctx, rng, 3, 2),
                         oracle::random_poly(ctx, rng, 2, 1)};
      auto G = buchberger(gens, order);
      expect_valid_basis(G);
      for (const auto& g : gens) EXPECT_TRUE(G.contains(g));
      Polynomial combo = oracle::random_poly(ctx, rng, 2, 1) * gens[0] + oracle::random_poly(ctx, rng, 2, 2) * gens[1] +
                         oracle::random_poly(ctx, rng, 2, 1) * gens[2];
      EXPECT_TRUE(G.contains(combo));
    }
  }
}

TEST(Buchberger, DeterministicAndOrderIndependent) {
  auto ctx = xs(3);
  PolynomialSeq gens{P("x1^2 - x2*x3", ctx), P("x2^2 - x1*x3 + 1", ctx), P("x1*x2 - x3", ctx)};
  auto G1 = buchberger(gens);
  PolynomialSeq rev(gens.rbegin(), gens.rend());
  auto G2 = buchberger(rev);
  EXPECT_EQ(G1.generators(), G2.generators());
  EXPECT_EQ(G1.generators(), buchberger(gens).generators());
}

TEST(Radical, SquaresAndGenerators) {
  auto ctx = xs(2);
  Polynomial g = P("x1^2 - x2^2 + x1*x2", ctx);
  EXPECT_TRUE(in_radical({g * g}, {g}));
  EXPECT_TRUE(in_radical({g}, {g * g}));
  EXPECT_FALSE(in_radical({P("x1", ctx)}, {P("x1*x2", ctx)}));
  EXPECT_TRUE(in_radical({P("x1 + x2", ctx)}, {P("(x1 + x2)^3*x2^0", ctx), P("x2^5", ctx)}));
}

TEST(Radical, FixedPointExampleVerdicts) {
  auto ctx = xs(2);
  Polynomial g = P("x1^2 - x2^2 + x1*x2", ctx);
  PolyMap F(ctx, {P("2*x1 - 3*x2", ctx), P("x1 + x2", ctx)});
  Polynomial gF = F.apply(g);
  EXPECT_FALSE(in_radical({gF}, {g}));
  EXPECT_TRUE(in_radical({F.apply(gF)}, {g, gF}));
}

TEST(Radical, MonotoneUnderEnlargement) {
  auto ctx = xs(3);
  std::mt19937_64 rng(8);
  for (int k = 0; k < 10; ++k) {
    Polynomial a = oracle::random_poly(ctx, rng, 2, 1), b = oracle::random_poly(ctx, rng, 2, 1);
    PolynomialSeq S{a * a, b};
    Polynomial p = a * oracle::random_poly(ctx, rng, 2, 1) + b;
    ASSERT_TRUE(in_radical({p}, S));
    S.push_back(oracle::random_poly(ctx, rng, 3, 2));
    EXPECT_TRUE(in_radical({p}, S));
  }
}

TEST(Radical, OracleReuseMatchesFreshChecks) {
  auto ctx = xs(2);
  RadicalOracle oracle(ctx, {P("x1^2", ctx)});
  EXPECT_TRUE(oracle.contains(P("x1", ctx)));
  EXPECT_FALSE(oracle.contains(P("x2", ctx)));
  oracle.extend({P("x2^3 - x1", ctx)});
  EXPECT_TRUE(oracle.contains(P("x2", ctx)));
  EXPECT_FALSE(oracle.trivial());
  oracle.extend({P("x2 - 1", ctx)});
  EXPECT_TRUE(oracle.trivial());
}

TEST(ZeroDim, Detection) {
  auto ctx = xs(2);
  auto origin = buchberger({P("x1", ctx), P("x2", ctx)});
  EXPECT_TRUE(is_zero_dimensional(origin));
  EXPECT_EQ(solution_count(origin), 1u);
  auto two = buchberger({P("x1^2 - 1", ctx), P("x2 - x1", ctx)});
  EXPECT_TRUE(is_zero_dimensional(two));
  EXPECT_EQ(solution_count(two), 2u);
  auto curve = buchberger({P("x1^2 - x2", ctx)});
  EXPECT_FALSE(is_zero_dimensional(curve));
  EXPECT_EQ(solution_count(curve), std::nullopt);
  auto doubled = buchberger({P("x1^2", ctx), P("x2", ctx)});
  EXPECT_EQ(solution_count(doubled), 2u);
}

TEST(ZeroDim, CountMatchesProductOfRootCounts) {
  auto ctx = xs(3);
  auto G = buchberger({P("(x1 - 1)*(x1 + 2)*(x1 - 1/2)", ctx), P("x2^2 - 4", ctx), P("x3 - x1*x2", ctx)});
  EXPECT_EQ(solution_count(G), 6u);
}

TEST(Elimination, KeepsTrailingVariables) {
  auto ctx = VarContext::of_program_vars({"x2", "x1"});
  auto out = elimination_ideal(ctx, {P("x1 - x2", ctx), P("x2^2 - 1", ctx)}, 1);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], P("x1^2 - 1", ctx));
}

TEST(Elimination, ArbitraryPositions) {
  auto ctx = xs(2);
  auto out = eliminate(ctx, {P("x1 - x2", ctx), P("x2^2 - 1", ctx)}, {1});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], P("x1^2 - 1", ctx));
  auto none = eliminate(ctx, {P("x1", ctx)}, {0});
  EXPECT_TRUE(none.empty());
  auto all = elimination_ideal(ctx, {P("x1 - x2", ctx), P("x2^2 - 1", ctx)}, 2);
  EXPECT_EQ(all.size(), 2u);
}

TEST(Radical, SpecializedRejectionsAgreeWithFullChecks) {
  // Mixed classes enable the specialized prefilter; the all-program twin never uses it.
  auto mixed = VarContext::create({{"x1", VarClass::Program}, {"x2", VarClass::Program}, {"y1", VarClass::Coefficient},
                                   {"z", VarClass::GuardFlag}});
  auto plain = xs(4);
  std::vector<std::size_t> same{0, 1, 2, 3};
  std::mt19937_64 rng(77);
  std::size_t rejected = 0;
  for (int k = 0; k < 30; ++k) {
    Polynomial a = oracle::random_poly(mixed, rng, 3, 2), b = oracle::random_poly(mixed, rng, 2, 1);
    PolynomialSeq S{a * P("z", mixed), b};
    Polynomial p = k % 3 == 0 ? a * P("z", mixed) * oracle::random_poly(mixed, rng, 2, 1) + b * b
                              : oracle::random_poly(mixed, rng, 3, 2);
    RadicalOracle fast(mixed, S);
    bool expect = in_radical({p.remap(plain, same)}, {S[0].remap(plain, same), S[1].remap(plain, same)});
    EXPECT_EQ(fast.contains(p), expect) << p.to_string();
    rejected += fast.specialized_rejections();
  }
  EXPECT_GT(rejected, 0u);
}
