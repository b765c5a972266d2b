#include <gtest/gtest.h>

#include <random>

#include "loopforge/error.hpp"
#include "loopforge/parse.hpp"
#include "loopforge/poly_map.hpp"
#include "loopforge/polynomial.hpp"
#include "oracles.hpp"

using namespace loopforge;
using oracle::P;

namespace {

ContextPtr xs(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VarContext::of_program_vars(names);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-7")), "-7");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
}

TEST(VarContext, RejectsDuplicatesAndBadNames) {
  EXPECT_THROW(VarContext::of_program_vars({"x1", "x1"}), Error);
  EXPECT_THROW(VarContext::of_program_vars({"1x"}), Error);
  EXPECT_THROW(VarContext::of_program_vars({""}), Error);
  auto ctx = xs(2);
  EXPECT_EQ(ctx->fresh_name("x1"), "x11");
  EXPECT_EQ(ctx->fresh_name("t"), "t");
}

TEST(Parse, InvariantFromSynthesisExample) {
  auto ctx = xs(2);
  Polynomial p = P("x2^2 - x1", ctx);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.coefficient_of(Monomial({{1, 2}})), 1);
  EXPECT_EQ(p.coefficient_of(Monomial({{0, 1}})), -1);
}

TEST(Parse, ZeroAndRoundTrip) {
  auto ctx = xs(2);
  EXPECT_TRUE(P("0", ctx).is_zero());
  EXPECT_TRUE(P("x1 - x1", ctx).is_zero());
  Polynomial p = P("2*x1 - x2^2", ctx);
  EXPECT_EQ(P(p.to_string(), ctx), p);
  Polynomial q = P("-1/2*x1^3*x2 + 3/7 - (x1 + x2)^2", ctx);
  EXPECT_EQ(P(q.to_string(), ctx), q);
}

TEST(Parse, Errors) {
  auto ctx = xs(2);
  EXPECT_THROW(P("2x1", ctx), ParseError);
  EXPECT_THROW(P("x1 x2", ctx), ParseError);
  EXPECT_THROW(P("x3 + 1", ctx), Error);
  EXPECT_THROW(P("x1 +", ctx), ParseError);
  EXPECT_THROW(P("x1 / x2", ctx), ParseError);
  EXPECT_THROW(P("(x1", ctx), ParseError);
  try {
    P("x1 + * x2", ctx);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(Arithmetic, HandExpansions) {
  auto ctx = xs(2);
  EXPECT_EQ(P("(x1 + x2)*(x1 - x2)", ctx), P("x1^2 - x2^2", ctx));
  Polynomial p = P("3*x1 - x2", ctx);
  EXPECT_EQ(p + Polynomial(ctx), p);
  Polynomial sq = P("2*x1 - 3*x2", ctx).pow(2).scaled(5);
  EXPECT_EQ(sq, P("20*x1^2 - 60*x1*x2 + 45*x2^2", ctx));
}

TEST(Arithmetic, ExpansionAgreesWithPointEvaluation) {
  auto ctx = xs(2);
  std::mt19937_64 rng(7);
  Polynomial lhs = P("2*x1 - 3*x2", ctx).pow(2).scaled(5);
  for (int k = 0; k < 5; ++k) {
    auto pt = oracle::random_point(rng, 2);
    Rational lin = 2 * pt[0] - 3 * pt[1];
    EXPECT_EQ(oracle::evaluate(lhs, pt), 5 * lin * lin);
  }
}

TEST(Arithmetic, ContextMismatch) {
  auto a = xs(2), b = VarContext::of_program_vars({"u", "v"});
  EXPECT_THROW(P("x1", a) + P("u", b), ContextMismatch);
  EXPECT_THROW(P("x1", a) * P("u", b), ContextMismatch);
}

TEST(Arithmetic, RingAxiomsOnRandomTriples) {
  auto ctx = xs(3);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    Polynomial p = oracle::random_poly(ctx, rng), q = oracle::random_poly(ctx, rng), r = oracle::random_poly(ctx, rng);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_TRUE((p - p).is_zero());
  }
}

TEST(Arithmetic, CanonicalFormMatchesFunctionEquality) {
  // Two different expression routes to the same function must give identical storage.
  auto ctx = xs(3);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    Polynomial p = oracle::random_poly(ctx, rng), q = oracle::random_poly(ctx, rng);
    Polynomial a = (p + q) * (p - q);
    Polynomial b = p * p - q * q;
    bool same_values = true;
    for (int s = 0; s < 20; ++s) {
      auto pt = oracle::random_point(rng, 3);
      same_values = same_values && oracle::evaluate(a, pt) == oracle::evaluate(b, pt);
    }
    ASSERT_TRUE(same_values);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.to_string(), b.to_string());
  }
}

TEST(Compose, FixedPointExampleIterates) {
  auto ctx = xs(2);
  PolyMap F(ctx, {P("2*x1 - 3*x2", ctx), P("x1 + x2", ctx)});
  PolynomialSeq g{P("x1^2 - x2^2 + x1*x2", ctx)};
  auto g1 = compose(g, F);
  EXPECT_EQ(g1[0], P("5*x1^2 - 15*x1*x2 + 5*x2^2", ctx));
  auto g2 = compose(g1, F);
  EXPECT_EQ(g2[0], P("-5*x1^2 - 35*x1*x2 + 95*x2^2", ctx));
}

TEST(Compose, CoefficientVariablesPassThrough) {
  auto ctx = VarContext::create({{"x1", VarClass::Program},
                                 {"x2", VarClass::Program},
                                 {"y1", VarClass::Coefficient},
                                 {"y2", VarClass::Coefficient},
                                 {"y3", VarClass::Coefficient}});
  PolyMap F(ctx, {P("y1*x1 + y2", ctx), P("y3*x2", ctx)});
  auto out = compose(PolynomialSeq{P("2*x1 - x2^2", ctx)}, F);
  EXPECT_EQ(out[0], P("2*y1*x1 + 2*y2 - y3^2*x2^2", ctx));
}

TEST(Compose, IdentityAndHomomorphism) {
  auto ctx = xs(3);
  std::mt19937_64 rng(5);
  PolyMap id = PolyMap::identity(ctx);
  PolyMap F(ctx, {oracle::random_poly(ctx, rng, 3, 1), oracle::random_poly(ctx, rng, 3, 1),
                  oracle::random_poly(ctx, rng, 2, 2)});
  for (int k = 0; k < 10; ++k) {
    Polynomial p = oracle::random_poly(ctx, rng, 3), q = oracle::random_poly(ctx, rng, 3);
    EXPECT_EQ(id.apply(p), p);
    EXPECT_EQ(F.apply(p * q), F.apply(p) * F.apply(q));
    EXPECT_EQ(F.apply(p + q), F.apply(p) + F.apply(q));
    auto a = oracle::random_point(rng, 3, 20);
    EXPECT_EQ(oracle::evaluate(F.apply(p), a), oracle::evaluate(p, F.apply_to_point(a)));
  }
}

TEST(Compose, ThenAppliesFirstMapFirst) {
  auto ctx = xs(2);
  PolyMap A(ctx, {P("x1 + 1", ctx), P("x2", ctx)});
  PolyMap B(ctx, {P("x1^2", ctx), P("x1*x2", ctx)});
  PolyMap AB = PolyMap::then(A, B);
  std::vector<Rational> pt{Rational(2), Rational(3)};
  EXPECT_EQ(AB.apply_to_point(pt), B.apply_to_point(A.apply_to_point(pt)));
}

TEST(Substitute, PartialEvaluation) {
  auto ctx = VarContext::create({{"x1", VarClass::Program},
                                 {"x2", VarClass::Program},
                                 {"x3", VarClass::Program},
                                 {"z", VarClass::GuardFlag}});
  Polynomial Q = P("z*(x2^2 - x1)", ctx);
  EXPECT_TRUE(Q.substitute({{"x1", 1}, {"x2", 1}, {"x3", -1}, {"z", 1}}).is_zero());
  EXPECT_EQ(Q.substitute({}), Q);
  Polynomial part = Q.substitute({{"z", 1}});
  EXPECT_EQ(part.context()->size(), 3u);
  EXPECT_EQ(part.to_string(), P("x2^2 - x1", part.context()).to_string());
  EXPECT_THROW(Q.substitute({{"w", 1}}), Error);
}

TEST(Substitute, PointOnFirstComponent) {
  auto ctx = VarContext::of_class({"y1", "y2", "y3", "y4", "y5"}, VarClass::Coefficient);
  Polynomial P1 = P("(y3 + y4)^2 - y1 - y2", ctx);
  EXPECT_TRUE(P1.substitute({{"y1", 1}, {"y2", -1}, {"y3", 2}, {"y4", -2}, {"y5", 0}}).is_zero());
}

TEST(Substitute, ConsistentWithCompose) {
  auto ctx = xs(3);
  std::mt19937_64 rng(9);
  for (int k = 0; k < 10; ++k) {
    PolyMap F(ctx, {oracle::random_poly(ctx, rng, 3, 2), oracle::random_poly(ctx, rng, 3, 1),
                    oracle::random_poly(ctx, rng, 2, 1)});
    Polynomial g = oracle::random_poly(ctx, rng, 4, 2);
    auto a = oracle::random_point(rng, 3, 10);
    Polynomial c = F.apply(g).substitute({{"x1", a[0]}, {"x2", a[1]}, {"x3", a[2]}});
    ASSERT_TRUE(c.is_constant() || c.is_zero());
    EXPECT_EQ(c.constant_term(), g.evaluate(F.apply_to_point(a)));
  }
}

TEST(Coefficients, ReconstructionAndOrder) {
  auto ctx = VarContext::create({{"x1", VarClass::Program},
                                 {"x2", VarClass::Program},
                                 {"y1", VarClass::Coefficient},
                                 {"y2", VarClass::Coefficient}});
  std::mt19937_64 rng(13);
  std::vector<std::size_t> xv{0, 1};
  for (int k = 0; k < 20; ++k) {
    Polynomial p = oracle::random_poly(ctx, rng, 6, 2);
    auto entries = coefficients_wrt(p, xv);
    Polynomial sum(ctx);
    for (std::size_t e = 0; e < entries.size(); ++e) {
      EXPECT_FALSE(entries[e].coefficient.is_zero());
      EXPECT_FALSE(entries[e].coefficient.depends_on(0) || entries[e].coefficient.depends_on(1));
      sum += Polynomial::term(ctx, entries[e].monomial, 1) * entries[e].coefficient;
      if (e > 0) {
        auto a = entries[e - 1].monomial.dense(4), b = entries[e].monomial.dense(4);
        EXPECT_GT(grevlex_compare(a.data(), b.data(), 4), 0);
      }
    }
    EXPECT_EQ(sum, p);
  }
  Polynomial c = P("y1*y2 + 3", ctx);
  auto only = coefficients_wrt(c, xv);
  ASSERT_EQ(only.size(), 1u);
  EXPECT_EQ(only[0].coefficient, c);
}

TEST(Proportional, DetectsScalarMultiples) {
  auto ctx = xs(2);
  EXPECT_TRUE(proportional(P("2*x1 - 4*x2", ctx), P("-x1 + 2*x2", ctx)));
  EXPECT_FALSE(proportional(P("x1 - x2", ctx), P("x1 + x2", ctx)));
}
