#include <gtest/gtest.h>

#include <random>

#include "loopforge/problem_file.hpp"
#include "loopforge/synth.hpp"
#include "loopforge/zero_dim.hpp"
#include "oracles.hpp"

using namespace loopforge;
using oracle::P;

namespace {

ContextPtr ys(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return VarContext::of_class(names, VarClass::Coefficient);
}

}  // namespace

TEST(RationalRoots, SmallPolynomials) {
  EXPECT_EQ(rational_roots({-2, 1}), (std::vector<Rational>{2}));
  EXPECT_EQ(rational_roots({1, 0, 1}), std::vector<Rational>{});
  // 6t^2 - t - 1 = (3t + 1)(2t - 1)
  EXPECT_EQ(rational_roots({-1, -1, 6}), (std::vector<Rational>{Rational(-1, 3), Rational(1, 2)}));
  // t^3 - t^2 = t^2 (t - 1): no repetition in the answer.
  EXPECT_EQ(rational_roots({0, 0, -1, 1}), (std::vector<Rational>{0, 1}));
  EXPECT_EQ(rational_roots({Rational(-1, 4), 0, 1}), (std::vector<Rational>{Rational(-1, 2), Rational(1, 2)}));
}

TEST(RationalRoots, CandidateCap) {
  // 720720 has 240 divisors; the leading coefficient 1 keeps them as candidates.
  EXPECT_THROW(rational_roots({720720, 0, 1}, 100), RootCapExceeded);
  EXPECT_NO_THROW(rational_roots({720720, 0, 1}));
}

TEST(Finiteness, Classification) {
  auto y = ys(2);
  EXPECT_EQ(classify_finiteness(y, {P("y1^2 - 1", y), P("y2 - y1", y)}).kind, Finiteness::Finite);
  EXPECT_EQ(classify_finiteness(y, {P("y1^2 - 1", y), P("y2 - y1", y)}).count, 2u);
  EXPECT_EQ(classify_finiteness(y, {P("y1 - y2", y)}).kind, Finiteness::Infinite);
  EXPECT_EQ(classify_finiteness(y, {P("y1", y), P("y1 - 1", y)}).kind, Finiteness::Empty);
  EXPECT_EQ(classify_finiteness(y, {P("y1^2", y), P("y2", y)}).count, 2u);
}

TEST(Finiteness, CubicPairSystemIsInfinite) {
  auto file = parse_problem(R"(
vars: x1 x2 x3
initial: 1 1 -1
invariants:
  x2^2 - x1
  x3^3 + 2*x2^2 - x1
branch:
  x1 <- { x1^3, x2^2 }
  x2 <- { x1, x2^2 }
  x3 <- { x1 }
)");
  auto report = classify_finiteness(generate_loops(file.problem));
  EXPECT_EQ(report.kind, Finiteness::Infinite);
  EXPECT_EQ(report.to_string(), "infinite");
}

TEST(Finiteness, ProductSystemsCountRootsWithMultiplicity) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> nvars(1, 3);
  for (int k = 0; k < 50; ++k) {
    auto ctx = ys(nvars(rng));
    auto s = oracle::random_product(ctx, rng);
    auto report = classify_finiteness(ctx, s.eqs);
    ASSERT_EQ(report.kind, Finiteness::Finite);
    std::uint64_t expect = 1;
    for (const auto& r : s.roots) expect *= r.size();
    EXPECT_EQ(report.count, expect);
  }
}

TEST(ZeroDimSolver, ProductSystemsMatchEnumeration) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> nvars(1, 3);
  for (int k = 0; k < 100; ++k) {
    auto ctx = ys(nvars(rng));
    auto s = oracle::random_product(ctx, rng);
    EXPECT_EQ(solve_zero_dim_rational(ctx, s.eqs), oracle::cartesian(s.roots));
  }
}

TEST(ZeroDimSolver, CoupledSystem) {
  auto y = ys(2);
  // y1^2 = 2 has no rational roots; y1 = 3/2 gives y2 = 9/4.
  auto pts = solve_zero_dim_rational(y, {P("(y1^2 - 2)*(2*y1 - 3)", y), P("y2 - y1^2", y)});
  EXPECT_EQ(pts, (std::vector<RationalVector>{{Rational(3, 2), Rational(9, 4)}}));
  EXPECT_TRUE(solve_zero_dim_rational(y, {P("y1", y), P("y1 - 1", y)}).empty());
  EXPECT_THROW(solve_zero_dim_rational(y, {P("y1 - y2", y)}), NotZeroDimensional);
}

TEST(ZeroDimSolver, SolutionsSatisfyTheSystem) {
  auto y = ys(3);
  PolynomialSeq eqs{P("y1*y2 - 2", y), P("y2 - y3 - 1", y), P("y3^2 - 1", y)};
  auto pts = solve_zero_dim_rational(y, eqs);
  ASSERT_FALSE(pts.empty());
  for (const auto& pt : pts)
    for (const auto& e : eqs) EXPECT_EQ(oracle::evaluate(e, pt), 0);
  // y3 = 1 gives (1, 2, 1); y3 = -1 gives y2 = 0 and no y1.
  EXPECT_EQ(pts, (std::vector<RationalVector>{{1, 2, 1}}));
}
