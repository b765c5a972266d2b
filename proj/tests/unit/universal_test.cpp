#include <gtest/gtest.h>

#include <random>

#include "loopforge/linear.hpp"
#include "loopforge/problem_file.hpp"
#include "loopforge/universal.hpp"
#include "oracles.hpp"

using namespace loopforge;
using oracle::P;

namespace {

const char* kMarkov = R"(
vars: x1 x2 x3
initial: 1 1 2
invariants:
  x1^2 + x2^2 + x3^2 - 3*x1*x2*x3
branch:
  x1 <- { x1, x2 }
  x2 <- { x1*x2, x3, x1^2 }
  x3 <- { x2, x3 }
branch:
  x1 <- { x1, x2 }
  x2 <- { x2*x3, x1, x2^2 }
  x3 <- { x2, x3 }
mode: universal
)";

const char* kAffine = R"(
vars: x1 x2
initial: none
invariants:
  x1 - x2 + 1
branch:
  x1 <- { x1^2, x1, x2 }
  x2 <- { x1^2, x1, x2 }
branch:
  x1 <- { x1, x2 }
  x2 <- { x1, x2 }
mode: universal-linear
)";

std::vector<Rational> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Universal, MarkovSystemHasThirtyTwoDistinctEquations) {
  auto file = parse_problem(kMarkov);
  auto sys = compute_loops_universal(file.problem.program, file.problem.invariants, file.problem.templ);
  EXPECT_EQ(sys.equations.size(), 32u);
  for (std::size_t i = 0; i < sys.equations.size(); ++i)
    for (std::size_t j = i + 1; j < sys.equations.size(); ++j)
      EXPECT_NE(sys.equations[i].monic(), sys.equations[j].monic());
  auto y = sys.unknowns;
  for (const char* printed : {"3*y1*y3*y6 + 3*y2*y5*y6 - y3^2", "3*y8*y10*y13 + 3*y8*y12*y14", "y5^2",
                              "y14^2 - 1", "y1^2 - 1"}) {
    Polynomial p = P(printed, y);
    bool found = false;
    for (const auto& e : sys.equations) found = found || e.monic() == p.monic();
    EXPECT_TRUE(found) << printed;
  }
  // The printed solver answer.
  auto b = ints({-1, 0, 3, -1, 0, -1, 0, 0, -1, 3, -1, 0, 0, -1});
  for (const auto& e : sys.equations) EXPECT_EQ(oracle::evaluate(e, b), 0) << e.to_string();
}

TEST(Universal, EquationsAreCoefficientsOfTheDifference) {
  // Oracle: g∘F - g vanishes identically iff all x-coefficients vanish; test at random unknowns.
  auto file = parse_problem(kMarkov);
  auto sys = compute_loops_universal(file.problem.program, file.problem.invariants, file.problem.templ);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 10; ++k) {
    auto b = oracle::random_point(rng, 14, 5);
    bool all_zero = true;
    for (const auto& e : sys.equations) all_zero = all_zero && oracle::evaluate(e, b) == 0;
    EXPECT_FALSE(all_zero);
  }
  auto good = ints({-1, 0, 3, -1, 0, -1, 0, 0, -1, 3, -1, 0, 0, -1});
  Assignment named;
  for (std::size_t i = 0; i < good.size(); ++i) named["y" + std::to_string(i + 1)] = good[i];
  auto loop = instantiate_loop(file.problem, named);
  const Polynomial& g = file.problem.invariants[0];
  for (const auto& F : loop.maps) EXPECT_EQ(F.apply(g), g);
}

TEST(Universal, AffineExampleSpace) {
  auto file = parse_problem(kAffine);
  auto space = compute_loops_linear_universal(file.problem.program, file.problem.invariants, file.problem.templ);
  ASSERT_TRUE(space.feasible);
  EXPECT_EQ(space.ambient_dim, 10u);
  EXPECT_EQ(space.dimension(), 5u);
  EXPECT_EQ(space.system.equations.size(), 5u);
  auto v = ints({0, 1, -1, 0, 0, 0, 1, -1, 0, 0});
  std::vector<RationalVector> printed{ints({1, 0, 0, 1, 0, 0, 0, 0, 0, 0}), ints({0, 1, 0, 0, 1, 0, 0, 0, 0, 0}),
                                      ints({0, 0, 1, 0, 0, 1, 0, 0, 0, 0}), ints({0, 0, 0, 0, 0, 0, 1, 0, 1, 0}),
                                      ints({0, 0, 0, 0, 0, 0, 0, 1, 0, 1})};
  EXPECT_TRUE(space.contains(v));
  for (const auto& w : printed) {
    RationalVector shifted = v;
    for (std::size_t i = 0; i < w.size(); ++i) shifted[i] += w[i];
    EXPECT_TRUE(space.contains(shifted));
  }
  // Each computed direction is in the printed span: adding it does not raise the rank.
  for (const auto& w : space.basis) {
    auto with = printed;
    with.push_back(w);
    EXPECT_EQ(rank_of(with), 5u);
  }
  EXPECT_EQ(rank_of(space.basis), 5u);
}

TEST(Universal, InfeasibleAffineStructure) {
  // y1*x2 - 1 cannot vanish for every x2.
  auto file = parse_problem(R"(
vars: x1 x2
initial: none
invariants:
  x1 - 1
branch:
  x1 <- { x2 }
  x2 <- { x2 }
mode: universal-linear
)");
  auto space = compute_loops_linear_universal(file.problem.program, file.problem.invariants, file.problem.templ);
  EXPECT_FALSE(space.feasible);
}

TEST(Linear, RowEchelonSolution) {
  auto ctx = VarContext::of_class({"u", "v", "w"}, VarClass::Coefficient);
  auto sol = solve_linear_system(ctx, {P("u + v - 2", ctx), P("v - w", ctx)});
  ASSERT_TRUE(sol.feasible);
  EXPECT_EQ(sol.particular, ints({2, 0, 0}));
  ASSERT_EQ(sol.nullspace.size(), 1u);
  EXPECT_EQ(sol.nullspace[0], ints({-1, 1, 1}));
  EXPECT_EQ(sol.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_FALSE(solve_linear(ctx, {P("u - 1", ctx), P("u - 2", ctx)}));
  EXPECT_THROW(solve_linear_system(ctx, {P("u*v", ctx)}), Error);
}

TEST(Linear, RandomSystemsAgainstSubstitution) {
  auto ctx = VarContext::of_class({"a", "b", "c", "d"}, VarClass::Coefficient);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int k = 0; k < 40; ++k) {
    PolynomialSeq eqs;
    for (int r = 0; r < 3; ++r)
      eqs.push_back(P(std::to_string(c(rng)) + "*a + " + std::to_string(c(rng)) + "*b + " + std::to_string(c(rng)) +
                          "*c + " + std::to_string(c(rng)) + "*d + " + std::to_string(c(rng)),
                      ctx));
    auto sol = solve_linear_system(ctx, eqs);
    if (!sol.feasible) continue;
    for (const auto& e : eqs) {
      EXPECT_EQ(oracle::evaluate(e, sol.particular), 0);
      for (const auto& n : sol.nullspace) {
        RationalVector moved = sol.particular;
        for (std::size_t i = 0; i < 4; ++i) moved[i] += 3 * n[i];
        EXPECT_EQ(oracle::evaluate(e, moved), 0);
      }
    }
    EXPECT_EQ(sol.pivots.size() + sol.nullspace.size(), 4u);
  }
}

TEST(Linear, Rank) {
  EXPECT_EQ(rank_of({ints({1, 2}), ints({2, 4})}), 1u);
  EXPECT_EQ(rank_of({ints({1, 2}), ints({0, 1})}), 2u);
  EXPECT_EQ(rank_of({}), 0u);
}
