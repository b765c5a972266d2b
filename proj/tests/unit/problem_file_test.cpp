#include <gtest/gtest.h>

#include <filesystem>

#include "loopforge/problem_file.hpp"
#include "oracles.hpp"

using namespace loopforge;
using oracle::P;

namespace {

// Line number reported for a malformed file, or 0 when it parses.
std::size_t error_line(const std::string& text, std::string* message = nullptr) {
  try {
    parse_problem(text, "t.loop");
  } catch (const ParseError& e) {
    if (message) *message = e.what();
    return e.position();
  }
  return 0;
}

}  // namespace

TEST(ProblemFile, TemplateWithEverySection) {
  auto f = parse_problem(R"(# comment
vars: x1 x2
guard: x1 - 1; x2
initial: 1/2 -3
invariants:
  x1 - x2   # trailing comment
branch:
  x1 <- { x1, x2^2, 1 }
  x2 <- x2
branch:
  x1 <- { }
  x2 <- { x1 }
mode: general
)");
  EXPECT_FALSE(f.is_concrete());
  auto ctx = f.problem.program;
  EXPECT_EQ(f.problem.guard_kind, GuardKind::Concrete);
  EXPECT_EQ(*f.problem.guard, P("(x1 - 1)*x2", ctx));
  EXPECT_EQ(*f.problem.initial, (std::vector<Rational>{Rational(1, 2), -3}));
  EXPECT_EQ(f.problem.invariants, PolynomialSeq{P("x1 - x2", ctx)});
  ASSERT_EQ(f.problem.templ.branch_count(), 2u);
  EXPECT_EQ(f.problem.templ.unknown_count(), 4u);
  EXPECT_EQ(f.problem.templ.fixed_part(0, 1, ctx), P("x2", ctx));
  EXPECT_TRUE(f.problem.templ.fixed_part(1, 0, ctx).is_zero());
  auto s = f.shape();
  EXPECT_EQ(s.n, 2u);
  EXPECT_EQ(s.k, 2u);
  EXPECT_EQ(s.l, 4u);
  EXPECT_EQ(s.D, 2u);
}

TEST(ProblemFile, GuardTemplateAndModes) {
  auto f = parse_problem("vars: x\nguard: template: x; 1\ninvariants: x\nbranch: x <- { x }\nmode: universal\n");
  EXPECT_EQ(f.problem.guard_kind, GuardKind::Template);
  EXPECT_EQ(f.problem.guard_template.size(), 2u);
  EXPECT_EQ(f.mode, ProblemMode::Universal);
  EXPECT_FALSE(f.problem.initial);
  EXPECT_EQ(parse_problem("vars: x\nguard: none\ninvariants: x\nbranch: x <- {x}\n").problem.guard_kind,
            GuardKind::None);
}

TEST(ProblemFile, ConcreteLoop) {
  auto f = parse_problem("vars: x1 x2\ninitial: 3 2\nguard: x1\ninvariants: x1 + x2 - 5\nbranch:\n  x1 <- x1 - 1\n  x2 <- x2 + 1\n");
  ASSERT_TRUE(f.is_concrete());
  auto ctx = f.loop->program;
  EXPECT_EQ(f.loop->maps[0].components(), (std::vector<Polynomial>{P("x1 - 1", ctx), P("x2 + 1", ctx)}));
  EXPECT_EQ(f.loop->guard, P("x1", ctx));
}

TEST(ProblemFile, ErrorsCarryLineNumbers) {
  std::string msg;
  EXPECT_EQ(error_line("vars: x\ninvariants: x\nbranch:\n  y <- { x }\n", &msg), 4u);
  EXPECT_NE(msg.find("t.loop:4:"), std::string::npos) << msg;
  EXPECT_EQ(error_line("invariants: x\n"), 1u);
  EXPECT_EQ(error_line("vars: x\ninitial: 1 2\ninvariants: x\nbranch: x <- { x }\n"), 2u);
  EXPECT_EQ(error_line("vars: x\ninvariants: x +\nbranch: x <- { x }\n"), 2u);
  EXPECT_EQ(error_line("vars: x\nbogus: 1\n"), 2u);
  EXPECT_EQ(error_line("vars: x\ninvariants: x\nbranch:\n  x <- { x\n"), 4u);
  EXPECT_EQ(error_line("vars: x\ninvariants: x\nbranch:\n  x <- { x }\n  x <- { 1 }\n"), 5u);
  // Checks needing the whole file point at its last line.
  EXPECT_EQ(error_line("vars: x y\ninvariants: x\nbranch:\n  x <- { x }\n"), 4u);
  EXPECT_EQ(error_line("vars: x\ninvariants: x\nbranch: x <- { x }\nmode: fancy\n"), 4u);
  EXPECT_EQ(error_line("vars: x\ninvariants: x\nbranch: x <- x\nguard: template: x\n"), 4u);
}

TEST(ProblemFile, CorpusFilesLoad) {
  std::size_t count = 0;
  for (const auto& dir : {std::filesystem::path(LOOPFORGE_CORPUS_DIR), std::filesystem::path(LOOPFORGE_CORPUS_DIR) / "checks"})
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.path().extension() == ".loop") {
        EXPECT_NO_THROW(load_problem(entry.path())) << entry.path();
        ++count;
      }
  EXPECT_GE(count, 10u);
  EXPECT_THROW(load_problem("/nonexistent.loop"), Error);
}
