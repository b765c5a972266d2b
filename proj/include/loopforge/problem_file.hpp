#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "loopforge/synth.hpp"

namespace loopforge {

enum class ProblemMode { General, Universal, UniversalLinear };

std::string_view to_string(ProblemMode mode);

/// A parsed problem file. A file with at least one braced line
/// `xj <- { f1, f2 }` is a template (synthesis input), and its plain lines
/// `xj <- poly` are known update parts. Without braces the file is a
/// concrete loop (verification input).
struct ProblemFile {
  std::string origin;  // path or "<input>"
  ProblemMode mode = ProblemMode::General;
  SynthesisProblem problem;
  std::optional<ConcreteLoop> loop;

  bool is_concrete() const { return loop.has_value(); }

  struct Shape {
    std::size_t n = 0;  // program variables
    std::size_t m = 0;  // invariants
    unsigned d = 0;     // largest invariant degree
    unsigned D = 0;     // largest generator degree
    std::size_t l = 0;  // template generators in total
    std::size_t k = 0;  // branches
  };
  Shape shape() const;
};

/// Line-oriented sectioned format, `#` starts a comment:
///
///   vars: x1 x2
///   guard: none | <poly>[; <poly> ...] | template: <poly>; <poly> ...
///   initial: none | <rational> <rational> ...
///   invariants:
///     <poly>
///   branch:
///     x1 <- { <poly>, <poly> }
///     x2 <- <poly>
///   mode: general | universal | universal-linear
///
/// Several `;`-separated concrete guards multiply into one. Errors are
/// ParseError with the 1-based line number as position.
ProblemFile parse_problem(std::string_view text, const std::string& origin = "<input>");
ProblemFile load_problem(const std::filesystem::path& path);

}  // namespace loopforge
