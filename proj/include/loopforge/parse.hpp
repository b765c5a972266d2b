#pragma once

#include <string_view>

#include "loopforge/polynomial.hpp"

namespace loopforge {

/// Parses polynomial text: integer and `/` rational literals, identifiers
/// `[A-Za-z][A-Za-z0-9_]*` resolved in `ctx`, binary `+ - * /`, unary minus,
/// `^` with a non-negative integer exponent, and parentheses. Multiplication
/// must be written explicitly ("2*x1", never "2x1"); division is only
/// allowed by a nonzero constant. Errors carry the byte offset.
Polynomial parse_poly(std::string_view text, const ContextPtr& ctx);

}  // namespace loopforge
