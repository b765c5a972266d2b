#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace loopforge {

/// Exact rationals in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q != 0); the result is canonical.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Least common multiple of the denominators of a range of rationals.
template <typename Range>
Integer denominator_lcm(const Range& values) {
  Integer l = 1;
  for (const Rational& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

}  // namespace loopforge
