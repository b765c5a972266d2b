#include "loopforge/rational.hpp"

#include "loopforge/error.hpp"

namespace loopforge {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("invalid rational '" + s + "'", 0); };
  if (s.empty()) throw bad();
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  std::size_t slash = s.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::size_t num_end = slash == std::string::npos ? s.size() : slash;
  if (!digits(start, num_end)) throw bad();
  if (slash != std::string::npos && !digits(slash + 1, s.size())) throw bad();
  Integer num(s.substr(start, num_end - start));
  if (s[0] == '-') num = -num;
  Integer den = 1;
  if (slash != std::string::npos) {
    den = Integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'", 0);
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace loopforge
