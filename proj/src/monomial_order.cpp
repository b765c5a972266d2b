#include "loopforge/monomial_order.hpp"

#include "loopforge/error.hpp"

namespace loopforge {

int MonomialOrder::compare(const Exponent* a, const Exponent* b, std::size_t n) const {
  switch (kind_) {
    case Kind::Grevlex:
      return grevlex_compare(a, b, n);
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case Kind::Block: {
      std::size_t f = front_ < n ? front_ : n;
      for (std::size_t i = 0; i < f; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return grevlex_compare(a + f, b + f, n - f);
    }
  }
  return 0;
}

std::size_t MonomialOrder::leading_index(const Polynomial& p) const {
  if (p.is_zero()) throw Error("leading term of the zero polynomial");
  if (kind_ == Kind::Grevlex) return 0;
  std::size_t best = 0;
  for (std::size_t t = 1; t < p.size(); ++t)
    if (compare(p.exponents(t).data(), p.exponents(best).data(), p.nvars()) > 0) best = t;
  return best;
}

Monomial MonomialOrder::leading_monomial(const Polynomial& p) const { return p.monomial(leading_index(p)); }

Rational MonomialOrder::leading_coefficient(const Polynomial& p) const {
  return p.coefficient(leading_index(p));
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::Block: return "block(" + std::to_string(front_) + ")";
  }
  return "?";
}

}  // namespace loopforge
