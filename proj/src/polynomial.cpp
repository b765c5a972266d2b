#include "loopforge/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "loopforge/deadline.hpp"
#include "loopforge/error.hpp"

namespace loopforge {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::pair<std::size_t, Exponent>> powers) {
  std::sort(powers.begin(), powers.end());
  for (auto& [var, e] : powers) {
    if (e == 0) continue;
    if (!powers_.empty() && powers_.back().first == var)
      powers_.back().second += e;
    else
      powers_.emplace_back(var, e);
  }
}

Monomial Monomial::from_dense(std::span<const Exponent> exponents) {
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0) m.powers_.emplace_back(i, exponents[i]);
  return m;
}

Exponent Monomial::exponent(std::size_t var) const {
  for (const auto& [v, e] : powers_)
    if (v == var) return e;
  return 0;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& p : powers_) d += p.second;
  return d;
}

std::vector<Exponent> Monomial::dense(std::size_t nvars) const {
  std::vector<Exponent> out(nvars, 0);
  for (const auto& [v, e] : powers_) {
    if (v >= nvars) throw Error("monomial variable index out of range");
    out[v] = e;
  }
  return out;
}

// ---------------------------------------------------------------- ordering

int grevlex_compare(const Exponent* a, const Exponent* b, std::size_t n) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = 0; i < n; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)), nvars_(ctx_->size()) {}

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& value) {
  Polynomial p(std::move(ctx));
  if (value != 0) {
    p.exps_.assign(p.nvars_, 0);
    p.coeffs_.push_back(value);
  }
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index) {
  Polynomial p(std::move(ctx));
  if (index >= p.nvars_) throw Error("variable index out of range");
  p.exps_.assign(p.nvars_, 0);
  p.exps_[index] = 1;
  p.coeffs_.emplace_back(1);
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::string_view name) {
  std::size_t i = ctx->require(name);
  return variable(std::move(ctx), i);
}

Polynomial Polynomial::term(ContextPtr ctx, const Monomial& m, const Rational& coeff) {
  Polynomial p(std::move(ctx));
  if (coeff == 0) return p;
  p.exps_ = m.dense(p.nvars_);
  p.coeffs_.push_back(coeff);
  return p;
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Exponent> exponents,
                                  std::vector<Rational> coeffs) {
  Polynomial p(std::move(ctx));
  const std::size_t n = p.nvars_;
  const std::size_t count = coeffs.size();
  if (exponents.size() != count * n) throw Error("from_terms: exponent rows do not match coefficients");
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  const Exponent* base = exponents.data();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return grevlex_compare(base + a * n, base + b * n, n) > 0;
  });
  p.exps_.reserve(count * n);
  p.coeffs_.reserve(count);
  std::size_t i = 0;
  while (i < count) {
    std::size_t j = i;
    Rational sum = std::move(coeffs[order[i]]);
    while (++j < count && grevlex_compare(base + order[i] * n, base + order[j] * n, n) == 0)
      sum += coeffs[order[j]];
    if (sum != 0) {
      p.exps_.insert(p.exps_.end(), base + order[i] * n, base + order[i] * n + n);
      p.coeffs_.push_back(std::move(sum));
    }
    i = j;
  }
  return p;
}

bool Polynomial::is_constant() const {
  if (coeffs_.empty()) return true;
  if (coeffs_.size() > 1) return false;
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Monomial Polynomial::monomial(std::size_t term) const { return Monomial::from_dense(exponents(term)); }

Rational Polynomial::coefficient_of(const Monomial& m) const {
  std::vector<Exponent> row = m.dense(nvars_);
  for (std::size_t t = 0; t < size(); ++t)
    if (std::equal(row.begin(), row.end(), exponents(t).begin())) return coeffs_[t];
  return 0;
}

Rational Polynomial::constant_term() const {
  // The constant monomial is the smallest in grevlex, hence last.
  if (coeffs_.empty()) return 0;
  auto last = exponents(size() - 1);
  if (std::all_of(last.begin(), last.end(), [](Exponent e) { return e == 0; })) return coeffs_.back();
  return 0;
}

Rational Polynomial::leading_coefficient() const {
  if (coeffs_.empty()) return 0;
  return coeffs_.front();
}

unsigned Polynomial::total_degree() const {
  unsigned best = 0;
  for (std::size_t t = 0; t < size(); ++t) {
    unsigned d = 0;
    for (Exponent e : exponents(t)) d += e;
    best = std::max(best, d);
  }
  return best;
}

Exponent Polynomial::degree_in(std::size_t var) const {
  Exponent best = 0;
  for (std::size_t t = 0; t < size(); ++t) best = std::max(best, exps_[t * nvars_ + var]);
  return best;
}

bool Polynomial::depends_on(std::size_t var) const { return degree_in(var) > 0; }

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars_; ++v)
    if (depends_on(v)) out.push_back(v);
  return out;
}

void Polynomial::require_same_context(const Polynomial& other) const {
  if (!same_context(ctx_, other.ctx_)) throw ContextMismatch();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial Polynomial::add_scaled(const Polynomial& other, bool negate) const {
  require_same_context(other);
  Polynomial r(ctx_);
  r.exps_.reserve(exps_.size() + other.exps_.size());
  r.coeffs_.reserve(size() + other.size());
  std::size_t i = 0, j = 0;
  const std::size_t n = nvars_;
  auto push = [&](const Exponent* row, Rational c) {
    r.exps_.insert(r.exps_.end(), row, row + n);
    r.coeffs_.push_back(std::move(c));
  };
  while (i < size() || j < other.size()) {
    int cmp;
    if (i == size())
      cmp = -1;
    else if (j == other.size())
      cmp = 1;
    else
      cmp = grevlex_compare(exps_.data() + i * n, other.exps_.data() + j * n, n);
    if (cmp > 0) {
      push(exps_.data() + i * n, coeffs_[i]);
      ++i;
    } else if (cmp < 0) {
      push(other.exps_.data() + j * n, negate ? Rational(-other.coeffs_[j]) : other.coeffs_[j]);
      ++j;
    } else {
      Rational c = negate ? Rational(coeffs_[i] - other.coeffs_[j]) : Rational(coeffs_[i] + other.coeffs_[j]);
      if (c != 0) push(exps_.data() + i * n, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) { return *this = add_scaled(other, false); }
Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this = add_scaled(other, true); }
Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_context(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ctx_);
  const std::size_t n = a.nvars_;
  if (b.size() == 1 && b.is_constant()) return a.scaled(b.coeffs_[0]);
  if (a.size() == 1 && a.is_constant()) return b.scaled(a.coeffs_[0]);
  std::vector<Exponent> rows;
  std::vector<Rational> coeffs;
  rows.reserve(a.size() * b.size() * n);
  coeffs.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((i & 63) == 0) check_deadline();
    const Exponent* ra = a.exps_.data() + i * n;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Exponent* rb = b.exps_.data() + j * n;
      for (std::size_t v = 0; v < n; ++v) rows.push_back(ra[v] + rb[v]);
      coeffs.push_back(a.coeffs_[i] * b.coeffs_[j]);
    }
  }
  return Polynomial::from_terms(a.ctx_, std::move(rows), std::move(coeffs));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(ctx_);
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ctx_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / coeffs_.front();
  return scaled(inv);
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer den = denominator_lcm(coeffs_);
  Integer g = 0;
  for (const auto& c : coeffs_) {
    Integer num = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  Rational factor(den, g);
  factor.canonicalize();
  if (coeffs_.front() < 0) factor = -factor;
  return scaled(factor);
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw Error("evaluate: point dimension does not match context");
  Rational sum = 0;
  Rational term;
  for (std::size_t t = 0; t < size(); ++t) {
    term = coeffs_[t];
    for (std::size_t v = 0; v < nvars_; ++v) {
      Exponent e = exps_[t * nvars_ + v];
      if (e == 0) continue;
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), point[v].get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), point[v].get_den_mpz_t(), e);
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::substitute_indices(const std::map<std::size_t, Rational>& bindings) const {
  if (bindings.empty()) return *this;
  for (const auto& b : bindings)
    if (b.first >= nvars_) throw Error("substitute: variable index out of range");
  std::vector<Exponent> rows;
  std::vector<Rational> coeffs;
  rows.reserve(exps_.size());
  coeffs.reserve(size());
  for (std::size_t t = 0; t < size(); ++t) {
    Rational c = coeffs_[t];
    const Exponent* row = exps_.data() + t * nvars_;
    std::size_t start = rows.size();
    rows.insert(rows.end(), row, row + nvars_);
    for (const auto& [v, value] : bindings) {
      Exponent e = row[v];
      if (e == 0) continue;
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), value.get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), value.get_den_mpz_t(), e);
      c *= pw;
      rows[start + v] = 0;
    }
    coeffs.push_back(std::move(c));
  }
  return from_terms(ctx_, std::move(rows), std::move(coeffs));
}

Polynomial Polynomial::substitute(const std::map<std::string, Rational>& bindings) const {
  std::map<std::size_t, Rational> by_index;
  for (const auto& [name, value] : bindings) by_index.emplace(ctx_->require(name), value);
  Polynomial evaluated = substitute_indices(by_index);
  std::vector<std::size_t> keep;
  std::vector<std::size_t> index_map(nvars_, 0);
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (by_index.count(v)) continue;
    index_map[v] = keep.size();
    keep.push_back(v);
  }
  return evaluated.remap(ctx_->restricted(keep), index_map);
}

Polynomial Polynomial::remap(ContextPtr target, std::span<const std::size_t> index_map) const {
  if (index_map.size() != nvars_) throw Error("remap: index map size mismatch");
  Polynomial r(target);
  const std::size_t m = r.nvars_;
  std::vector<Exponent> rows(size() * m, 0);
  for (std::size_t t = 0; t < size(); ++t)
    for (std::size_t v = 0; v < nvars_; ++v) {
      Exponent e = exps_[t * nvars_ + v];
      if (e == 0) continue;
      if (index_map[v] >= m) throw Error("remap: variable '" + ctx_->name(v) + "' has no image");
      rows[t * m + index_map[v]] += e;
    }
  return from_terms(std::move(target), std::move(rows), coeffs_);
}

Polynomial Polynomial::embed(ContextPtr target) const {
  if (same_context(ctx_, target)) {
    Polynomial r = *this;
    r.ctx_ = std::move(target);
    return r;
  }
  std::vector<std::size_t> index_map(nvars_, target->size());
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (auto j = target->index_of(ctx_->name(v)))
      index_map[v] = *j;
    else if (depends_on(v))
      throw Error("embed: variable '" + ctx_->name(v) + "' missing from target context");
  }
  return remap(std::move(target), index_map);
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t t = 0; t < size(); ++t) {
    const Rational& c = coeffs_[t];
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (t == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono;
    for (std::size_t v = 0; v < nvars_; ++v) {
      Exponent e = exps_[t * nvars_ + v];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_->name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      out += loopforge::to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += loopforge::to_string(mag) + "*" + mono;
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_context(a.ctx_, b.ctx_)) return false;
  return a.exps_ == b.exps_ && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------- helpers

std::vector<CoefficientEntry> coefficients_wrt(const Polynomial& p, std::span<const std::size_t> vars) {
  const std::size_t n = p.nvars();
  std::vector<bool> selected(n, false);
  for (std::size_t v : vars) {
    if (v >= n) throw Error("coefficients_wrt: variable index out of range");
    selected[v] = true;
  }
  // Group terms by their restriction to `vars`.
  std::vector<std::vector<Exponent>> keys;
  std::vector<std::vector<Exponent>> rows;
  std::vector<std::vector<Rational>> coeffs;
  std::map<std::vector<Exponent>, std::size_t> slot;
  for (std::size_t t = 0; t < p.size(); ++t) {
    auto e = p.exponents(t);
    std::vector<Exponent> key(n, 0), rest(e.begin(), e.end());
    for (std::size_t v = 0; v < n; ++v)
      if (selected[v]) {
        key[v] = e[v];
        rest[v] = 0;
      }
    auto [it, inserted] = slot.emplace(key, keys.size());
    if (inserted) {
      keys.push_back(key);
      rows.emplace_back();
      coeffs.emplace_back();
    }
    rows[it->second].insert(rows[it->second].end(), rest.begin(), rest.end());
    coeffs[it->second].push_back(p.coefficient(t));
  }
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return grevlex_compare(keys[a].data(), keys[b].data(), n) > 0;
  });
  std::vector<CoefficientEntry> out;
  for (std::size_t k : order) {
    Polynomial c = Polynomial::from_terms(p.context(), std::move(rows[k]), std::move(coeffs[k]));
    if (!c.is_zero()) out.push_back({Monomial::from_dense(keys[k]), std::move(c)});
  }
  return out;
}

bool proportional(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return p.monic() == q.monic();
}

}  // namespace loopforge
