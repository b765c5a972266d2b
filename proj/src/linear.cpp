#include "loopforge/linear.hpp"

#include "loopforge/deadline.hpp"
#include "loopforge/error.hpp"

namespace loopforge {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

// In-place Bareiss elimination to row echelon form over the first `cols`
// columns; returns the pivot columns.
std::vector<std::size_t> bareiss(IntMatrix& A, std::size_t cols) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < A.size(); ++c) {
    check_deadline();
    std::size_t r = rank;
    while (r < A.size() && A[r][c] == 0) ++r;
    if (r == A.size()) continue;
    std::swap(A[r], A[rank]);
    for (std::size_t i = rank + 1; i < A.size(); ++i) {
      for (std::size_t j = c + 1; j < A[i].size(); ++j) {
        A[i][j] = A[rank][c] * A[i][j] - A[i][c] * A[rank][j];
        mpz_divexact(A[i][j].get_mpz_t(), A[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      A[i][c] = 0;
    }
    // Rows above the pivot were not updated in this step; they still share
    // the older denominators, which back substitution handles with rationals.
    prev = A[rank][c];
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

LinearSolution solve_linear_system(const ContextPtr& ctx, const PolynomialSeq& eqs) {
  const std::size_t n = ctx->size();
  IntMatrix A;
  for (const auto& e : eqs) {
    if (!same_context(e.context(), ctx)) throw ContextMismatch();
    if (e.is_zero()) continue;
    if (e.total_degree() > 1) throw Error("linear solve: equation of degree > 1: " + e.to_string());
    Integer den = 1;
    for (std::size_t t = 0; t < e.size(); ++t)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.coefficient(t).get_den_mpz_t());
    std::vector<Integer> row(n + 1, 0);
    for (std::size_t t = 0; t < e.size(); ++t) {
      Rational c = e.coefficient(t) * den;
      auto ex = e.exponents(t);
      std::size_t var = n;
      for (std::size_t v = 0; v < n; ++v)
        if (ex[v]) var = v;
      // Constant moves to the right-hand side.
      row[var] = var == n ? Integer(-c.get_num()) : Integer(c.get_num());
    }
    A.push_back(std::move(row));
  }
  LinearSolution out;
  out.pivots = bareiss(A, n);
  const std::size_t rank = out.pivots.size();
  for (std::size_t r = rank; r < A.size(); ++r)
    if (A[r][n] != 0) return out;
  out.feasible = true;

  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : out.pivots) is_pivot[p] = true;
  auto back_substitute = [&](RationalVector x, bool homogeneous) {
    for (std::size_t k = rank; k-- > 0;) {
      const std::size_t p = out.pivots[k];
      Rational s = homogeneous ? Rational(0) : Rational(A[k][n]);
      for (std::size_t j = p + 1; j < n; ++j)
        if (A[k][j] != 0) s -= Rational(A[k][j]) * x[j];
      x[p] = s / Rational(A[k][p]);
    }
    return x;
  };
  out.particular = back_substitute(RationalVector(n, 0), false);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(n, 0);
    x[f] = 1;
    out.nullspace.push_back(back_substitute(std::move(x), true));
  }
  return out;
}

std::optional<RationalVector> solve_linear(const ContextPtr& ctx, const PolynomialSeq& eqs) {
  LinearSolution s = solve_linear_system(ctx, eqs);
  if (!s.feasible) return std::nullopt;
  return s.particular;
}

std::vector<RationalVector> nullspace_basis(const ContextPtr& ctx, const PolynomialSeq& eqs) {
  LinearSolution s = solve_linear_system(ctx, eqs);
  if (!s.feasible) throw Error("nullspace_basis: inconsistent system");
  return s.nullspace;
}

std::size_t rank_of(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t n = vectors.front().size();
  IntMatrix A;
  for (const auto& v : vectors) {
    if (v.size() != n) throw Error("rank_of: vectors of different lengths");
    Integer den = denominator_lcm(v);
    std::vector<Integer> row;
    for (const auto& x : v) row.push_back(Integer(x * den));
    A.push_back(std::move(row));
  }
  return bareiss(A, n).size();
}

}  // namespace loopforge
