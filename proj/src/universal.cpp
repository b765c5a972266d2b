#include "loopforge/universal.hpp"

#include <set>

#include "loopforge/error.hpp"

namespace loopforge {

PolynomialSystem compute_loops_universal(const ContextPtr& program, const PolynomialSeq& g,
                                         const LoopTemplate& templ) {
  SynthesisProblem prob;
  prob.program = program;
  prob.invariants = g;
  prob.templ = templ;
  prob.validate();
  UnknownNaming names = naming_for(program);
  const std::size_t n = program->size();
  const std::size_t M = templ.unknown_count();

  std::vector<VarContext::Var> vars = program->vars();
  std::vector<VarContext::Var> unknown_vars;
  for (std::size_t k = 0; k < M; ++k) {
    vars.push_back({names.coefficient(k), VarClass::Coefficient});
    unknown_vars.push_back(vars.back());
  }
  ContextPtr ext = VarContext::create(std::move(vars));
  PolynomialSystem sys;
  sys.unknowns = VarContext::create(std::move(unknown_vars));
  std::vector<std::size_t> to_unknown(n + M, n + M);
  for (std::size_t k = 0; k < M; ++k) to_unknown[n + k] = k;
  std::vector<std::size_t> xs(n);
  for (std::size_t j = 0; j < n; ++j) xs[j] = j;

  std::set<std::string> seen;
  std::size_t next = 0;
  for (std::size_t b = 0; b < templ.branches.size(); ++b) {
    std::vector<Polynomial> comps;
    std::vector<std::size_t> ids;
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial c = templ.fixed_part(b, j, ext);
      for (const auto& f : templ.branches[b][j]) {
        ids.push_back(next);
        c += Polynomial::variable(ext, n + next++) * f.embed(ext);
      }
      comps.push_back(std::move(c));
    }
    sys.branch_unknowns.push_back(std::move(ids));
    PolyMap F(ext, std::move(comps));
    for (std::size_t i = 0; i < g.size(); ++i) {
      Polynomial gi = g[i].embed(ext);
      for (const auto& entry : coefficients_wrt(F.apply(gi) - gi, xs)) {
        Polynomial eq = entry.coefficient.remap(sys.unknowns, to_unknown);
        if (eq.is_zero()) continue;
        if (!seen.insert(eq.monic().to_string()).second) continue;
        sys.equations.push_back(std::move(eq));
        sys.provenance.push_back({1, i, {b}});
      }
    }
  }
  sys.rounds = 1;
  return sys;
}

AffineSpace compute_loops_linear_universal(const ContextPtr& program, const PolynomialSeq& g,
                                           const LoopTemplate& templ) {
  for (const auto& p : g)
    if (p.total_degree() > 1) throw Error("affine universal synthesis needs invariants of degree <= 1: " + p.to_string());
  AffineSpace out;
  out.system = compute_loops_universal(program, g, templ);
  out.unknowns = out.system.unknowns;
  out.ambient_dim = out.unknowns->size();
  LinearSolution s = solve_linear_system(out.unknowns, out.system.equations);
  out.feasible = s.feasible;
  if (s.feasible) {
    out.particular = std::move(s.particular);
    out.basis = std::move(s.nullspace);
  }
  return out;
}

bool AffineSpace::contains(const RationalVector& x) const {
  if (!feasible || x.size() != ambient_dim) return false;
  std::vector<RationalVector> span = basis;
  RationalVector diff(ambient_dim);
  for (std::size_t k = 0; k < ambient_dim; ++k) diff[k] = x[k] - particular[k];
  const std::size_t r = rank_of(span);
  span.push_back(std::move(diff));
  return rank_of(span) == r;
}

std::string AffineSpace::to_string() const {
  if (!feasible) return "no loop with this structure: the linear system is inconsistent\n";
  auto vec = [](const RationalVector& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + loopforge::to_string(v[k]);
    return s + ")";
  };
  std::string s = "unknowns:";
  for (const auto& name : unknowns->names()) s += " " + name;
  s += "\nambient dimension: " + std::to_string(ambient_dim) + "\n";
  s += "solution dimension: " + std::to_string(dimension()) + "\n";
  s += "particular: " + vec(particular) + "\n";
  s += "basis:\n";
  for (const auto& b : basis) s += "  " + vec(b) + "\n";
  if (basis.empty()) s += "  (none: the particular solution is the only loop)\n";
  return s;
}

}  // namespace loopforge
