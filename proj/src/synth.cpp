#include "loopforge/synth.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "loopforge/error.hpp"
#include "loopforge/groebner.hpp"

namespace loopforge {

std::size_t LoopTemplate::unknown_count() const {
  std::size_t n = 0;
  for (const auto& branch : branches)
    for (const auto& gens : branch) n += gens.size();
  return n;
}

Polynomial LoopTemplate::fixed_part(std::size_t i, std::size_t j, const ContextPtr& target) const {
  if (fixed.empty()) return Polynomial(target);
  return fixed.at(i).at(j).embed(target);
}

namespace {

bool only_program_vars(const Polynomial& p) {
  const auto& ctx = *p.context();
  for (std::size_t v : p.support())
    if (ctx.var_class(v) != VarClass::Program) return false;
  return true;
}

bool is_prefix_plus_digits(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return false;
  return std::all_of(name.begin() + static_cast<long>(prefix.size()), name.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

void SynthesisProblem::validate() const {
  if (!program || program->size() == 0) throw Error("problem has no program variables");
  for (std::size_t v = 0; v < program->size(); ++v)
    if (program->var_class(v) != VarClass::Program) throw Error("problem context may only hold program variables");
  if (invariants.empty()) throw Error("problem has no invariants");
  auto check = [&](const Polynomial& p, const char* what) {
    if (!same_context(p.context(), program)) throw Error(std::string(what) + " is not over the program variables");
    if (!only_program_vars(p)) throw Error(std::string(what) + " mentions non-program variables");
  };
  for (const auto& g : invariants) {
    check(g, "invariant");
    if (g.is_zero()) throw Error("the zero polynomial is not a meaningful invariant");
  }
  switch (guard_kind) {
    case GuardKind::None:
      break;
    case GuardKind::Concrete:
      if (!guard) throw Error("concrete guard missing");
      check(*guard, "guard");
      break;
    case GuardKind::Template:
      if (guard_template.empty()) throw Error("guard template is empty");
      for (const auto& h : guard_template) check(h, "guard template entry");
      break;
  }
  if (initial && initial->size() != program->size())
    throw Error("initial value has " + std::to_string(initial->size()) + " entries, expected " +
                std::to_string(program->size()));
  if (templ.branches.empty()) throw Error("template has no branches");
  for (const auto& branch : templ.branches) {
    if (branch.size() != program->size()) throw Error("every branch needs one generator list per program variable");
    for (const auto& gens : branch)
      for (const auto& f : gens) check(f, "template generator");
  }
  if (!templ.fixed.empty()) {
    if (templ.fixed.size() != templ.branches.size()) throw Error("known update parts must cover every branch");
    for (const auto& parts : templ.fixed) {
      if (parts.size() != program->size()) throw Error("every branch needs one known update part per program variable");
      for (const auto& f : parts) check(f, "known update part");
    }
  }
}

UnknownNaming naming_for(const ContextPtr& program) {
  std::set<std::string> taken;
  auto pick = [&](std::initializer_list<const char*> candidates) {
    for (const char* c : candidates) {
      std::string prefix = c;
      if (taken.count(prefix)) continue;
      bool clash = false;
      for (const auto& name : program->names()) clash = clash || is_prefix_plus_digits(name, prefix);
      if (!clash) {
        taken.insert(prefix);
        return prefix;
      }
    }
    throw Error("cannot find unused names for generated unknowns");
  };
  UnknownNaming n;
  n.coefficient_prefix = pick({"y", "c", "lam", "coef_y"});
  n.initial_prefix = pick({"a", "init", "init_a"});
  n.guard_prefix = pick({"w", "gw", "guard_w"});
  for (const char* c : {"z", "zz", "z_flag", "guard_flag_z"}) {
    bool clash = program->index_of(c).has_value();
    for (const auto& p : taken) clash = clash || is_prefix_plus_digits(c, p);
    if (!clash) {
      n.guard_flag = c;
      break;
    }
  }
  if (n.guard_flag.empty()) throw Error("cannot find an unused name for the guard flag");
  return n;
}

ExtendedMaps build_extended_maps(const SynthesisProblem& prob) {
  prob.validate();
  ExtendedMaps out;
  out.naming = naming_for(prob.program);
  const std::size_t n = prob.program->size();
  std::vector<VarContext::Var> vars = prob.program->vars();
  const std::size_t M = prob.templ.unknown_count();
  for (std::size_t k = 0; k < M; ++k) vars.push_back({out.naming.coefficient(k), VarClass::Coefficient});
  out.guard_flag = vars.size();
  vars.push_back({out.naming.guard_flag, VarClass::GuardFlag});
  if (prob.guard_kind == GuardKind::Template)
    for (std::size_t q = 0; q < prob.guard_template.size(); ++q) {
      out.guard_coeffs.push_back(vars.size());
      vars.push_back({out.naming.guard_coeff(q), VarClass::GuardCoeff});
    }
  out.ctx = VarContext::create(std::move(vars));

  Polynomial h = Polynomial::constant(out.ctx, 1);
  if (prob.guard_kind == GuardKind::Concrete) h = prob.guard->embed(out.ctx);
  if (prob.guard_kind == GuardKind::Template) {
    h = Polynomial(out.ctx);
    for (std::size_t q = 0; q < prob.guard_template.size(); ++q)
      h += Polynomial::variable(out.ctx, out.guard_coeffs[q]) * prob.guard_template[q].embed(out.ctx);
  }
  Polynomial z = Polynomial::variable(out.ctx, out.guard_flag);

  std::size_t next = n;
  for (std::size_t b = 0; b < prob.templ.branches.size(); ++b) {
    const auto& branch = prob.templ.branches[b];
    std::vector<Polynomial> comps;
    std::vector<std::vector<std::size_t>> idx(n);
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial c = prob.templ.fixed_part(b, j, out.ctx);
      for (const auto& f : branch[j]) {
        idx[j].push_back(next);
        c += Polynomial::variable(out.ctx, next++) * f.embed(out.ctx);
      }
      comps.push_back(std::move(c));
    }
    PolyMap H(out.ctx, std::move(comps));
    if (h.is_constant() && h.constant_term() == 1) {
      // z*1 = z: leave the flag as an identity coordinate.
    } else {
      H = H.with_image(out.guard_flag, z * h);
    }
    out.maps.push_back(std::move(H));
    out.coefficient.push_back(std::move(idx));
  }
  return out;
}

std::string PolynomialSystem::to_string() const {
  std::string s = "unknowns:";
  for (const auto& name : unknowns->names()) s += " " + name;
  s += "\nequations: " + std::to_string(equations.size()) + "\n";
  for (const auto& e : equations) s += "  " + e.to_string() + "\n";
  return s;
}

PolynomialSeq interreduce_system(const ContextPtr& ctx, const PolynomialSeq& eqs, std::vector<std::size_t>* kept) {
  std::vector<bool> keep(eqs.size(), true);
  // Later equations are tried first: they are usually the larger ones.
  for (std::size_t k = eqs.size(); k-- > 0;) {
    PolynomialSeq others;
    for (std::size_t o = 0; o < eqs.size(); ++o)
      if (o != k && keep[o]) others.push_back(eqs[o]);
    if (buchberger(ctx, others).contains(eqs[k])) keep[k] = false;
  }
  PolynomialSeq out;
  if (kept) kept->clear();
  for (std::size_t k = 0; k < eqs.size(); ++k)
    if (keep[k]) {
      out.push_back(eqs[k]);
      if (kept) kept->push_back(k);
    }
  return out;
}

PolynomialSystem generate_loops(const SynthesisProblem& prob, const GenerateOptions& options) {
  ExtendedMaps ext = build_extended_maps(prob);
  const std::size_t n = prob.program->size();
  Polynomial z = Polynomial::variable(ext.ctx, ext.guard_flag);
  PolynomialSeq seeds;
  for (const auto& g : prob.invariants) seeds.push_back(z * g.embed(ext.ctx));
  InvariantSetResult inv = invariant_set_branch(seeds, ext.maps, options.max_rounds);

  // Unknown context: [a1..an,] y1..yM [, w1..wr].
  std::vector<VarContext::Var> vars;
  std::vector<std::size_t> to_unknown(ext.ctx->size(), ext.ctx->size());
  if (!prob.initial)
    for (std::size_t j = 0; j < n; ++j) {
      to_unknown[j] = vars.size();
      vars.push_back({ext.naming.initial(j), VarClass::Initial});
    }
  const std::size_t M = prob.templ.unknown_count();
  for (std::size_t k = 0; k < M; ++k) {
    to_unknown[n + k] = vars.size();
    vars.push_back({ext.ctx->name(n + k), VarClass::Coefficient});
  }
  for (std::size_t w : ext.guard_coeffs) {
    to_unknown[w] = vars.size();
    vars.push_back({ext.ctx->name(w), VarClass::GuardCoeff});
  }

  PolynomialSystem sys;
  sys.unknowns = VarContext::create(std::move(vars));
  sys.rounds = inv.rounds;
  for (const auto& branch : ext.coefficient) {
    std::vector<std::size_t> ids;
    for (const auto& per_var : branch)
      for (std::size_t idx : per_var) ids.push_back(to_unknown[idx]);
    sys.branch_unknowns.push_back(std::move(ids));
  }

  std::map<std::size_t, Rational> bindings{{ext.guard_flag, Rational(1)}};
  if (prob.initial)
    for (std::size_t j = 0; j < n; ++j) bindings[j] = (*prob.initial)[j];
  for (std::size_t k = 0; k < inv.generators.size(); ++k) {
    Polynomial p = inv.generators[k].substitute_indices(bindings);
    if (p.is_zero()) continue;
    sys.equations.push_back(p.remap(sys.unknowns, to_unknown));
    sys.provenance.push_back(inv.origins[k]);
  }
  if (options.interreduce) {
    std::vector<std::size_t> kept;
    sys.equations = interreduce_system(sys.unknowns, sys.equations, &kept);
    std::vector<Origin> prov;
    for (std::size_t k : kept) prov.push_back(sys.provenance[k]);
    sys.provenance = std::move(prov);
  }
  return sys;
}

std::string ConcreteLoop::to_string() const {
  std::string s;
  if (initial) {
    s += "initial:";
    for (const auto& v : *initial) s += " " + loopforge::to_string(v);
    s += "\n";
  }
  s += "guard: " + guard.to_string() + " != 0\n";
  for (std::size_t i = 0; i < maps.size(); ++i) {
    s += "branch " + std::to_string(i + 1) + ":\n";
    auto comps = maps[i].components();
    for (std::size_t j = 0; j < comps.size(); ++j) s += "  " + program->name(j) + " <- " + comps[j].to_string() + "\n";
  }
  return s;
}

ConcreteLoop instantiate_loop(const SynthesisProblem& prob, const Assignment& solution) {
  prob.validate();
  UnknownNaming names = naming_for(prob.program);
  auto value = [&](const std::string& name) -> const Rational& {
    auto it = solution.find(name);
    if (it == solution.end()) throw Error("solution does not bind unknown '" + name + "'");
    return it->second;
  };
  ConcreteLoop loop{prob.program, std::nullopt, Polynomial::constant(prob.program, 1), {}};
  const std::size_t n = prob.program->size();
  if (prob.initial) {
    loop.initial = prob.initial;
  } else {
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) any = any || solution.count(names.initial(j));
    if (any) {
      std::vector<Rational> a;
      for (std::size_t j = 0; j < n; ++j) a.push_back(value(names.initial(j)));
      loop.initial = std::move(a);
    }
  }
  if (prob.guard_kind == GuardKind::Concrete) loop.guard = *prob.guard;
  if (prob.guard_kind == GuardKind::Template) {
    loop.guard = Polynomial(prob.program);
    for (std::size_t q = 0; q < prob.guard_template.size(); ++q)
      loop.guard += prob.guard_template[q].scaled(value(names.guard_coeff(q)));
  }
  std::size_t k = 0;
  for (std::size_t b = 0; b < prob.templ.branches.size(); ++b) {
    const auto& branch = prob.templ.branches[b];
    std::vector<Polynomial> comps;
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial c = prob.templ.fixed_part(b, j, prob.program);
      for (const auto& f : branch[j]) c += f.scaled(value(names.coefficient(k++)));
      comps.push_back(std::move(c));
    }
    loop.maps.emplace_back(prob.program, std::move(comps));
  }
  return loop;
}

}  // namespace loopforge
