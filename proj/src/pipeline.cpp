#include "loopforge/pipeline.hpp"

#include <chrono>

#include "loopforge/deadline.hpp"

namespace loopforge {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Unknowns the nonzero requirement ranges over.
std::vector<std::size_t> coefficient_ids(const PolynomialSystem& sys) {
  auto ids = sys.unknowns->indices_of(VarClass::Coefficient);
  if (ids.empty())
    for (std::size_t k = 0; k < sys.unknowns->size(); ++k) ids.push_back(k);
  return ids;
}

bool satisfies_policy(const PolynomialSystem& sys, const RationalVector& pt, NonzeroPolicy policy) {
  auto any_nonzero = [&](const std::vector<std::size_t>& ids) {
    for (std::size_t id : ids)
      if (pt[id] != 0) return true;
    return ids.empty();
  };
  switch (policy) {
    case NonzeroPolicy::Any:
      return any_nonzero(coefficient_ids(sys));
    case NonzeroPolicy::PerBranch:
      for (const auto& ids : sys.branch_unknowns)
        if (!any_nonzero(ids)) return false;
      return true;
    case NonzeroPolicy::None:
    case NonzeroPolicy::Custom:
      return true;
  }
  return true;
}

Assignment to_assignment(const ContextPtr& unknowns, const RationalVector& pt) {
  Assignment a;
  for (std::size_t k = 0; k < pt.size(); ++k) a[unknowns->name(k)] = pt[k];
  return a;
}

std::string exclusion(const PolynomialSystem& sys, const Assignment& model, NumberSort sort) {
  std::string s = "(assert (not (and";
  for (std::size_t id : coefficient_ids(sys)) {
    const std::string& name = sys.unknowns->name(id);
    s += " (= " + name + " " + smt_literal(model.at(name), sort) + ")";
  }
  return s + ")))";
}

struct Found {
  std::string status;
  std::optional<Assignment> model;
  std::string detail;
};

Found solve_smt(const ProblemFile& file, const PolynomialSystem& sys, const PipelineOptions& opt) {
  const auto start = Clock::now();
  SmtJob job{sys, opt.sort, opt.nonzero, {}, opt.timeout_seconds};
  std::optional<Assignment> identity_model;
  for (std::size_t attempt = 0;; ++attempt) {
    job.timeout_seconds = std::max(0.5, opt.timeout_seconds - seconds_since(start));
    SolveOutcome out = run_smt(job, opt.solver_command);
    if (out.status != SolveStatus::Sat) {
      if (!identity_model) {
        return {out.status == SolveStatus::Timeout ? "TL" : std::string(to_string(out.status)), std::nullopt, ""};
      }
      if (out.status == SolveStatus::Unsat) return {"Id", identity_model, "the identity is the only loop"};
      return {"sat", identity_model,
              "identity loop; the search for another ended with " + std::string(to_string(out.status))};
    }
    ConcreteLoop loop = instantiate_loop(file.problem, out.model);
    if (!is_identity(loop) || attempt >= opt.identity_retries) return {"sat", out.model, ""};
    identity_model = out.model;
    job.custom_assertions.push_back(exclusion(sys, out.model, opt.sort));
  }
}

Found solve_zero_dim(const ProblemFile& file, const PolynomialSystem& sys, const PipelineOptions& opt) {
  ScopedDeadline deadline(std::chrono::duration<double>(opt.timeout_seconds));
  FinitenessReport f = classify_finiteness(sys);
  if (f.kind == Finiteness::Empty) return {"unsat", std::nullopt, "no complex solutions"};
  if (f.kind == Finiteness::Infinite)
    return {"unknown", std::nullopt, "infinitely many solutions; the zero-dimensional back end does not apply"};
  std::optional<Assignment> identity_model;
  for (const auto& pt : solve_zero_dim_rational(sys)) {
    if (!satisfies_policy(sys, pt, opt.nonzero)) continue;
    if (opt.sort == NumberSort::Int) {
      bool integral = true;
      for (const auto& v : pt) integral = integral && v.get_den() == 1;
      if (!integral) continue;
    }
    Assignment a = to_assignment(sys.unknowns, pt);
    if (!is_identity(instantiate_loop(file.problem, a))) return {"sat", a, ""};
    if (!identity_model) identity_model = a;
  }
  if (identity_model) return {"Id", identity_model, "the identity is the only loop"};
  return {"unsat", std::nullopt, "no admissible rational point among " + std::to_string(f.count) + " solutions"};
}

std::string join_failures(const std::vector<VerificationReport>& checks) {
  std::string s;
  for (const auto& c : checks)
    if (!c.pass) s += (s.empty() ? "" : "; ") + c.to_string();
  return s;
}

}  // namespace

bool is_identity(const ConcreteLoop& loop) {
  for (const auto& F : loop.maps) {
    auto comps = F.components();
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (comps[j] != Polynomial::variable(loop.program, j)) return false;
  }
  return true;
}

std::vector<VerificationReport> verify_loop(const ConcreteLoop& loop, const PolynomialSeq& g, bool universal,
                                            const PipelineOptions& options) {
  std::vector<VerificationReport> out;
  if (universal) out.push_back(verify_universal(loop, g));
  if (loop.initial) {
    PolynomialSeq shifted = g;
    // A universal invariant g promises g(x) = g(a) along every run.
    if (universal)
      for (auto& p : shifted) p -= Polynomial::constant(loop.program, p.evaluate(*loop.initial));
    out.push_back(verify_invariants(loop, shifted, options.max_rounds));
    out.push_back(simulate_loop(loop, shifted, options.simulation_steps, options.word_limit, options.seed));
  }
  return out;
}

PipelineResult run_pipeline(const ProblemFile& file, const PipelineOptions& opt) {
  PipelineResult r;
  r.shape = file.shape();
  r.mode = file.mode;
  const bool universal = file.mode != ProblemMode::General;
  const SynthesisProblem& prob = file.problem;

  auto verify = [&](const ConcreteLoop& loop) {
    try {
      ScopedDeadline deadline(std::chrono::duration<double>(opt.timeout_seconds));
      r.checks = verify_loop(loop, prob.invariants, universal || !loop.initial, opt);
      bool ok = !r.checks.empty();
      for (const auto& c : r.checks) ok = ok && c.pass;
      r.verdict = ok ? "pass" : "fail";
      if (!ok) r.detail += (r.detail.empty() ? "" : "; ") + join_failures(r.checks);
    } catch (const std::exception& e) {
      r.verdict = "fail";
      r.detail += std::string(r.detail.empty() ? "" : "; ") + "verification did not complete: " + e.what();
    }
  };

  if (file.is_concrete()) {
    r.loop = file.loop;
    verify(*file.loop);
    return r;
  }

  const auto gen_start = Clock::now();
  try {
    ScopedDeadline deadline(std::chrono::duration<double>(opt.timeout_seconds));
    if (file.mode == ProblemMode::General) {
      r.system = generate_loops(prob, {opt.max_rounds, false});
    } else if (file.mode == ProblemMode::Universal) {
      r.system = compute_loops_universal(prob.program, prob.invariants, prob.templ);
    } else {
      r.affine = compute_loops_linear_universal(prob.program, prob.invariants, prob.templ);
      r.system = r.affine->system;
    }
    r.generation = "ok";
  } catch (const TimeLimitExceeded&) {
    r.generation = "TL";
  } catch (const std::exception& e) {
    r.generation = "error";
    r.detail = e.what();
  }
  r.generation_time = seconds_since(gen_start);
  if (r.generation != "ok") {
    if (opt.solve) r.status = r.generation == "TL" ? "NI" : "error";
    return r;
  }

  if (opt.finiteness) {
    try {
      ScopedDeadline deadline(std::chrono::duration<double>(opt.timeout_seconds));
      r.finiteness = classify_finiteness(*r.system);
    } catch (const TimeLimitExceeded&) {
      r.detail = "finiteness check timed out";
    }
  }
  if (!opt.solve) return r;

  const auto solve_start = Clock::now();
  Found found;
  try {
    if (r.affine) {
      if (!r.affine->feasible) {
        found = {"unsat", std::nullopt, "the linear system is inconsistent"};
      } else {
        found = {"sat", to_assignment(r.affine->unknowns, r.affine->particular), ""};
        if (r.affine->dimension() == 0 && is_identity(instantiate_loop(prob, *found.model))) found.status = "Id";
      }
    } else if (r.system->equations.empty()) {
      // Nothing constrains the unknowns: any values give a valid loop.
      Assignment ones;
      for (const auto& name : r.system->unknowns->names()) ones[name] = 1;
      found = {"sat", ones, "the generated system is empty"};
    } else if (opt.backend == Backend::ZeroDim) {
      found = solve_zero_dim(file, *r.system, opt);
    } else {
      found = solve_smt(file, *r.system, opt);
    }
  } catch (const TimeLimitExceeded&) {
    found = {"TL", std::nullopt, ""};
  } catch (const std::exception& e) {
    found = {"error", std::nullopt, e.what()};
  }
  r.solve_time = seconds_since(solve_start);
  r.status = found.status;
  if (!found.detail.empty()) r.detail += (r.detail.empty() ? "" : "; ") + found.detail;
  if (!found.model) return r;
  r.model = found.model;
  r.loop = instantiate_loop(prob, *found.model);
  verify(*r.loop);
  return r;
}

}  // namespace loopforge
