#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "loopforge/bench.hpp"
#include "loopforge/pipeline.hpp"

namespace loopforge::cli {

namespace {

struct Flags {
  std::string path;
  bool solve = false;
  std::string solver_cmd;
  double timeout = 300;
  std::string sort = "int";
  std::string nonzero = "any";
  std::string emit_smt;
  bool finiteness = false;
  std::size_t max_rounds = kDefaultMaxRounds;
  std::size_t jobs = 0;
  std::uint64_t seed = 1;
  std::string backend = "smt";
  bool explain = false;
  std::string records;
  std::size_t steps = 8;
};

PipelineOptions options_from(const Flags& f) {
  PipelineOptions o;
  o.timeout_seconds = f.timeout;
  o.solver_command = f.solver_cmd.empty() ? default_solver_command() : f.solver_cmd;
  o.sort = f.sort == "real" ? NumberSort::Real : NumberSort::Int;
  o.nonzero = f.nonzero == "per-branch" ? NonzeroPolicy::PerBranch
              : f.nonzero == "none"     ? NonzeroPolicy::None
                                        : NonzeroPolicy::Any;
  o.backend = f.backend == "zero-dim" ? Backend::ZeroDim : Backend::Smt;
  o.max_rounds = f.max_rounds;
  o.solve = f.solve;
  o.finiteness = f.finiteness;
  o.seed = f.seed;
  o.simulation_steps = f.steps;
  return o;
}

void print_checks(const PipelineResult& r, std::ostream& out) {
  for (const auto& c : r.checks) out << c.to_string() << "\n";
  out << "verdict: " << r.verdict << "\n";
}

std::string word_text(const std::vector<std::size_t>& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k] + 1);
  return "[" + s + "]";
}

int cmd_synth(const Flags& f, std::ostream& out, std::ostream& err) {
  ProblemFile file = load_problem(f.path);
  if (file.is_concrete()) {
    err << "error: " << f.path << " describes a concrete loop; use 'check'\n";
    return 2;
  }
  PipelineOptions opt = options_from(f);
  PipelineResult r = run_pipeline(file, opt);
  out << "problem: " << f.path << " (mode " << to_string(r.mode) << ")\n";
  if (r.generation != "ok") {
    out << "generation: " << r.generation;
    if (r.generation == "TL") out << " (time limit " << f.timeout << " s)";
    out << "\n";
    if (!r.detail.empty()) err << "error: " << r.detail << "\n";
    return r.generation == "TL" ? 1 : 2;
  }
  out << "generation: ok, " << r.system->rounds << " round(s)\n";
  if (r.affine)
    out << r.affine->to_string();
  else
    out << r.system->to_string();
  if (f.explain) {
    out << "provenance:\n";
    for (std::size_t k = 0; k < r.system->provenance.size(); ++k) {
      const Origin& o = r.system->provenance[k];
      out << "  " << k + 1 << ": round " << o.round << ", invariant " << o.seed + 1 << ", word " << word_text(o.word)
          << "\n";
    }
  }
  if (r.finiteness) out << "solutions: " << r.finiteness->to_string() << "\n";
  if (!f.emit_smt.empty()) {
    if (r.system->equations.empty()) {
      err << "error: the generated system is empty; no SMT problem written\n";
      return 2;
    }
    SmtJob job{*r.system, opt.sort, opt.nonzero, {}, opt.timeout_seconds};
    std::string text = emit_smtlib(job);
    if (f.emit_smt == "-") {
      out << text;
    } else {
      std::ofstream smt(f.emit_smt);
      if (!(smt << text)) {
        err << "error: cannot write " << f.emit_smt << "\n";
        return 2;
      }
    }
  }
  if (!f.solve) return 0;
  out << "status: " << r.status;
  if (r.model) out << " (" << (r.affine ? "linear algebra" : f.backend) << ", " << r.solve_time << " s)";
  out << "\n";
  if (!r.detail.empty()) out << "note: " << r.detail << "\n";
  if (r.status == "error") return 2;
  if (!r.model) return 1;
  out << "model:";
  for (const auto& [name, value] : *r.model) out << " " << name << "=" << to_string(value);
  out << "\nloop:\n" << r.loop->to_string();
  print_checks(r, out);
  return r.verified() ? 0 : 1;
}

int cmd_check(const Flags& f, std::ostream& out, std::ostream& err) {
  ProblemFile file = load_problem(f.path);
  if (!file.is_concrete()) {
    err << "error: " << f.path << " holds a template; 'check' needs concrete updates 'xj <- poly'\n";
    return 2;
  }
  PipelineResult r = run_pipeline(file, options_from(f));
  out << "loop:\n" << file.loop->to_string();
  print_checks(r, out);
  return r.verified() ? 0 : 1;
}

int cmd_bench(const Flags& f, std::ostream& out, std::ostream& err) {
  Flags g = f;
  g.solve = true;
  BenchReport report = run_bench(f.path, options_from(g), f.jobs);
  out << report.table();
  if (!f.records.empty()) {
    if (f.records == "-") {
      out << report.records();
    } else {
      std::ofstream rec(f.records);
      if (!(rec << report.records())) {
        err << "error: cannot write " << f.records << "\n";
        return 2;
      }
    }
  }
  for (const auto& row : report.rows)
    if (row.result.model && !row.result.verified()) return 1;
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial loop synthesis from invariants", "loopforge"};
  app.require_subcommand(1);
  Flags f;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--solver-cmd", f.solver_cmd, "SMT solver command line (default: $LOOPFORGE_SOLVER or 'z3 -in')");
    sub->add_option("--timeout", f.timeout, "seconds per stage")->check(CLI::PositiveNumber);
    sub->add_option("--sort", f.sort, "number sort of the unknowns")->check(CLI::IsMember({"int", "real"}));
    sub->add_option("--nonzero", f.nonzero, "nonzero requirement")->check(CLI::IsMember({"any", "per-branch", "none"}));
    sub->add_flag("--finiteness", f.finiteness, "classify the solution set as empty, finite or infinite");
    sub->add_option("--max-rounds", f.max_rounds, "cap on invariant-set rounds")->check(CLI::PositiveNumber);
    sub->add_option("--seed", f.seed, "seed for sampled simulation");
    sub->add_option("--steps", f.steps, "simulation depth");
    sub->add_option("--backend", f.backend, "solver back end")->check(CLI::IsMember({"smt", "zero-dim"}));
  };
  CLI::App* synth = app.add_subcommand("synth", "generate the coefficient system of a template and optionally solve it");
  synth->add_option("path", f.path, "problem file")->required();
  synth->add_flag("--solve", f.solve, "search for a loop and verify it");
  synth->add_option("--emit-smt", f.emit_smt, "write the SMT-LIB problem to PATH ('-' for stdout)");
  synth->add_flag("--explain", f.explain, "show where each equation came from");
  common(synth);
  CLI::App* check = app.add_subcommand("check", "verify a concrete loop against its invariants");
  check->add_option("path", f.path, "problem file with concrete updates")->required();
  common(check);
  CLI::App* bench = app.add_subcommand("bench", "run every .loop file of a directory");
  bench->add_option("path", f.path, "corpus directory")->required();
  bench->add_option("--jobs", f.jobs, "worker threads (default: all processors)");
  bench->add_option("--records", f.records, "write one JSON record per problem to PATH ('-' for stdout)");
  common(bench);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  try {
    if (synth->parsed()) return cmd_synth(f, out, err);
    if (check->parsed()) return cmd_check(f, out, err);
    return cmd_bench(f, out, err);
  } catch (const SolverNotFound& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace loopforge::cli
