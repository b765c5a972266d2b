#include "loopforge/problem_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "loopforge/parse.hpp"

namespace loopforge {

std::string_view to_string(ProblemMode mode) {
  switch (mode) {
    case ProblemMode::General:
      return "general";
    case ProblemMode::Universal:
      return "universal";
    case ProblemMode::UniversalLinear:
      return "universal-linear";
  }
  return "general";
}

ProblemFile::Shape ProblemFile::shape() const {
  Shape s;
  s.n = problem.program ? problem.program->size() : 0;
  s.m = problem.invariants.size();
  for (const auto& g : problem.invariants) s.d = std::max(s.d, g.total_degree());
  s.k = is_concrete() ? loop->maps.size() : problem.templ.branch_count();
  for (const auto& branch : problem.templ.branches)
    for (const auto& gens : branch) {
      s.l += gens.size();
      for (const auto& f : gens) s.D = std::max(s.D, f.total_degree());
    }
  return s;
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto k = s.find(sep, start);
    out.push_back(trim(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start)));
    if (k == std::string_view::npos) break;
    start = k + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::string flat(s);
  for (char& c : flat)
    if (c == ',') c = ' ';
  std::istringstream in(flat);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

enum class Section { None, Invariants, Branch };

class Parser {
 public:
  Parser(std::string origin) : origin_(std::move(origin)) {}

  ProblemFile run(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      std::string line = raw.substr(0, raw.find('#'));
      if (trim(line).empty()) continue;
      handle(line);
    }
    return finish();
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(origin_ + ":" + std::to_string(line_) + ": " + what, line_);
  }

  Polynomial poly(const std::string& text) const {
    if (text.empty()) fail("expected a polynomial");
    try {
      return parse_poly(text, ctx_);
    } catch (const ParseError& e) {
      fail(std::string(e.what()) + " in '" + text + "'");
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  Rational rational(const std::string& text) const {
    Rational q;
    try {
      q = Rational(text);
    } catch (const std::invalid_argument&) {
      fail("'" + text + "' is not a rational number");
    }
    if (q.get_den() == 0) fail("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  }

  void need_vars() const {
    if (!ctx_) fail("'vars:' must come before this line");
  }

  void handle(const std::string& line) {
    auto colon = line.find(':');
    std::string key = colon == std::string::npos ? "" : trim(line.substr(0, colon));
    static const std::set<std::string> keys{"vars", "guard", "initial", "invariants", "branch", "mode"};
    if (!keys.count(key)) {
      item(trim(line));
      return;
    }
    std::string rest = trim(line.substr(colon + 1));
    if (key != "vars" && key != "mode") need_vars();
    if (!seen_.insert(key).second && key != "branch") fail("duplicate '" + key + ":' section");
    section_ = Section::None;
    if (key == "vars") {
      auto names = words(rest);
      if (names.empty()) fail("'vars:' lists no variables");
      std::set<std::string> distinct(names.begin(), names.end());
      if (distinct.size() != names.size()) fail("repeated variable name");
      try {
        ctx_ = VarContext::of_program_vars(names);
      } catch (const Error& e) {
        fail(e.what());
      }
      prob_.program = ctx_;
    } else if (key == "guard") {
      guard(rest);
    } else if (key == "initial") {
      if (rest == "none") return;
      auto vals = words(rest);
      if (vals.size() != ctx_->size())
        fail("initial value has " + std::to_string(vals.size()) + " entries for " + std::to_string(ctx_->size()) +
             " variables");
      std::vector<Rational> a;
      for (const auto& v : vals) a.push_back(rational(v));
      prob_.initial = std::move(a);
    } else if (key == "invariants") {
      section_ = Section::Invariants;
      if (!rest.empty()) item(rest);
    } else if (key == "branch") {
      section_ = Section::Branch;
      branches_.emplace_back(ctx_->size());
      fixed_.emplace_back(ctx_->size());
      assigned_.emplace_back(ctx_->size(), false);
      if (!rest.empty()) item(rest);
    } else {
      if (rest == "general")
        file_.mode = ProblemMode::General;
      else if (rest == "universal")
        file_.mode = ProblemMode::Universal;
      else if (rest == "universal-linear")
        file_.mode = ProblemMode::UniversalLinear;
      else
        fail("unknown mode '" + rest + "' (expected general, universal or universal-linear)");
    }
  }

  void guard(const std::string& rest) {
    if (rest == "none") return;
    const std::string tkey = "template:";
    if (rest.rfind(tkey, 0) == 0) {
      for (const auto& part : split(rest.substr(tkey.size()), ';')) prob_.guard_template.push_back(poly(part));
      prob_.guard_kind = GuardKind::Template;
      return;
    }
    Polynomial h = Polynomial::constant(ctx_, 1);
    for (const auto& part : split(rest, ';')) h *= poly(part);
    if (h.is_zero()) fail("the guard is identically zero, so the loop never runs");
    prob_.guard = h;
    prob_.guard_kind = GuardKind::Concrete;
  }

  void item(const std::string& text) {
    if (section_ == Section::Invariants) {
      prob_.invariants.push_back(poly(text));
      return;
    }
    if (section_ != Section::Branch) fail("unexpected line '" + text + "'");
    auto arrow = text.find("<-");
    if (arrow == std::string::npos) fail("expected 'xj <- { ... }' in a branch");
    std::string var = trim(text.substr(0, arrow));
    auto j = ctx_->index_of(var);
    if (!j) fail("'" + var + "' is not a declared variable");
    if (assigned_.back()[*j]) fail("'" + var + "' is assigned twice in this branch");
    assigned_.back()[*j] = true;
    std::string rhs = trim(text.substr(arrow + 2));
    bool braced = !rhs.empty() && rhs.front() == '{';
    PolynomialSeq gens;
    if (braced) {
      any_braced_ = true;
      if (rhs.back() != '}') fail("missing '}'");
      std::string inner = trim(rhs.substr(1, rhs.size() - 2));
      if (!inner.empty())
        for (const auto& part : split(inner, ',')) gens.push_back(poly(part));
    } else {
      fixed_.back()[*j] = poly(rhs);
    }
    branches_.back()[*j] = std::move(gens);
  }

  ProblemFile finish() {
    if (!ctx_) fail("missing 'vars:' section");
    if (branches_.empty()) fail("no 'branch:' section");
    for (std::size_t b = 0; b < branches_.size(); ++b)
      for (std::size_t j = 0; j < ctx_->size(); ++j)
        if (!assigned_[b][j]) fail("branch " + std::to_string(b + 1) + " gives no update for " + ctx_->name(j));
    if (prob_.invariants.empty()) fail("no invariants given");
    if (!any_braced_) {
      ConcreteLoop loop{ctx_, prob_.initial, prob_.guard.value_or(Polynomial::constant(ctx_, 1)), {}};
      if (prob_.guard_kind == GuardKind::Template) fail("a concrete loop needs a concrete guard");
      for (auto& parts : fixed_) {
        std::vector<Polynomial> comps;
        for (auto& f : parts) comps.push_back(std::move(*f));
        loop.maps.emplace_back(ctx_, std::move(comps));
      }
      file_.loop = std::move(loop);
    } else {
      prob_.templ.branches = std::move(branches_);
      bool known = false;
      for (const auto& parts : fixed_)
        for (const auto& f : parts) known = known || f.has_value();
      if (known)
        for (const auto& parts : fixed_) {
          PolynomialSeq row;
          for (const auto& f : parts) row.push_back(f.value_or(Polynomial(ctx_)));
          prob_.templ.fixed.push_back(std::move(row));
        }
    }
    file_.origin = origin_;
    file_.problem = std::move(prob_);
    if (!file_.loop) {
      try {
        file_.problem.validate();
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    return std::move(file_);
  }

  std::string origin_;
  std::size_t line_ = 0;
  ContextPtr ctx_;
  Section section_ = Section::None;
  std::set<std::string> seen_;
  SynthesisProblem prob_;
  std::vector<std::vector<PolynomialSeq>> branches_;
  std::vector<std::vector<bool>> assigned_;
  std::vector<std::vector<std::optional<Polynomial>>> fixed_;
  bool any_braced_ = false;
  ProblemFile file_;
};

}  // namespace

ProblemFile parse_problem(std::string_view text, const std::string& origin) { return Parser(origin).run(text); }

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open problem file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str(), path.string());
}

}  // namespace loopforge
