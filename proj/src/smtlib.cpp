#include "loopforge/smtlib.hpp"

#include <cctype>

namespace loopforge {

namespace {

struct Sexp {
  bool atom = true;
  std::string text;
  std::vector<Sexp> items;
};

class SexpReader {
 public:
  explicit SexpReader(std::string_view s) : s_(s) {}

  bool next(Sexp& out) {
    skip();
    if (pos_ >= s_.size()) return false;
    out = read();
    return true;
  }

 private:
  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == ';') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  Sexp read() {
    skip();
    if (pos_ >= s_.size()) throw MalformedModel("unexpected end of solver output", std::string(s_));
    Sexp e;
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      e.atom = false;
      for (;;) {
        skip();
        if (pos_ >= s_.size()) throw MalformedModel("unbalanced parentheses in solver output", std::string(s_));
        if (s_[pos_] == ')') {
          ++pos_;
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (c == ')') throw MalformedModel("unexpected ')' in solver output", std::string(s_));
    if (c == '"' || c == '|') {
      std::size_t end = s_.find(c, pos_ + 1);
      if (end == std::string_view::npos) throw MalformedModel("unterminated literal in solver output", std::string(s_));
      e.text = c == '|' ? std::string(s_.substr(pos_ + 1, end - pos_ - 1)) : std::string(s_.substr(pos_, end - pos_ + 1));
      pos_ = end + 1;
      return e;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')')
      ++pos_;
    e.text = std::string(s_.substr(start, pos_ - start));
    return e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

bool is_numeral(const std::string& t) {
  if (t.empty()) return false;
  bool dot = false;
  for (char c : t) {
    if (c == '.' && !dot) {
      dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return std::isdigit(static_cast<unsigned char>(t.front())) && std::isdigit(static_cast<unsigned char>(t.back()));
}

Rational numeral_value(const std::string& t) {
  auto dot = t.find('.');
  if (dot == std::string::npos) return Rational(Integer(t));
  std::string digits = t.substr(0, dot) + t.substr(dot + 1);
  Integer den = 1;
  for (std::size_t k = dot + 1; k < t.size(); ++k) den *= 10;
  Rational q(Integer(digits), den);
  q.canonicalize();
  return q;
}

Rational value_of(const Sexp& e, const std::string& raw) {
  if (e.atom) {
    if (!is_numeral(e.text)) throw MalformedModel("unsupported model value '" + e.text + "'", raw);
    return numeral_value(e.text);
  }
  if (e.items.empty() || !e.items[0].atom) throw MalformedModel("unsupported model value", raw);
  const std::string& op = e.items[0].text;
  std::vector<Rational> args;
  for (std::size_t k = 1; k < e.items.size(); ++k) args.push_back(value_of(e.items[k], raw));
  if (op == "-" && args.size() == 1) return -args[0];
  if (op == "-" && args.size() >= 2) {
    Rational r = args[0];
    for (std::size_t k = 1; k < args.size(); ++k) r -= args[k];
    return r;
  }
  if (op == "+") {
    Rational r = 0;
    for (const auto& a : args) r += a;
    return r;
  }
  if (op == "*") {
    Rational r = 1;
    for (const auto& a : args) r *= a;
    return r;
  }
  if (op == "/" && args.size() == 2) {
    if (args[1] == 0) throw MalformedModel("division by zero in model value", raw);
    return args[0] / args[1];
  }
  if (op == "to_real" && args.size() == 1) return args[0];
  throw MalformedModel("unsupported operator '" + op + "' in model value", raw);
}

void collect_definitions(const Sexp& e, const ContextPtr& unknowns, Assignment& out, const std::string& raw) {
  if (e.atom) return;
  if (e.items.size() == 5 && e.items[0].atom && e.items[0].text == "define-fun") {
    const std::string& name = e.items[1].text;
    if (unknowns->index_of(name)) out[name] = value_of(e.items[4], raw);
    return;
  }
  for (const auto& sub : e.items) collect_definitions(sub, unknowns, out, raw);
}

Polynomial term_of(const Sexp& e, const ContextPtr& ctx) {
  if (e.atom) {
    if (is_numeral(e.text)) return Polynomial::constant(ctx, numeral_value(e.text));
    return Polynomial::variable(ctx, e.text);
  }
  if (e.items.empty() || !e.items[0].atom) throw Error("malformed SMT term");
  const std::string& op = e.items[0].text;
  std::vector<Polynomial> args;
  for (std::size_t k = 1; k < e.items.size(); ++k) args.push_back(term_of(e.items[k], ctx));
  if (args.empty()) throw Error("malformed SMT term: operator without arguments");
  if (op == "-" && args.size() == 1) return -args[0];
  Polynomial r = args[0];
  for (std::size_t k = 1; k < args.size(); ++k) {
    if (op == "+")
      r += args[k];
    else if (op == "-")
      r -= args[k];
    else if (op == "*")
      r *= args[k];
    else
      throw Error("unsupported SMT operator '" + op + "'");
  }
  return r;
}

std::string literal(const Integer& k, NumberSort sort) {
  std::string s = k.get_str();
  return sort == NumberSort::Real ? s + ".0" : s;
}

// One product term with a positive integer coefficient.
std::string render_term(const Polynomial& p, std::size_t t, const Integer& magnitude, NumberSort sort) {
  std::vector<std::string> factors;
  if (magnitude != 1) factors.push_back(literal(magnitude, sort));
  auto e = p.exponents(t);
  for (std::size_t v = 0; v < e.size(); ++v)
    for (Exponent k = 0; k < e[v]; ++k) factors.push_back(p.context()->name(v));
  if (factors.empty()) return literal(magnitude, sort);
  if (factors.size() == 1) return factors[0];
  std::string s = "(*";
  for (const auto& f : factors) s += " " + f;
  return s + ")";
}

}  // namespace

std::string smt_term(const Polynomial& p, NumberSort sort) {
  if (p.is_zero()) return literal(0, sort);
  Integer den = 1;
  for (std::size_t t = 0; t < p.size(); ++t) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.coefficient(t).get_den_mpz_t());
  std::vector<std::string> pos, neg;
  for (std::size_t t = 0; t < p.size(); ++t) {
    Rational c = p.coefficient(t) * den;
    Integer k = c.get_num();
    if (k > 0)
      pos.push_back(render_term(p, t, k, sort));
    else
      neg.push_back(render_term(p, t, Integer(-k), sort));
  }
  auto joined = [](const std::vector<std::string>& items) {
    std::string s;
    for (const auto& x : items) s += " " + x;
    return s;
  };
  if (neg.empty()) return pos.size() == 1 ? pos[0] : "(+" + joined(pos) + ")";
  if (pos.empty()) return "(-" + std::string(neg.size() == 1 ? joined(neg) : " (+" + joined(neg) + ")") + ")";
  std::string head = pos.size() == 1 ? pos[0] : "(+" + joined(pos) + ")";
  return "(- " + head + joined(neg) + ")";
}

std::string smt_literal(const Rational& value, NumberSort sort) {
  if (sort == NumberSort::Int && value.get_den() != 1) throw Error("non-integer literal " + to_string(value) + " under the Int sort");
  auto magnitude = [&](const Integer& k) { return literal(abs(k), sort); };
  std::string s = value.get_den() == 1 ? magnitude(value.get_num())
                                       : "(/ " + magnitude(value.get_num()) + " " + magnitude(value.get_den()) + ")";
  return value < 0 ? "(- " + s + ")" : s;
}

std::string emit_smtlib(const SmtJob& job) {
  const PolynomialSystem& sys = job.system;
  if (sys.equations.empty()) throw Error("cannot emit an SMT problem for an empty system");
  const char* sort_name = job.sort == NumberSort::Int ? "Int" : "Real";
  std::string s = job.sort == NumberSort::Int ? "(set-logic QF_NIA)\n" : "(set-logic QF_NRA)\n";
  for (const auto& name : sys.unknowns->names()) s += "(declare-const " + name + " " + sort_name + ")\n";
  for (const auto& e : sys.equations) s += "(assert (= " + smt_term(e, job.sort) + " " + literal(0, job.sort) + "))\n";

  auto nonzero_any = [&](const std::vector<std::size_t>& ids) {
    if (ids.empty()) return std::string();
    std::string d = ids.size() == 1 ? "" : "(or";
    for (std::size_t id : ids) {
      std::string atom = "(not (= " + sys.unknowns->name(id) + " " + literal(0, job.sort) + "))";
      d += ids.size() == 1 ? atom : " " + atom;
    }
    if (ids.size() > 1) d += ")";
    return "(assert " + d + ")\n";
  };
  switch (job.nonzero) {
    case NonzeroPolicy::Any: {
      std::vector<std::size_t> ids = sys.unknowns->indices_of(VarClass::Coefficient);
      if (ids.empty())
        for (std::size_t k = 0; k < sys.unknowns->size(); ++k) ids.push_back(k);
      s += nonzero_any(ids);
      break;
    }
    case NonzeroPolicy::PerBranch:
      for (const auto& ids : sys.branch_unknowns) s += nonzero_any(ids);
      break;
    case NonzeroPolicy::None:
      break;
    case NonzeroPolicy::Custom:
      break;
  }
  for (const auto& line : job.custom_assertions) s += line + "\n";
  s += "(check-sat)\n(get-model)\n";
  return s;
}

Assignment parse_model(std::string_view text, const ContextPtr& unknowns) {
  Assignment out;
  std::string raw(text);
  SexpReader reader(text);
  Sexp e;
  while (reader.next(e)) collect_definitions(e, unknowns, out, raw);
  return out;
}

PolynomialSeq parse_smt_equations(std::string_view script, const ContextPtr& unknowns) {
  PolynomialSeq out;
  SexpReader reader(script);
  Sexp e;
  while (reader.next(e)) {
    if (e.atom || e.items.size() != 2 || e.items[0].text != "assert") continue;
    const Sexp& body = e.items[1];
    if (body.atom || body.items.size() != 3 || body.items[0].text != "=") continue;
    out.push_back(term_of(body.items[1], unknowns) - term_of(body.items[2], unknowns));
  }
  return out;
}

}  // namespace loopforge
