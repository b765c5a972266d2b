#include "loopforge/verify.hpp"

#include <deque>
#include <random>

namespace loopforge {

std::string_view to_string(VerifyMethod method) {
  switch (method) {
    case VerifyMethod::UniversalIdentity:
      return "universal-identity";
    case VerifyMethod::InvariantSetMembership:
      return "invariant-set-membership";
    case VerifyMethod::Simulation:
      return "simulation";
  }
  return "?";
}

namespace {

std::string word_string(const std::vector<std::size_t>& w) {
  if (w.empty()) return "(empty)";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + std::string("F") + std::to_string(w[k] + 1);
  return s;
}

std::string state_string(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + to_string(v[k]);
  return s + ")";
}

void require_program_context(const ConcreteLoop& loop, const PolynomialSeq& g) {
  if (loop.maps.empty()) throw Error("loop has no branches");
  for (const auto& p : g)
    if (!same_context(p.context(), loop.program)) throw ContextMismatch();
}

}  // namespace

std::string VerificationReport::to_string() const {
  std::string s = std::string(loopforge::to_string(method)) + ": " + (pass ? "pass" : "FAIL");
  if (method == VerifyMethod::Simulation) {
    s += " (" + std::to_string(words_checked) + (sampled ? " sampled" : "") + " words";
    if (sampled) s += ", seed " + std::to_string(rng_seed);
    s += ")";
  }
  if (!pass) s += "\n  " + witness;
  return s;
}

VerificationReport verify_universal(const ConcreteLoop& loop, const PolynomialSeq& g) {
  require_program_context(loop, g);
  VerificationReport r;
  r.method = VerifyMethod::UniversalIdentity;
  for (std::size_t j = 0; j < loop.maps.size(); ++j)
    for (std::size_t i = 0; i < g.size(); ++i) {
      Polynomial diff = loop.maps[j].apply(g[i]) - g[i];
      if (!diff.is_zero()) {
        r.word = {j};
        r.seed = i;
        r.witness = "g" + std::to_string(i + 1) + "(F" + std::to_string(j + 1) + "(x)) - g" + std::to_string(i + 1) +
                    "(x) = " + diff.to_string();
        return r;
      }
    }
  r.pass = true;
  return r;
}

VerificationReport verify_invariants(const ConcreteLoop& loop, const PolynomialSeq& g, std::size_t max_rounds) {
  require_program_context(loop, g);
  if (!loop.initial) throw Error("invariant-set verification needs a concrete initial value");
  const std::vector<Rational>& a = *loop.initial;
  VerificationReport r;
  r.method = VerifyMethod::InvariantSetMembership;
  if (g.empty()) {
    r.pass = true;
    return r;
  }

  const bool unguarded = loop.guard.is_constant() && !loop.guard.is_zero();
  ContextPtr ctx = loop.program;
  PolynomialSeq seeds;
  std::vector<PolyMap> maps;
  std::vector<Rational> point = a;
  if (unguarded) {
    seeds = g;
    maps = loop.maps;
  } else {
    ctx = loop.program->extended({{loop.program->fresh_name("z"), VarClass::GuardFlag}});
    const std::size_t z_index = loop.program->size();
    Polynomial z = Polynomial::variable(ctx, z_index);
    Polynomial h = loop.guard.embed(ctx);
    for (const auto& p : g) seeds.push_back(z * p.embed(ctx));
    for (const auto& F : loop.maps) {
      std::vector<Polynomial> comps;
      for (const auto& c : F.components()) comps.push_back(c.embed(ctx));
      maps.push_back(PolyMap(ctx, std::move(comps)).with_image(z_index, z * h));
    }
    point.push_back(Rational(1));
  }

  InvariantSetResult S = maps.size() == 1 ? invariant_set(seeds, maps[0], max_rounds)
                                          : invariant_set_branch(seeds, maps, max_rounds);
  r.words_checked = S.generators.size();
  for (std::size_t k = 0; k < S.generators.size(); ++k) {
    Rational v = S.generators[k].evaluate(point);
    if (v != 0) {
      const Origin& o = S.origins[k];
      r.word = o.word;
      r.step = o.word.size();
      r.seed = o.seed;
      r.state = a;
      r.witness = "generator " + S.generators[k].to_string() + " (invariant " + std::to_string(o.seed + 1) +
                  " after word " + word_string(o.word) + ") is " + to_string(v) + " at the initial state " +
                  state_string(a);
      return r;
    }
  }
  r.pass = true;
  return r;
}

VerificationReport simulate_loop(const ConcreteLoop& loop, const PolynomialSeq& g, std::size_t steps,
                                 std::uint64_t word_limit, std::uint64_t rng_seed) {
  require_program_context(loop, g);
  if (!loop.initial) throw Error("simulation needs a concrete initial value");
  if (word_limit < 1) throw Error("simulation word limit must be at least 1");
  const std::size_t k = loop.maps.size();
  VerificationReport r;
  r.method = VerifyMethod::Simulation;
  r.rng_seed = rng_seed;

  // Returns false (and fills r) on a violation; true if the guard stops the word.
  auto check_state = [&](const std::vector<Rational>& state, const std::vector<std::size_t>& word, bool& stop) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      Rational v = g[i].evaluate(state);
      if (v != 0) {
        r.word = word;
        r.step = word.size();
        r.state = state;
        r.seed = i;
        r.witness = "g" + std::to_string(i + 1) + " = " + to_string(v) + " at state " + state_string(state) +
                    " reached by word " + word_string(word) + " (step " + std::to_string(word.size()) + ")";
        return false;
      }
    }
    stop = loop.guard.evaluate(state) == 0;
    return true;
  };

  // Whether k^steps fits under the limit, without overflow.
  bool enumerate = true;
  std::uint64_t total = 1;
  for (std::size_t s = 0; s < steps && enumerate; ++s) {
    if (total > word_limit / k) enumerate = false;
    total *= k;
  }
  if (enumerate && total > word_limit) enumerate = false;

  if (enumerate) {
    struct Node {
      std::vector<Rational> state;
      std::vector<std::size_t> word;
    };
    std::deque<Node> queue;
    queue.push_back({*loop.initial, {}});
    while (!queue.empty()) {
      Node node = std::move(queue.front());
      queue.pop_front();
      bool stop = false;
      if (!check_state(node.state, node.word, stop)) return r;
      if (stop || node.word.size() == steps) {
        ++r.words_checked;
        continue;
      }
      for (std::size_t j = 0; j < k; ++j) {
        Node child{loop.maps[j].apply_to_point(node.state), node.word};
        child.word.push_back(j);
        queue.push_back(std::move(child));
      }
    }
  } else {
    r.sampled = true;
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    for (std::uint64_t n = 0; n < word_limit; ++n) {
      std::vector<Rational> state = *loop.initial;
      std::vector<std::size_t> word;
      for (;;) {
        bool stop = false;
        if (!check_state(state, word, stop)) return r;
        if (stop || word.size() == steps) break;
        std::size_t j = pick(rng);
        state = loop.maps[j].apply_to_point(state);
        word.push_back(j);
      }
      ++r.words_checked;
    }
  }
  r.pass = true;
  return r;
}

}  // namespace loopforge
