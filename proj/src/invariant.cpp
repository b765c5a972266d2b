#include "loopforge/invariant.hpp"

#include "loopforge/deadline.hpp"
#include "loopforge/groebner.hpp"

namespace loopforge {

InvariantSetResult invariant_set(const PolynomialSeq& g, const PolyMap& F, std::size_t max_rounds) {
  return invariant_set_branch(g, {F}, max_rounds);
}

InvariantSetResult invariant_set_branch(const PolynomialSeq& g, const std::vector<PolyMap>& Fs,
                                        std::size_t max_rounds) {
  if (Fs.empty()) throw Error("invariant set: at least one map is required");
  if (max_rounds == 0) throw Error("invariant set: max_rounds must be positive");
  const ContextPtr& ctx = Fs.front().context();
  for (const auto& F : Fs)
    if (!same_context(F.context(), ctx)) throw ContextMismatch();
  for (const auto& p : g)
    if (!same_context(p.context(), ctx)) throw ContextMismatch();

  InvariantSetResult result;
  for (std::size_t i = 0; i < g.size(); ++i) {
    result.generators.push_back(g[i]);
    result.origins.push_back({0, i, {}});
  }
  RadicalOracle oracle(ctx, g);

  std::vector<std::size_t> working(g.size());  // indices into result.generators
  for (std::size_t i = 0; i < g.size(); ++i) working[i] = i;

  for (std::size_t round = 1;; ++round) {
    if (round > max_rounds) throw RoundCapExceeded(max_rounds, result);
    check_deadline();
    RoundRecord record;
    record.round = round;
    std::vector<Origin> origins;
    for (std::size_t w : working) {
      for (std::size_t j = 0; j < Fs.size(); ++j) {
        record.candidates.push_back(Fs[j].apply(result.generators[w]));
        Origin o{round, result.origins[w].seed, {j}};
        const auto& prev = result.origins[w].word;
        o.word.insert(o.word.end(), prev.begin(), prev.end());
        origins.push_back(std::move(o));
      }
    }
    PolynomialSeq fresh;
    std::vector<Origin> fresh_origins;
    for (std::size_t c = 0; c < record.candidates.size(); ++c) {
      bool implied = oracle.contains(record.candidates[c]);
      record.already_implied.push_back(implied);
      if (!implied) {
        fresh.push_back(record.candidates[c]);
        fresh_origins.push_back(origins[c]);
        // Later candidates of this round are tested against the enlarged set.
        oracle.extend({record.candidates[c]});
      }
    }
    result.rounds = round;
    record.stabilized = fresh.empty();
    result.trace.push_back(std::move(record));
    if (fresh.empty()) return result;
    working.clear();
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      working.push_back(result.generators.size());
      result.generators.push_back(std::move(fresh[k]));
      result.origins.push_back(std::move(fresh_origins[k]));
    }
  }
}

}  // namespace loopforge
