#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loopforge/invariant.hpp"
#include "loopforge/synth.hpp"

namespace loopforge {

enum class VerifyMethod { UniversalIdentity, InvariantSetMembership, Simulation };

std::string_view to_string(VerifyMethod method);

struct VerificationReport {
  VerifyMethod method = VerifyMethod::UniversalIdentity;
  bool pass = false;
  /// Human-readable description of the violation; empty on pass.
  std::string witness;
  /// Branch word leading to the violation (word[0] taken first).
  std::vector<std::size_t> word;
  std::size_t step = 0;
  std::vector<Rational> state;
  std::size_t seed = 0;  // index of the violated invariant
  std::uint64_t words_checked = 0;
  bool sampled = false;
  std::uint64_t rng_seed = 0;

  std::string to_string() const;
};

/// Pass iff g_i(F_j(x)) = g_i(x) as polynomials for every i and branch j.
VerificationReport verify_universal(const ConcreteLoop& loop, const PolynomialSeq& g);

/// Exact membership test of the initial value in the invariant set of the
/// guard-extended maps (x, z) -> (F_j(x), z*h(x)) with seeds z*g_i. Needs a
/// concrete initial value. RoundCapExceeded propagates.
VerificationReport verify_invariants(const ConcreteLoop& loop, const PolynomialSeq& g,
                                     std::size_t max_rounds = kDefaultMaxRounds);

/// Exact execution over branch words. Before each step every g_i must
/// vanish; a state where the guard vanishes ends the word. All k^steps
/// words are enumerated breadth-first when that count is at most
/// `word_limit`, otherwise `word_limit` words are drawn with `rng_seed`.
VerificationReport simulate_loop(const ConcreteLoop& loop, const PolynomialSeq& g, std::size_t steps,
                                 std::uint64_t word_limit = 256, std::uint64_t rng_seed = 1);

}  // namespace loopforge
