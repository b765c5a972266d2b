#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "loopforge/error.hpp"
#include "loopforge/poly_map.hpp"

namespace loopforge {

/// Where a generator came from: the round that produced it and the branch
/// word applied to the seed polynomial (word[0] is the map applied first).
struct Origin {
  std::size_t round = 0;
  std::size_t seed = 0;  // index into the input sequence g
  std::vector<std::size_t> word;
};

struct RoundRecord {
  std::size_t round = 0;
  PolynomialSeq candidates;  // composed sequence tested this round
  std::vector<bool> already_implied;  // per candidate: in the radical of the accumulated set
  bool stabilized = false;
};

struct InvariantSetResult {
  /// Common zero set is the invariant set.
  PolynomialSeq generators;
  std::vector<Origin> origins;  // parallel to generators
  /// Number of radical-membership rounds performed.
  std::size_t rounds = 0;
  std::vector<RoundRecord> trace;
};

class RoundCapExceeded : public Error {
 public:
  RoundCapExceeded(std::size_t cap, InvariantSetResult partial)
      : Error("invariant set did not stabilize within " + std::to_string(cap) + " rounds"),
        partial_(std::move(partial)) {}
  const InvariantSetResult& partial() const { return partial_; }

 private:
  InvariantSetResult partial_;
};

inline constexpr std::size_t kDefaultMaxRounds = 32;

/// Iterates S <- S ∪ g∘F^r until the next composition lies in the radical
/// of <S>. Composed polynomials already in that radical are not added to S
/// and are not composed further.
InvariantSetResult invariant_set(const PolynomialSeq& g, const PolyMap& F,
                                 std::size_t max_rounds = kDefaultMaxRounds);

/// Branching variant: each round composes the working sequence with every
/// map. A generator with word (i1,...,im) equals g∘F_{i1...im}, where the
/// point is first moved by F_{i1}.
InvariantSetResult invariant_set_branch(const PolynomialSeq& g, const std::vector<PolyMap>& Fs,
                                        std::size_t max_rounds = kDefaultMaxRounds);

}  // namespace loopforge
