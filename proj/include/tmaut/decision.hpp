#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tmaut/dfa.hpp"

namespace tmaut {

// Result of the decision procedure. On a match, `iso` witnesses the
// isomorphism from the minimized input to the rebuilt minimal automaton.
struct Verdict {
  enum class Reason : std::uint8_t {
    none,
    wrong_complexity_shape,
    no_candidate_equivalent,
    empty_language,
    not_zero_closed,
  };

  bool match = false;
  std::int64_t m = 0;
  std::int64_t r = 0;
  bool complement = false;
  std::vector<std::int32_t> iso;
  Reason reason = Reason::none;
};

const char* reason_string(Verdict::Reason reason);

// All pairs (k, z) with k odd, z >= 0 and 2k + ceil(z/p) = min_states,
// ordered by k descending then z ascending.
std::vector<std::pair<std::int64_t, int>> candidates(std::int64_t min_states, int p);

// Infers the remainder from the minimum accepted value: r itself for the
// plain orientation (0 is evil), min - m for the complement (min odious
// number is 1). nullopt when the result falls outside [0, m).
std::optional<std::int64_t> infer_r(const Dfa& minimal_input, std::int64_t m, int p,
                                    bool complement);

// Decides whether the language of `a` equals val^{-1}(mT + r) for some m, r
// (also m*complement(T) + r when allow_complement). Throws
// std::invalid_argument unless a.alphabet_size == 2^p >= 2.
Verdict decide(const Dfa& a, int p, bool allow_complement = false);

}  // namespace tmaut
