#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tmaut/dfa.hpp"
#include "tmaut/numeration.hpp"

namespace tmaut {

// A state of the product pipeline: residue i in [0, m) plus a track side.
struct StateLabel {
  std::int64_t i = 0;
  Side side = Side::T;

  friend auto operator<=>(const StateLabel&, const StateLabel&) = default;
};

inline std::int32_t label_state_id(const StateLabel& s) {
  return static_cast<std::int32_t>(2 * s.i + (s.side == Side::B ? 1 : 0));
}
inline StateLabel label_of_state_id(std::int32_t id) {
  return {id / 2, (id % 2) ? Side::B : Side::T};
}
std::string label_string(const StateLabel& s);  // e.g. "3B"

// Two-track digit-parity automaton over the pair alphabet 2^p x 2^p:
// reading (a,e) from X goes to flip_if(X, a). Initial and final: T.
Dfa build_a_t(int p);

// The multiplication automaton over the pair alphabet b x b: from state i
// there is one transition (d,e) per e, with b*i + e = m*d + j. Partial;
// initial 0, final r. Works for any integer base b >= 2.
Dfa build_a_mrb(std::int64_t m, std::int64_t r, std::int64_t b);

// Second-component projection of the above in closed form:
// state i reads e to (b*i + e) mod m. Complete.
Dfa build_pi_a_mrb(std::int64_t m, std::int64_t r, std::int64_t b);

// The steering permutation of [0, k): sigma(i) = -2^(p*K - z) * i mod k.
// Requires k > 1 (throws std::domain_error otherwise).
std::int64_t sigma(std::int64_t i, const Params& params);

// The word of length witness_len with value sigma(i) * 2^z; reading it from
// state i of build_pi_a_mrb reaches state 0. Requires k > 1.
std::vector<int> witness_word(std::int64_t i, const Params& params);

// Product of build_a_mrb(m, r, 2^p) and build_a_t(p) built directly by the
// closed-form rule: (i,X) reads (d,e) to ((2^p i + e) mod m, flip_if(X, d))
// when 2^p i + e = m d + j. State (i,X) is numbered 2i + (X==B), with a
// label sidecar. Partial; initial (0,T), final (r,T).
Dfa build_product(std::int64_t m, std::int64_t r, int p);

// Projection of build_product onto second components, in closed form:
// (i,X) reads e to ((2^p i + e) mod m, flip_if(X, floor((2^p i + e)/m))).
// Complete, 2m states, same numbering and labels as build_product.
Dfa build_projected(std::int64_t m, std::int64_t r, int p);

}  // namespace tmaut
