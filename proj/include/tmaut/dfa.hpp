#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tmaut {

inline constexpr std::int32_t no_transition = -1;

// project_second() found two first components sharing a second component.
struct NondeterministicProjection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// trim() found no accessible final state.
struct EmptyLanguage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A class-quotient turned out not to be well defined. Signals a bug.
struct QuotientIllDefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic finite automaton over the digit alphabet [0, alphabet_size).
// The transition table is dense, row per state; no_transition marks undefined
// cells, so automata may be partial. Values are immutable by convention once
// built; every operation below is pure.
struct Dfa {
  std::int32_t state_count = 0;
  std::int32_t alphabet_size = 0;
  std::int32_t initial = 0;
  std::vector<std::uint8_t> finals;  // state_count entries, nonzero = accepting
  std::vector<std::int32_t> table;   // state_count * alphabet_size entries

  // Optional sidecar of human-readable state names; empty or one per state,
  // injective when present.
  std::vector<std::string> labels;

  std::int32_t cell(std::int32_t s, std::int32_t a) const {
    return table[static_cast<std::size_t>(s) * alphabet_size + a];
  }
  std::int32_t& cell(std::int32_t s, std::int32_t a) {
    return table[static_cast<std::size_t>(s) * alphabet_size + a];
  }
  bool is_final(std::int32_t s) const { return finals[s] != 0; }
  bool complete() const;
};

Dfa make_dfa(std::int32_t states, std::int32_t alphabet, std::int32_t initial,
             std::span<const std::int32_t> final_states);

// Pair digits (d,e) over A_b x A_b are encoded as the single symbol d*b + e,
// so one Dfa type serves both plain and pair alphabets.
constexpr std::int32_t pair_symbol(std::int64_t d, std::int64_t e, std::int64_t b) {
  return static_cast<std::int32_t>(d * b + e);
}
constexpr std::pair<std::int32_t, std::int32_t> pair_components(std::int32_t sym,
                                                                std::int64_t b) {
  return {static_cast<std::int32_t>(sym / b), static_cast<std::int32_t>(sym % b)};
}

// True iff the run from the initial state is everywhere defined and ends in
// a final state. Throws std::out_of_range on a symbol outside the alphabet.
bool accepts(const Dfa& a, std::span<const int> word);

// Intersection product; states are the reachable pairs in BFS discovery
// order. Throws std::invalid_argument on an alphabet mismatch.
Dfa product(const Dfa& a, const Dfa& b);

// Keeps only the second component of each pair symbol. The input alphabet
// must be a perfect square b*b; throws NondeterministicProjection if from
// some state two first components share a second component.
Dfa project_second(const Dfa& a);

// Keeps exactly the accessible and coaccessible states (stable numbering).
// Throws EmptyLanguage when no final state is accessible.
Dfa trim(const Dfa& a);

// Totalizes the transition function, adding at most one non-final sink.
Dfa complete_with_sink(const Dfa& a);

// Minimal complete DFA of the same language, states numbered canonically by
// BFS from the initial state in ascending symbol order. The empty language
// yields the single non-final all-loops state.
Dfa minimize(const Dfa& a);

// Renumbers states by BFS from the initial state in ascending symbol order
// (the canonical numbering minimize produces). States unreachable through
// defined transitions are appended in ascending old order.
Dfa canonical_renumber(const Dfa& a);

// Language equality via union-find pairing from the two initial states.
// Throws std::invalid_argument on an alphabet mismatch.
bool equivalent(const Dfa& a, const Dfa& b);

// State bijection preserving initial, finals and transitions, or nullopt.
// Both inputs are expected minimal (all states reachable).
std::optional<std::vector<std::int32_t>> isomorphic(const Dfa& a, const Dfa& b);

// min { val(w) : w accepted }, i.e. the value of the lexicographically
// smallest among the shortest accepted words; nullopt for the empty
// language. Meaningful for languages closed under prepending 0 (the caller
// checks). Values >= 2^62 saturate to 2^62.
std::optional<std::uint64_t> min_accepted_value(const Dfa& a, std::int64_t base);

inline constexpr std::uint64_t min_value_saturated = std::uint64_t{1} << 62;

}  // namespace tmaut
