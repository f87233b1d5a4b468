#pragma once

#include <cstdint>
#include <vector>

#include "tmaut/dfa.hpp"

namespace tmaut {

// Ground truth: n in mT + r (or its complement-orientation variant),
// straight from the definition. No automata involved.
bool member(std::uint64_t n, std::int64_t m, std::int64_t r, bool complement);

struct SweepMismatch {
  int len = 0;               // word length (words carry leading zeros)
  std::uint64_t value = 0;   // word value; digits are its width-len expansion
  bool dfa_accepts = false;
  bool oracle_member = false;
};

struct SweepReport {
  std::int64_t m = 1;
  std::int64_t r = 0;
  int p = 1;
  int max_len = 0;
  bool complement = false;
  std::uint64_t words_checked = 0;
  std::vector<SweepMismatch> mismatches;  // sorted by (len, value)

  bool passed() const { return mismatches.empty(); }
};

// Compares automaton acceptance against member() for every word over
// A_{2^p} of length <= max_len, leading zeros included. Throws
// std::invalid_argument when p * max_len > 62. The plain variants build
// build_minimal / complement_minimal themselves; the _automaton variants
// check a caller-supplied DFA. sweep* are OpenMP-parallel kernels;
// the _serial variants are the word-at-a-time reference implementations.
SweepReport sweep(std::int64_t m, std::int64_t r, int p, int max_len, bool complement);
SweepReport sweep_serial(std::int64_t m, std::int64_t r, int p, int max_len,
                         bool complement);
SweepReport sweep_automaton(const Dfa& a, std::int64_t m, std::int64_t r, int p,
                            int max_len, bool complement);
SweepReport sweep_automaton_serial(const Dfa& a, std::int64_t m, std::int64_t r, int p,
                                   int max_len, bool complement);

// Number of distinct acceptance-vectors over all words of length <= word_len,
// indexed by all prefixes of length <= word_len (equivalently by prefix
// values, since membership in val^{-1}(mT+r) only sees values). A lower
// bound on the state complexity of the language. Throws
// std::invalid_argument when p * word_len > 30.
//
// bounded_nerode is the OpenMP kernel over compressed exact vector keys;
// bounded_nerode_naive materializes the acceptance vectors outright and is
// the serial reference (only affordable for small word_len).
std::int64_t bounded_nerode(std::int64_t m, std::int64_t r, int p, int word_len);
std::int64_t bounded_nerode_naive(std::int64_t m, std::int64_t r, int p, int word_len);

}  // namespace tmaut
