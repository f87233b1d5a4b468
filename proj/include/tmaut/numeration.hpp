#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tmaut {

// Digit words are stored most significant digit first throughout; all
// automata consume them in this order.

// The two tracks of the digit-parity automaton. T is the accepting track
// (an even number of odious digits read so far), B the other one.
enum class Side : std::uint8_t { T = 0, B = 1 };

constexpr Side opposite(Side x) { return x == Side::T ? Side::B : Side::T; }
constexpr char side_char(Side x) { return x == Side::T ? 'T' : 'B'; }

// n has an even number of 1 bits (n is an "evil" number).
bool is_evil(std::uint64_t n);

// X when n is evil, the opposite side otherwise.
Side flip_if(Side x, std::uint64_t n);

// Base-b expansion of n, no leading zeros; rep(0) is the empty word.
std::vector<int> rep(std::uint64_t n, std::int64_t base);

// Value of a digit word. Throws std::out_of_range on a bad digit and
// std::overflow_error when the value does not fit in 64 bits.
std::uint64_t val(std::span<const int> word, std::int64_t base);

// Expansions of a and c padded with leading zeros to a common length.
std::vector<std::pair<int, int>> rep_pair(std::uint64_t a, std::uint64_t c,
                                          std::int64_t base);

// Derived constants of a problem instance (modulus m, remainder r, base
// exponent p). m = k * 2^z with k odd is the unique decomposition.
struct Params {
  std::int64_t m = 1;
  std::int64_t r = 0;
  int p = 1;
  std::int64_t b = 2;  // 2^p
  std::int64_t k = 1;  // odd part of m
  int z = 0;           // dyadic valuation of m
  int rep_r_len = 0;   // |rep_b(r)|
  int suffix_len = 0;  // max(ceil(z/p), rep_r_len); class indices run 0..suffix_len
  std::optional<int> witness_len;  // |rep_b((k-1)*2^z)|, defined only for k > 1
};

// Throws std::invalid_argument when m < 1, p < 1, r outside [0, m) or the
// instance exceeds the 64-bit working range.
Params derive_params(std::int64_t m, std::int64_t r, int p);

constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace tmaut
