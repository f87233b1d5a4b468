#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tmaut/construction.hpp"
#include "tmaut/dfa.hpp"
#include "tmaut/numeration.hpp"

namespace tmaut {

// Identifier of a state class of the projected product automaton: either
// C(alpha) with alpha in [0, suffix_len], or D(j, X) with j in [0, k) and
// (j, X) != (0, T). Ordered C(0) < ... < C(N) < D lexicographic by (j, T<B).
struct ClassId {
  enum class Kind : std::uint8_t { C = 0, D = 1 };
  Kind kind = Kind::C;
  std::int64_t index = 0;  // alpha for C, j for D
  Side side = Side::T;     // meaningful for D only

  friend auto operator<=>(const ClassId&, const ClassId&) = default;
  std::string name() const;  // "C_1", "D_(2,B)"
};

// The full partition of the 2m product states into classes. `classes` lists
// the nonempty classes in canonical order; `members` is parallel to it with
// sorted contents; `class_of_label` maps label_state_id -> class index.
struct ClassPartition {
  Params params;
  std::vector<ClassId> classes;
  std::vector<std::vector<StateLabel>> members;
  std::vector<int> class_of_label;
};

// The candidate set C'_alpha (before removing earlier classes); sorted.
std::vector<StateLabel> c_prime(int alpha, const Params& params);

// C_alpha = C'_alpha minus the union of earlier C'_beta; sorted, nonempty.
std::vector<StateLabel> c_class(int alpha, const Params& params);

// D_(j,X) = D'_(j,X) minus the union of all C classes; sorted, possibly
// empty. Throws std::invalid_argument for (j, X) = (0, T).
std::vector<StateLabel> d_class(std::int64_t j, Side x, const Params& params);

// Builds and validates the whole partition (pairwise disjoint, covering,
// all C classes nonempty). Throws QuotientIllDefined on an internal
// consistency failure, which signals a bug.
ClassPartition partition(const Params& params);

// Class of a single state by the membership formulas, without enumerating
// the partition. Agrees with partition() (tested), scales to large m.
ClassId class_of(const StateLabel& s, const Params& params);

// Number of states of the minimal automaton: 2k + ceil(z/p).
std::int64_t state_complexity(std::int64_t m, int p);

// Minimal automaton of val^{-1}(mT + r), built as the validated quotient of
// build_projected by partition(), then canonically renumbered. The label
// sidecar carries the class names.
Dfa build_minimal(std::int64_t m, std::int64_t r, int p);

// Same automaton, built directly from the class formulas by BFS over class
// representatives; never materializes the 2m-state automaton. Bit-identical
// to build_minimal (tested); used by the decision procedure.
Dfa build_minimal_direct(std::int64_t m, std::int64_t r, int p);

// Direct description of the partition for r = 0; equals partition() exactly.
// Throws std::invalid_argument when params.r != 0.
ClassPartition r0_classes(const Params& params);

// Minimal automaton of val^{-1}(m*complement(T) + r): build_minimal with the
// initial state moved to the state reached on rep(m). Same states,
// transitions and finals.
Dfa complement_minimal(std::int64_t m, std::int64_t r, int p);

// complement_minimal built on top of build_minimal_direct.
Dfa complement_minimal_direct(std::int64_t m, std::int64_t r, int p);

}  // namespace tmaut
