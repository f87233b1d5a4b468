#include "tmaut/decision.hpp"

#include <bit>
#include <stdexcept>

#include "tmaut/classes.hpp"
#include "tmaut/numeration.hpp"

namespace tmaut {

namespace {

constexpr std::int64_t instance_cap = std::int64_t{1} << 62;

// m = k * 2^z when it fits the working range, nullopt otherwise. Candidates
// beyond 64 bits cannot equal the language of any automaton this library can
// itself produce, so they are skipped.
std::optional<std::int64_t> candidate_modulus(std::int64_t k, int z, int p) {
  if (z >= 62 || k > (instance_cap >> z)) return std::nullopt;
  const std::int64_t m = k << z;
  if (m > instance_cap / (std::int64_t{1} << p)) return std::nullopt;
  return m;
}

}  // namespace

const char* reason_string(Verdict::Reason reason) {
  switch (reason) {
    case Verdict::Reason::none: return "none";
    case Verdict::Reason::wrong_complexity_shape: return "WrongComplexityShape";
    case Verdict::Reason::no_candidate_equivalent: return "NoCandidateEquivalent";
    case Verdict::Reason::empty_language: return "EmptyLanguage";
    case Verdict::Reason::not_zero_closed: return "NotZeroClosed";
  }
  return "unknown";
}

std::vector<std::pair<std::int64_t, int>> candidates(std::int64_t min_states, int p) {
  if (min_states < 1 || p < 1) throw std::invalid_argument("arguments must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  // k descending, z ascending: 2k + ceil(z/p) = min_states, so for each odd k
  // the ceiling is fixed and z ranges over at most p values.
  std::int64_t k = min_states / 2;
  if (k % 2 == 0) --k;
  for (; k >= 1; k -= 2) {
    const std::int64_t c = min_states - 2 * k;  // required value of ceil(z/p)
    if (c == 0) {
      out.emplace_back(k, 0);
      continue;
    }
    const std::int64_t z_lo = static_cast<std::int64_t>(p) * (c - 1) + 1;
    const std::int64_t z_hi = static_cast<std::int64_t>(p) * c;
    for (std::int64_t z = z_lo; z <= z_hi; ++z)
      out.emplace_back(k, static_cast<int>(z));
  }
  return out;
}

std::optional<std::int64_t> infer_r(const Dfa& minimal_input, std::int64_t m, int p,
                                    bool complement) {
  const std::optional<std::uint64_t> min_value =
      min_accepted_value(minimal_input, std::int64_t{1} << p);
  if (!min_value) return std::nullopt;
  if (*min_value >= min_value_saturated) return std::nullopt;
  std::int64_t r = static_cast<std::int64_t>(*min_value);
  if (complement) r -= m;  // min of the complement orientation is m * 1 + r
  if (r < 0 || r >= m) return std::nullopt;
  return r;
}

Verdict decide(const Dfa& a, int p, bool allow_complement) {
  if (p < 1 || a.alphabet_size < 2 || !std::has_single_bit(static_cast<std::uint32_t>(a.alphabet_size)) ||
      a.alphabet_size != (std::int64_t{1} << p))
    throw std::invalid_argument("alphabet size must be 2^p with p >= 1");

  Verdict v;
  const Dfa min = minimize(a);

  bool any_final = false;
  for (std::uint8_t f : min.finals) any_final |= f != 0;
  if (!any_final) {
    v.reason = Verdict::Reason::empty_language;
    return v;
  }

  // Languages of the form val^{-1}(X) are closed under prepending zeros, so
  // the minimal initial state must carry a 0-self-loop.
  if (min.cell(min.initial, 0) != min.initial) {
    v.reason = Verdict::Reason::not_zero_closed;
    return v;
  }

  const auto cands = candidates(min.state_count, p);
  if (cands.empty()) {
    v.reason = Verdict::Reason::wrong_complexity_shape;
    return v;
  }

  for (const auto& [k, z] : cands) {
    const std::optional<std::int64_t> m = candidate_modulus(k, z, p);
    if (!m) continue;
    for (const bool complement : {false, true}) {
      if (complement && !allow_complement) continue;
      const std::optional<std::int64_t> r = infer_r(min, *m, p, complement);
      if (!r) continue;
      const Dfa candidate = complement ? complement_minimal_direct(*m, *r, p)
                                       : build_minimal_direct(*m, *r, p);
      if (!equivalent(min, candidate)) continue;
      if (v.match)
        throw std::logic_error("distinct candidates matched the same language");
      v.match = true;
      v.m = *m;
      v.r = *r;
      v.complement = complement;
      auto iso = isomorphic(min, candidate);
      if (!iso)
        throw std::logic_error("equivalent minimal automata must be isomorphic");
      v.iso = std::move(*iso);
    }
  }
  if (!v.match) v.reason = Verdict::Reason::no_candidate_equivalent;
  return v;
}

}  // namespace tmaut
