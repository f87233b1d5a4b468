#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "tmaut/decision.hpp"
#include "tmaut/dfa.hpp"
#include "tmaut/oracle.hpp"

namespace tmaut {

// JSON automaton schema:
//   { "alphabet_size": int, "state_count": int, "initial": int,
//     "finals": [int...], "transitions": [[src, symbol, dst]...],
//     "labels": {"<id>": "string", ...} (optional) }
// Missing (src, symbol) pairs mean undefined transitions. Keys serialize
// sorted; transitions sorted by (src, symbol); output is deterministic.
nlohmann::json dfa_to_json(const Dfa& a);

// Validating parse; throws std::invalid_argument on any malformed input.
Dfa dfa_from_json(const nlohmann::json& j);

// Graphviz DOT: one node per state, doublecircle for finals, edge labels
// are symbols. When pair_base > 0 symbols render as "(d,e)".
std::string dfa_to_dot(const Dfa& a, std::int64_t pair_base = 0);

// { "match": bool, "m": int?, "r": int?, "complement": bool?, "reason": string? }
nlohmann::json verdict_to_json(const Verdict& v);

nlohmann::json sweep_report_to_json(const SweepReport& report);

}  // namespace tmaut
