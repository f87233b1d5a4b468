#include "tmaut/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tmaut {

namespace {

std::int64_t get_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw std::invalid_argument(std::string("missing or non-integer field: ") + key);
  return j[key].get<std::int64_t>();
}

std::string symbol_text(std::int32_t sym, std::int64_t pair_base) {
  if (pair_base > 0) {
    const auto [d, e] = pair_components(sym, pair_base);
    return "(" + std::to_string(d) + "," + std::to_string(e) + ")";
  }
  return std::to_string(sym);
}

}  // namespace

nlohmann::json dfa_to_json(const Dfa& a) {
  nlohmann::json j;
  j["alphabet_size"] = a.alphabet_size;
  j["state_count"] = a.state_count;
  j["initial"] = a.initial;
  nlohmann::json finals = nlohmann::json::array();
  for (std::int32_t s = 0; s < a.state_count; ++s)
    if (a.is_final(s)) finals.push_back(s);
  j["finals"] = std::move(finals);
  nlohmann::json transitions = nlohmann::json::array();
  for (std::int32_t s = 0; s < a.state_count; ++s)
    for (std::int32_t sym = 0; sym < a.alphabet_size; ++sym) {
      const std::int32_t t = a.cell(s, sym);
      if (t != no_transition) transitions.push_back({s, sym, t});
    }
  j["transitions"] = std::move(transitions);
  if (!a.labels.empty()) {
    nlohmann::json labels = nlohmann::json::object();
    for (std::int32_t s = 0; s < a.state_count; ++s)
      labels[std::to_string(s)] = a.labels[s];
    j["labels"] = std::move(labels);
  }
  return j;
}

Dfa dfa_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("automaton must be a JSON object");
  const std::int64_t alphabet = get_int(j, "alphabet_size");
  const std::int64_t states = get_int(j, "state_count");
  const std::int64_t initial = get_int(j, "initial");
  if (states < 1 || alphabet < 1 || states * alphabet > (std::int64_t{1} << 31))
    throw std::invalid_argument("automaton dimensions out of range");
  if (initial < 0 || initial >= states)
    throw std::invalid_argument("initial state out of range");

  Dfa a = make_dfa(static_cast<std::int32_t>(states), static_cast<std::int32_t>(alphabet),
                   static_cast<std::int32_t>(initial), {});
  if (!j.contains("finals") || !j["finals"].is_array())
    throw std::invalid_argument("missing finals array");
  for (const auto& f : j["finals"]) {
    if (!f.is_number_integer()) throw std::invalid_argument("finals must be integers");
    const std::int64_t s = f.get<std::int64_t>();
    if (s < 0 || s >= states) throw std::invalid_argument("final state out of range");
    a.finals[s] = 1;
  }
  if (!j.contains("transitions") || !j["transitions"].is_array())
    throw std::invalid_argument("missing transitions array");
  for (const auto& row : j["transitions"]) {
    if (!row.is_array() || row.size() != 3 || !row[0].is_number_integer() ||
        !row[1].is_number_integer() || !row[2].is_number_integer())
      throw std::invalid_argument("transitions must be [src, symbol, dst] triples");
    const std::int64_t src = row[0].get<std::int64_t>();
    const std::int64_t sym = row[1].get<std::int64_t>();
    const std::int64_t dst = row[2].get<std::int64_t>();
    if (src < 0 || src >= states || dst < 0 || dst >= states || sym < 0 ||
        sym >= alphabet)
      throw std::invalid_argument("transition endpoint out of range");
    auto& cell = a.cell(static_cast<std::int32_t>(src), static_cast<std::int32_t>(sym));
    if (cell != no_transition)
      throw std::invalid_argument("duplicate transition for (src, symbol)");
    cell = static_cast<std::int32_t>(dst);
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_object()) throw std::invalid_argument("labels must be an object");
    a.labels.assign(states, "");
    std::set<std::string> used;
    for (const auto& [key, value] : j["labels"].items()) {
      std::size_t pos = 0;
      std::int64_t s = -1;
      try {
        s = std::stoll(key, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("label keys must be state ids");
      }
      if (pos != key.size() || s < 0 || s >= states)
        throw std::invalid_argument("label key out of range");
      if (!value.is_string()) throw std::invalid_argument("labels must be strings");
      const std::string text = value.get<std::string>();
      if (!used.insert(text).second)
        throw std::invalid_argument("labels must be injective");
      a.labels[s] = text;
    }
  }
  return a;
}

std::string dfa_to_dot(const Dfa& a, std::int64_t pair_base) {
  std::ostringstream out;
  out << "digraph dfa {\n  rankdir=LR;\n";
  out << "  __start [shape=none, label=\"\"];\n";
  for (std::int32_t s = 0; s < a.state_count; ++s) {
    out << "  " << s << " [shape=" << (a.is_final(s) ? "doublecircle" : "circle");
    if (!a.labels.empty()) out << ", label=\"" << a.labels[s] << "\"";
    out << "];\n";
  }
  out << "  __start -> " << a.initial << ";\n";
  for (std::int32_t s = 0; s < a.state_count; ++s) {
    // Group parallel edges, target ascending, symbols joined in order.
    for (std::int32_t t = 0; t < a.state_count; ++t) {
      std::string syms;
      for (std::int32_t sym = 0; sym < a.alphabet_size; ++sym)
        if (a.cell(s, sym) == t) {
          if (!syms.empty()) syms += ",";
          syms += symbol_text(sym, pair_base);
        }
      if (!syms.empty())
        out << "  " << s << " -> " << t << " [label=\"" << syms << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  j["match"] = v.match;
  if (v.match) {
    j["m"] = v.m;
    j["r"] = v.r;
    j["complement"] = v.complement;
  } else {
    j["reason"] = reason_string(v.reason);
  }
  return j;
}

nlohmann::json sweep_report_to_json(const SweepReport& report) {
  nlohmann::json j;
  j["m"] = report.m;
  j["r"] = report.r;
  j["p"] = report.p;
  j["max_len"] = report.max_len;
  j["complement"] = report.complement;
  j["words_checked"] = report.words_checked;
  j["mismatch_count"] = report.mismatches.size();
  nlohmann::json mismatches = nlohmann::json::array();
  for (const SweepMismatch& mm : report.mismatches) {
    nlohmann::json digits = nlohmann::json::array();
    for (int jdx = mm.len - 1; jdx >= 0; --jdx)
      digits.push_back((mm.value >> (report.p * jdx)) & ((std::uint64_t{1} << report.p) - 1));
    mismatches.push_back({{"word", std::move(digits)},
                          {"dfa_accepts", mm.dfa_accepts},
                          {"oracle_member", mm.oracle_member}});
  }
  j["mismatches"] = std::move(mismatches);
  return j;
}

}  // namespace tmaut
