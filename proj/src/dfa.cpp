#include "tmaut/dfa.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace tmaut {

namespace {

void check_state_bounds(std::int64_t states, std::int64_t alphabet) {
  if (states < 1 || alphabet < 1 ||
      states * alphabet > std::int64_t{1} << 31)
    throw std::invalid_argument("automaton dimensions out of range");
}

std::vector<std::uint8_t> reachable_mask(const Dfa& a) {
  std::vector<std::uint8_t> seen(a.state_count, 0);
  std::vector<std::int32_t> stack{a.initial};
  seen[a.initial] = 1;
  while (!stack.empty()) {
    const std::int32_t s = stack.back();
    stack.pop_back();
    for (std::int32_t sym = 0; sym < a.alphabet_size; ++sym) {
      const std::int32_t t = a.cell(s, sym);
      if (t != no_transition && !seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

// Keeps exactly the states with keep[s] != 0 (the initial state must be
// kept); surviving states are renumbered in ascending old order.
Dfa restrict_states(const Dfa& a, const std::vector<std::uint8_t>& keep) {
  std::vector<std::int32_t> new_id(a.state_count, -1);
  std::int32_t count = 0;
  for (std::int32_t s = 0; s < a.state_count; ++s)
    if (keep[s]) new_id[s] = count++;

  Dfa out;
  out.state_count = count;
  out.alphabet_size = a.alphabet_size;
  out.initial = new_id[a.initial];
  out.finals.assign(count, 0);
  out.table.assign(static_cast<std::size_t>(count) * a.alphabet_size, no_transition);
  if (!a.labels.empty()) out.labels.resize(count);
  for (std::int32_t s = 0; s < a.state_count; ++s) {
    if (new_id[s] < 0) continue;
    out.finals[new_id[s]] = a.finals[s];
    if (!a.labels.empty()) out.labels[new_id[s]] = a.labels[s];
    for (std::int32_t sym = 0; sym < a.alphabet_size; ++sym) {
      const std::int32_t t = a.cell(s, sym);
      if (t != no_transition && new_id[t] >= 0) out.cell(new_id[s], sym) = new_id[t];
    }
  }
  return out;
}

}  // namespace

Dfa canonical_renumber(const Dfa& a) {
  std::vector<std::int32_t> order;
  order.reserve(a.state_count);
  std::vector<std::int32_t> new_id(a.state_count, -1);
  std::deque<std::int32_t> queue{a.initial};
  new_id[a.initial] = 0;
  order.push_back(a.initial);
  while (!queue.empty()) {
    const std::int32_t s = queue.front();
    queue.pop_front();
    for (std::int32_t sym = 0; sym < a.alphabet_size; ++sym) {
      const std::int32_t t = a.cell(s, sym);
      if (t != no_transition && new_id[t] < 0) {
        new_id[t] = static_cast<std::int32_t>(order.size());
        order.push_back(t);
        queue.push_back(t);
      }
    }
  }
  for (std::int32_t s = 0; s < a.state_count; ++s)
    if (new_id[s] < 0) {
      new_id[s] = static_cast<std::int32_t>(order.size());
      order.push_back(s);
    }

  Dfa out;
  out.state_count = a.state_count;
  out.alphabet_size = a.alphabet_size;
  out.initial = new_id[a.initial];
  out.finals.assign(a.state_count, 0);
  out.table.assign(a.table.size(), no_transition);
  if (!a.labels.empty()) out.labels.resize(a.state_count);
  for (std::int32_t s = 0; s < a.state_count; ++s) {
    out.finals[new_id[s]] = a.finals[s];
    if (!a.labels.empty()) out.labels[new_id[s]] = a.labels[s];
    for (std::int32_t sym = 0; sym < a.alphabet_size; ++sym) {
      const std::int32_t t = a.cell(s, sym);
      if (t != no_transition) out.cell(new_id[s], sym) = new_id[t];
    }
  }
  return out;
}

namespace {

// Hopcroft partition refinement on a complete DFA whose states are all
// reachable. Returns block ids per state, blocks numbered 0..result.second.
std::pair<std::vector<std::int32_t>, std::int32_t> hopcroft_blocks(const Dfa& a) {
  const std::int32_t n = a.state_count;
  const std::int32_t k = a.alphabet_size;

  // Inverse transition table in CSR form, one slice per symbol.
  std::vector<std::int32_t> inv_off(static_cast<std::size_t>(k) * n + 1, 0);
  for (std::int32_t s = 0; s < n; ++s)
    for (std::int32_t sym = 0; sym < k; ++sym)
      ++inv_off[static_cast<std::size_t>(sym) * n + a.cell(s, sym) + 1];
  for (std::size_t i = 1; i < inv_off.size(); ++i) inv_off[i] += inv_off[i - 1];
  std::vector<std::int32_t> inv_data(static_cast<std::size_t>(n) * k);
  {
    std::vector<std::int32_t> cursor(inv_off.begin(), inv_off.end() - 1);
    for (std::int32_t s = 0; s < n; ++s)
      for (std::int32_t sym = 0; sym < k; ++sym)
        inv_data[cursor[static_cast<std::size_t>(sym) * n + a.cell(s, sym)]++] = s;
  }

  // Partition as a permutation of states with contiguous block slices.
  std::vector<std::int32_t> perm(n), pos(n), block_of(n), blk_begin, blk_end;
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::int32_t x, std::int32_t y) { return a.finals[x] > a.finals[y]; });
  const std::int32_t final_count =
      static_cast<std::int32_t>(std::count_if(a.finals.begin(), a.finals.end(),
                                              [](std::uint8_t f) { return f != 0; }));
  std::int32_t nblocks = 0;
  if (final_count > 0) {
    blk_begin.push_back(0);
    blk_end.push_back(final_count);
    ++nblocks;
  }
  if (final_count < n) {
    blk_begin.push_back(final_count);
    blk_end.push_back(n);
    ++nblocks;
  }
  for (std::int32_t i = 0; i < n; ++i) pos[perm[i]] = i;
  for (std::int32_t b = 0; b < nblocks; ++b)
    for (std::int32_t i = blk_begin[b]; i < blk_end[b]; ++i) block_of[perm[i]] = b;

  std::deque<std::pair<std::int32_t, std::int32_t>> work;
  std::vector<std::uint8_t> in_work;  // indexed block * k + sym, grown on demand
  auto queued = [&](std::int32_t b, std::int32_t sym) -> std::uint8_t& {
    const std::size_t need = (static_cast<std::size_t>(b) + 1) * k;
    if (in_work.size() < need) in_work.resize(need, 0);
    return in_work[static_cast<std::size_t>(b) * k + sym];
  };
  auto push_work = [&](std::int32_t b, std::int32_t sym) {
    auto& flag = queued(b, sym);
    if (!flag) {
      flag = 1;
      work.emplace_back(b, sym);
    }
  };
  for (std::int32_t b = 0; b < nblocks; ++b)
    for (std::int32_t sym = 0; sym < k; ++sym) push_work(b, sym);

  std::vector<std::int32_t> splitter, touched;
  std::vector<std::int32_t> marked(n, 0);  // per block: number of marked states

  while (!work.empty()) {
    const auto [blk, sym] = work.front();
    work.pop_front();
    queued(blk, sym) = 0;

    splitter.clear();
    for (std::int32_t i = blk_begin[blk]; i < blk_end[blk]; ++i)
      splitter.push_back(perm[i]);

    // Mark the preimage of the splitter under sym, block by block.
    touched.clear();
    for (std::int32_t t : splitter) {
      const std::size_t lo = inv_off[static_cast<std::size_t>(sym) * n + t];
      const std::size_t hi = inv_off[static_cast<std::size_t>(sym) * n + t + 1];
      for (std::size_t idx = lo; idx < hi; ++idx) {
        const std::int32_t s = inv_data[idx];
        const std::int32_t b = block_of[s];
        if (marked[b] == 0) touched.push_back(b);
        // Swap s into the marked prefix of its block.
        const std::int32_t dest = blk_begin[b] + marked[b];
        const std::int32_t other = perm[dest];
        std::swap(perm[pos[s]], perm[dest]);
        pos[other] = pos[s];
        pos[s] = dest;
        ++marked[b];
      }
    }

    for (const std::int32_t b : touched) {
      const std::int32_t cnt = marked[b];
      marked[b] = 0;
      const std::int32_t size = blk_end[b] - blk_begin[b];
      if (cnt == size) continue;  // nothing split off

      // The marked prefix becomes a new block; b keeps the rest.
      const std::int32_t nb = nblocks++;
      blk_begin.push_back(blk_begin[b]);
      blk_end.push_back(blk_begin[b] + cnt);
      blk_begin[b] += cnt;
      for (std::int32_t i = blk_begin[nb]; i < blk_end[nb]; ++i) block_of[perm[i]] = nb;

      for (std::int32_t s2 = 0; s2 < k; ++s2) {
        if (queued(b, s2)) {
          push_work(nb, s2);
        } else {
          push_work(cnt <= blk_end[b] - blk_begin[b] ? nb : b, s2);
        }
      }
    }
  }

  std::vector<std::int32_t> result(block_of.begin(), block_of.end());
  return {std::move(result), nblocks};
}

}  // namespace

bool Dfa::complete() const {
  return std::none_of(table.begin(), table.end(),
                      [](std::int32_t t) { return t == no_transition; });
}

Dfa make_dfa(std::int32_t states, std::int32_t alphabet, std::int32_t initial,
             std::span<const std::int32_t> final_states) {
  check_state_bounds(states, alphabet);
  if (initial < 0 || initial >= states)
    throw std::invalid_argument("initial state out of range");
  Dfa a;
  a.state_count = states;
  a.alphabet_size = alphabet;
  a.initial = initial;
  a.finals.assign(states, 0);
  for (std::int32_t f : final_states) {
    if (f < 0 || f >= states) throw std::invalid_argument("final state out of range");
    a.finals[f] = 1;
  }
  a.table.assign(static_cast<std::size_t>(states) * alphabet, no_transition);
  return a;
}

bool accepts(const Dfa& a, std::span<const int> word) {
  std::int32_t s = a.initial;
  for (int sym : word) {
    if (sym < 0 || sym >= a.alphabet_size)
      throw std::out_of_range("symbol out of range");
    s = a.cell(s, sym);
    if (s == no_transition) return false;
  }
  return a.is_final(s);
}

Dfa product(const Dfa& a, const Dfa& b) {
  if (a.alphabet_size != b.alphabet_size)
    throw std::invalid_argument("product requires equal alphabets");

  std::unordered_map<std::uint64_t, std::int32_t> id;
  std::vector<std::pair<std::int32_t, std::int32_t>> states;
  auto intern = [&](std::int32_t sa, std::int32_t sb) {
    const std::uint64_t key =
        static_cast<std::uint64_t>(sa) * static_cast<std::uint64_t>(b.state_count) + sb;
    auto [it, inserted] = id.emplace(key, static_cast<std::int32_t>(states.size()));
    if (inserted) states.emplace_back(sa, sb);
    return it->second;
  };

  intern(a.initial, b.initial);
  std::vector<std::int32_t> flat_table;
  for (std::size_t next = 0; next < states.size(); ++next) {
    const auto [sa, sb] = states[next];
    for (std::int32_t sym = 0; sym < a.alphabet_size; ++sym) {
      const std::int32_t ta = a.cell(sa, sym);
      const std::int32_t tb = b.cell(sb, sym);
      flat_table.push_back(ta == no_transition || tb == no_transition
                               ? no_transition
                               : intern(ta, tb));
    }
  }

  Dfa out;
  out.state_count = static_cast<std::int32_t>(states.size());
  out.alphabet_size = a.alphabet_size;
  out.initial = 0;
  out.finals.assign(out.state_count, 0);
  for (std::int32_t s = 0; s < out.state_count; ++s)
    out.finals[s] = a.is_final(states[s].first) && b.is_final(states[s].second);
  // flat_table only covers rows discovered before their successors extended
  // the state list; it is exactly row-major already.
  out.table = std::move(flat_table);
  out.table.resize(static_cast<std::size_t>(out.state_count) * out.alphabet_size,
                   no_transition);
  return out;
}

Dfa project_second(const Dfa& a) {
  const auto base = static_cast<std::int64_t>(std::llround(std::sqrt(a.alphabet_size)));
  if (base < 2 || base * base != a.alphabet_size)
    throw std::invalid_argument("alphabet is not a pair alphabet b*b");

  Dfa out;
  out.state_count = a.state_count;
  out.alphabet_size = static_cast<std::int32_t>(base);
  out.initial = a.initial;
  out.finals = a.finals;
  out.labels = a.labels;
  out.table.assign(static_cast<std::size_t>(a.state_count) * base, no_transition);
  for (std::int32_t s = 0; s < a.state_count; ++s) {
    for (std::int32_t sym = 0; sym < a.alphabet_size; ++sym) {
      const std::int32_t t = a.cell(s, sym);
      if (t == no_transition) continue;
      const auto [d, e] = pair_components(sym, base);
      (void)d;
      if (out.cell(s, e) != no_transition)
        throw NondeterministicProjection(
            "two first components share second component " + std::to_string(e) +
            " from state " + std::to_string(s));
      out.cell(s, e) = t;
    }
  }
  return out;
}

Dfa trim(const Dfa& a) {
  const std::vector<std::uint8_t> acc = reachable_mask(a);

  // Backward reachability from the final states.
  std::vector<std::uint8_t> coacc(a.state_count, 0);
  std::vector<std::vector<std::int32_t>> preds(a.state_count);
  for (std::int32_t s = 0; s < a.state_count; ++s)
    for (std::int32_t sym = 0; sym < a.alphabet_size; ++sym) {
      const std::int32_t t = a.cell(s, sym);
      if (t != no_transition) preds[t].push_back(s);
    }
  std::vector<std::int32_t> stack;
  for (std::int32_t s = 0; s < a.state_count; ++s)
    if (a.is_final(s)) {
      coacc[s] = 1;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    const std::int32_t t = stack.back();
    stack.pop_back();
    for (std::int32_t s : preds[t])
      if (!coacc[s]) {
        coacc[s] = 1;
        stack.push_back(s);
      }
  }

  std::vector<std::uint8_t> keep(a.state_count, 0);
  for (std::int32_t s = 0; s < a.state_count; ++s) keep[s] = acc[s] && coacc[s];
  if (!keep[a.initial]) throw EmptyLanguage("no accessible final state");
  return restrict_states(a, keep);
}

Dfa complete_with_sink(const Dfa& a) {
  if (a.complete()) return a;
  Dfa out;
  out.state_count = a.state_count + 1;
  out.alphabet_size = a.alphabet_size;
  out.initial = a.initial;
  out.finals.assign(out.state_count, 0);
  std::copy(a.finals.begin(), a.finals.end(), out.finals.begin());
  out.table.assign(static_cast<std::size_t>(out.state_count) * out.alphabet_size,
                   a.state_count);  // default everything to the sink
  for (std::int32_t s = 0; s < a.state_count; ++s)
    for (std::int32_t sym = 0; sym < a.alphabet_size; ++sym) {
      const std::int32_t t = a.cell(s, sym);
      if (t != no_transition) out.cell(s, sym) = t;
    }
  return out;
}

Dfa minimize(const Dfa& a) {
  const Dfa complete = complete_with_sink(a);
  Dfa reachable = restrict_states(complete, reachable_mask(complete));
  reachable.labels.clear();

  const auto [block_of, nblocks] = hopcroft_blocks(reachable);

  Dfa quotient;
  quotient.state_count = nblocks;
  quotient.alphabet_size = reachable.alphabet_size;
  quotient.initial = block_of[reachable.initial];
  quotient.finals.assign(nblocks, 0);
  quotient.table.assign(static_cast<std::size_t>(nblocks) * reachable.alphabet_size,
                        no_transition);
  for (std::int32_t s = 0; s < reachable.state_count; ++s) {
    quotient.finals[block_of[s]] = reachable.finals[s];
    for (std::int32_t sym = 0; sym < reachable.alphabet_size; ++sym)
      quotient.cell(block_of[s], sym) = block_of[reachable.cell(s, sym)];
  }
  return canonical_renumber(quotient);
}

bool equivalent(const Dfa& a, const Dfa& b) {
  if (a.alphabet_size != b.alphabet_size)
    throw std::invalid_argument("equivalence requires equal alphabets");
  const Dfa ca = complete_with_sink(a);
  const Dfa cb = complete_with_sink(b);

  // Union-find over the disjoint state sets; b-states live at an offset.
  const std::int32_t offset = ca.state_count;
  std::vector<std::int32_t> parent(ca.state_count + cb.state_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  std::vector<std::pair<std::int32_t, std::int32_t>> stack;
  stack.emplace_back(ca.initial, cb.initial);
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    const std::int32_t rx = find(x), ry = find(offset + y);
    if (rx == ry) continue;
    if (ca.is_final(x) != cb.is_final(y)) return false;
    parent[rx] = ry;
    for (std::int32_t sym = 0; sym < ca.alphabet_size; ++sym)
      stack.emplace_back(ca.cell(x, sym), cb.cell(y, sym));
  }
  return true;
}

std::optional<std::vector<std::int32_t>> isomorphic(const Dfa& a, const Dfa& b) {
  if (a.state_count != b.state_count || a.alphabet_size != b.alphabet_size)
    return std::nullopt;

  std::vector<std::int32_t> map_ab(a.state_count, -1), map_ba(b.state_count, -1);
  std::deque<std::int32_t> queue;
  auto pair_states = [&](std::int32_t sa, std::int32_t sb) {
    if (map_ab[sa] != -1 || map_ba[sb] != -1) return map_ab[sa] == sb;
    if (a.is_final(sa) != b.is_final(sb)) return false;
    map_ab[sa] = sb;
    map_ba[sb] = sa;
    queue.push_back(sa);
    return true;
  };

  if (!pair_states(a.initial, b.initial)) return std::nullopt;
  std::int32_t visited = 0;
  while (!queue.empty()) {
    const std::int32_t sa = queue.front();
    queue.pop_front();
    ++visited;
    const std::int32_t sb = map_ab[sa];
    for (std::int32_t sym = 0; sym < a.alphabet_size; ++sym) {
      const std::int32_t ta = a.cell(sa, sym);
      const std::int32_t tb = b.cell(sb, sym);
      if ((ta == no_transition) != (tb == no_transition)) return std::nullopt;
      if (ta != no_transition && !pair_states(ta, tb)) return std::nullopt;
    }
  }
  if (visited != a.state_count) return std::nullopt;  // inputs were not accessible
  return map_ab;
}

std::optional<std::uint64_t> min_accepted_value(const Dfa& a, std::int64_t base) {
  if (base != a.alphabet_size)
    throw std::invalid_argument("base must match the alphabet size");

  // BFS in ascending symbol order discovers states in shortlex order of
  // their minimal access words; the first final state hit yields the
  // shortlex-smallest accepted word.
  std::vector<std::int32_t> parent(a.state_count, -1), via(a.state_count, -1);
  std::vector<std::uint8_t> seen(a.state_count, 0);
  std::deque<std::int32_t> queue{a.initial};
  seen[a.initial] = 1;
  std::int32_t hit = a.is_final(a.initial) ? a.initial : -1;
  while (hit < 0 && !queue.empty()) {
    const std::int32_t s = queue.front();
    queue.pop_front();
    for (std::int32_t sym = 0; sym < a.alphabet_size && hit < 0; ++sym) {
      const std::int32_t t = a.cell(s, sym);
      if (t == no_transition || seen[t]) continue;
      seen[t] = 1;
      parent[t] = s;
      via[t] = sym;
      if (a.is_final(t)) hit = t;
      queue.push_back(t);
    }
  }
  if (hit < 0) return std::nullopt;

  std::vector<int> word;
  for (std::int32_t s = hit; s != a.initial; s = parent[s]) word.push_back(via[s]);
  std::reverse(word.begin(), word.end());

  std::uint64_t acc = 0;
  for (int d : word) {
    if (acc > (min_value_saturated - d) / static_cast<std::uint64_t>(base))
      return min_value_saturated;
    acc = acc * base + static_cast<std::uint64_t>(d);
  }
  return acc;
}

}  // namespace tmaut
