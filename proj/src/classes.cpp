#include "tmaut/classes.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace tmaut {

namespace {

// floor(r / 2^shift) without undefined behaviour for large shifts.
std::int64_t floor_shift(std::int64_t r, std::int64_t shift) {
  return shift >= 63 ? 0 : r >> shift;
}

void check_alpha(int alpha, const Params& params) {
  if (alpha < 0 || alpha > params.suffix_len)
    throw std::invalid_argument("alpha must lie in [0, suffix_len]");
}

std::vector<StateLabel> c_prime_branch_low(int alpha, const Params& params) {
  // p*alpha <= z: members floor(r/2^{pa}) + l * m/2^{pa} on track T_l.
  const int shift = params.p * alpha;
  const std::int64_t base = params.r >> shift;
  const std::int64_t step = params.m >> shift;
  const std::int64_t count = std::int64_t{1} << shift;
  std::vector<StateLabel> out;
  out.reserve(count);
  for (std::int64_t l = 0; l < count; ++l)
    out.push_back({base + l * step, flip_if(Side::T, l)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StateLabel> c_prime_branch_high(int alpha, const Params& params) {
  // p*alpha >= z: members floor(r/2^{pa}) + l * k on track T_l.
  const std::int64_t base = floor_shift(params.r, std::int64_t{params.p} * alpha);
  const std::int64_t count = std::int64_t{1} << params.z;
  std::vector<StateLabel> out;
  out.reserve(count);
  for (std::int64_t l = 0; l < count; ++l)
    out.push_back({base + l * params.k, flip_if(Side::T, l)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StateLabel> sorted_difference(const std::vector<StateLabel>& a,
                                          const std::vector<StateLabel>& b) {
  std::vector<StateLabel> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Membership in C'_alpha by formula, no enumeration.
bool in_c_prime(int alpha, const StateLabel& s, const Params& params) {
  const std::int64_t shift = std::int64_t{params.p} * alpha;
  std::int64_t base, step, count;
  if (shift <= params.z) {
    base = params.r >> shift;
    step = params.m >> shift;
    count = std::int64_t{1} << shift;
  } else {
    base = floor_shift(params.r, shift);
    step = params.k;
    count = std::int64_t{1} << params.z;
  }
  if (s.i < base) return false;
  const std::int64_t offset = s.i - base;
  if (offset % step != 0) return false;
  const std::int64_t l = offset / step;
  if (l >= count) return false;
  return s.side == flip_if(Side::T, l);
}

void append_members(ClassPartition& part, const ClassId& id,
                    std::vector<StateLabel> members) {
  const int index = static_cast<int>(part.classes.size());
  part.classes.push_back(id);
  for (const StateLabel& s : members) {
    int& slot = part.class_of_label[label_state_id(s)];
    if (slot != -1) throw QuotientIllDefined("classes overlap at " + label_string(s));
    slot = index;
  }
  part.members.push_back(std::move(members));
}

void validate_partition(const ClassPartition& part) {
  const Params& params = part.params;
  for (int id : part.class_of_label)
    if (id == -1) throw QuotientIllDefined("classes do not cover all states");
  for (std::size_t c = 0; c < part.classes.size(); ++c)
    if (part.members[c].empty())
      throw QuotientIllDefined("empty class recorded: " + part.classes[c].name());
  std::int64_t expected = state_complexity(params.m, params.p);
  if (static_cast<std::int64_t>(part.classes.size()) != expected)
    throw QuotientIllDefined("nonempty class count disagrees with 2k + ceil(z/p)");
}

// Bare quotient construction shared by the materialized and direct routes:
// canonical BFS renumbering makes their outputs identical.
Dfa quotient_from_partition(const Params& params, const ClassPartition& part,
                            const Dfa& projected) {
  const auto nc = static_cast<std::int32_t>(part.classes.size());
  const std::int32_t initial = part.class_of_label[label_state_id({0, Side::T})];
  const std::int32_t final_class = part.class_of_label[label_state_id({params.r, Side::T})];
  if (part.classes[initial] != ClassId{ClassId::Kind::C, params.rep_r_len, Side::T})
    throw QuotientIllDefined("initial state is not class C_R");
  if (part.classes[final_class] != ClassId{ClassId::Kind::C, 0, Side::T})
    throw QuotientIllDefined("final state is not class C_0");

  Dfa q = make_dfa(nc, static_cast<std::int32_t>(params.b), initial,
                   std::array<std::int32_t, 1>{final_class});
  q.labels.resize(nc);
  for (std::int32_t c = 0; c < nc; ++c) {
    q.labels[c] = part.classes[c].name();
    for (std::int32_t sym = 0; sym < q.alphabet_size; ++sym) {
      std::int32_t target = -1;
      for (const StateLabel& s : part.members[c]) {
        const std::int32_t t = projected.cell(label_state_id(s), sym);
        const std::int32_t tc = part.class_of_label[t];
        if (target == -1) target = tc;
        if (tc != target)
          throw QuotientIllDefined("members of " + part.classes[c].name() +
                                   " disagree on symbol " + std::to_string(sym));
      }
      q.cell(c, sym) = target;
    }
  }
  return q;
}

}  // namespace

std::string ClassId::name() const {
  if (kind == Kind::C) return "C_" + std::to_string(index);
  return std::string("D_(") + std::to_string(index) + "," + side_char(side) + ")";
}

std::vector<StateLabel> c_prime(int alpha, const Params& params) {
  check_alpha(alpha, params);
  const std::int64_t shift = std::int64_t{params.p} * alpha;
  if (shift < params.z) return c_prime_branch_low(alpha, params);
  if (shift > params.z) return c_prime_branch_high(alpha, params);
  // At p*alpha = z the two cases of the definition coincide; evaluate both
  // and insist they agree.
  std::vector<StateLabel> low = c_prime_branch_low(alpha, params);
  if (low != c_prime_branch_high(alpha, params))
    throw QuotientIllDefined("C' branches disagree at p*alpha = z");
  return low;
}

std::vector<StateLabel> c_class(int alpha, const Params& params) {
  check_alpha(alpha, params);
  std::vector<StateLabel> current = c_prime(alpha, params);
  std::vector<StateLabel> earlier;
  for (int beta = 0; beta < alpha; ++beta) {
    std::vector<StateLabel> cb = c_prime(beta, params);
    std::vector<StateLabel> merged;
    std::merge(earlier.begin(), earlier.end(), cb.begin(), cb.end(),
               std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    earlier = std::move(merged);
  }
  return sorted_difference(current, earlier);
}

std::vector<StateLabel> d_class(std::int64_t j, Side x, const Params& params) {
  if (j < 0 || j >= params.k) throw std::invalid_argument("j must lie in [0, k)");
  if (j == 0 && x == Side::T)
    throw std::invalid_argument("D_(0,T) is not defined");

  std::vector<StateLabel> dp;
  for (std::int64_t l = 0; l < (std::int64_t{1} << params.z); ++l)
    dp.push_back({j + l * params.k, flip_if(x, l)});
  std::sort(dp.begin(), dp.end());

  std::vector<StateLabel> c_union;
  for (int alpha = 0; alpha <= params.suffix_len; ++alpha) {
    std::vector<StateLabel> ca = c_prime(alpha, params);
    std::vector<StateLabel> merged;
    std::merge(c_union.begin(), c_union.end(), ca.begin(), ca.end(),
               std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    c_union = std::move(merged);
  }
  return sorted_difference(dp, c_union);
}

ClassPartition partition(const Params& params) {
  ClassPartition part;
  part.params = params;
  part.class_of_label.assign(static_cast<std::size_t>(2 * params.m), -1);

  std::vector<StateLabel> seen;  // union of C'_beta for beta processed so far
  for (int alpha = 0; alpha <= params.suffix_len; ++alpha) {
    std::vector<StateLabel> cp = c_prime(alpha, params);
    std::vector<StateLabel> fresh = sorted_difference(cp, seen);
    if (fresh.empty()) throw QuotientIllDefined("class C_" + std::to_string(alpha) +
                                                " is empty");
    std::vector<StateLabel> merged;
    std::merge(seen.begin(), seen.end(), cp.begin(), cp.end(),
               std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    seen = std::move(merged);
    append_members(part, {ClassId::Kind::C, alpha, Side::T}, std::move(fresh));
  }

  for (std::int64_t j = 0; j < params.k; ++j)
    for (Side x : {Side::T, Side::B}) {
      if (j == 0 && x == Side::T) continue;
      std::vector<StateLabel> dp;
      for (std::int64_t l = 0; l < (std::int64_t{1} << params.z); ++l)
        dp.push_back({j + l * params.k, flip_if(x, l)});
      std::sort(dp.begin(), dp.end());
      std::vector<StateLabel> fresh = sorted_difference(dp, seen);
      if (!fresh.empty())
        append_members(part, {ClassId::Kind::D, j, x}, std::move(fresh));
    }

  validate_partition(part);
  return part;
}

ClassId class_of(const StateLabel& s, const Params& params) {
  if (s.i < 0 || s.i >= params.m) throw std::invalid_argument("state out of range");
  for (int alpha = 0; alpha <= params.suffix_len; ++alpha)
    if (in_c_prime(alpha, s, params)) return {ClassId::Kind::C, alpha, Side::T};
  const std::int64_t j = s.i % params.k;
  const std::int64_t l = s.i / params.k;
  const Side x = flip_if(s.side, l);  // solve s.side == flip_if(x, l)
  if (j == 0 && x == Side::T)
    throw QuotientIllDefined("state escaped every class: " + label_string(s));
  return {ClassId::Kind::D, j, x};
}

std::int64_t state_complexity(std::int64_t m, int p) {
  if (m < 1 || p < 1) throw std::invalid_argument("m and p must be positive");
  std::int64_t k = m;
  int z = 0;
  while (k % 2 == 0) {
    k /= 2;
    ++z;
  }
  return 2 * k + ceil_div(z, p);
}

Dfa build_minimal(std::int64_t m, std::int64_t r, int p) {
  const Params params = derive_params(m, r, p);
  const Dfa projected = build_projected(m, r, p);
  const ClassPartition part = partition(params);
  return canonical_renumber(quotient_from_partition(params, part, projected));
}

Dfa build_minimal_direct(std::int64_t m, std::int64_t r, int p) {
  const Params params = derive_params(m, r, p);
  const std::int64_t b = params.b;
  const std::int64_t expected = state_complexity(m, p);
  if (expected * b > std::int64_t{1} << 31)
    throw std::invalid_argument("minimal automaton too large");

  // BFS over classes, carrying one concrete member per class as its
  // representative; transitions computed from representatives are
  // class-consistent because states of a class accept the same language.
  std::vector<ClassId> order;
  std::vector<StateLabel> rep_member;
  std::map<ClassId, std::int32_t> ids;
  auto intern = [&](const ClassId& id, const StateLabel& member) {
    auto [it, inserted] = ids.emplace(id, static_cast<std::int32_t>(order.size()));
    if (inserted) {
      order.push_back(id);
      rep_member.push_back(member);
    }
    return it->second;
  };

  const StateLabel start{0, Side::T};
  intern(class_of(start, params), start);
  std::vector<std::int32_t> table;
  for (std::size_t next = 0; next < order.size(); ++next) {
    const StateLabel from = rep_member[next];
    for (std::int64_t e = 0; e < b; ++e) {
      const StateLabel to{(b * from.i + e) % m, flip_if(from.side, (b * from.i + e) / m)};
      table.push_back(intern(class_of(to, params), to));
    }
  }
  if (static_cast<std::int64_t>(order.size()) != expected)
    throw QuotientIllDefined("direct construction found a wrong class count");

  const ClassId initial_id{ClassId::Kind::C, params.rep_r_len, Side::T};
  const ClassId final_id{ClassId::Kind::C, 0, Side::T};
  if (order[0] != initial_id)
    throw QuotientIllDefined("initial state is not class C_R");

  Dfa q;
  q.state_count = static_cast<std::int32_t>(order.size());
  q.alphabet_size = static_cast<std::int32_t>(b);
  q.initial = 0;
  q.finals.assign(q.state_count, 0);
  q.table = std::move(table);
  q.labels.resize(q.state_count);
  bool saw_final = false;
  for (std::int32_t c = 0; c < q.state_count; ++c) {
    q.labels[c] = order[c].name();
    if (order[c] == final_id) {
      q.finals[c] = 1;
      saw_final = true;
    }
  }
  if (!saw_final) throw QuotientIllDefined("class C_0 unreachable");
  return canonical_renumber(q);
}

ClassPartition r0_classes(const Params& params) {
  if (params.r != 0) throw std::invalid_argument("r0_classes requires r = 0");

  ClassPartition part;
  part.params = params;
  part.class_of_label.assign(static_cast<std::size_t>(2 * params.m), -1);

  const int big_n = params.suffix_len;  // = ceil(z/p) since rep(0) is empty
  append_members(part, {ClassId::Kind::C, 0, Side::T}, {{0, Side::T}});
  for (int alpha = 1; alpha <= big_n; ++alpha) {
    const int beta_hi = alpha == big_n ? params.z - 1 : alpha * params.p - 1;
    std::vector<StateLabel> members;
    for (int beta = (alpha - 1) * params.p; beta <= beta_hi; ++beta) {
      const std::int64_t base = params.k << (params.z - beta - 1);
      const std::int64_t step = params.k << (params.z - beta);
      for (std::int64_t l = 0; l < (std::int64_t{1} << beta); ++l)
        members.push_back({base + l * step, flip_if(Side::B, l)});
    }
    std::sort(members.begin(), members.end());
    append_members(part, {ClassId::Kind::C, alpha, Side::T}, std::move(members));
  }

  for (std::int64_t j = 0; j < params.k; ++j)
    for (Side x : {Side::T, Side::B}) {
      if (j == 0 && x == Side::T) continue;
      std::vector<StateLabel> members;
      for (std::int64_t l = 0; l < (std::int64_t{1} << params.z); ++l)
        members.push_back({j + l * params.k, flip_if(x, l)});
      std::sort(members.begin(), members.end());
      append_members(part, {ClassId::Kind::D, j, x}, std::move(members));
    }

  validate_partition(part);
  return part;
}

Dfa complement_minimal(std::int64_t m, std::int64_t r, int p) {
  Dfa a = build_minimal(m, r, p);
  const std::vector<int> word = rep(static_cast<std::uint64_t>(m), std::int64_t{1} << p);
  std::int32_t s = a.initial;
  for (int sym : word) s = a.cell(s, sym);
  a.initial = s;
  return a;
}

Dfa complement_minimal_direct(std::int64_t m, std::int64_t r, int p) {
  Dfa a = build_minimal_direct(m, r, p);
  const std::vector<int> word = rep(static_cast<std::uint64_t>(m), std::int64_t{1} << p);
  std::int32_t s = a.initial;
  for (int sym : word) s = a.cell(s, sym);
  a.initial = s;
  return a;
}

}  // namespace tmaut
