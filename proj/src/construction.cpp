#include "tmaut/construction.hpp"

#include <stdexcept>

namespace tmaut {

namespace {

void check_instance(std::int64_t m, std::int64_t r, std::int64_t b) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (b < 2) throw std::invalid_argument("base must be at least 2");
  if (r < 0 || r >= m) throw std::invalid_argument("r must lie in [0, m)");
  if (m > (std::int64_t{1} << 62) / b)
    throw std::invalid_argument("instance exceeds the 64-bit working range");
}

// 2^e mod k for odd k.
std::int64_t pow2_mod(std::int64_t e, std::int64_t k) {
  std::int64_t result = 1 % k;
  std::int64_t base = 2 % k;
  while (e > 0) {
    if (e & 1) result = (result * base) % k;
    base = (base * base) % k;
    e >>= 1;
  }
  return result;
}

}  // namespace

std::string label_string(const StateLabel& s) {
  return std::to_string(s.i) + side_char(s.side);
}

Dfa build_a_t(int p) {
  if (p < 1 || p > 10) throw std::invalid_argument("p must be in [1, 10]");
  const std::int64_t b = std::int64_t{1} << p;
  const std::int32_t t = 0, bottom = 1;
  Dfa a = make_dfa(2, static_cast<std::int32_t>(b * b), t,
                   std::array<std::int32_t, 1>{t});
  for (std::int64_t d = 0; d < b; ++d)
    for (std::int64_t e = 0; e < b; ++e) {
      const std::int32_t sym = pair_symbol(d, e, b);
      a.cell(t, sym) = is_evil(d) ? t : bottom;
      a.cell(bottom, sym) = is_evil(d) ? bottom : t;
    }
  a.labels = {"T", "B"};
  return a;
}

Dfa build_a_mrb(std::int64_t m, std::int64_t r, std::int64_t b) {
  check_instance(m, r, b);
  if (m * b * b > std::int64_t{1} << 31)
    throw std::invalid_argument("pair automaton too large");
  Dfa a = make_dfa(static_cast<std::int32_t>(m), static_cast<std::int32_t>(b * b), 0,
                   std::array<std::int32_t, 1>{static_cast<std::int32_t>(r)});
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t e = 0; e < b; ++e) {
      const std::int64_t d = (b * i + e) / m;  // < b, see the division bound
      const std::int64_t j = (b * i + e) % m;
      a.cell(static_cast<std::int32_t>(i), pair_symbol(d, e, b)) =
          static_cast<std::int32_t>(j);
    }
  return a;
}

Dfa build_pi_a_mrb(std::int64_t m, std::int64_t r, std::int64_t b) {
  check_instance(m, r, b);
  if (m * b > std::int64_t{1} << 31)
    throw std::invalid_argument("projected automaton too large");
  Dfa a = make_dfa(static_cast<std::int32_t>(m), static_cast<std::int32_t>(b), 0,
                   std::array<std::int32_t, 1>{static_cast<std::int32_t>(r)});
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t e = 0; e < b; ++e)
      a.cell(static_cast<std::int32_t>(i), static_cast<std::int32_t>(e)) =
          static_cast<std::int32_t>((b * i + e) % m);
  return a;
}

std::int64_t sigma(std::int64_t i, const Params& params) {
  if (!params.witness_len)
    throw std::domain_error("sigma is undefined for k = 1");
  if (i < 0 || i >= params.k) throw std::invalid_argument("i must lie in [0, k)");
  const std::int64_t e = std::int64_t{*params.witness_len} * params.p - params.z;
  const std::int64_t factor = pow2_mod(e, params.k);
  return (params.k - (factor * (i % params.k)) % params.k) % params.k;
}

std::vector<int> witness_word(std::int64_t i, const Params& params) {
  const std::int64_t value = sigma(i, params) << params.z;
  std::vector<int> digits = rep(static_cast<std::uint64_t>(value), params.b);
  std::vector<int> out(static_cast<std::size_t>(*params.witness_len) - digits.size(), 0);
  out.insert(out.end(), digits.begin(), digits.end());
  return out;
}

Dfa build_product(std::int64_t m, std::int64_t r, int p) {
  const Params params = derive_params(m, r, p);
  const std::int64_t b = params.b;
  if (2 * m * b * b > std::int64_t{1} << 31)
    throw std::invalid_argument("product automaton too large");

  Dfa a = make_dfa(static_cast<std::int32_t>(2 * m), static_cast<std::int32_t>(b * b),
                   label_state_id({0, Side::T}),
                   std::array<std::int32_t, 1>{label_state_id({r, Side::T})});
  a.labels.resize(a.state_count);
  for (std::int64_t i = 0; i < m; ++i)
    for (Side x : {Side::T, Side::B}) {
      const std::int32_t src = label_state_id({i, x});
      a.labels[src] = label_string({i, x});
      for (std::int64_t e = 0; e < b; ++e) {
        const std::int64_t d = (b * i + e) / m;
        const std::int64_t j = (b * i + e) % m;
        a.cell(src, pair_symbol(d, e, b)) = label_state_id({j, flip_if(x, d)});
      }
    }
  return a;
}

Dfa build_projected(std::int64_t m, std::int64_t r, int p) {
  const Params params = derive_params(m, r, p);
  const std::int64_t b = params.b;
  if (2 * m * b > std::int64_t{1} << 31)
    throw std::invalid_argument("projected automaton too large");

  Dfa a = make_dfa(static_cast<std::int32_t>(2 * m), static_cast<std::int32_t>(b),
                   label_state_id({0, Side::T}),
                   std::array<std::int32_t, 1>{label_state_id({r, Side::T})});
  a.labels.resize(a.state_count);
  for (std::int64_t i = 0; i < m; ++i)
    for (Side x : {Side::T, Side::B}) {
      const std::int32_t src = label_state_id({i, x});
      a.labels[src] = label_string({i, x});
      for (std::int64_t e = 0; e < b; ++e)
        a.cell(src, static_cast<std::int32_t>(e)) =
            label_state_id({(b * i + e) % m, flip_if(x, (b * i + e) / m)});
    }
  return a;
}

}  // namespace tmaut
