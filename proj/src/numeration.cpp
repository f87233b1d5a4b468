#include "tmaut/numeration.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace tmaut {

namespace {

constexpr std::int64_t max_instance_value = std::int64_t{1} << 62;

void check_base(std::int64_t base) {
  if (base < 2) throw std::invalid_argument("base must be at least 2");
}

}  // namespace

bool is_evil(std::uint64_t n) { return (std::popcount(n) & 1) == 0; }

Side flip_if(Side x, std::uint64_t n) { return is_evil(n) ? x : opposite(x); }

std::vector<int> rep(std::uint64_t n, std::int64_t base) {
  check_base(base);
  std::vector<int> digits;
  while (n > 0) {
    digits.push_back(static_cast<int>(n % base));
    n /= base;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::uint64_t val(std::span<const int> word, std::int64_t base) {
  check_base(base);
  const auto b = static_cast<std::uint64_t>(base);
  std::uint64_t acc = 0;
  for (int d : word) {
    if (d < 0 || d >= base) throw std::out_of_range("digit out of range for base");
    if (acc > (std::numeric_limits<std::uint64_t>::max() - d) / b)
      throw std::overflow_error("word value exceeds 64 bits");
    acc = acc * b + static_cast<std::uint64_t>(d);
  }
  return acc;
}

std::vector<std::pair<int, int>> rep_pair(std::uint64_t a, std::uint64_t c,
                                          std::int64_t base) {
  const std::vector<int> wa = rep(a, base);
  const std::vector<int> wc = rep(c, base);
  const std::size_t len = std::max(wa.size(), wc.size());
  std::vector<std::pair<int, int>> out(len, {0, 0});
  for (std::size_t j = 0; j < wa.size(); ++j) out[len - wa.size() + j].first = wa[j];
  for (std::size_t j = 0; j < wc.size(); ++j) out[len - wc.size() + j].second = wc[j];
  return out;
}

Params derive_params(std::int64_t m, std::int64_t r, int p) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (p < 1 || p > 20) throw std::invalid_argument("p must be in [1, 20]");
  if (r < 0 || r >= m) throw std::invalid_argument("r must lie in [0, m)");

  Params params;
  params.m = m;
  params.r = r;
  params.p = p;
  params.b = std::int64_t{1} << p;
  if (m > max_instance_value / params.b)
    throw std::invalid_argument("instance exceeds the 64-bit working range");

  std::int64_t k = m;
  int z = 0;
  while (k % 2 == 0) {
    k /= 2;
    ++z;
  }
  params.k = k;
  params.z = z;
  params.rep_r_len = static_cast<int>(rep(static_cast<std::uint64_t>(r), params.b).size());
  params.suffix_len = std::max(ceil_div(z, p), params.rep_r_len);
  if (k > 1) {
    const std::uint64_t top = static_cast<std::uint64_t>(k - 1) << z;
    params.witness_len = static_cast<int>(rep(top, params.b).size());
  }
  return params;
}

}  // namespace tmaut
