#include "tmaut/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tmaut/classes.hpp"
#include "tmaut/numeration.hpp"

namespace tmaut {

namespace {

void check_sweep_args(std::int64_t m, std::int64_t r, int p, int max_len, int bit_cap) {
  if (m < 1 || r < 0 || r >= m) throw std::invalid_argument("bad m, r");
  if (p < 1 || max_len < 0 || p * max_len > bit_cap)
    throw std::invalid_argument("word length exceeds the overflow guard");
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// --- sweep kernels -------------------------------------------------------

// Words of a fixed length are enumerated by value; the digits of value v are
// its width-len base-2^p expansion, so val(word) == v for every word.
void sweep_range(const Dfa& a, std::int64_t m, std::int64_t r, int p, int len,
                 std::uint64_t lo, std::uint64_t hi, bool complement,
                 std::vector<SweepMismatch>& out) {
  const std::uint64_t digit_mask = (std::uint64_t{1} << p) - 1;
  for (std::uint64_t v = lo; v < hi; ++v) {
    std::int32_t s = a.initial;
    for (int j = len - 1; j >= 0 && s != no_transition; --j)
      s = a.cell(s, static_cast<std::int32_t>((v >> (p * j)) & digit_mask));
    const bool accepted = s != no_transition && a.is_final(s);
    const bool expected = member(v, m, r, complement);
    if (accepted != expected) out.push_back({len, v, accepted, expected});
  }
}

SweepReport sweep_impl(const Dfa& a, std::int64_t m, std::int64_t r, int p, int max_len,
                       bool complement, bool parallel) {
  check_sweep_args(m, r, p, max_len, 62);
  if (a.alphabet_size != (std::int64_t{1} << p))
    throw std::invalid_argument("automaton alphabet does not match 2^p");

  SweepReport report{m, r, p, max_len, complement, 0, {}};
  for (int len = 0; len <= max_len; ++len) {
    const std::uint64_t total = std::uint64_t{1} << (p * len);
    report.words_checked += total;
    if (!parallel || total < (std::uint64_t{1} << 14)) {
      sweep_range(a, m, r, p, len, 0, total, complement, report.mismatches);
      continue;
    }
    const int chunks = 4 * thread_count();
    std::vector<std::vector<SweepMismatch>> found(chunks);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < chunks; ++c) {
      const std::uint64_t lo = total / chunks * c + std::min<std::uint64_t>(c, total % chunks);
      const std::uint64_t hi =
          total / chunks * (c + 1) + std::min<std::uint64_t>(c + 1, total % chunks);
      sweep_range(a, m, r, p, len, lo, hi, complement, found[c]);
    }
    for (auto& f : found)
      report.mismatches.insert(report.mismatches.end(), f.begin(), f.end());
  }
  return report;
}

// --- bounded Nerode ------------------------------------------------------

// 64 consecutive parity bits of the binary-digit-sum sequence: for aligned
// blocks, popcount(64q + j) = popcount(q) + popcount(j), so the block at q
// is a fixed pattern, complemented when q has odd digit sum.
constexpr std::uint64_t odd_popcount_word() {
  std::uint64_t w = 0;
  for (int j = 0; j < 64; ++j)
    if (std::popcount(static_cast<unsigned>(j)) & 1) w |= std::uint64_t{1} << j;
  return w;
}
constexpr std::uint64_t odd_word = odd_popcount_word();

// Bit j = 1 iff 64q + j is evil.
inline std::uint64_t evil_block(std::uint64_t q) {
  return is_evil(q) ? ~odd_word : odd_word;
}

// 64 evil-bits starting at an arbitrary offset t.
inline std::uint64_t evil_word_at(std::uint64_t t) {
  const std::uint64_t q = t >> 6;
  const unsigned off = static_cast<unsigned>(t & 63);
  std::uint64_t w = evil_block(q) >> off;
  if (off != 0) w |= evil_block(q + 1) << (64 - off);
  return w;
}

struct StreamHash {
  std::uint64_t h1 = 0x9e3779b97f4a7c15ULL;
  std::uint64_t h2 = 0xc2b2ae3d27d4eb4fULL;
  void mix(std::uint64_t x) {
    h1 = (h1 ^ x) * 0xff51afd7ed558ccdULL;
    h2 = (h2 ^ std::rotl(x, 29)) * 0x9e3779b97f4a7c15ULL;
    h1 = std::rotl(h1, 31);
  }
  std::pair<std::uint64_t, std::uint64_t> digest() const { return {h1, h2}; }
};

// One block of the acceptance vector of prefix value n: the entries for all
// words of length len. Qualifying word values are v0, v0+m, ...; entry s is
// the evil-bit at t0 + s. The block is canonicalized to its set of accepted
// word values (anchor of the first set bit, bits up to the last set bit), so
// equal hashes track exactly equal acceptance-vector blocks.
void mix_vector_block(StreamHash& hash, std::uint64_t n, int len_pow,
                      std::int64_t m, std::int64_t r, int p) {
  const std::uint64_t width = std::uint64_t{1} << (p * len_pow);  // b^len
  const std::uint64_t scaled = n * width;
  const std::uint64_t mu = static_cast<std::uint64_t>(m);

  const std::uint64_t lo = scaled < static_cast<std::uint64_t>(r)
                               ? static_cast<std::uint64_t>(r) - scaled
                               : 0;
  std::uint64_t v0 = (static_cast<std::uint64_t>(r) + mu - scaled % mu) % mu;
  if (v0 < lo) v0 += (lo - v0 + mu - 1) / mu * mu;

  hash.mix(static_cast<std::uint64_t>(len_pow));
  if (v0 >= width) {
    hash.mix(0);  // no qualifying word value at this length
    return;
  }
  const std::uint64_t count = (width - 1 - v0) / mu + 1;
  const std::uint64_t t0 = (scaled + v0 - static_cast<std::uint64_t>(r)) / mu;

  // Find the first and last evil positions in [t0, t0 + count).
  std::uint64_t first = count, last = count;
  for (std::uint64_t s = 0; s < count; s += 64) {
    std::uint64_t w = evil_word_at(t0 + s);
    if (count - s < 64) w &= (std::uint64_t{1} << (count - s)) - 1;
    if (w != 0) {
      first = s + static_cast<unsigned>(std::countr_zero(w));
      break;
    }
  }
  if (first == count) {
    hash.mix(0);  // all entries rejected
    return;
  }
  const std::uint64_t tail_blocks = (count + 63) / 64;
  for (std::uint64_t blk = tail_blocks; blk-- > 0;) {
    const std::uint64_t s = blk * 64;
    std::uint64_t w = evil_word_at(t0 + s);
    if (count - s < 64) w &= (std::uint64_t{1} << (count - s)) - 1;
    if (w != 0) {
      last = s + 63 - static_cast<unsigned>(std::countl_zero(w));
      break;
    }
  }

  const std::uint64_t span = last - first + 1;
  hash.mix(1);
  hash.mix(v0 + first * mu);  // smallest accepted word value
  hash.mix(span);
  for (std::uint64_t s = 0; s < span; s += 64) {
    std::uint64_t w = evil_word_at(t0 + first + s);
    if (span - s < 64) w &= (std::uint64_t{1} << (span - s)) - 1;
    hash.mix(w);
  }
}

std::pair<std::uint64_t, std::uint64_t> vector_key(std::uint64_t n, std::int64_t m,
                                                   std::int64_t r, int p, int word_len) {
  StreamHash hash;
  for (int len = 0; len <= word_len; ++len) mix_vector_block(hash, n, len, m, r, p);
  return hash.digest();
}

}  // namespace

bool member(std::uint64_t n, std::int64_t m, std::int64_t r, bool complement) {
  if (m < 1 || r < 0 || r >= m) throw std::invalid_argument("bad m, r");
  if (n < static_cast<std::uint64_t>(r)) return false;
  const std::uint64_t offset = n - static_cast<std::uint64_t>(r);
  if (offset % static_cast<std::uint64_t>(m) != 0) return false;
  return is_evil(offset / static_cast<std::uint64_t>(m)) != complement;
}

SweepReport sweep(std::int64_t m, std::int64_t r, int p, int max_len, bool complement) {
  check_sweep_args(m, r, p, max_len, 62);
  const Dfa a = complement ? complement_minimal(m, r, p) : build_minimal(m, r, p);
  return sweep_impl(a, m, r, p, max_len, complement, true);
}

SweepReport sweep_serial(std::int64_t m, std::int64_t r, int p, int max_len,
                         bool complement) {
  check_sweep_args(m, r, p, max_len, 62);
  const Dfa a = complement ? complement_minimal(m, r, p) : build_minimal(m, r, p);
  return sweep_impl(a, m, r, p, max_len, complement, false);
}

SweepReport sweep_automaton(const Dfa& a, std::int64_t m, std::int64_t r, int p,
                            int max_len, bool complement) {
  return sweep_impl(a, m, r, p, max_len, complement, true);
}

SweepReport sweep_automaton_serial(const Dfa& a, std::int64_t m, std::int64_t r, int p,
                                   int max_len, bool complement) {
  return sweep_impl(a, m, r, p, max_len, complement, false);
}

std::int64_t bounded_nerode(std::int64_t m, std::int64_t r, int p, int word_len) {
  check_sweep_args(m, r, p, word_len, 30);
  const std::uint64_t prefixes = std::uint64_t{1} << (p * word_len);

  const int chunks = std::max(1, 4 * thread_count());
  std::vector<std::set<std::pair<std::uint64_t, std::uint64_t>>> seen(chunks);
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < chunks; ++c) {
    const std::uint64_t lo =
        prefixes / chunks * c + std::min<std::uint64_t>(c, prefixes % chunks);
    const std::uint64_t hi =
        prefixes / chunks * (c + 1) + std::min<std::uint64_t>(c + 1, prefixes % chunks);
    for (std::uint64_t n = lo; n < hi; ++n)
      seen[c].insert(vector_key(n, m, r, p, word_len));
  }
  std::set<std::pair<std::uint64_t, std::uint64_t>> all;
  for (const auto& s : seen) all.insert(s.begin(), s.end());
  return static_cast<std::int64_t>(all.size());
}

std::int64_t bounded_nerode_naive(std::int64_t m, std::int64_t r, int p, int word_len) {
  check_sweep_args(m, r, p, word_len, 30);
  const std::uint64_t b = std::uint64_t{1} << p;
  const std::uint64_t prefixes = std::uint64_t{1} << (p * word_len);

  // All test words of length <= word_len as (length, value) pairs.
  std::vector<std::pair<int, std::uint64_t>> words;
  for (int len = 0; len <= word_len; ++len)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << (p * len)); ++v)
      words.emplace_back(len, v);

  std::set<std::vector<bool>> vectors;
  std::vector<bool> vec(words.size());
  for (std::uint64_t n = 0; n < prefixes; ++n) {
    for (std::size_t w = 0; w < words.size(); ++w) {
      std::uint64_t scale = 1;
      for (int j = 0; j < words[w].first; ++j) scale *= b;
      vec[w] = member(n * scale + words[w].second, m, r, false);
    }
    vectors.insert(vec);
  }
  return static_cast<std::int64_t>(vectors.size());
}

}  // namespace tmaut
