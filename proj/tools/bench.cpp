// Timing comparison of the OpenMP kernels against their serial reference
// implementations, plus the decide() scaling ladder.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tmaut/classes.hpp"
#include "tmaut/decision.hpp"
#include "tmaut/oracle.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
  f();  // warm-up: first call pays allocator and page-fault costs
  const auto start = Clock::now();
  f();
  const auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* kernel, double reference_ms, double kernel_ms) {
  std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", kernel, reference_ms, kernel_ms,
              reference_ms / kernel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-28s %13s %13s %9s\n", "case", "reference", "kernel", "speedup");

  {
    const double serial = time_ms([] { tmaut::sweep_serial(24, 23, 2, 9, false); });
    const double parallel = time_ms([] { tmaut::sweep(24, 23, 2, 9, false); });
    report("sweep m=24 r=23 p=2 len=9", serial, parallel);
  }
  {
    const double serial = time_ms([] { tmaut::sweep_serial(17, 16, 1, 18, false); });
    const double parallel = time_ms([] { tmaut::sweep(17, 16, 1, 18, false); });
    report("sweep m=17 r=16 p=1 len=18", serial, parallel);
  }
  {
    const double naive = time_ms([] { tmaut::bounded_nerode_naive(24, 23, 2, 6); });
    const double fast = time_ms([] { tmaut::bounded_nerode(24, 23, 2, 6); });
    report("nerode m=24 r=23 p=2 len=6", naive, fast);
  }
  {
    const double naive = time_ms([] { tmaut::bounded_nerode_naive(6, 2, 2, 5); });
    const double fast = time_ms([] { tmaut::bounded_nerode(6, 2, 2, 5); });
    report("nerode m=6 r=2 p=2 len=5", naive, fast);
  }

  std::printf("\ndecide() ladder (round-trip inputs, p=1):\n");
  for (std::int64_t k : {63, 125, 251, 501, 1001}) {
    const tmaut::Dfa input = tmaut::build_minimal_direct(k, k / 2, 1);
    tmaut::Verdict v;
    const double ms = time_ms([&] { v = tmaut::decide(input, 1, false); });
    std::printf("  states %5d -> %s in %8.2f ms\n", input.state_count,
                v.match ? "match" : "no match", ms);
  }
  return 0;
}
