// Timing comparison of the serial reference kernels against the OpenMP
// versions: coefficient convolution at several window sizes, and the
// prime scan. Output is a plain table; no assertions.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hqcf/hyperq.hpp"
#include "hqcf/kernels.hpp"

using namespace hqcf;
using clock_type = std::chrono::steady_clock;

static double time_ms(const std::function<void()>& fn, int reps) {
  auto t0 = clock_type::now();
  for (int i = 0; i < reps; ++i) fn();
  auto t1 = clock_type::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel rows fall back to serial\n");
#endif

  const FieldSpec& F = *field_prime(13);
  std::mt19937 rng(42);
  std::printf("\nconvolution (F_13)\n%10s %12s %12s %8s\n", "size", "serial ms", "parallel ms",
              "speedup");
  for (size_t n : {256u, 1024u, 4096u, 16384u}) {
    std::vector<Fe> a(n), b(n), out(2 * n - 1);
    for (auto& x : a) x = Fe{(uint32_t)(rng() % 13), 0};
    for (auto& x : b) x = Fe{(uint32_t)(rng() % 13), 0};
    int reps = n <= 1024 ? 50 : 5;
    double ts = time_ms([&] { conv_serial(F, a.data(), n, b.data(), n, out.data()); }, reps);
    double tp = time_ms([&] { conv_parallel(F, a.data(), n, b.data(), n, out.data()); }, reps);
    std::printf("%10zu %12.3f %12.3f %8.2fx\n", n, ts, tp, ts / tp);
  }

  std::printf("\nprime scan (P | H up to pmax)\n%10s %12s %12s %8s\n", "pmax", "serial ms",
              "parallel ms", "speedup");
  for (uint32_t pmax : {61u, 199u}) {
    double ts = time_ms([&] { scan_primes(pmax, false); }, 1);
    double tp = time_ms([&] { scan_primes(pmax, true); }, 1);
    std::printf("%10u %12.1f %12.1f %8.2fx\n", pmax, ts, tp, ts / tp);
  }
  return 0;
}
