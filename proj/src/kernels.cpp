#include "hqcf/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hqcf {

namespace {

std::atomic<ExecMode> g_mode{ExecMode::Auto};

// Work threshold (multiplications) below which forking threads costs more
// than the loop itself.
constexpr std::size_t kParallelCutoff = 1u << 15;

// One output coefficient of the product, prime-field case. The accumulator
// stays in a single uint64: p <= 65521 and window lengths are bounded well
// below 2^32/p^2, so no intermediate reduction is required.
inline uint64_t dot_prime(const Fe* a, const Fe* b, std::size_t i_lo, std::size_t i_hi,
                          std::size_t k) {
  uint64_t acc = 0;
  for (std::size_t i = i_lo; i <= i_hi; ++i)
    acc += (uint64_t)a[i][0] * b[k - i][0];
  return acc;
}

inline void coeff_at(const FieldSpec& F, const Fe* a, std::size_t a_len, const Fe* b,
                     std::size_t b_len, std::size_t k, Fe* out) {
  std::size_t i_lo = k >= b_len ? k - b_len + 1 : 0;
  std::size_t i_hi = k < a_len ? k : a_len - 1;
  if (F.n == 1) {
    out[k] = Fe{(uint32_t)(dot_prime(a, b, i_lo, i_hi, k) % F.p), 0};
    return;
  }
  // Quadratic extension: accumulate the three limb products, fold u^2 once.
  uint64_t p = F.p;
  uint64_t acc00 = 0, acc01 = 0, acc11 = 0;
  for (std::size_t i = i_lo; i <= i_hi; ++i) {
    const Fe& x = a[i];
    const Fe& y = b[k - i];
    acc00 += (uint64_t)x[0] * y[0];
    acc01 += (uint64_t)x[0] * y[1] + (uint64_t)x[1] * y[0];
    acc11 += (uint64_t)x[1] * y[1];
    if (acc01 >= (uint64_t)1 << 62) {  // 2 products per step; stay safe
      acc00 %= p;
      acc01 %= p;
      acc11 %= p;
    }
  }
  uint64_t c0 = acc00 % p, c1 = acc01 % p, c2 = acc11 % p;
  uint64_t r0 = (c0 + (p - F.mod0 % p) * c2) % p;
  uint64_t r1 = (c1 + (p - F.mod1 % p) * c2) % p;
  out[k] = Fe{(uint32_t)r0, (uint32_t)r1};
}

}  // namespace

void set_default_exec_mode(ExecMode m) { g_mode.store(m); }
ExecMode default_exec_mode() { return g_mode.load(); }

void conv_serial(const FieldSpec& F, const Fe* a, std::size_t a_len, const Fe* b,
                 std::size_t b_len, Fe* out) {
  std::size_t out_len = a_len + b_len - 1;
  for (std::size_t k = 0; k < out_len; ++k) coeff_at(F, a, a_len, b, b_len, k, out);
}

void conv_parallel(const FieldSpec& F, const Fe* a, std::size_t a_len, const Fe* b,
                   std::size_t b_len, Fe* out) {
#ifdef _OPENMP
  std::int64_t out_len = (std::int64_t)(a_len + b_len - 1);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < out_len; ++k)
    coeff_at(F, a, a_len, b, b_len, (std::size_t)k, out);
#else
  conv_serial(F, a, a_len, b, b_len, out);
#endif
}

void conv(const FieldSpec& F, const Fe* a, std::size_t a_len, const Fe* b, std::size_t b_len,
          Fe* out, ExecMode mode) {
  if (mode == ExecMode::Auto) mode = default_exec_mode();
  if (mode == ExecMode::Parallel) {
    conv_parallel(F, a, a_len, b, b_len, out);
    return;
  }
  if (mode == ExecMode::Auto && a_len * b_len >= kParallelCutoff) {
#ifdef _OPENMP
    if (omp_get_max_threads() > 1) {
      conv_parallel(F, a, a_len, b, b_len, out);
      return;
    }
#endif
  }
  conv_serial(F, a, a_len, b, b_len, out);
}

std::vector<Fe> conv(const FieldSpec& F, const std::vector<Fe>& a, const std::vector<Fe>& b,
                     ExecMode mode) {
  std::vector<Fe> out(a.size() + b.size() - 1);
  conv(F, a.data(), a.size(), b.data(), b.size(), out.data(), mode);
  return out;
}

}  // namespace hqcf
