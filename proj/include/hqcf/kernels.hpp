#pragma once

#include <cstddef>
#include <vector>

#include "hqcf/field.hpp"

namespace hqcf {

// Dense coefficient convolution over a finite field: the inner loop of every
// polynomial and series product in this library. Two implementations are
// kept side by side: a serial reference and an OpenMP version that splits
// the independent output coefficients across threads. Both produce bitwise
// identical results; tests compare them directly and the benchmark tool
// times them against each other.

enum class ExecMode {
  Serial,
  Parallel,
  Auto,  // parallel when the work is large enough to pay for the fork
};

// Process-wide default used by ExecMode::Auto call sites (the polynomial and
// series layers). Thread-safe to read; set once at startup (CLI --threads).
void set_default_exec_mode(ExecMode m);
ExecMode default_exec_mode();

// out must have size a_len + b_len - 1; a_len, b_len >= 1.
void conv_serial(const FieldSpec& F, const Fe* a, std::size_t a_len, const Fe* b,
                 std::size_t b_len, Fe* out);
void conv_parallel(const FieldSpec& F, const Fe* a, std::size_t a_len, const Fe* b,
                   std::size_t b_len, Fe* out);

// Dispatching front end used by TPoly / LaurentSeries multiplication.
void conv(const FieldSpec& F, const Fe* a, std::size_t a_len, const Fe* b, std::size_t b_len,
          Fe* out, ExecMode mode = ExecMode::Auto);

std::vector<Fe> conv(const FieldSpec& F, const std::vector<Fe>& a, const std::vector<Fe>& b,
                     ExecMode mode = ExecMode::Auto);

}  // namespace hqcf
