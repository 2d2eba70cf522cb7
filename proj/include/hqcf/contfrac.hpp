#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hqcf/series.hpp"

namespace hqcf {

// Thrown when a continued fraction of constants hits a zero continuant
// denominator; distinct from an ordinary false/zero result.
struct BracketZeroError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class StopReason { Finite, Precision, Budget };

std::string to_string(StopReason r);

// A certified list of partial quotients. Every quotient this library emits
// is certified, so certified == quotients.size() unless a caller trims it.
struct Expansion {
  const FieldSpec* spec = nullptr;
  std::vector<TPoly> quotients;  // a_0, a_1, ...
  size_t certified = 0;
  std::vector<int> degrees;  // deg a_i, with constants (incl. zero) recorded as 0
  StopReason stopped = StopReason::Finite;
  int algebraic_degree = 0;  // metadata; 0 when unknown

  void recompute_degrees();
};

// <x_1,...,x_n> = x_1 <x_2,...,x_n> + <x_3,...,x_n>, <> = 1, <x> = x.
TPoly continuant(std::span<const TPoly> xs);
// Same recursion over field constants.
Fe continuant_const(const FieldSpec& F, std::span<const Fe> xs);

// [x_1,...,x_n] = <x_1..x_n> / <x_2..x_n>.
RationalFunc eval_cf(std::span<const TPoly> quotients);
Fe eval_cf_const(const FieldSpec& F, std::span<const Fe> xs);  // throws BracketZeroError

// Euclidean expansion of a rational function; finite, round-trips through
// eval_cf, and deg(a_i) > 0 for i > 0 by construction.
Expansion expand_rational(const RationalFunc& f);

// Certified expansion of a series: quotients are emitted only while the
// precision floor certifies both the polynomial part and the nonvanishing
// of the remainder's leading coefficient. Running out of precision is a
// normal stop, recorded in the metadata.
Expansion expand_series(const LaurentSeries& alpha, size_t max_terms);

// The equation A a^2 + B a + C = 0 in normalized form: content-free, with
// A's leading coefficient scaled to 1.
struct QuadTriple {
  TPoly A, B, C;

  const FieldSpec* spec() const { return A.spec(); }
  bool operator==(const QuadTriple& o) const { return A == o.A && B == o.B && C == o.C; }
  bool operator<(const QuadTriple& o) const;
  XPoly to_xpoly() const;
  std::string to_string() const;
};

QuadTriple make_quad_triple(TPoly A, TPoly B, TPoly C);
// Whether B^2 - 4AC is a square in F_q[T]; only meaningful in odd
// characteristic (the caller treats characteristic 2 dynamically).
bool quad_discriminant_is_square(const QuadTriple& t);

// The equation satisfied by a' where a = q + 1/a'.
QuadTriple quad_tail_step(const QuadTriple& t, const TPoly& q);

struct QuadExpansion {
  std::vector<TPoly> preperiod;
  std::vector<TPoly> period;
};

struct QuadOptions {
  size_t safety_bound = 0;      // 0: derive 10*(deg disc + 1)*q, clamped
  size_t initial_precision = 64;
};

// Exact eventually-periodic expansion by transporting tail equations; the
// series shadow only extracts quotients and is refreshed on demand.
QuadExpansion quad_expand(const QuadTriple& t, const LaurentSeries& branch_seed,
                          const QuadOptions& opts = {});

// Fixed point of the period's Moebius matrix, transported through the
// preperiod; inverse of quad_expand up to proportionality.
QuadTriple periodic_to_equation(std::span<const TPoly> preperiod, std::span<const TPoly> period);

// Exact rational with small components.
struct Rat64 {
  long long num = 0;
  long long den = 1;
  bool operator==(const Rat64& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rat64& o) const;  // exact cross comparison
  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
};

Rat64 make_rat(long long num, long long den);

// deg(a_{n+1}) / sum_{k<=n} deg(a_k) over the certified prefix, as exact
// rationals, plus the supremum over a trailing window. This is finite-prefix
// data only; no limit is claimed.
struct GrowthStat {
  std::vector<Rat64> ratios;   // index n, defined once the partial sums are positive
  size_t first_index = 0;      // n of ratios.front()
  Rat64 window_sup;            // over the trailing window
  size_t window_begin = 0;     // n of the first ratio inside the window
  bool window_valid = false;
};

// window_size == 0 selects the default: everything after the first
// max(1, count/8) ratios.
GrowthStat growth_stat(const Expansion& e, size_t window_size = 0);

}  // namespace hqcf
