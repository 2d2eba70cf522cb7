#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hqcf/poly.hpp"

namespace hqcf {

struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HenselError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncated Laurent series in 1/T with a certified precision floor: every
// stored coefficient is exactly correct, and "floor" is the lowest exponent
// about which anything is claimed. A series with exact == true has no tail
// at all (a Laurent polynomial), which is what the Newton lifter works on
// internally. A window can be empty: that is a series known to vanish at
// every exponent >= floor, which is still meaningful (and is how "zero to
// the certified precision" is represented).
class LaurentSeries {
 public:
  LaurentSeries() = default;

  // coeffs ascending from exponent `floor`; leading zeros are stripped
  // (they are certified and stay implied), trailing zeros are kept unless
  // exact.
  LaurentSeries(const FieldSpec* spec, long long floor, std::vector<Fe> coeffs, bool exact);

  static LaurentSeries zero_exact(const FieldSpec* spec);
  static LaurentSeries zero_to(const FieldSpec* spec, long long floor);
  static LaurentSeries monomial(const FieldSpec* spec, Fe c, long long e);
  static LaurentSeries from_tpoly(const TPoly& a);  // exact

  const FieldSpec* spec() const { return spec_; }
  bool exact() const { return exact_; }
  long long floor() const { return floor_; }
  size_t window_size() const { return c_.size(); }
  // True when no nonzero coefficient is stored; with exact() this is the
  // genuine zero series, otherwise only "zero to the floor".
  bool window_zero() const { return c_.empty(); }
  bool is_zero_exact() const { return c_.empty() && exact_; }

  long long hi() const;                // leading exponent; throws if window_zero
  Fe lead() const;                     // coefficient at hi()
  Fe at(long long e) const;            // throws PrecisionError below the floor (unless exact)
  bool known(long long e) const { return exact_ || e >= floor_; }

  LaurentSeries truncated(long long new_floor) const;  // weaken precision
  bool operator==(const LaurentSeries& o) const {
    return spec_ == o.spec_ && floor_ == o.floor_ && c_ == o.c_ && exact_ == o.exact_;
  }

  std::string to_string() const;

 private:
  void normalize();
  const FieldSpec* spec_ = nullptr;
  long long floor_ = 0;
  std::vector<Fe> c_;  // c_[i] = coefficient of T^(floor_+i)
  bool exact_ = true;
};

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_neg(const LaurentSeries& a);
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_scale(const LaurentSeries& a, Fe s);

// Newton inversion doubling the digit count; the result keeps as many
// certified coefficients as the input window.
LaurentSeries series_inv(const LaurentSeries& a);

// Long-division expansion of a rational function to `terms` coefficients
// (fewer, flagged exact, when the division terminates).
LaurentSeries series_from_rational(const RationalFunc& f, size_t terms);

// sum c_n T^n -> sum c_n^e T^{en} for e a power of the characteristic.
// The precision floor multiplies: exponents between the dilated ones are
// exactly zero.
LaurentSeries series_frobenius(const LaurentSeries& a, uint64_t e);

// Substitution T <- v*T (coefficient at T^i multiplied by v^i, i of either
// sign); v must be nonzero.
LaurentSeries series_scale_T(const LaurentSeries& a, Fe v);

// Splits off the polynomial part (exponents >= 0). Requires the floor to
// certify every non-negative exponent.
std::pair<TPoly, LaurentSeries> series_polypart(const LaurentSeries& a);

// Evaluation of an XPoly at a series, certified to the floor the operand
// precision supports.
LaurentSeries series_eval_xpoly(const XPoly& s, const LaurentSeries& x);

// Hensel/Newton root lifting: starting from a seed with
// v(s(seed)) > 2 v(s'(seed)), iterates x <- x - s(x)/s'(x) with working
// precision doubling until `terms` certified coefficients are available.
// Certification is by exact residual: the returned window is a prefix of
// the true root, coefficient for coefficient.
LaurentSeries newton_root(const XPoly& s, const LaurentSeries& seed, size_t terms);

}  // namespace hqcf
