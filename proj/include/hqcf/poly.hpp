#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hqcf/field.hpp"
#include "hqcf/kernels.hpp"

namespace hqcf {

// Dense univariate polynomial in T over a finite field. The coefficient
// vector is indexed by exponent and never carries trailing zeros, so the
// zero polynomial is the empty vector. degree() deliberately refuses the
// zero polynomial: callers branch on is_zero() first instead of doing
// arithmetic with a -infinity stand-in.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(const FieldSpec* spec) : spec_(spec) {}
  TPoly(const FieldSpec* spec, std::vector<Fe> coeffs);

  static TPoly zero(const FieldSpec* spec) { return TPoly(spec); }
  static TPoly constant(const FieldSpec* spec, Fe c);
  static TPoly from_int(const FieldSpec* spec, long long c);
  static TPoly variable(const FieldSpec* spec);  // T
  // c * T^e
  static TPoly monomial(const FieldSpec* spec, Fe c, int e);

  const FieldSpec* spec() const { return spec_; }
  const std::vector<Fe>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const;
  Fe coeff(int e) const;  // 0 above the degree
  Fe lc() const;          // leading coefficient; throws on zero

  TPoly operator-() const;
  TPoly operator+(const TPoly& o) const;
  TPoly operator-(const TPoly& o) const;
  TPoly operator*(const TPoly& o) const;
  bool operator==(const TPoly& o) const { return spec_ == o.spec_ && c_ == o.c_; }
  bool operator!=(const TPoly& o) const { return !(*this == o); }

  TPoly scaled(Fe s) const;
  TPoly shifted(int k) const;  // * T^k, k >= 0
  TPoly pow(uint64_t e) const;
  TPoly pow_char() const;      // fast p-th power via the Frobenius
  TPoly derivative() const;
  TPoly monic() const;
  Fe eval(Fe x) const;

  // Total order compatible with ==, used as a map key by the period finder.
  bool operator<(const TPoly& o) const;

  std::string to_string() const;

 private:
  void normalize();
  const FieldSpec* spec_ = nullptr;
  std::vector<Fe> c_;
};

// a = q*b + r with deg r < deg b.
std::pair<TPoly, TPoly> tpoly_divmod(const TPoly& a, const TPoly& b);
TPoly tpoly_gcd(const TPoly& a, const TPoly& b);  // monic
// Substitution T <- v*T: coefficient of T^i picks up v^i.
TPoly tpoly_scale_T(const TPoly& a, Fe v);
// Exact polynomial square root when it exists.
bool tpoly_is_square(const TPoly& a);

// Normalized quotient of two TPolys: den monic, gcd(num, den) = 1, the zero
// function is 0/1. Equality of values is equality of fields.
class RationalFunc {
 public:
  RationalFunc() = default;
  explicit RationalFunc(TPoly num);
  RationalFunc(TPoly num, TPoly den);
  static RationalFunc zero(const FieldSpec* spec) { return RationalFunc(TPoly::zero(spec)); }
  static RationalFunc from_fe(const FieldSpec* spec, Fe c) {
    return RationalFunc(TPoly::constant(spec, c));
  }

  const TPoly& num() const { return num_; }
  const TPoly& den() const { return den_; }
  const FieldSpec* spec() const { return num_.spec(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunc operator-() const;
  RationalFunc operator+(const RationalFunc& o) const;
  RationalFunc operator-(const RationalFunc& o) const;
  RationalFunc operator*(const RationalFunc& o) const;
  RationalFunc operator/(const RationalFunc& o) const;
  RationalFunc inv() const;
  bool operator==(const RationalFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunc& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void normalize();
  TPoly num_, den_;
};

// Polynomial in X whose coefficients are rational functions of T. Houses the
// quartic P, the sparse H and the tail equations of the degree-4 pipeline.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(const FieldSpec* spec) : spec_(spec) {}
  XPoly(const FieldSpec* spec, std::vector<RationalFunc> coeffs);

  static XPoly zero(const FieldSpec* spec) { return XPoly(spec); }
  static XPoly variable(const FieldSpec* spec);  // X
  static XPoly monomial(const FieldSpec* spec, RationalFunc c, int e);

  const FieldSpec* spec() const { return spec_; }
  const std::vector<RationalFunc>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const;
  RationalFunc coeff(int e) const;
  const RationalFunc& lc() const;

  XPoly operator-() const;
  XPoly operator+(const XPoly& o) const;
  XPoly operator-(const XPoly& o) const;
  XPoly operator*(const XPoly& o) const;
  XPoly operator*(const RationalFunc& s) const;
  bool operator==(const XPoly& o) const { return spec_ == o.spec_ && c_ == o.c_; }
  bool operator!=(const XPoly& o) const { return !(*this == o); }

  XPoly derivative() const;

  // Exponents of the nonzero coefficients, ascending.
  std::vector<int> support() const;

  std::string to_string() const;

 private:
  void normalize();
  const FieldSpec* spec_ = nullptr;
  std::vector<RationalFunc> c_;
};

std::pair<XPoly, XPoly> xpoly_divmod(const XPoly& h, const XPoly& p);
XPoly xpoly_gcd(const XPoly& a, const XPoly& b);
// X^r mod p by square-and-multiply on residues.
XPoly xpoly_modpow_X(const XPoly& p, uint64_t r);
XPoly xpoly_mod(const XPoly& a, const XPoly& p);

// Clears denominators: the returned coefficient list (index = X exponent)
// consists of TPolys, equal to m * h for the least common denominator m.
std::vector<TPoly> xpoly_clear_denominators(const XPoly& h);
// Multiplies through by the common denominator and divides out the content,
// then makes the lowest nonzero coefficient monic. Canonical representative
// of the projective class of h.
XPoly xpoly_primitive(const XPoly& h);

}  // namespace hqcf
