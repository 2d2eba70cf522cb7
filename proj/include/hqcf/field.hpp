#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace hqcf {

// Storage for one field element: coefficients of its u-polynomial
// representative, constant term first. Prime fields use limb 0 only;
// the unused limb is kept at zero so that equality is plain comparison.
using Fe = std::array<uint32_t, 2>;

inline constexpr Fe kFeZero{0, 0};

inline bool fe_is_zero(const Fe& a) { return a[0] == 0 && a[1] == 0; }

// A finite field F_{p^n}, n <= 2. Instances are interned (see field_prime /
// field_ext below) and live for the whole process, so raw pointers are safe
// to share between threads and to compare for identity.
struct FieldSpec {
  uint32_t p = 0;  // prime characteristic
  uint32_t n = 1;  // extension degree
  uint64_t q = 0;  // p^n
  // monic modulus u^2 + mod1*u + mod0, meaningful only when n == 2
  uint32_t mod0 = 0;
  uint32_t mod1 = 0;

  bool prime_field() const { return n == 1; }
};

struct FieldMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Interned constructors. p is checked for primality by trial division and
// the modulus for irreducibility by root search; both throw on failure.
const FieldSpec* field_prime(uint32_t p);
const FieldSpec* field_ext(uint32_t p, uint32_t c0, uint32_t c1);
const FieldSpec* field_gf4();                       // F_2[u]/(u^2+u+1)
const FieldSpec* field_quadratic_ext(uint32_t p);   // u^2 - a for the first non-residue a

// Arithmetic on raw representatives.
Fe fe_from_int(const FieldSpec& F, long long v);
Fe fe_from_ratio(const FieldSpec& F, long long num, long long den);
Fe fe_add(const FieldSpec& F, const Fe& a, const Fe& b);
Fe fe_sub(const FieldSpec& F, const Fe& a, const Fe& b);
Fe fe_neg(const FieldSpec& F, const Fe& a);
Fe fe_mul(const FieldSpec& F, const Fe& a, const Fe& b);
Fe fe_inv(const FieldSpec& F, const Fe& a);
Fe fe_div(const FieldSpec& F, const Fe& a, const Fe& b);
Fe fe_pow(const FieldSpec& F, Fe a, uint64_t e);
Fe fe_frobenius(const FieldSpec& F, const Fe& a);  // a^p

// Binomial coefficient C(n, k) reduced into F via Lucas' decomposition in
// base p, so it is safe for n far beyond native integer factorials.
Fe fe_binomial(const FieldSpec& F, uint64_t n, uint64_t k);

// Square root by exhaustive search; returns the representative that is
// lexicographically smallest as a coefficient vector. Empty when a is not
// a square.
std::optional<Fe> fe_sqrt(const FieldSpec& F, const Fe& a);

// Enumeration of all q elements, index = c0 + c1*p.
Fe fe_from_index(const FieldSpec& F, uint64_t idx);
uint64_t fe_index(const FieldSpec& F, const Fe& a);

// Prints "7" for prime fields, "u+1"-style u-polynomials otherwise.
std::string fe_to_string(const FieldSpec& F, const Fe& a);

// Checked value type used at module boundaries.
struct FieldElement {
  const FieldSpec* spec = nullptr;
  Fe v = kFeZero;

  FieldElement() = default;
  FieldElement(const FieldSpec* s, Fe val) : spec(s), v(val) {}

  bool operator==(const FieldElement& o) const { return spec == o.spec && v == o.v; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
};

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_neg(const FieldElement& a);
FieldElement field_inv(const FieldElement& a);
FieldElement from_rational_literal(long long num, long long den, const FieldSpec* spec);
FieldElement binomial_mod(uint64_t n, uint64_t k, const FieldSpec* spec);
std::optional<FieldElement> field_sqrt(const FieldElement& a);

}  // namespace hqcf
