#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hqcf/parse.hpp"
#include "hqcf/poly.hpp"

using namespace hqcf;

namespace {

TPoly random_poly(const FieldSpec* F, std::mt19937& rng, int max_deg) {
  int d = (int)(rng() % (max_deg + 1));
  std::vector<Fe> c(d + 1);
  for (auto& x : c) x = fe_from_index(*F, rng() % F->q);
  return TPoly(F, std::move(c));
}

const FieldSpec* random_field(std::mt19937& rng) {
  static const uint32_t ps[] = {2, 3, 5, 7, 11, 13};
  return field_prime(ps[rng() % 6]);
}

}  // namespace

TEST_CASE("divmod worked instances") {
  const FieldSpec* F7 = field_prime(7);
  // T^7 by (T^2-1)^2: quotient T^3+2T, remainder 3T^3+5T (i.e. 3T^3-2T)
  auto [q, r] = tpoly_divmod(parse_tpoly("T^7", F7), parse_tpoly("(T^2-1)^2", F7));
  CHECK(q == parse_tpoly("T^3+2T", F7));
  CHECK(r == parse_tpoly("3T^3+5T", F7));

  const FieldSpec* F13 = field_prime(13);
  TPoly a = parse_tpoly("(T^2-1)^4", F13);
  TPoly b = parse_tpoly("2T^7+2T^5+T^3-T", F13);
  auto [q2, r2] = tpoly_divmod(a, b);
  CHECK(q2 == parse_tpoly("7T", F13));  // first partial quotient of the expansion

  TPoly one = TPoly::from_int(F7, 1);
  auto [q3, r3] = tpoly_divmod(parse_tpoly("3T^4+T+1", F7), one);
  CHECK(q3 == parse_tpoly("3T^4+T+1", F7));
  CHECK(r3.is_zero());

  CHECK_THROWS_AS(tpoly_divmod(one, TPoly::zero(F7)), std::domain_error);
}

TEST_CASE("divmod round-trip on random inputs") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const FieldSpec* F = random_field(rng);
    TPoly a = random_poly(F, rng, 12);
    TPoly b = random_poly(F, rng, 6);
    if (b.is_zero()) continue;
    auto [q, r] = tpoly_divmod(a, b);
    CHECK(q * b + r == a);
    if (!r.is_zero()) CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("gcd") {
  const FieldSpec* F7 = field_prime(7);
  CHECK(tpoly_gcd(parse_tpoly("T^2-1", F7), parse_tpoly("T-1", F7)) == parse_tpoly("T+6", F7));
  TPoly a = parse_tpoly("3T^2+1", F7);
  CHECK(tpoly_gcd(a, TPoly::zero(F7)) == a.monic());
  const FieldSpec* F2 = field_prime(2);
  CHECK(tpoly_gcd(parse_tpoly("T^3+T", F2), parse_tpoly("T^2+1", F2)) == parse_tpoly("T^2+1", F2));
  CHECK_THROWS_AS(tpoly_gcd(TPoly::zero(F7), TPoly::zero(F7)), std::domain_error);
  // gcd divides both, on random inputs
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const FieldSpec* F = random_field(rng);
    TPoly x = random_poly(F, rng, 8), y = random_poly(F, rng, 8);
    if (x.is_zero() && y.is_zero()) continue;
    TPoly g = tpoly_gcd(x, y);
    if (!x.is_zero()) CHECK(tpoly_divmod(x, g).second.is_zero());
    if (!y.is_zero()) CHECK(tpoly_divmod(y, g).second.is_zero());
  }
}

TEST_CASE("scale_T") {
  const FieldSpec* F13 = field_prime(13);
  Fe v = fe_from_int(*F13, 2);
  CHECK(tpoly_scale_T(parse_tpoly("T^2+1", F13), v) == parse_tpoly("4T^2+1", F13));
  CHECK(tpoly_scale_T(parse_tpoly("T^3", F13), v) == parse_tpoly("8T^3", F13));
  TPoly a = parse_tpoly("5T^4+2T+7", F13);
  CHECK(tpoly_scale_T(a, fe_from_int(*F13, 1)) == a);
}

TEST_CASE("polynomial square detection") {
  const FieldSpec* F7 = field_prime(7);
  TPoly s = parse_tpoly("2T^3+T+5", F7);
  CHECK(tpoly_is_square(s * s));
  CHECK(!tpoly_is_square(s * s * parse_tpoly("T+1", F7)));
  const FieldSpec* F2 = field_prime(2);
  TPoly c = parse_tpoly("T^2+T+1", F2);
  CHECK(tpoly_is_square(c * c));
  CHECK(!tpoly_is_square(parse_tpoly("T^3+T+1", F2)));
}

TEST_CASE("rational function canonical form") {
  const FieldSpec* F13 = field_prime(13);
  std::mt19937 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    TPoly n = random_poly(F13, rng, 6);
    TPoly d = random_poly(F13, rng, 6);
    TPoly g = random_poly(F13, rng, 4);
    if (d.is_zero() || g.is_zero()) continue;
    RationalFunc f(n, d);
    RationalFunc scaled(n * g, d * g);
    CHECK(f == scaled);
    CHECK(f.den().lc() == fe_from_int(*F13, 1));
  }
  CHECK_THROWS_AS(RationalFunc(TPoly::from_int(F13, 1), TPoly::zero(F13)), std::domain_error);
}

TEST_CASE("xpoly divmod") {
  const FieldSpec* F13 = field_prime(13);
  XPoly x2m1 = parse_xpoly("X^2-1", F13);
  XPoly xm1 = parse_xpoly("X-1", F13);
  auto [q, r] = xpoly_divmod(x2m1, xm1);
  CHECK(q == parse_xpoly("X+1", F13));
  CHECK(r.is_zero());

  XPoly h = parse_xpoly("(T^2+1)*X^3+(T/(T+1))*X+2", F13);
  auto [q2, r2] = xpoly_divmod(h, h);
  CHECK(q2 == parse_xpoly("1", F13));
  CHECK(r2.is_zero());
  // round-trip with a nontrivial divisor
  XPoly d = parse_xpoly("X^2+T*X+(1/(T-1))", F13);
  auto [q3, r3] = xpoly_divmod(h, d);
  CHECK(q3 * d + r3 == h);
  CHECK_THROWS_AS(xpoly_divmod(h, XPoly::zero(F13)), std::domain_error);
}

TEST_CASE("modpow of X") {
  const FieldSpec* F7 = field_prime(7);
  XPoly p = parse_xpoly("X^4+3*T*X^3+X^2+5", F7);
  CHECK(xpoly_modpow_X(p, 1) == parse_xpoly("X", F7));
  // X^4 mod (X^4 - c) = c
  XPoly pc = parse_xpoly("X^4-(T^2+1)", F7);
  CHECK(xpoly_modpow_X(pc, 4) == parse_xpoly("T^2+1", F7));
  // against naive repeated multiplication
  XPoly acc = parse_xpoly("1", F7);
  XPoly xv = XPoly::variable(F7);
  for (uint64_t r = 1; r <= 32; ++r) {
    acc = xpoly_mod(acc * xv, p);
    CHECK(xpoly_modpow_X(p, r) == acc);
  }
  // the quartic instance used by the degree-4 pipeline at p = 7
  XPoly quartic = parse_xpoly("4*X^4+6*T*X^3+X^2+1", F7);
  XPoly x7 = xpoly_modpow_X(quartic, 7);
  CHECK(x7.degree() <= 3);
  XPoly acc2 = parse_xpoly("1", F7);
  for (int i = 0; i < 7; ++i) acc2 = xpoly_mod(acc2 * xv, quartic);
  CHECK(x7 == acc2);
}

TEST_CASE("xpoly primitive normalization") {
  const FieldSpec* F7 = field_prime(7);
  XPoly h = parse_xpoly("(3*T^2+3)*X^2+(6*T)*X+3", F7);
  XPoly prim = xpoly_primitive(h);
  // content 3 divided out, lowest coefficient made monic
  CHECK(prim == parse_xpoly("(T^2+1)*X^2+(2*T)*X+1", F7));
}
