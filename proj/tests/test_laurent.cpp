#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hqcf/parse.hpp"
#include "hqcf/series.hpp"

using namespace hqcf;

namespace {

RationalFunc random_rational(const FieldSpec* F, std::mt19937& rng) {
  auto rand_poly = [&](int max_deg, bool nonzero) {
    while (true) {
      std::vector<Fe> c((rng() % (max_deg + 1)) + 1);
      for (auto& x : c) x = fe_from_index(*F, rng() % F->q);
      TPoly p(F, std::move(c));
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  return RationalFunc(rand_poly(6, false), rand_poly(5, true));
}

}  // namespace

TEST_CASE("series_from_rational") {
  const FieldSpec* F13 = field_prime(13);
  RationalFunc f(TPoly::from_int(F13, 1), parse_tpoly("T-1", F13));
  LaurentSeries s = series_from_rational(f, 7);
  CHECK(s.hi() == -1);
  for (long long e = -1; e >= -7; --e) CHECK(s.at(e) == fe_from_int(*F13, 1));
  CHECK(!s.exact());

  LaurentSeries t = series_from_rational(RationalFunc(TPoly::variable(F13)), 5);
  CHECK(t.exact());
  CHECK(t.hi() == 1);
  CHECK(t.window_size() == 1);

  const FieldSpec* F5 = field_prime(5);
  LaurentSeries u = series_from_rational(
      RationalFunc(TPoly::from_int(F5, 1), parse_tpoly("T^2", F5)), 4);
  CHECK(u.exact());
  CHECK(u.hi() == -2);
  CHECK(u.window_size() == 1);
}

TEST_CASE("add, mul, inv") {
  const FieldSpec* F13 = field_prime(13);
  LaurentSeries t = LaurentSeries::from_tpoly(TPoly::variable(F13));
  LaurentSeries it = series_inv(t);
  CHECK(it.hi() == -1);
  CHECK(it.exact());

  // inv(T-1) matches the long-division expansion
  LaurentSeries tm1 = LaurentSeries::from_tpoly(parse_tpoly("T-1", F13));
  LaurentSeries inv_direct = series_inv(tm1);
  LaurentSeries inv_ref = series_from_rational(
      RationalFunc(TPoly::from_int(F13, 1), parse_tpoly("T-1", F13)), inv_direct.window_size());
  for (long long e = inv_direct.hi(); e >= inv_direct.floor(); --e)
    CHECK(inv_direct.at(e) == inv_ref.at(e));

  // cancellation renormalizes the window
  LaurentSeries a(F13, -2, {fe_from_int(*F13, 1), fe_from_int(*F13, 1)}, false);   // T^-2 + T^-1
  LaurentSeries b(F13, -1, {fe_from_int(*F13, 12)}, true);                          // -T^-1
  LaurentSeries sum = series_add(a, b);
  CHECK(sum.hi() == -2);
  CHECK(sum.at(-2) == fe_from_int(*F13, 1));

  CHECK_THROWS_AS(series_inv(LaurentSeries::zero_exact(F13)), std::domain_error);
  CHECK_THROWS_AS(series_inv(LaurentSeries::zero_to(F13, -3)), PrecisionError);
}

TEST_CASE("mul/inv consistency on rational-sourced series") {
  std::mt19937 rng(123);
  for (uint32_t p : {3u, 13u}) {
    const FieldSpec* F = field_prime(p);
    for (int trial = 0; trial < 60; ++trial) {
      RationalFunc f = random_rational(F, rng);
      if (f.is_zero()) continue;
      LaurentSeries s = series_from_rational(f, 24);
      if (s.window_zero()) continue;
      LaurentSeries prod = series_mul(s, series_inv(s));
      CHECK(!prod.window_zero());
      CHECK(prod.hi() == 0);
      CHECK(prod.at(0) == fe_from_int(*F, 1));
      for (long long e = -1; e >= prod.floor(); --e) CHECK(prod.at(e) == kFeZero);
    }
  }
}

TEST_CASE("frobenius") {
  // (T+1)^p = T^p + 1
  for (uint32_t p : {2u, 3u, 5u}) {
    const FieldSpec* F = field_prime(p);
    LaurentSeries s = LaurentSeries::from_tpoly(parse_tpoly("T+1", F));
    LaurentSeries fr = series_frobenius(s, p);
    CHECK(fr.at(p) == fe_from_int(*F, 1));
    CHECK(fr.at(0) == fe_from_int(*F, 1));
    for (long long e = 1; e < p; ++e) CHECK(fr.at(e) == kFeZero);
  }
  const FieldSpec* F3 = field_prime(3);
  LaurentSeries a(F3, -2, {fe_from_int(*F3, 2), fe_from_int(*F3, 1)}, false);  // T^-1 + 2T^-2
  LaurentSeries cubed = series_frobenius(a, 3);
  CHECK(cubed.at(-3) == fe_from_int(*F3, 1));
  CHECK(cubed.at(-6) == fe_from_int(*F3, 2));
  CHECK(cubed.at(-4) == kFeZero);
  CHECK(cubed.floor() == -6);
  CHECK_THROWS_AS(series_frobenius(a, 2), std::invalid_argument);

  // Frobenius against the repeated-multiplication oracle
  std::mt19937 rng(5);
  for (uint32_t p : {2u, 3u, 5u}) {
    const FieldSpec* F = field_prime(p);
    for (int trial = 0; trial < 40; ++trial) {
      RationalFunc f = random_rational(F, rng);
      LaurentSeries s = series_from_rational(f, 12);
      if (s.window_zero()) continue;
      LaurentSeries fr = series_frobenius(s, p);
      LaurentSeries mul = s;
      for (uint32_t i = 1; i < p; ++i) mul = series_mul(mul, s);
      for (long long e = std::max(fr.floor(), mul.floor()); e <= fr.hi(); ++e)
        CHECK(fr.at(e) == mul.at(e));
    }
  }
}

TEST_CASE("frobenius is multiplicative") {
  std::mt19937 rng(31);
  const FieldSpec* F = field_prime(5);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentSeries a = series_from_rational(random_rational(F, rng), 10);
    LaurentSeries b = series_from_rational(random_rational(F, rng), 10);
    LaurentSeries lhs = series_frobenius(series_mul(a, b), 5);
    LaurentSeries rhs = series_mul(series_frobenius(a, 5), series_frobenius(b, 5));
    long long lo = std::max(lhs.exact() ? -1000 : lhs.floor(), rhs.exact() ? -1000 : rhs.floor());
    long long hi = lo - 1;
    if (!lhs.window_zero()) hi = lhs.hi();
    if (!rhs.window_zero()) hi = std::max(hi, rhs.hi());
    for (long long e = lo; e <= hi; ++e) CHECK(lhs.at(e) == rhs.at(e));
  }
}

TEST_CASE("polypart") {
  const FieldSpec* F13 = field_prime(13);
  LaurentSeries s(F13, -1, {fe_from_int(*F13, 1), kFeZero, fe_from_int(*F13, 1)}, true);  // T + T^-1
  auto [poly, rest] = series_polypart(s);
  CHECK(poly == TPoly::variable(F13));
  CHECK(rest.hi() == -1);
  CHECK(rest.at(-1) == fe_from_int(*F13, 1));

  LaurentSeries r = series_from_rational(
      RationalFunc(TPoly::from_int(F13, 1), parse_tpoly("T-1", F13)), 9);
  auto [poly2, rest2] = series_polypart(r);
  CHECK(poly2.is_zero());
  CHECK(rest2.hi() == -1);

  CHECK_THROWS_AS(series_polypart(LaurentSeries::zero_to(F13, 2)), PrecisionError);
}

TEST_CASE("newton_root: golden analogue") {
  for (uint32_t p : {2u, 7u, 13u}) {
    const FieldSpec* F = field_prime(p);
    XPoly s = parse_xpoly("X^2-T*X-1", F);
    LaurentSeries seed = LaurentSeries::from_tpoly(TPoly::variable(F));
    LaurentSeries w = newton_root(s, seed, 40);
    CHECK(w.hi() == 1);
    CHECK(w.window_size() == 40);
    // residual vanishes on the whole certified window
    LaurentSeries res = series_eval_xpoly(s, w);
    CHECK(res.window_zero());
    // omega = T + 1/omega
    LaurentSeries rhs = series_add(LaurentSeries::from_tpoly(TPoly::variable(F)), series_inv(w));
    for (long long e = w.hi(); e >= std::max(w.floor(), rhs.floor()); --e)
      CHECK(w.at(e) == rhs.at(e));
  }
}

TEST_CASE("newton_root: quartic root having integer part (32/9)T at p=7") {
  const FieldSpec* F7 = field_prime(7);
  XPoly P = parse_xpoly("4*X^4+6*T*X^3+X^2+1", F7);
  LaurentSeries seed = LaurentSeries::monomial(F7, fe_from_int(*F7, 2), 1);
  LaurentSeries a = newton_root(P, seed, 30);
  CHECK(a.at(1) == fe_from_int(*F7, 2));
  CHECK(a.at(0) == kFeZero);
  CHECK(a.at(-1) == fe_from_int(*F7, 6));  // -T^{-1}
  LaurentSeries res = series_eval_xpoly(P, a);
  CHECK(res.window_zero());
}

TEST_CASE("newton_root: characteristic-2 cubic branch") {
  const FieldSpec* F2 = field_prime(2);
  XPoly s = parse_xpoly("X^3+(T^2+1)*X^2+T", F2);
  LaurentSeries seed = LaurentSeries::from_tpoly(parse_tpoly("T^2+1", F2));
  LaurentSeries a = newton_root(s, seed, 50);
  CHECK(a.hi() == 2);
  LaurentSeries res = series_eval_xpoly(s, a);
  CHECK(res.window_zero());
}

TEST_CASE("newton_root rejects uncertifiable branches") {
  const FieldSpec* F7 = field_prime(7);
  // X^2 - T at seed T: v(f) = -2, v(f') = -1, condition -2 > -2 fails
  CHECK_THROWS_AS(newton_root(parse_xpoly("X^2-T", F7),
                              LaurentSeries::from_tpoly(TPoly::variable(F7)), 10),
                  HenselError);
  // inseparable: d/dX (X^2 + T) = 0 in characteristic 2
  const FieldSpec* F2 = field_prime(2);
  CHECK_THROWS_AS(newton_root(parse_xpoly("X^2+T", F2),
                              LaurentSeries::from_tpoly(TPoly::variable(F2)), 10),
                  HenselError);
}

TEST_CASE("precision soundness: N and 2N windows agree bitwise") {
  const FieldSpec* F13 = field_prime(13);
  XPoly P = parse_xpoly("X^2-T*X-1", F13);
  LaurentSeries seed = LaurentSeries::from_tpoly(TPoly::variable(F13));
  for (size_t n : {10u, 25u, 40u}) {
    LaurentSeries a = newton_root(P, seed, n);
    LaurentSeries b = newton_root(P, seed, 2 * n);
    for (long long e = a.hi(); e >= a.floor(); --e) CHECK(a.at(e) == b.at(e));
  }
  std::mt19937 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    RationalFunc f = random_rational(F13, rng);
    LaurentSeries a = series_from_rational(f, 15);
    LaurentSeries b = series_from_rational(f, 30);
    if (a.exact()) continue;
    for (long long e = a.hi(); e >= a.floor(); --e) CHECK(a.at(e) == b.at(e));
  }
}

TEST_CASE("series printing") {
  const FieldSpec* F13 = field_prime(13);
  LaurentSeries s(F13, -2, {fe_from_int(*F13, 6), kFeZero, fe_from_int(*F13, 2)}, false);
  CHECK(s.to_string() == "2*T^0 + 6*T^(-2) + O(T^(-3))");
  LaurentSeries t = LaurentSeries::from_tpoly(parse_tpoly("T^2+1", F13));
  CHECK(t.to_string() == "1*T^2 + 1*T^0");  // exact: no O-term
  CHECK(LaurentSeries::zero_exact(F13).to_string() == "0");
}

TEST_CASE("series scaling T <- vT") {
  const FieldSpec* F13 = field_prime(13);
  Fe v = fe_from_int(*F13, 2);
  LaurentSeries s(F13, -1, {fe_from_int(*F13, 3), kFeZero, fe_from_int(*F13, 5)}, false);
  LaurentSeries scaled = series_scale_T(s, v);
  CHECK(scaled.at(1) == fe_from_int(*F13, 10));               // 5 * 2
  CHECK(scaled.at(-1) == fe_mul(*F13, fe_from_int(*F13, 3), fe_inv(*F13, v)));
  CHECK(scaled.floor() == s.floor());
}
