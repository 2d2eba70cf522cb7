#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hqcf/contfrac.hpp"
#include "hqcf/parse.hpp"

using namespace hqcf;

namespace {

// Literal recursive definition, used as the oracle for the iterative form.
TPoly continuant_recursive(const FieldSpec* F, std::span<const TPoly> xs) {
  if (xs.empty()) return TPoly::from_int(F, 1);
  if (xs.size() == 1) return xs[0];
  TPoly a = continuant_recursive(F, xs.subspan(1));
  TPoly b = continuant_recursive(F, xs.subspan(2));
  return xs[0] * a + b;
}

std::vector<TPoly> parse_list(const FieldSpec* F, const std::vector<std::string>& texts) {
  std::vector<TPoly> out;
  for (const auto& t : texts) out.push_back(parse_tpoly(t, F));
  return out;
}

TPoly random_nonconst_poly(const FieldSpec* F, std::mt19937& rng, int max_deg) {
  while (true) {
    std::vector<Fe> c((rng() % max_deg) + 2);
    for (auto& x : c) x = fe_from_index(*F, rng() % F->q);
    TPoly p(F, std::move(c));
    if (!p.is_zero() && p.degree() >= 1) return p;
  }
}

}  // namespace

TEST_CASE("continuants") {
  const FieldSpec* F7 = field_prime(7);
  CHECK(continuant_const(*F7, {}) == fe_from_int(*F7, 1));
  TPoly t = TPoly::variable(F7);
  std::vector<TPoly> one{t};
  CHECK(continuant(one) == t);
  auto tt = parse_list(F7, {"T", "T"});
  CHECK(continuant(tt) == parse_tpoly("T^2+1", F7));
  auto k24 = parse_list(F7, {"5T", "T", "T"});
  CHECK(continuant(k24) == parse_tpoly("5T^3+6T", F7));

  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const FieldSpec* F = field_prime(trial % 2 ? 5 : 13);
    std::vector<TPoly> xs;
    size_t n = rng() % 7;
    for (size_t i = 0; i < n; ++i) xs.push_back(random_nonconst_poly(F, rng, 2));
    if (xs.empty()) continue;
    CHECK(continuant(xs) == continuant_recursive(F, xs));
  }
}

TEST_CASE("eval_cf") {
  const FieldSpec* F13 = field_prime(13);
  TPoly a = parse_tpoly("3T^2+1", F13);
  std::vector<TPoly> single{a};
  RationalFunc v = eval_cf(single);
  CHECK(v == RationalFunc(a));

  auto quot = parse_list(F13, {"7T", "10T", "5T", "-T", "9T", "11T", "T", "5T"});
  RationalFunc target(parse_tpoly("(T^2-1)^4", F13), parse_tpoly("2T^7+2T^5+T^3-T", F13));
  CHECK(eval_cf(quot) == target);

  const FieldSpec* F3 = field_prime(3);
  auto ttt = parse_list(F3, {"T", "T", "T"});
  CHECK(eval_cf(ttt) == RationalFunc(parse_tpoly("T^3+2T", F3), parse_tpoly("T^2+1", F3)));
}

TEST_CASE("continuant quotient identity") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const FieldSpec* F = field_prime(trial % 2 ? 7 : 11);
    std::vector<TPoly> xs;
    size_t n = 1 + rng() % 5;
    for (size_t i = 0; i < n; ++i) xs.push_back(random_nonconst_poly(F, rng, 2));
    // [x_1..x_n] * <x_2..x_n> = <x_1..x_n>
    RationalFunc val = eval_cf(xs);
    TPoly whole = continuant(xs);
    TPoly tail = xs.size() > 1 ? continuant(std::span<const TPoly>(xs).subspan(1))
                               : TPoly::from_int(F, 1);
    CHECK(val * RationalFunc(tail) == RationalFunc(whole));
  }
}

TEST_CASE("expand_rational worked instances") {
  const FieldSpec* F13 = field_prime(13);
  RationalFunc f(parse_tpoly("(T^2-1)^4", F13), parse_tpoly("2T^7+2T^5+T^3-T", F13));
  Expansion e = expand_rational(f);
  CHECK(e.quotients == parse_list(F13, {"7T", "10T", "5T", "12T", "9T", "11T", "T", "5T"}));
  CHECK(e.stopped == StopReason::Finite);
  CHECK(eval_cf(e.quotients) == f);

  Expansion e2 = expand_rational(RationalFunc(TPoly::variable(F13)));
  CHECK(e2.quotients == parse_list(F13, {"T"}));

  const FieldSpec* F3 = field_prime(3);
  Expansion e3 = expand_rational(RationalFunc(parse_tpoly("T^2+1", F3), parse_tpoly("T", F3)));
  CHECK(e3.quotients == parse_list(F3, {"T", "T"}));
}

TEST_CASE("expand/eval round-trip, 1000 random rationals") {
  std::mt19937 rng(1000);
  const uint32_t ps[] = {2, 3, 5, 7, 11, 13};
  for (int trial = 0; trial < 1000; ++trial) {
    const FieldSpec* F = field_prime(ps[rng() % 6]);
    TPoly num = random_nonconst_poly(F, rng, 6);
    TPoly den = random_nonconst_poly(F, rng, 5);
    if ((rng() & 3) == 0) num = TPoly::from_int(F, (long long)(rng() % F->p));
    RationalFunc f(num, den);
    Expansion e = expand_rational(f);
    CHECK(eval_cf(e.quotients) == f);
    for (size_t i = 1; i < e.quotients.size(); ++i) {
      CHECK(!e.quotients[i].is_zero());
      CHECK(e.quotients[i].degree() >= 1);
    }
  }
}

TEST_CASE("expand_series agrees with expand_rational on the certified prefix") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const FieldSpec* F = field_prime(trial % 2 ? 13 : 5);
    TPoly num = random_nonconst_poly(F, rng, 6);
    TPoly den = random_nonconst_poly(F, rng, 5);
    RationalFunc f(num, den);
    Expansion exact = expand_rational(f);
    LaurentSeries s = series_from_rational(f, 40);
    Expansion approx = expand_series(s, 100);
    REQUIRE(approx.certified >= 1);
    for (size_t i = 0; i < approx.certified && i < exact.quotients.size(); ++i)
      CHECK(approx.quotients[i] == exact.quotients[i]);
    // a finite stop must coincide with the full Euclidean expansion
    if (approx.stopped == StopReason::Finite) CHECK(approx.quotients == exact.quotients);
  }
}

TEST_CASE("expand_series certification soundness at doubled precision") {
  const FieldSpec* F13 = field_prime(13);
  XPoly P = parse_xpoly("4/9*X^4-T*X^3+X^2-8/27", F13);
  LaurentSeries seed = LaurentSeries::monomial(F13, fe_from_ratio(*F13, 32, 9), 1);
  (void)P;
  XPoly golden = parse_xpoly("X^2-T*X-1", F13);
  for (size_t n : {20u, 45u}) {
    LaurentSeries a = newton_root(golden, LaurentSeries::from_tpoly(TPoly::variable(F13)), n);
    LaurentSeries b = newton_root(golden, LaurentSeries::from_tpoly(TPoly::variable(F13)), 2 * n);
    Expansion ea = expand_series(a, 1000);
    Expansion eb = expand_series(b, 1000);
    REQUIRE(ea.certified <= eb.certified);
    for (size_t i = 0; i < ea.certified; ++i) CHECK(ea.quotients[i] == eb.quotients[i]);
    CHECK(ea.stopped == StopReason::Precision);
  }
}

TEST_CASE("quad_tail_step") {
  const FieldSpec* F11 = field_prime(11);
  QuadTriple t = make_quad_triple(parse_tpoly("6T^2+1", F11), parse_tpoly("5T^3+9T", F11),
                                  parse_tpoly("9T^2+10", F11));
  QuadTriple cur = t;
  for (const char* q : {"T", "2T", "3T"}) cur = quad_tail_step(cur, parse_tpoly(q, F11));
  CHECK(cur == t);  // period (T, 2T, 3T)

  // q = 0 swaps the roles of A and C
  QuadTriple swapped = quad_tail_step(t, TPoly::zero(F11));
  CHECK(swapped == make_quad_triple(t.C, t.B, t.A));

  // random step consistency: if alpha solves t and alpha = q + 1/alpha',
  // then alpha' solves quad_tail_step(t, q)
  std::mt19937 rng(4);
  const FieldSpec* F = field_prime(7);
  for (int trial = 0; trial < 30; ++trial) {
    TPoly A = random_nonconst_poly(F, rng, 2);
    TPoly B = random_nonconst_poly(F, rng, 2);
    TPoly C = random_nonconst_poly(F, rng, 1);
    QuadTriple tri;
    try {
      tri = make_quad_triple(A, B, C);
      if (quad_discriminant_is_square(tri)) continue;
    } catch (const std::exception&) {
      continue;
    }
    try {
      LaurentSeries probe = series_from_rational(RationalFunc(-tri.B, tri.A), 8);
      auto [ip, rest0] = series_polypart(probe);
      (void)rest0;
      if (ip.is_zero() || ip.degree() < 1) continue;  // no usable seed from the trace
      LaurentSeries root =
          newton_root(tri.to_xpoly(), LaurentSeries::from_tpoly(ip), 40);
      auto [q, rest] = series_polypart(root);
      if (rest.window_zero()) continue;
      LaurentSeries tail = series_inv(rest);
      QuadTriple next = quad_tail_step(tri, q);
      LaurentSeries res = series_eval_xpoly(next.to_xpoly(), tail);
      CHECK(res.window_zero());
    } catch (const HenselError&) {
      continue;
    } catch (const PrecisionError&) {
      continue;
    } catch (const std::exception&) {
      continue;
    }
  }
}

TEST_CASE("quad_expand worked instances") {
  const FieldSpec* F11 = field_prime(11);
  QuadTriple t = make_quad_triple(parse_tpoly("6T^2+1", F11), parse_tpoly("5T^3+9T", F11),
                                  parse_tpoly("9T^2+10", F11));
  QuadExpansion q = quad_expand(t, LaurentSeries::from_tpoly(TPoly::variable(F11)));
  CHECK(q.preperiod.empty());
  CHECK(q.period == parse_list(F11, {"T", "2T", "3T"}));
  CHECK(periodic_to_equation(q.preperiod, q.period) == t);

  // golden analogue: period [T]
  const FieldSpec* F7 = field_prime(7);
  QuadTriple g = make_quad_triple(TPoly::from_int(F7, 1), parse_tpoly("-T", F7),
                                  TPoly::from_int(F7, -1));
  QuadExpansion qg = quad_expand(g, LaurentSeries::from_tpoly(TPoly::variable(F7)));
  CHECK(qg.preperiod.empty());
  CHECK(qg.period == parse_list(F7, {"T"}));
}

TEST_CASE("periodic_to_equation") {
  const FieldSpec* F11 = field_prime(11);
  auto period = parse_list(F11, {"T", "2T", "3T"});
  QuadTriple t = periodic_to_equation({}, period);
  QuadTriple want = make_quad_triple(parse_tpoly("6T^2+1", F11), parse_tpoly("5T^3+9T", F11),
                                     parse_tpoly("9T^2+10", F11));
  CHECK(t == want);

  const FieldSpec* F7 = field_prime(7);
  auto pT = parse_list(F7, {"T"});
  QuadTriple omega = periodic_to_equation({}, pT);
  CHECK(omega == make_quad_triple(TPoly::from_int(F7, 1), parse_tpoly("-T", F7),
                                  TPoly::from_int(F7, -1)));

  // preperiod [T^2], period [T]: verify by the series residual
  auto pre = parse_list(F7, {"T^2"});
  QuadTriple mixed = periodic_to_equation(pre, pT);
  LaurentSeries omega_root = newton_root(omega.to_xpoly(),
                                         LaurentSeries::from_tpoly(TPoly::variable(F7)), 40);
  // alpha = T^2 + 1/omega
  LaurentSeries alpha = series_add(LaurentSeries::from_tpoly(parse_tpoly("T^2", F7)),
                                   series_inv(omega_root));
  LaurentSeries res = series_eval_xpoly(mixed.to_xpoly(), alpha);
  CHECK(res.window_zero());
}

TEST_CASE("growth data of the worked families") {
  // cubic over GF(2), blocks through n = 4: the ratio spikes before each
  // T^{2^n+1} are (2^n+1)/(2^{n+1}-2), derived from the block structure
  const FieldSpec* F2 = field_prime(2);
  XPoly cubic = parse_xpoly("X^3+(T^2+1)*X^2+T", F2);
  LaurentSeries root = newton_root(cubic, LaurentSeries::from_tpoly(parse_tpoly("T^2+1", F2)), 170);
  Expansion e = expand_series(root, 31);
  REQUIRE(e.certified >= 31);
  GrowthStat g = growth_stat(e, 1000);
  CHECK(g.ratios[6] == make_rat(9, 14));    // before T^9
  CHECK(g.ratios[14] == make_rat(17, 30));  // before T^17
  // observed values stay at or below d - 2 = 1 once the history is non-trivial
  for (size_t i = 1; i < g.ratios.size(); ++i) CHECK(!(make_rat(1, 1) < g.ratios[i]));
  // ... but the very first ratio exceeds it (3/2), so the bound genuinely
  // concerns the limit superior, not every finite value
  CHECK(g.ratios[0] == make_rat(3, 2));

  // the power family alpha = [T, T^r, T^{r^2}, ...]: every ratio equals
  // (r-1) r^{n+1} / (r^{n+1} - 1), strictly above d - 2 = r - 1 at every n
  const FieldSpec* F3 = field_prime(3);
  XPoly fam = parse_xpoly("X^4-T*X^3-1", F3);
  LaurentSeries fr = newton_root(fam, LaurentSeries::from_tpoly(TPoly::variable(F3)), 200);
  Expansion ef = expand_series(fr, 4);
  REQUIRE(ef.certified >= 4);
  GrowthStat gf = growth_stat(ef, 1000);
  long long r = 3;
  for (size_t n = 0; n < gf.ratios.size(); ++n) {
    long long rn1 = 1;
    for (size_t t = 0; t < n + 1; ++t) rn1 *= r;
    CHECK(gf.ratios[n] == make_rat((r - 1) * rn1, rn1 - 1));
    CHECK(make_rat(r - 1, 1) < gf.ratios[n]);
  }

  // quintic over GF(4) (d = 5): all quotients have degree 1, ratios collapse
  const FieldSpec* F4 = field_gf4();
  XPoly quintic = parse_xpoly("T^3*X^5+(u*T^4+T^2+1)*X^4+1", F4);
  LaurentSeries qr = newton_root(quintic, LaurentSeries::monomial(F4, Fe{0, 1}, 1), 60);
  Expansion eq = expand_series(qr, 20);
  GrowthStat gq = growth_stat(eq, 1000);
  for (const Rat64& x : gq.ratios) CHECK(!(make_rat(3, 1) < x));
}

TEST_CASE("growth statistic") {
  const FieldSpec* F7 = field_prime(7);
  // [T, T, ..., T]: ratios 1/1, 1/2, 1/3, ...
  Expansion e;
  e.spec = F7;
  for (int i = 0; i < 12; ++i) e.quotients.push_back(TPoly::variable(F7));
  e.certified = e.quotients.size();
  e.recompute_degrees();
  GrowthStat g = growth_stat(e, 1000);
  REQUIRE(g.ratios.size() == 11);
  for (size_t n = 0; n < g.ratios.size(); ++n) CHECK(g.ratios[n] == make_rat(1, (long long)n + 1));
  CHECK(g.window_sup == make_rat(1, 1));

  CHECK_THROWS_AS(growth_stat(Expansion{}), std::invalid_argument);
}
