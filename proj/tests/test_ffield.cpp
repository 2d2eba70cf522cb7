#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hqcf/field.hpp"

using namespace hqcf;

namespace {

// Independent oracle: inverse by exhaustive search.
Fe brute_inverse(const FieldSpec& F, const Fe& a) {
  for (uint64_t i = 1; i < F.q; ++i) {
    Fe r = fe_from_index(F, i);
    if (fe_mul(F, a, r) == fe_from_int(F, 1)) return r;
  }
  throw std::logic_error("no inverse found");
}

// Independent oracle: additive Pascal triangle mod p (no division anywhere).
uint32_t pascal_mod(uint32_t p, unsigned n, unsigned k) {
  std::vector<uint32_t> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<uint32_t> next(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) next[j] = (row[j - 1] + row[j]) % p;
    row = std::move(next);
  }
  return k < row.size() ? row[k] : 0;
}

}  // namespace

TEST_CASE("prime field basics") {
  const FieldSpec& F7 = *field_prime(7);
  CHECK(fe_add(F7, fe_from_int(F7, 3), fe_from_int(F7, 5)) == fe_from_int(F7, 1));
  const FieldSpec& F13 = *field_prime(13);
  CHECK(fe_mul(F13, fe_from_int(F13, 7), fe_from_int(F13, 2)) == fe_from_int(F13, 1));
  CHECK(fe_inv(F7, fe_from_int(F7, 3)) == fe_from_int(F7, 5));
  CHECK(fe_inv(F13, fe_from_int(F13, 6)) == brute_inverse(F13, fe_from_int(F13, 6)));
  CHECK(fe_inv(F13, fe_from_int(F13, 6)) == fe_from_int(F13, 11));
  CHECK_THROWS_AS(fe_inv(F7, kFeZero), std::domain_error);
  CHECK_THROWS_AS(field_prime(6), std::invalid_argument);
}

TEST_CASE("GF(4) multiplication table fragment") {
  const FieldSpec& F4 = *field_gf4();
  Fe u{0, 1};
  CHECK(fe_mul(F4, u, u) == Fe{1, 1});          // u^2 = u + 1
  CHECK(fe_inv(F4, u) == Fe{1, 1});             // u (u+1) = u^2 + u = 1
  CHECK(fe_mul(F4, u, Fe{1, 1}) == fe_from_int(F4, 1));
  CHECK(fe_to_string(F4, Fe{1, 1}) == "u+1");
  CHECK_THROWS_AS(field_ext(2, 1, 0), std::invalid_argument);  // u^2+1 = (u+1)^2
}

TEST_CASE("field element arithmetic across every small field") {
  for (const FieldSpec* Fp :
       {field_prime(2), field_prime(3), field_prime(5), field_prime(13), field_gf4(),
        field_quadratic_ext(5), field_quadratic_ext(13)}) {
    const FieldSpec& F = *Fp;
    for (uint64_t i = 1; i < F.q; ++i) {
      Fe a = fe_from_index(F, i);
      CHECK(fe_mul(F, a, fe_inv(F, a)) == fe_from_int(F, 1));
      // Frobenius: a^p equals sum c_i u^{ip} reduced, which fe_pow realizes
      Fe frob = fe_frobenius(F, a);
      Fe by_mul = fe_from_int(F, 1);
      for (uint32_t t = 0; t < F.p; ++t) by_mul = fe_mul(F, by_mul, a);
      CHECK(frob == by_mul);
    }
  }
}

TEST_CASE("from_rational_literal") {
  const FieldSpec* F7 = field_prime(7);
  CHECK(from_rational_literal(32, 9, F7).v == fe_from_int(*F7, 2));
  CHECK(from_rational_literal(8, 27, F7).v == fe_from_int(*F7, 6));
  CHECK(from_rational_literal(0, 5, F7).v == kFeZero);
  CHECK_THROWS_AS(from_rational_literal(1, 7, F7), std::domain_error);
  // scaling invariance
  const FieldSpec& F = *field_prime(13);
  for (long long a = -6; a <= 6; ++a)
    for (long long b = 1; b <= 6; ++b)
      for (long long c = 1; c <= 5; ++c) {
        if (b % 13 == 0 || (b * c) % 13 == 0) continue;
        CHECK(fe_from_ratio(F, a * c, b * c) == fe_from_ratio(F, a, b));
      }
}

TEST_CASE("binomials via Lucas against the Pascal oracle") {
  const FieldSpec& F7 = *field_prime(7);
  const FieldSpec& F13 = *field_prime(13);
  CHECK(fe_binomial(F7, 4, 2) == fe_from_int(F7, 6));
  CHECK(fe_binomial(F13, 4, 2) == fe_from_int(F13, 6));
  CHECK(fe_binomial(F13, 8, 4) == fe_from_int(F13, 5));  // 70 mod 13
  for (uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    const FieldSpec& F = *field_prime(p);
    for (unsigned n = 0; n <= 40; ++n)
      for (unsigned k = 0; k <= n; ++k)
        CHECK(fe_binomial(F, n, k) == Fe{pascal_mod(p, n, k), 0});
  }
  // far beyond native factorials
  const FieldSpec& F199 = *field_prime(199);
  CHECK(fe_binomial(F199, 132, 66) == Fe{pascal_mod(199, 132, 66), 0});
}

TEST_CASE("square roots") {
  const FieldSpec& F7 = *field_prime(7);
  auto r = fe_sqrt(F7, fe_from_int(F7, 4));
  REQUIRE(r.has_value());
  CHECK(*r == fe_from_int(F7, 2));  // lexicographically smaller of {2, 5}

  const FieldSpec& F13 = *field_prime(13);
  // quadratic-residue table mod 13: {1,3,4,9,10,12}
  std::set<uint32_t> residues;
  for (uint32_t x = 1; x < 13; ++x) residues.insert(x * x % 13);
  CHECK(!residues.count(5));
  CHECK(!fe_sqrt(F13, fe_from_int(F13, 5)).has_value());

  const FieldSpec& F169 = *field_quadratic_ext(13);
  auto r5 = fe_sqrt(F169, fe_from_int(F169, 5));
  REQUIRE(r5.has_value());
  CHECK(fe_mul(F169, *r5, *r5) == fe_from_int(F169, 5));
  CHECK((*r5)[1] != 0);  // genuinely outside the prime field

  // exactly (p-1)/2 nonzero squares in a prime field
  for (uint32_t p : {3u, 5u, 7u, 13u, 31u}) {
    const FieldSpec& F = *field_prime(p);
    size_t with_root = 0;
    for (uint32_t a = 1; a < p; ++a)
      if (fe_sqrt(F, fe_from_int(F, a))) ++with_root;
    CHECK(with_root == (p - 1) / 2);
    for (uint32_t a = 1; a < p; ++a) {
      auto s = fe_sqrt(F, fe_from_int(F, a));
      if (s) CHECK(fe_mul(F, *s, *s) == fe_from_int(F, a));
    }
  }
}

TEST_CASE("mismatched specs are rejected") {
  FieldElement a{field_prime(7), fe_from_int(*field_prime(7), 3)};
  FieldElement b{field_prime(13), fe_from_int(*field_prime(13), 3)};
  CHECK_THROWS_AS(field_add(a, b), FieldMismatchError);
  CHECK_THROWS_AS(field_mul(a, b), FieldMismatchError);
}

TEST_CASE("interning returns identical pointers") {
  CHECK(field_prime(13) == field_prime(13));
  CHECK(field_gf4() == field_ext(2, 1, 1));
  CHECK(field_quadratic_ext(13) == field_quadratic_ext(13));
}
