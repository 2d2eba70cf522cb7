#include "hqcf/field.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace hqcf {

namespace {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint32_t mod_ll(long long v, uint32_t p) {
  long long r = v % (long long)p;
  if (r < 0) r += p;
  return (uint32_t)r;
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
  // extended Euclid
  long long t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    long long qq = r / newr;
    long long tmp = t - qq * newt;
    t = newt;
    newt = tmp;
    tmp = r - qq * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("inv_mod: not invertible");
  if (t < 0) t += p;
  return (uint32_t)t;
}

// Interning table: a field is identified by (p, n, mod0, mod1).
std::map<std::tuple<uint32_t, uint32_t, uint32_t, uint32_t>, const FieldSpec*>& table() {
  static std::map<std::tuple<uint32_t, uint32_t, uint32_t, uint32_t>, const FieldSpec*> t;
  return t;
}
std::mutex table_mutex;

const FieldSpec* intern(FieldSpec s) {
  std::lock_guard<std::mutex> lock(table_mutex);
  auto key = std::make_tuple(s.p, s.n, s.mod0, s.mod1);
  auto it = table().find(key);
  if (it != table().end()) return it->second;
  auto* owned = new FieldSpec(s);  // lives for the process
  table().emplace(key, owned);
  return owned;
}

void check_same(const FieldSpec* a, const FieldSpec* b) {
  if (a != b) throw FieldMismatchError("field elements belong to different fields");
}

}  // namespace

const FieldSpec* field_prime(uint32_t p) {
  if (!is_prime_u32(p)) throw std::invalid_argument("characteristic must be prime");
  if (p > 65521) throw std::invalid_argument("characteristic too large for this library");
  FieldSpec s;
  s.p = p;
  s.n = 1;
  s.q = p;
  return intern(s);
}

const FieldSpec* field_ext(uint32_t p, uint32_t c0, uint32_t c1) {
  if (!is_prime_u32(p)) throw std::invalid_argument("characteristic must be prime");
  if (p > 65521) throw std::invalid_argument("characteristic too large for this library");
  c0 %= p;
  c1 %= p;
  // Irreducibility of the monic quadratic u^2 + c1 u + c0: no root in F_p.
  for (uint32_t x = 0; x < p; ++x) {
    uint64_t val = ((uint64_t)x * x + (uint64_t)c1 * x + c0) % p;
    if (val == 0) throw std::invalid_argument("extension modulus is reducible over F_p");
  }
  FieldSpec s;
  s.p = p;
  s.n = 2;
  s.q = (uint64_t)p * p;
  s.mod0 = c0;
  s.mod1 = c1;
  return intern(s);
}

const FieldSpec* field_gf4() { return field_ext(2, 1, 1); }

const FieldSpec* field_quadratic_ext(uint32_t p) {
  if (p == 2) return field_gf4();
  // u^2 - a with a the first quadratic non-residue, scanning from 2.
  for (uint32_t a = 2; a < p; ++a) {
    bool residue = false;
    for (uint32_t x = 1; x <= p / 2 && !residue; ++x)
      if ((uint64_t)x * x % p == a) residue = true;
    if (!residue) return field_ext(p, p - a, 0);
  }
  throw std::logic_error("no quadratic non-residue found");  // unreachable for odd prime p
}

Fe fe_from_int(const FieldSpec& F, long long v) { return Fe{mod_ll(v, F.p), 0}; }

Fe fe_from_ratio(const FieldSpec& F, long long num, long long den) {
  uint32_t d = mod_ll(den, F.p);
  if (d == 0) throw std::domain_error("denominator divisible by the characteristic");
  uint32_t n = mod_ll(num, F.p);
  return Fe{(uint32_t)((uint64_t)n * inv_mod(d, F.p) % F.p), 0};
}

Fe fe_add(const FieldSpec& F, const Fe& a, const Fe& b) {
  Fe r;
  r[0] = a[0] + b[0];
  if (r[0] >= F.p) r[0] -= F.p;
  r[1] = a[1] + b[1];
  if (r[1] >= F.p) r[1] -= F.p;
  return r;
}

Fe fe_sub(const FieldSpec& F, const Fe& a, const Fe& b) {
  Fe r;
  r[0] = a[0] >= b[0] ? a[0] - b[0] : a[0] + F.p - b[0];
  r[1] = a[1] >= b[1] ? a[1] - b[1] : a[1] + F.p - b[1];
  return r;
}

Fe fe_neg(const FieldSpec& F, const Fe& a) {
  Fe r;
  r[0] = a[0] ? F.p - a[0] : 0;
  r[1] = a[1] ? F.p - a[1] : 0;
  return r;
}

Fe fe_mul(const FieldSpec& F, const Fe& a, const Fe& b) {
  if (F.n == 1) return Fe{(uint32_t)((uint64_t)a[0] * b[0] % F.p), 0};
  // (a0 + a1 u)(b0 + b1 u) with u^2 = -mod1*u - mod0
  uint64_t p = F.p;
  uint64_t c0 = (uint64_t)a[0] * b[0] % p;
  uint64_t c1 = ((uint64_t)a[0] * b[1] + (uint64_t)a[1] * b[0]) % p;
  uint64_t c2 = (uint64_t)a[1] * b[1] % p;
  // fold c2*u^2
  uint64_t r0 = (c0 + (p - F.mod0 % p) * c2) % p;
  uint64_t r1 = (c1 + (p - F.mod1 % p) * c2) % p;
  return Fe{(uint32_t)r0, (uint32_t)r1};
}

Fe fe_inv(const FieldSpec& F, const Fe& a) {
  if (fe_is_zero(a)) throw std::domain_error("inverse of zero");
  if (F.n == 1) return Fe{inv_mod(a[0], F.p), 0};
  // Solve (a0 + a1 u)(x + y u) = 1 through the 2x2 linear system; the
  // determinant is the norm a0^2 - mod1 a0 a1 + mod0 a1^2, nonzero because
  // the modulus is irreducible.
  uint64_t p = F.p;
  uint64_t a0 = a[0], a1 = a[1];
  uint64_t t = (a0 + (p - F.mod1 % p) * a1) % p;        // a0 - mod1*a1
  uint64_t det = (a0 * t + (uint64_t)F.mod0 * (a1 * a1 % p)) % p;
  uint64_t dinv = inv_mod((uint32_t)det, F.p);
  uint64_t x = t * dinv % p;
  uint64_t y = (p - a1 % p) * dinv % p;
  return Fe{(uint32_t)x, (uint32_t)(y % p)};
}

Fe fe_div(const FieldSpec& F, const Fe& a, const Fe& b) { return fe_mul(F, a, fe_inv(F, b)); }

Fe fe_pow(const FieldSpec& F, Fe a, uint64_t e) {
  Fe r = fe_from_int(F, 1);
  while (e) {
    if (e & 1) r = fe_mul(F, r, a);
    a = fe_mul(F, a, a);
    e >>= 1;
  }
  return r;
}

Fe fe_frobenius(const FieldSpec& F, const Fe& a) { return fe_pow(F, a, F.p); }

Fe fe_binomial(const FieldSpec& F, uint64_t n, uint64_t k) {
  if (k > n) return kFeZero;
  uint32_t p = F.p;
  // Lucas: multiply C(n_i, k_i) over base-p digits; each digit binomial is
  // computed from factorials below p.
  std::vector<uint32_t> fact(p);
  fact[0] = 1;
  for (uint32_t i = 1; i < p; ++i) fact[i] = (uint32_t)((uint64_t)fact[i - 1] * i % p);
  uint64_t result = 1;
  while (n || k) {
    uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return kFeZero;
    uint64_t c = fact[nd];
    c = c * inv_mod(fact[kd], p) % p;
    c = c * inv_mod(fact[nd - kd], p) % p;
    result = result * c % p;
    n /= p;
    k /= p;
  }
  return Fe{(uint32_t)result, 0};
}

std::optional<Fe> fe_sqrt(const FieldSpec& F, const Fe& a) {
  for (uint64_t idx = 0; idx < F.q; ++idx) {
    Fe r = fe_from_index(F, idx);
    if (fe_mul(F, r, r) == a) return r;  // enumeration order is the lexicographic tie-break
  }
  return std::nullopt;
}

Fe fe_from_index(const FieldSpec& F, uint64_t idx) {
  return Fe{(uint32_t)(idx % F.p), (uint32_t)(idx / F.p % F.p)};
}

uint64_t fe_index(const FieldSpec& F, const Fe& a) { return a[0] + (uint64_t)a[1] * F.p; }

std::string fe_to_string(const FieldSpec& F, const Fe& a) {
  if (F.n == 1 || a[1] == 0) return std::to_string(a[0]);
  std::string s;
  if (a[1] != 1) s += std::to_string(a[1]);
  s += "u";
  if (a[0] != 0) s += "+" + std::to_string(a[0]);
  return s;
}

FieldElement field_add(const FieldElement& a, const FieldElement& b) {
  check_same(a.spec, b.spec);
  return {a.spec, fe_add(*a.spec, a.v, b.v)};
}

FieldElement field_mul(const FieldElement& a, const FieldElement& b) {
  check_same(a.spec, b.spec);
  return {a.spec, fe_mul(*a.spec, a.v, b.v)};
}

FieldElement field_neg(const FieldElement& a) { return {a.spec, fe_neg(*a.spec, a.v)}; }

FieldElement field_inv(const FieldElement& a) { return {a.spec, fe_inv(*a.spec, a.v)}; }

FieldElement from_rational_literal(long long num, long long den, const FieldSpec* spec) {
  return {spec, fe_from_ratio(*spec, num, den)};
}

FieldElement binomial_mod(uint64_t n, uint64_t k, const FieldSpec* spec) {
  return {spec, fe_binomial(*spec, n, k)};
}

std::optional<FieldElement> field_sqrt(const FieldElement& a) {
  auto r = fe_sqrt(*a.spec, a.v);
  if (!r) return std::nullopt;
  return FieldElement{a.spec, *r};
}

}  // namespace hqcf
