#include "hqcf/hyperq.hpp"

#include <chrono>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hqcf {

namespace {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

RationalFunc rf_int(const FieldSpec* spec, long long v) {
  return RationalFunc::from_fe(spec, fe_from_int(*spec, v));
}

RationalFunc rf_ratio(const FieldSpec* spec, long long num, long long den) {
  return RationalFunc::from_fe(spec, fe_from_ratio(*spec, num, den));
}

}  // namespace

HyperParams make_hyper_params(uint32_t p, uint32_t k, uint32_t l, std::vector<Fe> lambdas, Fe u1,
                              Fe u2) {
  if (!is_prime_u32(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (!(k >= 1 && 2 * k < p)) throw std::invalid_argument("k must satisfy 1 <= k < p/2");
  if (l < 1) throw std::invalid_argument("l must be at least 1");
  if (lambdas.size() != l) throw std::invalid_argument("expected l lambda constants");
  for (const Fe& x : lambdas)
    if (fe_is_zero(x)) throw std::invalid_argument("lambda constants must be nonzero");
  if (fe_is_zero(u1) || fe_is_zero(u2)) throw std::invalid_argument("u1, u2 must be nonzero");
  HyperParams h;
  h.p = p;
  h.k = k;
  h.l = l;
  h.lambdas = std::move(lambdas);
  h.u1 = u1;
  h.u2 = u2;
  h.spec = field_prime(p);
  return h;
}

bool is_hyperquadratic_witness(const LaurentSeries& alpha, uint64_t r, const TPoly& A,
                               const TPoly& B, const TPoly& C, const TPoly& D) {
  if (A.is_zero() && B.is_zero() && C.is_zero() && D.is_zero())
    throw std::invalid_argument("witness (A,B,C,D) must not be all zero");
  LaurentSeries ar = series_frobenius(alpha, r);
  // alpha (C alpha^r + D) - (A alpha^r + B)
  LaurentSeries lhs = series_mul(
      alpha, series_add(series_mul(LaurentSeries::from_tpoly(C), ar), LaurentSeries::from_tpoly(D)));
  LaurentSeries rhs =
      series_add(series_mul(LaurentSeries::from_tpoly(A), ar), LaurentSeries::from_tpoly(B));
  LaurentSeries diff = series_sub(lhs, rhs);
  if (diff.is_zero_exact()) return true;
  if (!diff.window_zero()) return false;
  // all certified coefficients vanish; make sure the window is meaningful
  long long certified_top = diff.floor();
  long long alpha_hi = alpha.window_zero() ? 0 : alpha.hi();
  if (certified_top > (long long)(r + 1) * std::max<long long>(alpha_hi, 1))
    throw PrecisionError("window too small to certify any coefficient of the witness relation");
  return true;
}

std::vector<Fe> v_sequence(uint32_t p, uint32_t k) {
  if (!is_prime_u32(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (!(k >= 1 && 2 * k < p)) throw std::invalid_argument("k must satisfy 1 <= k < p/2");
  const FieldSpec& F = *field_prime(p);
  std::vector<Fe> v(2 * k);
  v[0] = fe_from_int(F, 2LL * k - 1);
  for (uint32_t i = 1; i <= 2 * k - 1; ++i) {
    // v_{i+1} = (2k-2i-1)(2k-2i+1) / (i (2k-i) v_i)
    long long a = 2LL * k - 2LL * i - 1;
    long long b = 2LL * k - 2LL * i + 1;
    Fe num = fe_mul(F, fe_from_int(F, a), fe_from_int(F, b));
    Fe den = fe_mul(F, fe_from_int(F, i), fe_from_int(F, 2LL * k - i));
    v[i] = fe_div(F, fe_div(F, num, den), v[i - 1]);
  }
  for (const Fe& x : v)
    if (fe_is_zero(x)) throw std::logic_error("v-sequence produced a zero entry");
  return v;
}

TPoly K_continuant(uint32_t p, uint32_t k, uint32_t m, uint32_t n) {
  const FieldSpec* spec = field_prime(p);
  if (m == 1 && n == 0) return TPoly::from_int(spec, 1);
  if (!(1 <= m && m <= n && n <= 2 * k)) throw std::invalid_argument("K indices out of range");
  std::vector<Fe> v = v_sequence(p, k);
  std::vector<TPoly> xs;
  xs.reserve(n - m + 1);
  for (uint32_t i = m; i <= n; ++i) xs.push_back(TPoly::monomial(spec, v[i - 1], 1));
  return continuant(xs);
}

std::vector<TPoly> A_sequence(uint32_t p, uint32_t k, uint32_t m_max) {
  const FieldSpec* spec = field_prime(p);
  std::vector<TPoly> seq;
  seq.reserve(m_max + 1);
  seq.push_back(TPoly::variable(spec));
  TPoly base = TPoly(spec, {fe_from_int(*spec, -1), kFeZero, fe_from_int(*spec, 1)});  // T^2 - 1
  TPoly den = base.pow(k);
  for (uint32_t m = 0; m < m_max; ++m) {
    TPoly q = tpoly_divmod(seq.back().pow_char(), den).first;
    // degree law: deg A_{m+1} = p deg A_m - 2k
    if (q.is_zero() || q.degree() != (long long)p * seq.back().degree() - 2 * (long long)k)
      throw std::logic_error("A-sequence degree law violated");
    seq.push_back(std::move(q));
  }
  return seq;
}

int padic_valuation(uint64_t m, uint64_t n) {
  if (m < 2) throw std::invalid_argument("valuation base must be at least 2");
  if (n == 0) throw std::invalid_argument("valuation of zero");
  int v = 0;
  while (n % m == 0) {
    n /= m;
    ++v;
  }
  return v;
}

int i_of_n(uint32_t j, uint64_t n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  return padic_valuation(4ull * j + 1, 4ull * n - 1);
}

bool condition_star(const HyperParams& params) {
  const FieldSpec& F = *params.spec;
  uint32_t k = params.k;
  std::vector<Fe> v = v_sequence(params.p, k);
  std::vector<Fe> bracket(params.lambdas);
  // last entry: lambda_l - 2k (u1/u2) (v_{2k}/v_1)
  Fe corr = fe_mul(F, fe_from_int(F, 2LL * k),
                   fe_mul(F, fe_div(F, params.u1, params.u2), fe_div(F, v[2 * k - 1], v[0])));
  bracket.back() = fe_sub(F, bracket.back(), corr);
  Fe lhs = eval_cf_const(F, bracket);
  // k 2^{1-2k} C(2k,k) u2
  Fe rhs = fe_mul(F, fe_from_int(F, k), fe_inv(F, fe_pow(F, fe_from_int(F, 2), 2 * k - 1)));
  rhs = fe_mul(F, rhs, fe_binomial(F, 2 * k, k));
  rhs = fe_mul(F, rhs, params.u2);
  return lhs == rhs;
}

XPoly build_E_equation(const HyperParams& params) {
  const FieldSpec* spec = params.spec;
  uint32_t l = params.l, k = params.k;
  // convergents of [lambda_1 T, ..., lambda_l T]
  std::vector<TPoly> lam;
  lam.reserve(l);
  for (const Fe& x : params.lambdas) lam.push_back(TPoly::monomial(spec, x, 1));
  std::span<const TPoly> ls(lam);
  TPoly P_l = continuant(ls);
  TPoly P_lm1 = l > 1 ? continuant(ls.first(l - 1)) : TPoly::from_int(spec, 1);
  TPoly Q_l = l > 1 ? continuant(ls.subspan(1)) : TPoly::from_int(spec, 1);
  TPoly Q_lm1 = l > 2 ? continuant(ls.subspan(1, l - 2))
                      : (l == 2 ? TPoly::from_int(spec, 1) : TPoly::zero(spec));
  TPoly K1 = K_continuant(params.p, k, 1, 2 * k);
  TPoly K0 = 2 * k >= 2 ? K_continuant(params.p, k, 1, 2 * k - 1) : TPoly::monomial(spec, fe_from_int(*spec, 1), 1);
  // Substituting alpha_{l+1} = (alpha^p - u2 K0) / (u1 K1) into
  // alpha (Q_l alpha_{l+1} + Q_{l-1}) = P_l alpha_{l+1} + P_{l-1} gives
  // Q_l X^{p+1} - P_l X^p + (u1 K1 Q_{l-1} - u2 K0 Q_l) X + (u2 K0 P_l - u1 K1 P_{l-1}).
  TPoly u1K1 = K1.scaled(params.u1);
  TPoly u2K0 = K0.scaled(params.u2);
  TPoly W = u1K1 * Q_lm1 - u2K0 * Q_l;
  TPoly Z = u2K0 * P_l - u1K1 * P_lm1;
  std::vector<RationalFunc> coeffs((size_t)params.p + 2, RationalFunc::zero(spec));
  coeffs[params.p + 1] = RationalFunc(Q_l);
  coeffs[params.p] = RationalFunc(-P_l);
  coeffs[1] = RationalFunc(W);
  coeffs[0] = RationalFunc(Z);
  return XPoly(spec, std::move(coeffs));
}

XPoly rqe_P(uint32_t p) {
  if (!is_prime_u32(p) || p <= 3) throw std::invalid_argument("p must be a prime greater than 3");
  const FieldSpec* spec = field_prime(p);
  std::vector<RationalFunc> c(5, RationalFunc::zero(spec));
  c[4] = rf_ratio(spec, 9, 32);
  c[3] = RationalFunc(TPoly::monomial(spec, fe_from_int(*spec, -1), 1));
  c[2] = rf_int(spec, 1);
  c[0] = rf_ratio(spec, -8, 27);
  return XPoly(spec, std::move(c));
}

RqeTheoremObservation rqe_theorem_observation(uint32_t p) {
  const FieldSpec& F = *field_prime(p);
  RqeTheoremObservation obs;
  obs.raw_value = fe_add(F, fe_mul(F, fe_from_int(F, 12), fe_from_ratio(F, 9, 32)),
                         fe_from_int(F, 1));
  obs.raw_holds = fe_is_zero(obs.raw_value);
  // after dividing the quartic by its constant -8/27: A' = -243/256, C' = -27/8
  Fe a2 = fe_from_ratio(F, -243, 256);
  Fe c2 = fe_from_ratio(F, -27, 8);
  obs.rescaled_holds =
      fe_is_zero(fe_add(F, fe_mul(F, fe_from_int(F, 12), a2), fe_mul(F, c2, c2)));
  if (!obs.rescaled_holds) throw std::logic_error("rescaled hypothesis must hold identically");
  return obs;
}

std::pair<Fe, Fe> rqe_epsilons(uint32_t p) {
  if (!is_prime_u32(p) || p <= 3 || p % 3 != 1)
    throw std::invalid_argument("p must be a prime with p = 1 mod 3, p > 3");
  const FieldSpec& F = *field_prime(p);
  uint32_t j = (p - 1) / 6;
  std::vector<Fe> v = v_sequence(p, 2 * j);
  Fe eps = fe_div(F, fe_from_int(F, 32), fe_mul(F, fe_from_int(F, 9), v[j]));  // v_{j+1} = v[j]
  // bracket [v_{j+1}, ..., v_{4j-1}, 3 v_{4j} / 5]
  std::vector<Fe> bracket;
  for (uint32_t i = j + 1; i <= 4 * j - 1; ++i) bracket.push_back(v[i - 1]);
  bracket.push_back(fe_div(F, fe_mul(F, fe_from_int(F, 3), v[4 * j - 1]), fe_from_int(F, 5)));
  Fe br = eval_cf_const(F, bracket);
  Fe sign16 = fe_pow(F, fe_from_int(F, -16), j + 1);
  Fe den = fe_mul(F, fe_mul(F, fe_from_int(F, 3), v[j]), fe_binomial(F, 4 * j, 2 * j));
  Fe eps_prime = fe_mul(F, fe_div(F, sign16, den), br);
  if (fe_is_zero(eps) || fe_is_zero(eps_prime))
    throw std::logic_error("epsilons must be nonzero");
  return {eps, eps_prime};
}

XPoly rqe_H(uint32_t p) {
  const FieldSpec* spec = field_prime(p);
  uint32_t j = (p - 1) / 6;
  if (p % 3 != 1 || p <= 3) throw std::invalid_argument("p must be = 1 mod 3 and > 3");
  auto [eps, eps_prime] = rqe_epsilons(p);
  uint32_t k = 2 * j;
  TPoly Kj2_4j = K_continuant(p, k, j + 2, 4 * j);
  TPoly Kj1_4j = K_continuant(p, k, j + 1, 4 * j);
  TPoly K1_j = K_continuant(p, k, 1, j);
  TPoly K1_jm1 = j >= 2 ? K_continuant(p, k, 1, j - 1) : TPoly::from_int(spec, 1);  // K_{1,0} = 1
  const FieldSpec& F = *spec;
  std::vector<RationalFunc> c((size_t)p + 2, RationalFunc::zero(spec));
  c[p + 1] = RationalFunc(Kj2_4j);
  c[p] = RationalFunc(Kj1_4j.scaled(fe_neg(F, eps)));
  c[1] = RationalFunc(K1_j.scaled(eps_prime));
  c[0] = RationalFunc(K1_jm1.scaled(fe_mul(F, eps_prime, eps)));
  return XPoly(spec, std::move(c));
}

RqeData rqe_data(uint32_t p) {
  RqeData d;
  d.p = p;
  d.j = (p - 1) / 6;
  d.spec = field_prime(p);
  d.v = v_sequence(p, 2 * d.j);
  auto [eps, epsp] = rqe_epsilons(p);
  d.epsilon = eps;
  d.epsilon_prime = epsp;
  d.P = rqe_P(p);
  d.H = rqe_H(p);
  d.observation = rqe_theorem_observation(p);
  const FieldSpec& F = *d.spec;
  // lambda_i = v_{j+i} eps^{(-1)^{i+1}}, u2 = (-1)^j eps', u1 = u2 eps^{(-1)^{j+1}}
  std::vector<Fe> lambdas(3 * d.j);
  Fe eps_inv = fe_inv(F, eps);
  for (uint32_t i = 1; i <= 3 * d.j; ++i)
    lambdas[i - 1] = fe_mul(F, d.v[d.j + i - 1], (i % 2 == 1) ? eps : eps_inv);
  Fe u2 = (d.j % 2 == 0) ? epsp : fe_neg(F, epsp);
  Fe u1 = fe_mul(F, u2, (d.j % 2 == 1) ? eps : eps_inv);  // exponent (-1)^{j+1}
  d.params = make_hyper_params(p, 2 * d.j, 3 * d.j, std::move(lambdas), u1, u2);
  return d;
}

DivisionCheck rqe_divides(uint32_t p) {
  DivisionCheck r;
  XPoly H = rqe_H(p);
  XPoly P = rqe_P(p);
  auto [q, rem] = xpoly_divmod(H, P);
  r.quotient = q;
  r.remainder = rem;
  r.divides = rem.is_zero();
  r.remul_ok = r.divides && (q * P == H);
  return r;
}

ScanReport scan_primes(uint32_t p_max, bool parallel) {
  ScanReport report;
  report.p_max = p_max;
  std::vector<uint32_t> primes;
  for (uint32_t p = 7; p <= p_max; ++p)
    if (p % 3 == 1 && is_prime_u32(p)) primes.push_back(p);
  report.entries.resize(primes.size());

  auto run_one = [&](size_t i) {
    auto t0 = std::chrono::steady_clock::now();
    ScanEntry e;
    e.p = primes[i];
    DivisionCheck c = rqe_divides(primes[i]);
    e.divides = c.divides;
    e.remul_ok = c.remul_ok;
    e.raw_hypothesis_holds = rqe_theorem_observation(primes[i]).raw_holds;
    auto t1 = std::chrono::steady_clock::now();
    e.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    report.entries[i] = e;  // slot per prime: deterministic order
  };

#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < (long long)primes.size(); ++i) run_one((size_t)i);
  } else
#endif
  {
    (void)parallel;
    for (size_t i = 0; i < primes.size(); ++i) run_one(i);
  }

  for (const ScanEntry& e : report.entries)
    if (!e.divides || !e.remul_ok) report.all_ok = false;
  return report;
}

Theorem1Result theorem1_solve(const RationalFunc& A, const RationalFunc& B,
                              const RationalFunc& C, const FieldSpec* spec) {
  const FieldSpec& F = *spec;
  if (F.p <= 3) throw std::invalid_argument("p must be greater than 3");
  // 12A + C^2 = 0, exactly
  RationalFunc hyp = rf_int(spec, 12) * A + C * C;
  if (!hyp.is_zero()) throw std::invalid_argument("hypothesis 12A + C^2 = 0 fails");
  if (A.is_zero()) throw std::invalid_argument("A = 0: the quartic degenerates");

  XPoly P(spec, {rf_int(spec, 1), rf_int(spec, 0), C, B, A});
  XPoly Pd = P.derivative();
  XPoly g = xpoly_gcd(P, Pd);
  if (!g.is_zero() && g.degree() >= 1)
    throw std::invalid_argument("P must be squarefree in X");

  Theorem1Result result;
  result.r = F.p % 3 == 1 ? F.p : (uint64_t)F.p * F.p;

  XPoly Xr = xpoly_modpow_X(P, result.r);
  XPoly Xr1 = xpoly_mod(Xr * XPoly::variable(spec), P);

  // columns: X^{r+1} mod P, X^r mod P, X, 1  (each reduced, degree <= 3)
  std::vector<std::vector<RationalFunc>> M(4, std::vector<RationalFunc>(4, RationalFunc::zero(spec)));
  for (int row = 0; row < 4; ++row) {
    M[row][0] = Xr1.coeff(row);
    M[row][1] = Xr.coeff(row);
    M[row][2] = row == 1 ? rf_int(spec, 1) : rf_int(spec, 0);
    M[row][3] = row == 0 ? rf_int(spec, 1) : rf_int(spec, 0);
  }
  // Gaussian elimination to find a kernel vector.
  std::vector<int> pivot_col_of_row(4, -1);
  std::vector<bool> col_used(4, false);
  int rank = 0;
  for (int col = 0; col < 4; ++col) {
    int prow = -1;
    for (int row = rank; row < 4; ++row)
      if (!M[row][col].is_zero()) {
        prow = row;
        break;
      }
    if (prow < 0) continue;
    std::swap(M[rank], M[prow]);
    RationalFunc inv = M[rank][col].inv();
    for (int c2 = 0; c2 < 4; ++c2) M[rank][c2] = M[rank][c2] * inv;
    for (int row = 0; row < 4; ++row) {
      if (row == rank || M[row][col].is_zero()) continue;
      RationalFunc f = M[row][col];
      for (int c2 = 0; c2 < 4; ++c2) M[row][c2] = M[row][c2] - f * M[rank][c2];
    }
    pivot_col_of_row[rank] = col;
    col_used[col] = true;
    ++rank;
    if (rank == 4) break;
  }
  if (rank == 4) {
    result.failure = "kernel is trivial: no nonzero (U,V,W,Z) exists";
    return result;
  }
  // free column -> kernel vector
  int free_col = 0;
  while (col_used[free_col]) ++free_col;
  std::vector<RationalFunc> kv(4, RationalFunc::zero(spec));
  kv[free_col] = rf_int(spec, 1);
  for (int row = 0; row < rank; ++row) {
    int pc = pivot_col_of_row[row];
    kv[pc] = -M[row][free_col];
  }
  // H = U X^{r+1} + V X^r + W X + Z
  std::vector<RationalFunc> hc(result.r + 2, RationalFunc::zero(spec));
  hc[result.r + 1] = kv[0];
  hc[result.r] = kv[1];
  hc[1] = kv[2];
  hc[0] = kv[3];
  XPoly H(spec, std::move(hc));
  if (H.is_zero()) {
    result.failure = "solver produced the zero polynomial";
    return result;
  }
  H = xpoly_primitive(H);
  // exact division re-verification
  auto [q, rem] = xpoly_divmod(H, P);
  if (!rem.is_zero() || !(q * P == H)) {
    result.failure = "division re-verification failed";
    return result;
  }
  result.H = H;
  return result;
}

Expansion rqe_expand(uint32_t p, size_t terms) {
  XPoly P = rqe_P(p);
  const FieldSpec* spec = P.spec();
  LaurentSeries seed = LaurentSeries::monomial(spec, fe_from_ratio(*spec, 32, 9), 1);
  size_t precision = std::max<size_t>(64, 4 * terms);
  for (int tries = 0; tries < 16; ++tries) {
    LaurentSeries root = newton_root(P, seed, precision);
    Expansion e = expand_series(root, terms);
    e.algebraic_degree = 4;
    if (e.quotients.size() >= terms || e.stopped == StopReason::Finite) return e;
    precision *= 2;
  }
  throw PrecisionError("failed to certify the requested number of quotients");
}

PatternReport certify_pattern(uint32_t p, const Expansion& expansion) {
  RqeData d = rqe_data(p);
  const FieldSpec& F = *d.spec;
  PatternReport rep;
  rep.p = p;
  size_t count = expansion.certified;
  rep.checked = count;
  if (count == 0) throw std::invalid_argument("empty expansion");

  int max_i = 0;
  for (uint64_t n = 1; n <= count; ++n) max_i = std::max(max_i, i_of_n(d.j, n));
  std::vector<TPoly> A = A_sequence(p, 2 * d.j, (uint32_t)max_i);

  rep.all_shapes_ok = true;
  rep.all_degrees_ok = true;
  for (uint64_t n = 1; n <= count; ++n) {
    const TPoly& a = expansion.quotients[n - 1];
    PatternEntry e;
    e.n = n;
    e.i = i_of_n(d.j, n);
    // definitional sanity of the valuation
    uint64_t base = 4ull * d.j + 1, x = 4ull * n - 1, pw = 1;
    for (int t = 0; t < e.i; ++t) pw *= base;
    if (x % pw != 0 || (x / pw) % base == 0)
      throw std::logic_error("valuation definition violated");
    long long pi = 1;
    for (int t = 0; t < e.i; ++t) pi *= p;
    e.expected_degree = (pi + 2) / 3;
    e.actual_degree = a.is_zero() ? -1 : a.degree();
    e.degree_ok = e.actual_degree == e.expected_degree;
    // shape: a = lambda * A_{i(n)} for a nonzero constant lambda
    const TPoly& An = A[(size_t)e.i];
    if (!a.is_zero() && !An.is_zero() && a.degree() == An.degree()) {
      Fe lambda = fe_div(F, a.lc(), An.lc());
      e.shape_ok = !fe_is_zero(lambda) && An.scaled(lambda) == a;
      e.lambda = lambda;
    } else {
      e.shape_ok = false;
    }
    if (!e.shape_ok) rep.all_shapes_ok = false;
    if (!e.degree_ok) rep.all_degrees_ok = false;
    if ((!e.shape_ok || !e.degree_ok) && rep.first_mismatch.empty())
      rep.first_mismatch = "n=" + std::to_string(n) + ": expected lambda*A_" + std::to_string(e.i) +
                           " of degree " + std::to_string(e.expected_degree) + ", found " +
                           a.to_string();
    rep.entries.push_back(std::move(e));
  }

  // initial data: lambda_i for i <= 3j must match the constructed tuple
  rep.lambda_law_ok = count >= d.params.l;
  for (uint32_t i = 1; i <= d.params.l && rep.lambda_law_ok; ++i) {
    if (!(rep.entries[i - 1].shape_ok && rep.entries[i - 1].lambda == d.params.lambdas[i - 1]))
      rep.lambda_law_ok = false;
  }
  // u-laws are true by construction of params; re-derive and compare
  Fe u2 = (d.j % 2 == 0) ? d.epsilon_prime : fe_neg(F, d.epsilon_prime);
  Fe u1 = fe_mul(F, u2, (d.j % 2 == 1) ? d.epsilon : fe_inv(F, d.epsilon));
  rep.u_law_ok = u2 == d.params.u2 && u1 == d.params.u1;
  try {
    rep.condition_star_ok = condition_star(d.params);
  } catch (const BracketZeroError&) {
    rep.condition_star_ok = false;
    if (rep.first_mismatch.empty())
      rep.first_mismatch = "condition (*) bracket has a zero denominator";
  }
  if (!rep.ok() && rep.first_mismatch.empty()) rep.first_mismatch = "initial-data law failed";
  return rep;
}

GrowthCheck perfect_growth_check(uint32_t p, uint32_t k, uint32_t l, const Expansion& e) {
  GrowthCheck g;
  g.target = make_rat((long long)p - 2LL * k - 1, l);
  GrowthStat s = growth_stat(e);
  g.window_valid = s.window_valid;
  if (s.window_valid) {
    g.window_sup = s.window_sup;
    g.attained = g.window_sup == g.target;
  }
  return g;
}

MillsRobbinsResult mills_robbins_check(size_t precision) {
  if (precision < 50) throw std::invalid_argument("precision below 50 is rejected");
  MillsRobbinsResult res;
  const FieldSpec* F169 = field_quadratic_ext(13);
  const FieldSpec& F = *F169;
  // v with v^2 = -5 (a non-residue mod 13, like 5 itself); the displayed
  // scaling 5 maps the root to the companion quartic instead.
  res.scaling_squared = -5;
  auto v = fe_sqrt(F, fe_from_int(F, -5));
  if (!v) throw std::logic_error("-5 must be a square in the quadratic extension");

  // quartic root over the extension; coefficients stay in the prime field
  XPoly P = rqe_P(13);
  std::vector<RationalFunc> lifted;
  for (const auto& c : P.coeffs()) {
    TPoly num(F169, c.num().coeffs());
    TPoly den(F169, c.den().coeffs());
    lifted.emplace_back(std::move(num), std::move(den));
  }
  XPoly P169(F169, std::move(lifted));
  LaurentSeries seed = LaurentSeries::monomial(F169, fe_from_ratio(F, 32, 9), 1);
  LaurentSeries alpha = newton_root(P169, seed, precision);

  LaurentSeries gamma = series_scale(series_scale_T(alpha, *v), *v);  // v * alpha(vT)
  LaurentSeries beta = series_inv(gamma);

  res.beta_in_prime_field = true;
  for (long long t = beta.floor(); t <= beta.hi(); ++t)
    if (beta.at(t)[1] != 0) res.beta_in_prime_field = false;

  // residual of X^4 + X^2 - T X + 1 at beta
  XPoly Q(F169, {rf_int(F169, 1), RationalFunc(TPoly::monomial(F169, fe_from_int(F, -1), 1)),
                 rf_int(F169, 1), rf_int(F169, 0), rf_int(F169, 1)});
  LaurentSeries residual = series_eval_xpoly(Q, beta);
  bool vanishes = residual.is_zero_exact() ||
                  (residual.window_zero() && residual.floor() <= -(long long)(precision / 2));
  res.ok = vanishes && res.beta_in_prime_field;
  return res;
}

}  // namespace hqcf
