#include "hqcf/contfrac.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hqcf {

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::Finite: return "finite";
    case StopReason::Precision: return "precision";
    case StopReason::Budget: return "budget";
  }
  return "?";
}

void Expansion::recompute_degrees() {
  degrees.clear();
  degrees.reserve(quotients.size());
  for (const TPoly& q : quotients) degrees.push_back(q.is_zero() ? 0 : q.degree());
}

TPoly continuant(std::span<const TPoly> xs) {
  if (xs.empty()) throw std::invalid_argument("continuant of an empty list needs a field");
  const FieldSpec* spec = xs[0].spec();
  // suffix recursion: S_i = x_i S_{i+1} + S_{i+2}
  TPoly s1 = TPoly::from_int(spec, 1);  // S_{n+1} = <>
  TPoly s0 = xs.back();                 // S_n
  for (size_t i = xs.size() - 1; i-- > 0;) {
    TPoly next = xs[i] * s0 + s1;
    s1 = std::move(s0);
    s0 = std::move(next);
  }
  return s0;
}

Fe continuant_const(const FieldSpec& F, std::span<const Fe> xs) {
  Fe s1 = fe_from_int(F, 1);
  if (xs.empty()) return s1;
  Fe s0 = xs.back();
  for (size_t i = xs.size(); i-- > 1;) {
    Fe next = fe_add(F, fe_mul(F, xs[i - 1], s0), s1);
    s1 = s0;
    s0 = next;
  }
  return s0;
}

RationalFunc eval_cf(std::span<const TPoly> quotients) {
  if (quotients.empty()) throw std::invalid_argument("empty continued fraction");
  const FieldSpec* spec = quotients[0].spec();
  if (quotients.size() == 1) return RationalFunc(quotients[0]);
  TPoly num = continuant(quotients);
  TPoly den = continuant(quotients.subspan(1));
  if (den.is_zero()) throw std::domain_error("zero denominator continuant");
  (void)spec;
  return RationalFunc(num, den);
}

Fe eval_cf_const(const FieldSpec& F, std::span<const Fe> xs) {
  if (xs.empty()) throw std::invalid_argument("empty continued fraction");
  if (xs.size() == 1) return xs[0];
  Fe den = continuant_const(F, xs.subspan(1));
  if (fe_is_zero(den)) throw BracketZeroError("zero denominator in a constant continued fraction");
  return fe_div(F, continuant_const(F, xs), den);
}

Expansion expand_rational(const RationalFunc& f) {
  const FieldSpec* spec = f.spec();
  Expansion e;
  e.spec = spec;
  e.stopped = StopReason::Finite;
  e.algebraic_degree = 1;
  TPoly num = f.num(), den = f.den();
  // Euclid; the quotient of step i >= 1 has positive degree automatically
  // because remainders strictly drop in degree.
  while (!den.is_zero()) {
    auto [q, r] = tpoly_divmod(num, den);
    e.quotients.push_back(q);
    num = std::move(den);
    den = std::move(r);
  }
  e.certified = e.quotients.size();
  e.recompute_degrees();
  return e;
}

Expansion expand_series(const LaurentSeries& alpha, size_t max_terms) {
  Expansion e;
  e.spec = alpha.spec();
  e.stopped = StopReason::Budget;
  LaurentSeries cur = alpha;
  while (e.quotients.size() < max_terms) {
    if (!cur.exact() && cur.floor() > 0) {
      e.stopped = StopReason::Precision;
      break;
    }
    auto [a, rest] = series_polypart(cur);
    if (!e.quotients.empty() && (a.is_zero() || a.degree() < 1)) {
      // cannot happen for certified tails (|tail| > 1); treat as exhaustion
      e.stopped = StopReason::Precision;
      break;
    }
    if (rest.is_zero_exact()) {
      e.quotients.push_back(a);
      e.stopped = StopReason::Finite;
      break;
    }
    if (rest.window_zero()) {
      // leading coefficient of the remainder is not certified nonzero
      e.stopped = StopReason::Precision;
      break;
    }
    e.quotients.push_back(a);
    cur = series_inv(rest);
  }
  e.certified = e.quotients.size();
  e.recompute_degrees();
  return e;
}

bool QuadTriple::operator<(const QuadTriple& o) const {
  if (!(A == o.A)) return A < o.A;
  if (!(B == o.B)) return B < o.B;
  return C < o.C;
}

XPoly QuadTriple::to_xpoly() const {
  const FieldSpec* spec = A.spec();
  return XPoly(spec, {RationalFunc(C), RationalFunc(B), RationalFunc(A)});
}

std::string QuadTriple::to_string() const {
  return "(" + A.to_string() + ", " + B.to_string() + ", " + C.to_string() + ")";
}

QuadTriple make_quad_triple(TPoly A, TPoly B, TPoly C) {
  if (A.is_zero()) throw std::domain_error("leading quadratic coefficient is zero (rational root)");
  const FieldSpec* spec = A.spec();
  // content-free
  TPoly g = A.monic();
  if (!B.is_zero()) g = tpoly_gcd(g, B);
  if (!C.is_zero()) g = tpoly_gcd(g, C);
  if (!g.is_constant()) {
    A = tpoly_divmod(A, g).first;
    B = tpoly_divmod(B, g).first;
    C = tpoly_divmod(C, g).first;
  }
  // global unit: make A monic
  Fe s = fe_inv(*spec, A.lc());
  return QuadTriple{A.scaled(s), B.scaled(s), C.scaled(s)};
}

bool quad_discriminant_is_square(const QuadTriple& t) {
  const FieldSpec& F = *t.spec();
  TPoly disc = t.B * t.B - TPoly::from_int(t.spec(), 4) * t.A * t.C;
  if (F.p == 2) return true;  // B^2 is always a square; the test is vacuous here
  return tpoly_is_square(disc);
}

QuadTriple quad_tail_step(const QuadTriple& t, const TPoly& q) {
  // alpha = q + 1/alpha' turns A a^2 + B a + C = 0 into
  // (A q^2 + B q + C) a'^2 + (2 A q + B) a' + A = 0.
  TPoly A2 = t.A * q * q + t.B * q + t.C;
  TPoly B2 = TPoly::from_int(t.spec(), 2) * t.A * q + t.B;
  TPoly C2 = t.A;
  if (A2.is_zero())
    throw std::domain_error("tail step degenerated: the root was rational");
  return make_quad_triple(std::move(A2), std::move(B2), std::move(C2));
}

namespace {

// |conjugate| < 1 certified from the series window: the conjugate of the
// tail is -B/A - tail, and the tail is reduced when every coefficient of
// the conjugate at exponents >= 0 vanishes.
bool certified_reduced(const QuadTriple& t, const LaurentSeries& tail) {
  if (tail.window_zero() || (!tail.exact() && tail.floor() > -1)) return false;
  RationalFunc trace(-t.B, t.A);
  long long rat_hi =
      trace.is_zero() ? 0 : (long long)trace.num().degree() - (long long)trace.den().degree();
  size_t terms = (size_t)std::max<long long>(rat_hi + 2, 2);
  LaurentSeries conj = series_sub(series_from_rational(trace, terms), tail);
  if (!conj.exact() && conj.floor() > 0) return false;
  if (conj.window_zero()) return true;
  return conj.hi() <= -1;
}

}  // namespace

QuadExpansion quad_expand(const QuadTriple& t0, const LaurentSeries& branch_seed,
                          const QuadOptions& opts) {
  const FieldSpec* spec = t0.spec();
  const FieldSpec& F = *spec;
  if (F.p != 2 && quad_discriminant_is_square(t0))
    throw std::invalid_argument("discriminant is a square: the triple has rational roots");

  size_t bound = opts.safety_bound;
  if (bound == 0) {
    TPoly disc = t0.B * t0.B - TPoly::from_int(spec, 4) * t0.A * t0.C;
    long long d = disc.is_zero() ? 1 : disc.degree();
    bound = (size_t)std::min<unsigned long long>(10ull * (unsigned long long)(d + 1) * F.q, 100000ull);
    bound = std::max<size_t>(bound, 64);
  }

  size_t precision = opts.initial_precision;
  LaurentSeries shadow = newton_root(t0.to_xpoly(), branch_seed, precision);

  QuadExpansion out;
  std::vector<TPoly> quotients;
  QuadTriple cur = t0;
  std::map<QuadTriple, size_t> seen;  // reduced states only

  auto replay = [&](size_t target_precision) {
    // recompute the current tail's shadow from scratch at higher precision
    LaurentSeries root = newton_root(t0.to_xpoly(), branch_seed, target_precision);
    for (const TPoly& q : quotients) {
      LaurentSeries rest = series_sub(root, LaurentSeries::from_tpoly(q));
      root = series_inv(rest);
    }
    return root;
  };

  auto refresh = [&]() {
    for (int tries = 0; tries < 24; ++tries) {
      precision *= 2;
      try {
        shadow = replay(precision);
        if (!shadow.window_zero() && shadow.floor() <= -2) return;
      } catch (const PrecisionError&) {
      }
    }
    throw PrecisionError("quadratic tail lost certification after refresh");
  };

  for (size_t step = 0; step < bound; ++step) {
    // make sure the shadow supports one more quotient extraction
    if (!shadow.exact() && (shadow.window_zero() || shadow.floor() > -2)) refresh();
    auto [a, rest] = series_polypart(shadow);
    if (rest.window_zero() && !rest.is_zero_exact()) {
      refresh();
      auto redo = series_polypart(shadow);
      a = redo.first;
      rest = redo.second;
      if (rest.window_zero() && !rest.is_zero_exact())
        throw PrecisionError("quadratic tail lost certification after refresh");
    }

    if (certified_reduced(cur, shadow)) {
      auto it = seen.find(cur);
      if (it != seen.end()) {
        size_t start = it->second;
        out.preperiod.assign(quotients.begin(), quotients.begin() + (long)start);
        out.period.assign(quotients.begin() + (long)start, quotients.end());
        return out;
      }
      seen.emplace(cur, quotients.size());
    }

    quotients.push_back(a);
    cur = quad_tail_step(cur, a);
    shadow = series_inv(rest);
  }
  throw std::runtime_error("no repetition within the safety bound (" + std::to_string(bound) +
                           " steps)");
}

QuadTriple periodic_to_equation(std::span<const TPoly> preperiod, std::span<const TPoly> period) {
  if (period.empty()) throw std::invalid_argument("empty period");
  const FieldSpec* spec = period[0].spec();
  for (const TPoly& q : period)
    if (q.is_zero() || q.degree() < 1)
      throw std::invalid_argument("period quotients must have positive degree");

  // Moebius matrix of one period via continuants:
  // M = [ <a_1..a_n>  <a_1..a_{n-1}> ; <a_2..a_n>  <a_2..a_{n-1}> ]
  TPoly m00 = continuant(period);
  TPoly m01 = period.size() > 1 ? continuant(period.first(period.size() - 1))
                                : TPoly::from_int(spec, 1);
  TPoly m10 = period.size() > 1 ? continuant(period.subspan(1)) : TPoly::from_int(spec, 1);
  TPoly m11 = period.size() > 2 ? continuant(period.subspan(1, period.size() - 2))
                                : (period.size() == 2 ? TPoly::from_int(spec, 1)
                                                      : TPoly::zero(spec));
  // fixed point: m10 b^2 + (m11 - m00) b - m01 = 0
  TPoly A = m10, B = m11 - m00, C = -m01;

  // transport through the preperiod: alpha = (P b + P') / (Q b + Q'),
  // so b = (Q' alpha - P') / (-Q alpha + P).
  if (!preperiod.empty()) {
    TPoly P = continuant(preperiod);
    TPoly Pp = preperiod.size() > 1 ? continuant(preperiod.first(preperiod.size() - 1))
                                    : TPoly::from_int(spec, 1);
    TPoly Q = preperiod.size() > 1 ? continuant(preperiod.subspan(1)) : TPoly::from_int(spec, 1);
    TPoly Qp = preperiod.size() > 2 ? continuant(preperiod.subspan(1, preperiod.size() - 2))
                                    : (preperiod.size() == 2 ? TPoly::from_int(spec, 1)
                                                             : TPoly::zero(spec));
    // b = (Qp x - Pp) / (-Q x + P)
    TPoly n1 = Qp, n0 = -Pp, d1 = -Q, d0 = P;
    TPoly NA = A * n1 * n1 + B * n1 * d1 + C * d1 * d1;
    TPoly NB = TPoly::from_int(spec, 2) * A * n1 * n0 + B * (n1 * d0 + n0 * d1) +
               TPoly::from_int(spec, 2) * C * d1 * d0;
    TPoly NC = A * n0 * n0 + B * n0 * d0 + C * d0 * d0;
    A = NA;
    B = NB;
    C = NC;
  }
  if (A.is_zero()) throw std::domain_error("degenerate (rational) fixed point");
  QuadTriple r = make_quad_triple(A, B, C);
  if (r.spec()->p != 2 && quad_discriminant_is_square(r))
    throw std::domain_error("degenerate (rational) fixed point");
  return r;
}

namespace {
long long gcd_ll(long long a, long long b) {
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}
}  // namespace

Rat64 make_rat(long long num, long long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = gcd_ll(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  return Rat64{num / g, den / g};
}

bool Rat64::operator<(const Rat64& o) const {
  return (__int128)num * o.den < (__int128)o.num * den;
}

GrowthStat growth_stat(const Expansion& e, size_t window_size) {
  if (e.certified < 2) throw std::invalid_argument("need at least two certified quotients");
  GrowthStat g;
  long long sum = 0;
  bool started = false;
  for (size_t n = 0; n + 1 < e.certified; ++n) {
    sum += e.degrees[n];
    if (sum == 0) continue;  // ratio undefined until the partial sums turn positive
    if (!started) {
      g.first_index = n;
      started = true;
    }
    g.ratios.push_back(make_rat(e.degrees[n + 1], sum));
  }
  if (g.ratios.empty()) return g;
  size_t count = g.ratios.size();
  size_t w = window_size == 0 ? count - std::max<size_t>(1, count / 8) : std::min(window_size, count);
  size_t begin = count - w;
  Rat64 sup = g.ratios[begin];
  for (size_t i = begin + 1; i < count; ++i)
    if (sup < g.ratios[i]) sup = g.ratios[i];
  g.window_sup = sup;
  g.window_begin = g.first_index + begin;
  g.window_valid = true;
  return g;
}

}  // namespace hqcf
