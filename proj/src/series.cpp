#include "hqcf/series.hpp"

#include <algorithm>

namespace hqcf {

namespace {
void check_same(const FieldSpec* a, const FieldSpec* b) {
  if (a != b) throw FieldMismatchError("series belong to different fields");
}

bool is_char_power(uint32_t p, uint64_t e) {
  if (e == 0) return false;
  while (e % p == 0) e /= p;
  return e == 1;
}
}  // namespace

LaurentSeries::LaurentSeries(const FieldSpec* spec, long long floor, std::vector<Fe> coeffs,
                             bool exact)
    : spec_(spec), floor_(floor), c_(std::move(coeffs)), exact_(exact) {
  normalize();
}

void LaurentSeries::normalize() {
  while (!c_.empty() && fe_is_zero(c_.back())) c_.pop_back();
  if (exact_) {
    // strip certified-zero low coefficients too; an exact series owns every
    // exponent, so the floor is free to move
    size_t lead0 = 0;
    while (lead0 < c_.size() && fe_is_zero(c_[lead0])) ++lead0;
    if (lead0) {
      c_.erase(c_.begin(), c_.begin() + (long)lead0);
      floor_ += (long long)lead0;
    }
    if (c_.empty()) floor_ = 1;
  }
}

LaurentSeries LaurentSeries::zero_exact(const FieldSpec* spec) {
  return LaurentSeries(spec, 1, {}, true);
}

LaurentSeries LaurentSeries::zero_to(const FieldSpec* spec, long long floor) {
  return LaurentSeries(spec, floor, {}, false);
}

LaurentSeries LaurentSeries::monomial(const FieldSpec* spec, Fe c, long long e) {
  return LaurentSeries(spec, e, {c}, true);
}

LaurentSeries LaurentSeries::from_tpoly(const TPoly& a) {
  return LaurentSeries(a.spec(), 0, a.coeffs(), true);
}

long long LaurentSeries::hi() const {
  if (c_.empty()) throw std::logic_error("leading exponent of a zero window");
  return floor_ + (long long)c_.size() - 1;
}

Fe LaurentSeries::lead() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of a zero window");
  return c_.back();
}

Fe LaurentSeries::at(long long e) const {
  if (e < floor_) {
    if (exact_) return kFeZero;
    throw PrecisionError("coefficient below the certified floor");
  }
  long long i = e - floor_;
  if ((size_t)i >= c_.size()) return kFeZero;
  return c_[i];
}

LaurentSeries LaurentSeries::truncated(long long new_floor) const {
  if (exact_ || new_floor <= floor_) {
    if (new_floor <= floor_ && !exact_) return *this;
    // exact series: drop everything below new_floor and give up exactness
    std::vector<Fe> keep;
    long long start = std::max(floor_, new_floor);
    for (long long e = start; e < floor_ + (long long)c_.size(); ++e)
      keep.push_back(c_[e - floor_]);
    bool still_exact = exact_ && new_floor <= floor_;
    return LaurentSeries(spec_, start, std::move(keep), still_exact);
  }
  if ((size_t)(new_floor - floor_) >= c_.size())
    return LaurentSeries(spec_, new_floor, {}, false);
  return LaurentSeries(spec_, new_floor,
                       std::vector<Fe>(c_.begin() + (new_floor - floor_), c_.end()), false);
}

std::string LaurentSeries::to_string() const {
  std::string out;
  const FieldSpec& F = *spec_;
  for (long long e = floor_ + (long long)c_.size() - 1; e >= floor_; --e) {
    Fe c = c_[e - floor_];
    if (fe_is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    std::string cs = fe_to_string(F, c);
    if (F.n == 2 && c[1] != 0) cs = "(" + cs + ")";
    out += cs + "*T^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  if (out.empty()) out = "0";
  if (!exact_) {
    long long below = floor_ - 1;
    out += " + O(T^" + (below < 0 ? "(" + std::to_string(below) + ")" : std::to_string(below)) + ")";
  }
  return out;
}

LaurentSeries series_neg(const LaurentSeries& a) {
  std::vector<Fe> c;
  c.reserve(a.window_size());
  for (long long e = a.floor(); e < a.floor() + (long long)a.window_size(); ++e)
    c.push_back(fe_neg(*a.spec(), a.at(e)));
  return LaurentSeries(a.spec(), a.floor(), std::move(c), a.exact());
}

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b) {
  check_same(a.spec(), b.spec());
  const FieldSpec& F = *a.spec();
  if (a.is_zero_exact()) return b;
  if (b.is_zero_exact()) return a;
  bool exact = a.exact() && b.exact();
  long long floor;
  if (exact)
    floor = std::min(a.floor(), b.floor());
  else if (a.exact())
    floor = b.floor();
  else if (b.exact())
    floor = a.floor();
  else
    floor = std::max(a.floor(), b.floor());
  long long top = floor;
  if (!a.window_zero()) top = std::max(top, a.hi());
  if (!b.window_zero()) top = std::max(top, b.hi());
  std::vector<Fe> c;
  c.reserve((size_t)(top - floor + 1));
  for (long long e = floor; e <= top; ++e) c.push_back(fe_add(F, a.at(e), b.at(e)));
  return LaurentSeries(a.spec(), floor, std::move(c), exact);
}

LaurentSeries series_sub(const LaurentSeries& a, const LaurentSeries& b) {
  return series_add(a, series_neg(b));
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) {
  check_same(a.spec(), b.spec());
  const FieldSpec& F = *a.spec();
  if (a.is_zero_exact() || b.is_zero_exact()) return LaurentSeries::zero_exact(a.spec());
  bool exact = a.exact() && b.exact();
  // Precision floor: an unknown tail of one factor meets the leading
  // coefficient of the other at lo_a + hi_b (resp. lo_b + hi_a).
  long long floor;
  if (a.window_zero() || b.window_zero()) {
    // no certified leading term on one side: the product window is empty
    long long fa = a.window_zero() ? a.floor() : a.hi() + 1;
    long long fb = b.window_zero() ? b.floor() : b.hi() + 1;
    if (a.window_zero() && !b.window_zero())
      floor = a.floor() + b.hi();
    else if (b.window_zero() && !a.window_zero())
      floor = b.floor() + a.hi();
    else
      floor = fa + fb - 2;  // both windows empty
    return LaurentSeries(a.spec(), floor, {}, false);
  }
  long long hi = a.hi() + b.hi();
  if (exact) {
    floor = a.floor() + b.floor();
  } else if (a.exact()) {
    floor = b.floor() + a.hi();  // only b's unknown tail limits the product
  } else if (b.exact()) {
    floor = a.floor() + b.hi();
  } else {
    floor = std::max(a.floor() + b.hi(), b.floor() + a.hi());
  }
  // dense windows, low to high
  std::vector<Fe> av, bv;
  av.reserve(a.window_size());
  for (long long e = a.floor(); e <= a.hi(); ++e) av.push_back(a.at(e));
  bv.reserve(b.window_size());
  for (long long e = b.floor(); e <= b.hi(); ++e) bv.push_back(b.at(e));
  std::vector<Fe> prod = conv(F, av, bv);
  long long prod_lo = a.floor() + b.floor();
  // keep [floor, hi]
  std::vector<Fe> out;
  out.reserve((size_t)(hi - floor + 1));
  for (long long e = floor; e <= hi; ++e) {
    long long i = e - prod_lo;
    out.push_back(i >= 0 && (size_t)i < prod.size() ? prod[i] : kFeZero);
  }
  return LaurentSeries(a.spec(), floor, std::move(out), exact);
}

LaurentSeries series_scale(const LaurentSeries& a, Fe s) {
  const FieldSpec& F = *a.spec();
  if (fe_is_zero(s)) return LaurentSeries::zero_exact(a.spec());
  std::vector<Fe> c;
  c.reserve(a.window_size());
  for (long long e = a.floor(); e < a.floor() + (long long)a.window_size(); ++e)
    c.push_back(fe_mul(F, a.at(e), s));
  return LaurentSeries(a.spec(), a.floor(), std::move(c), a.exact());
}

LaurentSeries series_inv(const LaurentSeries& a) {
  const FieldSpec& F = *a.spec();
  if (a.is_zero_exact()) throw std::domain_error("inverse of the zero series");
  if (a.window_zero())
    throw PrecisionError("inverse of a series whose leading term is below the precision floor");
  long long hi = a.hi();
  size_t len = a.window_size();
  // Work on the unit part: a = lead * T^hi * (1 + tail); invert the unit by
  // Newton doubling, then shift back.
  std::vector<Fe> u(len);
  for (size_t i = 0; i < len; ++i) u[i] = a.at(hi - (long long)i);  // u[0] = lead
  // y approximates u^{-1} to k coefficients; y_{2k} = y_k (2 - u y_k)
  std::vector<Fe> y{fe_inv(F, u[0])};
  while (y.size() < len) {
    size_t k2 = std::min(len, y.size() * 2);
    std::vector<Fe> uy = conv(F, std::vector<Fe>(u.begin(), u.begin() + std::min(u.size(), k2)), y);
    uy.resize(k2, kFeZero);
    // t = 2 - u y
    std::vector<Fe> t(k2);
    Fe two = fe_from_int(F, 2);
    for (size_t i = 0; i < k2; ++i) t[i] = fe_sub(F, i == 0 ? two : kFeZero, uy[i]);
    std::vector<Fe> ynew = conv(F, y, t);
    ynew.resize(k2, kFeZero);
    y = std::move(ynew);
  }
  // y holds coefficients of 1/a at exponents -hi, -hi-1, ... (descending)
  bool exact = a.exact() && len == 1;  // only monomials invert exactly
  std::vector<Fe> out(y.rbegin(), y.rend());
  return LaurentSeries(a.spec(), -hi - (long long)len + 1, std::move(out), exact);
}

LaurentSeries series_from_rational(const RationalFunc& f, size_t terms) {
  const FieldSpec* spec = f.spec();
  if (f.is_zero()) return LaurentSeries::zero_exact(spec);
  if (terms == 0) throw std::invalid_argument("terms must be positive");
  const TPoly& num = f.num();
  const TPoly& den = f.den();
  long long hi = num.degree() - den.degree();
  // num * T^K divided by den: the quotient gives the coefficients of the
  // expansion at exponents hi .. -K exactly.
  long long K = std::max<long long>(0, (long long)terms - 1 - hi);
  auto [q, r] = tpoly_divmod(num.shifted((int)K), den);
  std::vector<Fe> c;
  long long lo = -K;
  c.reserve((size_t)(hi - lo + 1));
  for (long long e = lo; e <= hi; ++e) c.push_back(q.coeff((int)(e + K)));
  return LaurentSeries(spec, lo, std::move(c), r.is_zero());
}

LaurentSeries series_frobenius(const LaurentSeries& a, uint64_t e) {
  const FieldSpec& F = *a.spec();
  if (!is_char_power(F.p, e))
    throw std::invalid_argument("Frobenius exponent must be a power of the characteristic");
  if (a.window_zero())
    return a.exact() ? a : LaurentSeries::zero_to(a.spec(), a.floor() * (long long)e);
  long long hi = a.hi();
  long long new_floor = a.floor() * (long long)e;
  long long new_hi = hi * (long long)e;
  std::vector<Fe> c((size_t)(new_hi - new_floor + 1), kFeZero);
  for (long long x = a.floor(); x <= hi; ++x) {
    Fe v = a.at(x);
    if (!fe_is_zero(v)) c[(size_t)(x * (long long)e - new_floor)] = fe_pow(F, v, e);
  }
  return LaurentSeries(a.spec(), new_floor, std::move(c), a.exact());
}

LaurentSeries series_scale_T(const LaurentSeries& a, Fe v) {
  const FieldSpec& F = *a.spec();
  if (fe_is_zero(v)) throw std::invalid_argument("scale by zero");
  if (a.window_zero()) return a;
  Fe vinv = fe_inv(F, v);
  std::vector<Fe> c;
  c.reserve(a.window_size());
  for (long long e = a.floor(); e <= a.hi(); ++e) {
    Fe pw = e >= 0 ? fe_pow(F, v, (uint64_t)e) : fe_pow(F, vinv, (uint64_t)(-e));
    c.push_back(fe_mul(F, a.at(e), pw));
  }
  return LaurentSeries(a.spec(), a.floor(), std::move(c), a.exact());
}

std::pair<TPoly, LaurentSeries> series_polypart(const LaurentSeries& a) {
  if (!a.exact() && a.floor() > 0)
    throw PrecisionError("cannot certify the polynomial part: precision floor above 0");
  const FieldSpec* spec = a.spec();
  if (a.window_zero()) return {TPoly::zero(spec), a};
  long long hi = a.hi();
  std::vector<Fe> poly;
  if (hi >= 0) {
    poly.resize((size_t)hi + 1, kFeZero);
    for (long long e = std::max<long long>(0, a.floor()); e <= hi; ++e) poly[(size_t)e] = a.at(e);
  }
  std::vector<Fe> rest;
  long long lo = a.floor();
  if (lo <= -1) {
    rest.reserve((size_t)(-lo));
    for (long long e = lo; e <= -1; ++e) rest.push_back(a.at(e));
  }
  return {TPoly(spec, std::move(poly)),
          LaurentSeries(spec, std::min<long long>(lo, a.exact() ? -1 : lo), std::move(rest),
                        a.exact())};
}

LaurentSeries series_eval_xpoly(const XPoly& s, const LaurentSeries& x) {
  const FieldSpec* spec = s.spec();
  check_same(spec, x.spec());
  if (s.is_zero()) return LaurentSeries::zero_exact(spec);
  // Pick a target floor the operand precision can support, then expand each
  // coefficient far enough that its own truncation cannot dominate.
  long long m = s.degree();
  long long xhi = x.window_zero() ? 0 : std::max<long long>(0, x.hi());
  long long xfloor = x.exact() ? (x.window_zero() ? 0 : x.floor()) : x.floor();
  long long target = xfloor - 1;  // conservative; mul/add floors take over anyway
  LaurentSeries acc = LaurentSeries::zero_exact(spec);
  for (long long k = m; k >= 0; --k) {
    if (k < m) acc = series_mul(acc, x);
    RationalFunc c = s.coeff((int)k);
    if (!c.is_zero()) {
      LaurentSeries cs;
      if (c.is_polynomial()) {
        cs = LaurentSeries::from_tpoly(c.num());
      } else {
        long long chi = c.num().degree() - c.den().degree();
        long long need = chi - (target - (m - k) * xhi) + 1;
        cs = series_from_rational(c, (size_t)std::max<long long>(need, 8));
      }
      acc = series_add(acc, cs);
    }
  }
  return acc;
}

LaurentSeries newton_root(const XPoly& s, const LaurentSeries& seed, size_t terms) {
  const FieldSpec* spec = s.spec();
  check_same(spec, seed.spec());
  if (terms == 0) throw std::invalid_argument("terms must be positive");
  if (s.is_zero() || s.degree() < 1) throw std::invalid_argument("not a polynomial in X");
  if (seed.window_zero()) throw std::invalid_argument("seed must have a certified leading term");

  // Clear denominators once: residuals of Laurent polynomials against TPoly
  // coefficients are exact, which is what certifies every emitted digit.
  std::vector<TPoly> f = xpoly_clear_denominators(s);
  std::vector<TPoly> fd;  // derivative
  for (size_t i = 1; i < f.size(); ++i)
    fd.push_back(f[i].scaled(fe_from_int(*spec, (long long)i)));

  auto eval_exact = [&](const std::vector<TPoly>& cs, const LaurentSeries& x) {
    LaurentSeries acc = LaurentSeries::zero_exact(spec);
    for (size_t i = cs.size(); i-- > 0;) {
      if (i + 1 < cs.size()) acc = series_mul(acc, x);
      if (!cs[i].is_zero()) acc = series_add(acc, LaurentSeries::from_tpoly(cs[i]));
    }
    return acc;
  };

  // Exact Laurent-polynomial iterate.
  LaurentSeries x(spec, seed.floor(), [&] {
    std::vector<Fe> c;
    for (long long e = seed.floor(); e <= seed.hi(); ++e) c.push_back(seed.at(e));
    return c;
  }(), true);

  LaurentSeries f0 = eval_exact(f, x);
  LaurentSeries f1 = eval_exact(fd, x);
  if (f1.is_zero_exact())
    throw HenselError("derivative vanishes at the seed (inseparable branch)");
  if (f0.is_zero_exact()) {
    // the seed itself is a root
    return LaurentSeries(spec, x.floor(), [&] {
      std::vector<Fe> c;
      for (long long e = x.floor(); e <= (x.window_zero() ? x.floor() - 1 : x.hi()); ++e)
        c.push_back(x.at(e));
      return c;
    }(), true);
  }
  long long v_f0 = -f0.hi();
  long long v_f1 = -f1.hi();
  if (!(v_f0 > 2 * v_f1))
    throw HenselError("Hensel condition v(s(seed)) > 2 v(s'(seed)) fails at the seed");

  // The root agrees with x at every exponent above -delta; its leading
  // exponent is x's once delta certifies it.
  auto cur_root_hi = [&]() { return x.window_zero() ? -1 : x.hi(); };
  long long delta = v_f0 - v_f1;
  size_t guard = 0;
  while (delta < (long long)terms - cur_root_hi()) {
    long long root_hi = cur_root_hi();
    long long need_delta = (long long)terms - root_hi;
    if (++guard > 128) throw HenselError("Newton iteration failed to converge");
    // correction c = f0 / f1 to enough digits: the step doubles delta, so
    // 2*delta - v_f1-ish digits suffice; a margin is harmless.
    long long want = std::min(need_delta, 2 * delta) + 4;
    size_t digits = (size_t)std::max<long long>(want - delta + 1, 4);
    LaurentSeries f1_trunc = f1.truncated(f1.hi() - (long long)digits + 1);
    LaurentSeries corr = series_mul(f0, series_inv(f1_trunc));
    // x <- x - corr, truncated to an exact polynomial again
    long long keep_floor = root_hi - want;
    LaurentSeries corr_poly(spec, std::max(corr.window_zero() ? keep_floor : corr.floor(), keep_floor),
                            [&] {
                              std::vector<Fe> c;
                              long long lo = std::max(corr.window_zero() ? keep_floor : corr.floor(),
                                                      keep_floor);
                              long long hi = corr.window_zero() ? lo - 1 : corr.hi();
                              for (long long e = lo; e <= hi; ++e) c.push_back(corr.at(e));
                              return c;
                            }(),
                            true);
    x = series_sub(x, corr_poly);
    x = LaurentSeries(spec, std::max(x.window_zero() ? keep_floor : x.floor(), keep_floor), [&] {
      std::vector<Fe> c;
      long long lo = std::max(x.window_zero() ? keep_floor : x.floor(), keep_floor);
      long long hi2 = x.window_zero() ? lo - 1 : x.hi();
      for (long long e = lo; e <= hi2; ++e) c.push_back(x.at(e));
      return c;
    }(), true);
    f0 = eval_exact(f, x);
    if (f0.is_zero_exact()) break;
    f1 = eval_exact(fd, x);
    v_f1 = -f1.hi();
    delta = -f0.hi() - v_f1;
    if (delta <= 0) throw HenselError("Newton iteration diverged");
  }

  // x agrees with the root at every exponent >= -delta + 1; emit exactly
  // `terms` coefficients from the top.
  long long final_hi = cur_root_hi();
  long long out_floor = final_hi - (long long)terms + 1;
  std::vector<Fe> out;
  out.reserve(terms);
  for (long long e = out_floor; e <= final_hi; ++e) out.push_back(x.at(e));
  return LaurentSeries(spec, out_floor, std::move(out), false);
}

}  // namespace hqcf
