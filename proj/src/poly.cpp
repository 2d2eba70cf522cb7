#include "hqcf/poly.hpp"

#include <algorithm>

namespace hqcf {

namespace {
void check_same(const FieldSpec* a, const FieldSpec* b) {
  if (a != b) throw FieldMismatchError("polynomials belong to different fields");
}
}  // namespace

TPoly::TPoly(const FieldSpec* spec, std::vector<Fe> coeffs) : spec_(spec), c_(std::move(coeffs)) {
  normalize();
}

void TPoly::normalize() {
  while (!c_.empty() && fe_is_zero(c_.back())) c_.pop_back();
}

TPoly TPoly::constant(const FieldSpec* spec, Fe c) { return TPoly(spec, {c}); }

TPoly TPoly::from_int(const FieldSpec* spec, long long c) {
  return constant(spec, fe_from_int(*spec, c));
}

TPoly TPoly::variable(const FieldSpec* spec) {
  return TPoly(spec, {kFeZero, fe_from_int(*spec, 1)});
}

TPoly TPoly::monomial(const FieldSpec* spec, Fe c, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  std::vector<Fe> v(e + 1, kFeZero);
  v[e] = c;
  return TPoly(spec, std::move(v));
}

int TPoly::degree() const {
  if (c_.empty()) throw std::logic_error("degree of the zero polynomial");
  return (int)c_.size() - 1;
}

Fe TPoly::coeff(int e) const {
  if (e < 0 || (size_t)e >= c_.size()) return kFeZero;
  return c_[e];
}

Fe TPoly::lc() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return c_.back();
}

TPoly TPoly::operator-() const {
  TPoly r(spec_);
  r.c_.reserve(c_.size());
  for (const Fe& x : c_) r.c_.push_back(fe_neg(*spec_, x));
  return r;
}

TPoly TPoly::operator+(const TPoly& o) const {
  check_same(spec_, o.spec_);
  TPoly r(spec_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), kFeZero);
  for (size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = fe_add(*spec_, i < c_.size() ? c_[i] : kFeZero, i < o.c_.size() ? o.c_[i] : kFeZero);
  r.normalize();
  return r;
}

TPoly TPoly::operator-(const TPoly& o) const { return *this + (-o); }

TPoly TPoly::operator*(const TPoly& o) const {
  check_same(spec_, o.spec_);
  if (is_zero() || o.is_zero()) return zero(spec_);
  return TPoly(spec_, conv(*spec_, c_, o.c_));
}

TPoly TPoly::scaled(Fe s) const {
  if (fe_is_zero(s)) return zero(spec_);
  TPoly r(spec_);
  r.c_.reserve(c_.size());
  for (const Fe& x : c_) r.c_.push_back(fe_mul(*spec_, x, s));
  return r;
}

TPoly TPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return *this;
  TPoly r(spec_);
  r.c_.assign(k, kFeZero);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

TPoly TPoly::pow(uint64_t e) const {
  TPoly r = from_int(spec_, 1);
  TPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
    e >>= 1;
  }
  return r;
}

TPoly TPoly::pow_char() const {
  // (sum c_i T^i)^p = sum c_i^p T^{ip} in characteristic p
  if (is_zero()) return *this;
  uint32_t p = spec_->p;
  std::vector<Fe> v((c_.size() - 1) * p + 1, kFeZero);
  for (size_t i = 0; i < c_.size(); ++i) v[i * p] = fe_pow(*spec_, c_[i], p);
  return TPoly(spec_, std::move(v));
}

TPoly TPoly::derivative() const {
  TPoly r(spec_);
  for (size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back(fe_mul(*spec_, c_[i], fe_from_int(*spec_, (long long)i)));
  r.normalize();
  return r;
}

TPoly TPoly::monic() const {
  if (is_zero()) throw std::domain_error("monic of zero");
  return scaled(fe_inv(*spec_, lc()));
}

Fe TPoly::eval(Fe x) const {
  Fe r = kFeZero;
  for (size_t i = c_.size(); i-- > 0;) r = fe_add(*spec_, fe_mul(*spec_, r, x), c_[i]);
  return r;
}

bool TPoly::operator<(const TPoly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != o.c_[i]) return fe_index(*spec_, c_[i]) < fe_index(*spec_, o.c_[i]);
  }
  return false;
}

std::pair<TPoly, TPoly> tpoly_divmod(const TPoly& a, const TPoly& b) {
  check_same(a.spec(), b.spec());
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const FieldSpec& F = *a.spec();
  if (a.is_zero() || a.degree() < b.degree())
    return {TPoly::zero(a.spec()), a};
  int db = b.degree();
  Fe lc_inv = fe_inv(F, b.lc());
  std::vector<Fe> rem(a.coeffs());
  std::vector<Fe> quot(a.degree() - db + 1, kFeZero);
  for (int e = (int)rem.size() - 1; e >= db; --e) {
    if (fe_is_zero(rem[e])) continue;
    Fe q = fe_mul(F, rem[e], lc_inv);
    quot[e - db] = q;
    for (int i = 0; i <= db; ++i)
      rem[e - db + i] = fe_sub(F, rem[e - db + i], fe_mul(F, q, b.coeff(i)));
  }
  return {TPoly(a.spec(), std::move(quot)), TPoly(a.spec(), std::move(rem))};
}

TPoly tpoly_gcd(const TPoly& a, const TPoly& b) {
  check_same(a.spec(), b.spec());
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0)");
  TPoly x = a, y = b;
  while (!y.is_zero()) {
    TPoly r = tpoly_divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

TPoly tpoly_scale_T(const TPoly& a, Fe v) {
  const FieldSpec& F = *a.spec();
  std::vector<Fe> c(a.coeffs());
  Fe pw = fe_from_int(F, 1);
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] = fe_mul(F, c[i], pw);
    pw = fe_mul(F, pw, v);
  }
  return TPoly(a.spec(), std::move(c));
}

bool tpoly_is_square(const TPoly& a) {
  if (a.is_zero()) return true;
  if (a.degree() % 2 != 0) return false;
  const FieldSpec& F = *a.spec();
  auto rt = fe_sqrt(F, a.lc());
  if (!rt) return false;
  // Build the square root top-down by matching coefficients.
  int m = a.degree() / 2;
  std::vector<Fe> s(m + 1, kFeZero);
  s[m] = *rt;
  Fe two_lead_inv;
  if (F.p == 2) {
    // In characteristic 2, squares have only even-exponent terms and the
    // root is the term-wise square root.
    for (int i = 0; i <= a.degree(); ++i) {
      if (i % 2 == 1 && !fe_is_zero(a.coeff(i))) return false;
      if (i % 2 == 0) {
        auto r = fe_sqrt(F, a.coeff(i));
        if (!r) return false;
        s[i / 2] = *r;
      }
    }
    TPoly cand(a.spec(), std::move(s));
    return cand * cand == a;
  }
  two_lead_inv = fe_inv(F, fe_mul(F, fe_from_int(F, 2), s[m]));
  for (int e = 2 * m - 1; e >= m; --e) {
    // coefficient of T^e in s^2, excluding the unknown s[e-m]
    Fe acc = kFeZero;
    for (int i = e - m + 1; i <= m; ++i) {
      int j = e - i;
      if (j > m || j < 0 || j == e - m) continue;
      acc = fe_add(F, acc, fe_mul(F, s[i], s[j]));
    }
    s[e - m] = fe_mul(F, fe_sub(F, a.coeff(e), acc), two_lead_inv);
  }
  TPoly cand(a.spec(), std::move(s));
  return cand * cand == a;
}

std::string TPoly::to_string() const {
  if (is_zero()) return "0";
  const FieldSpec& F = *spec_;
  std::string out;
  for (int e = degree(); e >= 0; --e) {
    Fe c = coeff(e);
    if (fe_is_zero(c)) continue;
    if (!out.empty()) out += "+";
    bool unit = (c == fe_from_int(F, 1));
    bool needs_parens = F.n == 2 && c[1] != 0 && c[0] != 0;  // more than one u-term
    if (e == 0) {
      if (needs_parens)
        out += "(" + fe_to_string(F, c) + ")";
      else
        out += fe_to_string(F, c);
    } else {
      if (!unit) {
        if (needs_parens)
          out += "(" + fe_to_string(F, c) + ")";
        else
          out += fe_to_string(F, c);
      }
      out += "T";
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

RationalFunc::RationalFunc(TPoly num) : num_(std::move(num)) {
  den_ = TPoly::from_int(num_.spec(), 1);
}

RationalFunc::RationalFunc(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {
  check_same(num_.spec(), den_.spec());
  normalize();
}

void RationalFunc::normalize() {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = TPoly::from_int(num_.spec(), 1);
    return;
  }
  if (!den_.is_constant()) {
    TPoly g = tpoly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = tpoly_divmod(num_, g).first;
      den_ = tpoly_divmod(den_, g).first;
    }
  }
  Fe s = fe_inv(*num_.spec(), den_.lc());
  num_ = num_.scaled(s);
  den_ = den_.scaled(s);
}

RationalFunc RationalFunc::operator-() const {
  RationalFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunc RationalFunc::operator+(const RationalFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RationalFunc(num_ + o.num_, den_);
  return RationalFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunc RationalFunc::operator-(const RationalFunc& o) const { return *this + (-o); }

RationalFunc RationalFunc::operator*(const RationalFunc& o) const {
  if (is_zero() || o.is_zero()) return zero(spec());
  if (is_polynomial() && o.is_polynomial()) {
    RationalFunc r;
    r.num_ = num_ * o.num_;
    r.den_ = TPoly::from_int(spec(), 1);
    return r;
  }
  return RationalFunc(num_ * o.num_, den_ * o.den_);
}

RationalFunc RationalFunc::operator/(const RationalFunc& o) const { return *this * o.inv(); }

RationalFunc RationalFunc::inv() const {
  if (is_zero()) throw std::domain_error("inverse of the zero rational function");
  return RationalFunc(den_, num_);
}

std::string RationalFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

XPoly::XPoly(const FieldSpec* spec, std::vector<RationalFunc> coeffs)
    : spec_(spec), c_(std::move(coeffs)) {
  normalize();
}

void XPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly XPoly::variable(const FieldSpec* spec) {
  return XPoly(spec, {RationalFunc::zero(spec), RationalFunc::from_fe(spec, fe_from_int(*spec, 1))});
}

XPoly XPoly::monomial(const FieldSpec* spec, RationalFunc c, int e) {
  std::vector<RationalFunc> v((size_t)e + 1, RationalFunc::zero(spec));
  v[e] = std::move(c);
  return XPoly(spec, std::move(v));
}

int XPoly::degree() const {
  if (c_.empty()) throw std::logic_error("degree of the zero polynomial");
  return (int)c_.size() - 1;
}

RationalFunc XPoly::coeff(int e) const {
  if (e < 0 || (size_t)e >= c_.size()) return RationalFunc::zero(spec_);
  return c_[e];
}

const RationalFunc& XPoly::lc() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return c_.back();
}

XPoly XPoly::operator-() const {
  XPoly r(spec_);
  r.c_.reserve(c_.size());
  for (const auto& x : c_) r.c_.push_back(-x);
  return r;
}

XPoly XPoly::operator+(const XPoly& o) const {
  check_same(spec_, o.spec_);
  XPoly r(spec_);
  size_t m = std::max(c_.size(), o.c_.size());
  r.c_.reserve(m);
  for (size_t i = 0; i < m; ++i) {
    RationalFunc v = i < c_.size() ? c_[i] : RationalFunc::zero(spec_);
    if (i < o.c_.size()) v = v + o.c_[i];
    r.c_.push_back(std::move(v));
  }
  r.normalize();
  return r;
}

XPoly XPoly::operator-(const XPoly& o) const { return *this + (-o); }

XPoly XPoly::operator*(const XPoly& o) const {
  check_same(spec_, o.spec_);
  if (is_zero() || o.is_zero()) return zero(spec_);
  std::vector<RationalFunc> out(c_.size() + o.c_.size() - 1, RationalFunc::zero(spec_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      out[i + j] = out[i + j] + c_[i] * o.c_[j];
    }
  }
  return XPoly(spec_, std::move(out));
}

XPoly XPoly::operator*(const RationalFunc& s) const {
  if (s.is_zero()) return zero(spec_);
  XPoly r(spec_);
  r.c_.reserve(c_.size());
  for (const auto& x : c_) r.c_.push_back(x * s);
  r.normalize();
  return r;
}

XPoly XPoly::derivative() const {
  XPoly r(spec_);
  for (size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back(c_[i] * RationalFunc::from_fe(spec_, fe_from_int(*spec_, (long long)i)));
  r.normalize();
  return r;
}

std::vector<int> XPoly::support() const {
  std::vector<int> s;
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) s.push_back((int)i);
  return s;
}

std::string XPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = degree(); e >= 0; --e) {
    RationalFunc c = coeff(e);
    if (c.is_zero()) continue;
    if (!out.empty()) out += "+";
    if (c.is_polynomial())
      out += "(" + c.num().to_string() + ")";
    else
      out += "(" + c.to_string() + ")";
    if (e >= 1) {
      out += "X";
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::pair<XPoly, XPoly> xpoly_divmod(const XPoly& h, const XPoly& p) {
  check_same(h.spec(), p.spec());
  if (p.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (h.is_zero() || h.degree() < p.degree()) return {XPoly::zero(h.spec()), h};
  int dp = p.degree();
  RationalFunc lc_inv = p.lc().inv();
  std::vector<RationalFunc> rem(h.coeffs());
  std::vector<RationalFunc> quot(h.degree() - dp + 1, RationalFunc::zero(h.spec()));
  for (int e = (int)rem.size() - 1; e >= dp; --e) {
    if (rem[e].is_zero()) continue;
    RationalFunc q = rem[e] * lc_inv;
    quot[e - dp] = q;
    for (int i = 0; i <= dp; ++i) rem[e - dp + i] = rem[e - dp + i] - q * p.coeff(i);
  }
  return {XPoly(h.spec(), std::move(quot)), XPoly(h.spec(), std::move(rem))};
}

XPoly xpoly_gcd(const XPoly& a, const XPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0)");
  XPoly x = a, y = b;
  while (!y.is_zero()) {
    XPoly r = xpoly_divmod(x, y).second;
    x = y;
    y = r;
  }
  return x * x.lc().inv();
}

XPoly xpoly_mod(const XPoly& a, const XPoly& p) { return xpoly_divmod(a, p).second; }

XPoly xpoly_modpow_X(const XPoly& p, uint64_t r) {
  if (p.is_zero() || p.degree() < 1) throw std::invalid_argument("modulus must have positive degree");
  const FieldSpec* spec = p.spec();
  XPoly result = XPoly::monomial(spec, RationalFunc::from_fe(spec, fe_from_int(*spec, 1)), 0);
  if (r == 0) return xpoly_mod(result, p);
  XPoly base = xpoly_mod(XPoly::variable(spec), p);
  while (r) {
    if (r & 1) result = xpoly_mod(result * base, p);
    r >>= 1;
    if (r) base = xpoly_mod(base * base, p);
  }
  return result;
}

std::vector<TPoly> xpoly_clear_denominators(const XPoly& h) {
  const FieldSpec* spec = h.spec();
  if (h.is_zero()) return {};
  TPoly lcm = TPoly::from_int(spec, 1);
  for (const auto& c : h.coeffs()) {
    if (c.is_zero()) continue;
    TPoly g = tpoly_gcd(lcm, c.den());
    lcm = lcm * tpoly_divmod(c.den(), g).first;
  }
  std::vector<TPoly> out;
  out.reserve(h.coeffs().size());
  for (const auto& c : h.coeffs()) {
    if (c.is_zero()) {
      out.push_back(TPoly::zero(spec));
      continue;
    }
    TPoly extra = tpoly_divmod(lcm, c.den()).first;
    out.push_back(c.num() * extra);
  }
  return out;
}

XPoly xpoly_primitive(const XPoly& h) {
  const FieldSpec* spec = h.spec();
  if (h.is_zero()) return h;
  std::vector<TPoly> cleared = xpoly_clear_denominators(h);
  TPoly content = TPoly::zero(spec);
  for (const auto& c : cleared) {
    if (c.is_zero()) continue;
    content = content.is_zero() ? c : tpoly_gcd(content, c);
  }
  std::vector<RationalFunc> out;
  out.reserve(cleared.size());
  const TPoly* lowest = nullptr;
  for (auto& c : cleared) {
    if (!c.is_zero()) {
      c = tpoly_divmod(c, content).first;
      if (!lowest) lowest = &c;
    }
  }
  Fe unit = fe_inv(*spec, lowest->lc());
  for (auto& c : cleared) out.push_back(RationalFunc(c.scaled(unit)));
  return XPoly(spec, std::move(out));
}

}  // namespace hqcf
