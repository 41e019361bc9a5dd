#include "eisgen/ratfun.hpp"

#include <algorithm>
#include <sstream>

namespace eisgen {

SPoly SPoly::monomial(ScalarQ s, size_t k) {
  SPoly p;
  if (!s.is_zero()) { p.c.assign(k + 1, ScalarQ()); p.c.back() = std::move(s); }
  return p;
}

void SPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

long SPoly::val() const {
  for (size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) return long(i);
  return -1;
}

SPoly operator+(const SPoly& a, const SPoly& b) {
  SPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) + b.at(i);
  r.trim();
  return r;
}

SPoly operator-(const SPoly& a, const SPoly& b) {
  SPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) - b.at(i);
  r.trim();
  return r;
}

SPoly operator-(const SPoly& a) {
  SPoly r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

SPoly operator*(const SPoly& a, const SPoly& b) {
  if (a.is_zero() || b.is_zero()) return SPoly();
  SPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, ScalarQ());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

SPoly operator*(const ScalarQ& s, const SPoly& a) {
  if (s.is_zero()) return SPoly();
  SPoly r = a;
  for (auto& x : r.c) x = s * x;
  return r;
}

void SPoly::divrem(const SPoly& a, const SPoly& b, SPoly& quo, SPoly& rem) {
  if (b.is_zero()) throw std::domain_error("SPoly: division by zero");
  rem = a;
  quo = SPoly();
  if (a.deg() >= b.deg()) quo.c.assign(size_t(a.deg() - b.deg() + 1), ScalarQ());
  while (rem.deg() >= b.deg()) {
    ScalarQ f = rem.lead() / b.lead();
    long k = rem.deg() - b.deg();
    quo.c[size_t(k)] = f;
    for (size_t i = 0; i < b.c.size(); ++i) rem.c[i + size_t(k)] = rem.c[i + size_t(k)] - f * b.c[i];
    rem.trim();
  }
  quo.trim();
}

SPoly operator/(const SPoly& a, const SPoly& b) {
  SPoly q, r;
  SPoly::divrem(a, b, q, r);
  if (!r.is_zero()) throw std::domain_error("SPoly: inexact division");
  return q;
}

// The gcd runs over Q[s][x] with s = sqrt(q): a direct Euclid over the
// coefficient field compounds Q(q) fractions catastrophically, while the
// primitive pseudo-remainder sequence below keeps every intermediate a
// content-free polynomial.
namespace {

using SVec = std::vector<QPoly>;  // x-coefficients, each a poly in s

void svec_trim(SVec& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// ScalarQ a(q) + b(q) s as a single fraction in s (substituting q = s^2)
void to_s_fraction(const ScalarQ& c, QPoly& num, QPoly& den) {
  auto stretch = [](const QPoly& p, bool odd) {
    QPoly r;
    if (p.is_zero()) return r;
    r.c.assign(2 * p.c.size() - 1 + (odd ? 1 : 0), Rat(0));
    for (size_t i = 0; i < p.c.size(); ++i) r.c[2 * i + (odd ? 1 : 0)] = p.c[i];
    r.trim();
    return r;
  };
  QPoly an = stretch(c.a.num, false), ad = stretch(c.a.den, false);
  QPoly bn = stretch(c.b.num, true), bd = stretch(c.b.den, false);
  num = an * bd + bn * ad;
  den = ad * bd;
}

// clear denominators and content: a primitive element of Q[s][x]
SVec to_svec(const SPoly& p) {
  SVec num(p.c.size()), den(p.c.size());
  QPoly lcd(1L);
  for (size_t i = 0; i < p.c.size(); ++i) {
    to_s_fraction(p.c[i], num[i], den[i]);
    if (!den[i].is_zero()) lcd = lcd * (den[i] / QPoly::gcd(lcd, den[i]));
  }
  SVec out(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i)
    if (!num[i].is_zero()) out[i] = num[i] * (lcd / den[i]);
  svec_trim(out);
  return out;
}

QPoly svec_content(const SVec& v) {
  QPoly g;
  for (auto& c : v)
    if (!c.is_zero()) g = g.is_zero() ? c : QPoly::gcd(g, c);
  return g;
}

void svec_primitive(SVec& v) {
  QPoly g = svec_content(v);
  if (g.deg() > 0)
    for (auto& c : v)
      if (!c.is_zero()) c = c / g;
}

// pseudo-remainder of a by b in Q[s][x]: lead(b)^(da-db+1) * a mod b
SVec svec_prem(SVec a, const SVec& b) {
  const QPoly& lb = b.back();
  long db = long(b.size()) - 1;
  while (long(a.size()) - 1 >= db) {
    QPoly top = a.back();
    long k = long(a.size()) - 1 - db;
    for (auto& c : a) c = c * lb;
    for (long i = 0; i <= db; ++i) a[size_t(i + k)] = a[size_t(i + k)] - top * b[size_t(i)];
    svec_trim(a);
    if (a.empty()) break;
  }
  return a;
}

// specialize a Q[s][x] polynomial at s = t, giving an element of Q[x]
QPoly svec_at(const SVec& v, const Rat& t) {
  QPoly r;
  r.c.resize(v.size(), Rat(0));
  for (size_t i = 0; i < v.size(); ++i) r.c[i] = v[i].eval(t);
  r.trim();
  return r;
}

// gcd degree can only grow under specialization (when neither leading
// coefficient vanishes), so a constant specialized gcd proves coprimality
// and lets us skip the full pseudo-remainder sequence -- the expensive case,
// since coprime inputs drive the PRS all the way down with maximal
// coefficient swell.
bool provably_coprime(const SVec& u, const SVec& v) {
  for (long t : {10, 7, 23}) {
    if (u.back().eval(Rat(t)) == 0 || v.back().eval(Rat(t)) == 0) continue;
    return QPoly::gcd(svec_at(u, Rat(t)), svec_at(v, Rat(t))).deg() == 0;
  }
  return false;
}

// split c(s) back into even/odd q-parts: c = a(q) + b(q) s
ScalarQ from_s_poly(const QPoly& p) {
  QPoly ev, od;
  for (size_t i = 0; i < p.c.size(); ++i) {
    auto& t = (i % 2 == 0) ? ev : od;
    size_t j = i / 2;
    if (t.c.size() <= j) t.c.resize(j + 1, Rat(0));
    t.c[j] = p.c[i];
  }
  ev.trim();
  od.trim();
  return ScalarQ(QRat(ev), QRat(od));
}

}  // namespace

SPoly SPoly::gcd(SPoly a, SPoly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // both divisible by x^k: pull the common power out so the pretest below
  // sees polynomials with nonzero constant term
  long va = a.val(), vb = b.val(), vc = std::min(va, vb);
  if (va > 0) a.c.erase(a.c.begin(), a.c.begin() + va);
  if (vb > 0) b.c.erase(b.c.begin(), b.c.begin() + vb);
  SVec u = to_svec(a), v = to_svec(b);
  svec_primitive(u);
  svec_primitive(v);
  if (u.size() < v.size()) std::swap(u, v);
  if (v.size() == 1 || provably_coprime(u, v))
    return SPoly::monomial(ScalarQ(1L), size_t(vc));
  while (!v.empty()) {
    SVec r = svec_prem(u, v);
    svec_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  SPoly g;
  g.c.resize(u.size());
  for (size_t i = 0; i < u.size(); ++i) g.c[i] = from_s_poly(u[i]);
  g.trim();
  return g.monic().shifted(size_t(vc));
}

SPoly SPoly::derivative() const {
  SPoly r;
  for (size_t i = 1; i < c.size(); ++i) r.c.push_back(ScalarQ(Rat(long(i))) * c[i]);
  r.trim();
  return r;
}

SPoly SPoly::monic() const {
  if (is_zero()) return *this;
  SPoly r = *this;
  ScalarQ inv = ScalarQ(1L) / lead();
  for (auto& x : r.c) x = inv * x;
  return r;
}

SPoly SPoly::shifted(size_t k) const {
  if (is_zero() || k == 0) return *this;
  SPoly r;
  r.c.assign(k, ScalarQ());
  r.c.insert(r.c.end(), c.begin(), c.end());
  return r;
}

ScalarQ SPoly::eval(const ScalarQ& x) const {
  ScalarQ v;
  for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

SPoly SPoly::pow(unsigned n) const {
  SPoly r(ScalarQ(1L));
  SPoly b = *this;
  while (n) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

SPoly SPoly::scale(const ScalarQ& s) const {
  SPoly r = *this;
  ScalarQ p(1L);
  for (size_t i = 0; i < r.c.size(); ++i) {
    r.c[i] = r.c[i] * p;
    p = p * s;
  }
  r.trim();
  return r;
}

SPoly SPoly::reverse() const {
  SPoly r = *this;
  std::reverse(r.c.begin(), r.c.end());
  r.trim();
  return r;
}

// ---------------------------------------------------------------------------

RatFun::RatFun(std::string v, SPoly n, SPoly d) : var(std::move(v)), num(std::move(n)), den(std::move(d)) {
  normalize();
}

void RatFun::normalize() {
  if (den.is_zero()) throw std::domain_error("RatFun: zero denominator");
  if (num.is_zero()) { den = SPoly(ScalarQ(1L)); return; }
  SPoly g = SPoly::gcd(num, den);
  if (g.deg() > 0) { num = num / g; den = den / g; }
  ScalarQ inv = ScalarQ(1L) / den.lead();
  num = inv * num;
  den = inv * den;
}

ScalarQ RatFun::as_scalar() const {
  if (!is_constant()) throw std::domain_error("RatFun: not a constant");
  if (num.is_zero()) return ScalarQ();
  return num.c[0] / den.c[0];
}

static void check_var(const RatFun& f, const RatFun& g) {
  if (f.var != g.var && !f.is_constant() && !g.is_constant())
    throw std::domain_error("RatFun: mixed variables " + f.var + " and " + g.var);
}

static std::string pick_var(const RatFun& f, const RatFun& g) {
  return f.is_constant() && !g.is_constant() ? g.var : f.var;
}

// least common denominator for +/-, avoiding a needlessly large gcd later
static SPoly lcd_parts(const RatFun& f, const RatFun& g, SPoly& fd, SPoly& gd) {
  SPoly d = SPoly::gcd(f.den, g.den);
  fd = d.deg() > 0 ? g.den / d : g.den;
  gd = d.deg() > 0 ? f.den / d : f.den;
  return f.den * fd;
}

RatFun operator+(const RatFun& f, const RatFun& g) {
  check_var(f, g);
  SPoly fd, gd;
  SPoly den = lcd_parts(f, g, fd, gd);
  return RatFun(pick_var(f, g), f.num * fd + g.num * gd, std::move(den));
}

RatFun operator-(const RatFun& f, const RatFun& g) {
  check_var(f, g);
  SPoly fd, gd;
  SPoly den = lcd_parts(f, g, fd, gd);
  return RatFun(pick_var(f, g), f.num * fd - g.num * gd, std::move(den));
}

RatFun operator-(const RatFun& f) {
  RatFun r = f;
  r.num = -r.num;
  return r;
}

// cancel gcd(a, b) against both, shrinking the final normalization
static void cross_cancel(SPoly& a, SPoly& b) {
  if (a.is_zero() || a.deg() == 0 || b.deg() == 0) return;
  SPoly g = SPoly::gcd(a, b);
  if (g.deg() > 0) { a = a / g; b = b / g; }
}

RatFun operator*(const RatFun& f, const RatFun& g) {
  check_var(f, g);
  SPoly n1 = f.num, d1 = f.den, n2 = g.num, d2 = g.den;
  cross_cancel(n1, d2);
  cross_cancel(n2, d1);
  return RatFun(pick_var(f, g), n1 * n2, d1 * d2);
}

RatFun operator/(const RatFun& f, const RatFun& g) {
  check_var(f, g);
  if (g.is_zero()) throw std::domain_error("RatFun: division by zero");
  SPoly n1 = f.num, d1 = f.den, n2 = g.den, d2 = g.num;
  cross_cancel(n1, d2);
  cross_cancel(n2, d1);
  return RatFun(pick_var(f, g), n1 * n2, d1 * d2);
}

bool operator==(const RatFun& f, const RatFun& g) {
  return f.num == g.num && f.den == g.den;
}

RatFun RatFun::pow(long n) const {
  if (n == 0) return constant(var, ScalarQ(1L));
  RatFun base = n > 0 ? *this : constant(var, ScalarQ(1L)) / *this;
  unsigned long m = n > 0 ? (unsigned long)n : (unsigned long)(-n);
  RatFun r = constant(var, ScalarQ(1L));
  while (m) {
    if (m & 1) r = r * base;
    base = base * base;
    m >>= 1;
  }
  return r;
}

RatFun RatFun::subst_inv() const {
  // f(1/x) = x^(dd - dn) * rev(num) / rev(den) after clearing x powers
  long dn = num.deg(), dd = den.deg();
  SPoly n = num.reverse(), d = den.reverse();
  if (dd > dn)
    n = n.shifted(size_t(dd - dn));
  else if (dn > dd)
    d = d.shifted(size_t(dn - dd));
  return RatFun(var, std::move(n), std::move(d));
}

RatFun RatFun::subst_scale(const ScalarQ& s) const {
  if (s.is_zero()) throw std::domain_error("RatFun: scaling by zero");
  return RatFun(var, num.scale(s), den.scale(s));
}

RatFun RatFun::rename(const std::string& v) const {
  RatFun r = *this;
  r.var = v;
  return r;
}

ScalarQ RatFun::eval(const ScalarQ& x) const {
  ScalarQ d = den.eval(x);
  if (d.is_zero()) throw std::domain_error("RatFun: pole at evaluation point");
  return num.eval(x) / d;
}

ScalarQ LaurentTail::coeff(long n) const {
  long idx = at_infinity ? lead - n : n - lead;
  if (idx < 0) return ScalarQ();
  if (idx >= long(coeffs.size())) {
    if (exact) return ScalarQ();
    throw std::out_of_range("LaurentTail: coefficient beyond truncation order");
  }
  return coeffs[size_t(idx)];
}

LaurentTail RatFun::laurent_at_zero(long order) const {
  LaurentTail t;
  t.at_infinity = false;
  if (num.is_zero()) { t.lead = 0; t.exact = true; return t; }
  long vn = num.val(), vd = den.val();
  t.lead = vn - vd;
  // strip the x-power from the denominator, then do series division
  SPoly n = num, d = den;
  n.c.erase(n.c.begin(), n.c.begin() + vn);
  d.c.erase(d.c.begin(), d.c.begin() + vd);
  t.exact = (d.deg() == 0);
  ScalarQ d0inv = ScalarQ(1L) / d.c[0];
  std::vector<ScalarQ> out;
  long count = t.exact ? n.deg() + 1 : order;
  for (long k = 0; k < count; ++k) {
    ScalarQ v = n.at(size_t(k));
    for (long j = 1; j <= k && j <= d.deg(); ++j) v = v - d.c[size_t(j)] * out[size_t(k - j)];
    out.push_back(v * d0inv);
  }
  while (!out.empty() && out.back().is_zero() && t.exact) out.pop_back();
  t.coeffs = std::move(out);
  return t;
}

LaurentTail RatFun::laurent_at_infinity(long order) const {
  LaurentTail t0 = subst_inv().laurent_at_zero(order);
  LaurentTail t;
  t.at_infinity = true;
  t.lead = -t0.lead;
  t.coeffs = std::move(t0.coeffs);
  t.exact = t0.exact;
  return t;
}

LaurentTail laurent(const RatFun& f, bool at_infinity, long order) {
  return at_infinity ? f.laurent_at_infinity(order) : f.laurent_at_zero(order);
}

static std::string spoly_str(const SPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = p.c.size(); i-- > 0;) {
    if (p.c[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = p.c[i].str();
    bool unit = (p.c[i] == ScalarQ(1L) && i > 0);
    if (!unit) {
      if (cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos) os << "(" << cs << ")";
      else os << cs;
    }
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string RatFun::str() const {
  std::string n = spoly_str(num, var);
  if (den.deg() == 0 && den.c[0] == ScalarQ(1L)) return n;
  if (num.deg() > 0) n = "(" + n + ")";
  return n + "/(" + spoly_str(den, var) + ")";
}

}  // namespace eisgen
