// Exact coefficient arithmetic: Q, Q[q], Q(q) and the quadratic extension
// Q(q) + Q(q)*sqrt(q) that every other module computes over.
//
// All values are normalized on construction, so operator== is structural.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace eisgen {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Small exact fraction for magnitude exponents (|pole| = q^e).  Exponents stay
// tiny (multiples of 1/4 in practice), so long is plenty.
struct Frac {
  long num = 0;
  long den = 1;

  Frac() = default;
  Frac(long n) : num(n), den(1) {}
  Frac(long n, long d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw std::invalid_argument("Frac: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  friend Frac operator+(Frac a, Frac b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Frac operator-(Frac a, Frac b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Frac operator-(Frac a) { return Frac(-a.num, a.den); }
  friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(Frac a, Frac b) { return !(a == b); }
  friend bool operator<(Frac a, Frac b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(Frac a, Frac b) { return a.num * b.den <= b.num * a.den; }
  double value() const { return double(num) / double(den); }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

// ---------------------------------------------------------------------------
// Dense polynomial in q with rational coefficients, low degree first.
class QPoly {
 public:
  std::vector<Rat> c;

  QPoly() = default;
  explicit QPoly(Rat r) { if (r != 0) c.push_back(std::move(r)); }
  explicit QPoly(long n) { if (n != 0) c.push_back(Rat(n)); }
  static QPoly var() { return monomial(Rat(1), 1); }
  static QPoly monomial(Rat r, size_t k) {
    QPoly p;
    if (r != 0) { p.c.assign(k + 1, Rat(0)); p.c.back() = std::move(r); }
    return p;
  }

  bool is_zero() const { return c.empty(); }
  long deg() const { return c.empty() ? -1 : long(c.size()) - 1; }
  const Rat& lead() const { return c.back(); }
  Rat at(size_t i) const { return i < c.size() ? c[i] : Rat(0); }

  void trim() { while (!c.empty() && c.back() == 0) c.pop_back(); }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) + b.at(i);
    r.trim();
    return r;
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) - b.at(i);
    r.trim();
    return r;
  }
  friend QPoly operator-(const QPoly& a) {
    QPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  // division in Q[q]; requires b != 0
  static void divrem(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
    if (b.is_zero()) throw std::domain_error("QPoly: division by zero");
    rem = a;
    quo = QPoly();
    if (a.deg() >= b.deg()) quo.c.assign(a.deg() - b.deg() + 1, Rat(0));
    while (rem.deg() >= b.deg()) {
      Rat f = rem.lead() / b.lead();
      long k = rem.deg() - b.deg();
      quo.c[k] = f;
      for (size_t i = 0; i < b.c.size(); ++i) rem.c[i + k] -= f * b.c[i];
      rem.trim();
    }
    quo.trim();
  }
  friend QPoly operator/(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    divrem(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("QPoly: inexact division");
    return q;
  }

  // rescale so the coefficients are coprime integers (Euclid with raw
  // rational remainders blows up; keeping the sequence primitive does not)
  static QPoly primitive(QPoly p) {
    if (p.is_zero()) return p;
    Int l = 1, g = 0;
    for (auto& x : p.c) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
    for (auto& x : p.c) g = boost::multiprecision::gcd(g, Int(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x))));
    Rat s = Rat(l, g);
    for (auto& x : p.c) x *= s;
    return p;
  }

  static QPoly gcd(QPoly a, QPoly b) {
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    while (!b.is_zero()) {
      QPoly q, r;
      divrem(a, b, q, r);
      a = std::move(b);
      b = primitive(std::move(r));
    }
    if (!a.is_zero())
      for (Rat lead = a.lead(); auto& x : a.c) x /= lead;  // monic
    return a;
  }

  QPoly derivative() const {
    QPoly r;
    for (size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * Rat(long(i)));
    r.trim();
    return r;
  }
  Rat eval(const Rat& x) const {
    Rat v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
  }
  double eval(double x) const {
    double v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * x + double(c[i]);
    return v;
  }
  std::string str() const;  // "q^2 - 3*q + 1/2" style, see qfield.cpp
};

// ---------------------------------------------------------------------------
// Q(q): reduced fraction of QPoly with monic denominator.
class QRat {
 public:
  QPoly num, den;

  QRat() : den(QPoly(1L)) {}
  QRat(long n) : num(QPoly(n)), den(QPoly(1L)) {}
  QRat(Rat r) : num(QPoly(std::move(r))), den(QPoly(1L)) {}
  QRat(QPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }
  explicit QRat(QPoly n) : num(std::move(n)), den(QPoly(1L)) {}
  static QRat q() { return QRat(QPoly::var()); }
  static QRat q_pow(long k) {
    if (k >= 0) return QRat(QPoly::monomial(Rat(1), size_t(k)));
    return QRat(QPoly(1L), QPoly::monomial(Rat(1), size_t(-k)));
  }

  void normalize() {
    if (den.is_zero()) throw std::domain_error("QRat: zero denominator");
    if (num.is_zero()) { den = QPoly(1L); return; }
    QPoly g = QPoly::gcd(num, den);
    if (g.deg() > 0) { num = num / g; den = den / g; }
    Rat lead = den.lead();
    for (auto& x : num.c) x /= lead;
    for (auto& x : den.c) x /= lead;
  }

  bool is_zero() const { return num.is_zero(); }
  bool is_one() const { return num == den; }

  friend QRat operator+(const QRat& a, const QRat& b) { return QRat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend QRat operator-(const QRat& a, const QRat& b) { return QRat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend QRat operator*(const QRat& a, const QRat& b) { return QRat(a.num * b.num, a.den * b.den); }
  friend QRat operator/(const QRat& a, const QRat& b) {
    if (b.is_zero()) throw std::domain_error("QRat: division by zero");
    return QRat(a.num * b.den, a.den * b.num);
  }
  friend QRat operator-(const QRat& a) { QRat r = a; r.num = -r.num; return r; }
  friend bool operator==(const QRat& a, const QRat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

  // degree in q of the fraction (num deg - den deg); qdeg(0) = LONG_MIN/2
  long qdeg() const { return is_zero() ? LONG_MIN / 2 : num.deg() - den.deg(); }

  Rat eval(const Rat& qv) const {
    Rat d = den.eval(qv);
    if (d == 0) throw std::domain_error("QRat: pole at evaluation point");
    return num.eval(qv) / d;
  }
  double eval(double qv) const { return num.eval(qv) / den.eval(qv); }

  std::string str() const;
};

// ---------------------------------------------------------------------------
// The coefficient field K = Q(q)[s]/(s^2 - q): values a + b*sqrt(q).
// The spec's half-power tag is the derived invariant of pure values:
// half_q = 0 when b = 0, half_q = 1 when a = 0.
class ScalarQ {
 public:
  QRat a, b;  // a + b*sqrt(q)

  ScalarQ() = default;
  ScalarQ(long n) : a(n) {}
  ScalarQ(Rat r) : a(std::move(r)) {}
  ScalarQ(QRat r) : a(std::move(r)) {}
  ScalarQ(QRat r, QRat half) : a(std::move(r)), b(std::move(half)) {}

  static ScalarQ q() { return ScalarQ(QRat::q()); }
  static ScalarQ sqrt_q() { return ScalarQ(QRat(0L), QRat(1L)); }
  // q^(h/2) for integer h (possibly negative)
  static ScalarQ q_half_pow(long h) {
    long k = (h >= 0 ? h : h - 1) / 2;  // floor(h/2)
    if (h % 2 == 0) return ScalarQ(QRat::q_pow(h / 2));
    return ScalarQ(QRat(0L), QRat::q_pow(k));
  }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_rational_in_q() const { return b.is_zero(); }
  // pure = representable in the spec's tagged serialization
  bool is_pure() const { return a.is_zero() || b.is_zero(); }
  int half_tag() const {
    if (!is_pure()) throw std::domain_error("ScalarQ: mixed value has no half tag");
    return a.is_zero() && !b.is_zero() ? 1 : 0;
  }

  friend ScalarQ operator+(const ScalarQ& x, const ScalarQ& y) { return ScalarQ(x.a + y.a, x.b + y.b); }
  friend ScalarQ operator-(const ScalarQ& x, const ScalarQ& y) { return ScalarQ(x.a - y.a, x.b - y.b); }
  friend ScalarQ operator-(const ScalarQ& x) { return ScalarQ(-x.a, -x.b); }
  friend ScalarQ operator*(const ScalarQ& x, const ScalarQ& y) {
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + q b1 b2 + (a1 b2 + a2 b1) s
    return ScalarQ(x.a * y.a + QRat::q() * x.b * y.b, x.a * y.b + x.b * y.a);
  }
  friend ScalarQ operator/(const ScalarQ& x, const ScalarQ& y) {
    // 1/(a + b s) = (a - b s)/(a^2 - q b^2); the norm vanishes only at 0
    // since q is transcendental over Q.
    QRat n = y.a * y.a - QRat::q() * y.b * y.b;
    if (n.is_zero()) throw std::domain_error("ScalarQ: division by zero");
    ScalarQ conj(y.a, -y.b);
    ScalarQ z = x * conj;
    return ScalarQ(z.a / n, z.b / n);
  }
  friend bool operator==(const ScalarQ& x, const ScalarQ& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const ScalarQ& x, const ScalarQ& y) { return !(x == y); }

  // q-degree in half-integer units: |value| ~ q^(qdeg2/2) for q >> 1
  // (used by the contour classifier's Newton polygons).
  long qdeg2() const {
    if (is_zero()) return LONG_MIN / 2;
    long da = a.is_zero() ? LONG_MIN / 2 : 2 * a.qdeg();
    long db = b.is_zero() ? LONG_MIN / 2 : 2 * b.qdeg() + 1;
    return std::max(da, db);
  }

  double eval(double qv) const { return a.eval(qv) + b.eval(qv) * std::sqrt(qv); }
  Rat eval_at_square(const Rat& root) const {  // exact value at q = root^2
    return a.eval(root * root) + b.eval(root * root) * root;
  }

  std::string str() const;
};

}  // namespace eisgen
