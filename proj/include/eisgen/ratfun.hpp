// Rational functions in one formal variable (a, t or z) over ScalarQ,
// with Laurent expansion and the substitutions x -> 1/x, x -> c*x that the
// functional equations need.
#pragma once

#include "eisgen/qfield.hpp"

#include <map>
#include <string>

namespace eisgen {

// dense polynomial over the coefficient field K = Q(q, sqrt q)
class SPoly {
 public:
  std::vector<ScalarQ> c;  // low degree first

  SPoly() = default;
  explicit SPoly(ScalarQ s) { if (!s.is_zero()) c.push_back(std::move(s)); }
  static SPoly var() { return monomial(ScalarQ(1L), 1); }
  static SPoly monomial(ScalarQ s, size_t k);

  bool is_zero() const { return c.empty(); }
  long deg() const { return c.empty() ? -1 : long(c.size()) - 1; }
  long val() const;  // order of vanishing at 0; -1 for the zero polynomial
  const ScalarQ& lead() const { return c.back(); }
  ScalarQ at(size_t i) const { return i < c.size() ? c[i] : ScalarQ(); }
  void trim();

  friend SPoly operator+(const SPoly& a, const SPoly& b);
  friend SPoly operator-(const SPoly& a, const SPoly& b);
  friend SPoly operator-(const SPoly& a);
  friend SPoly operator*(const SPoly& a, const SPoly& b);
  friend SPoly operator*(const ScalarQ& s, const SPoly& a);
  friend bool operator==(const SPoly& a, const SPoly& b) { return a.c == b.c; }
  friend bool operator!=(const SPoly& a, const SPoly& b) { return !(a == b); }

  static void divrem(const SPoly& a, const SPoly& b, SPoly& quo, SPoly& rem);
  friend SPoly operator/(const SPoly& a, const SPoly& b);  // exact division
  static SPoly gcd(SPoly a, SPoly b);                      // monic

  SPoly derivative() const;
  SPoly monic() const;
  SPoly shifted(size_t k) const;  // * x^k
  ScalarQ eval(const ScalarQ& x) const;
  SPoly pow(unsigned n) const;
  // p(c*x) and x^deg * p(1/x)
  SPoly scale(const ScalarQ& s) const;
  SPoly reverse() const;
};

struct LaurentTail {
  bool at_infinity = false;
  long lead = 0;                 // leading exponent (lowest at 0, highest at inf)
  std::vector<ScalarQ> coeffs;   // from the leading exponent inwards
  bool exact = false;            // true when the function is a Laurent polynomial
  // coefficient of x^n (within the computed window)
  ScalarQ coeff(long n) const;
  long order() const { return long(coeffs.size()); }
};

class RatFun {
 public:
  std::string var = "a";
  SPoly num, den;

  RatFun() : den(SPoly(ScalarQ(1L))) {}
  RatFun(std::string v, SPoly n, SPoly d);
  static RatFun variable(const std::string& v) { return RatFun(v, SPoly::var(), SPoly(ScalarQ(1L))); }
  static RatFun constant(const std::string& v, ScalarQ s) { return RatFun(v, SPoly(std::move(s)), SPoly(ScalarQ(1L))); }
  static RatFun from_scalar(ScalarQ s) { return constant("a", std::move(s)); }

  void normalize();
  bool is_zero() const { return num.is_zero(); }
  bool is_constant() const { return num.deg() <= 0 && den.deg() <= 0; }
  ScalarQ as_scalar() const;  // throws unless constant

  friend RatFun operator+(const RatFun& f, const RatFun& g);
  friend RatFun operator-(const RatFun& f, const RatFun& g);
  friend RatFun operator-(const RatFun& f);
  friend RatFun operator*(const RatFun& f, const RatFun& g);
  friend RatFun operator/(const RatFun& f, const RatFun& g);
  friend bool operator==(const RatFun& f, const RatFun& g);
  friend bool operator!=(const RatFun& f, const RatFun& g) { return !(f == g); }

  RatFun pow(long n) const;

  // substitutions used throughout: x -> 1/x and x -> c*x (c a nonzero scalar,
  // typically q^(s/2)); both are exact endomorphisms of the type.
  RatFun subst_inv() const;
  RatFun subst_scale(const ScalarQ& c) const;
  RatFun rename(const std::string& v) const;

  ScalarQ eval(const ScalarQ& x) const;
  LaurentTail laurent_at_zero(long order) const;
  LaurentTail laurent_at_infinity(long order) const;

  std::string str() const;
};

// shared laurent entry point: at = 0 or infinity
LaurentTail laurent(const RatFun& f, bool at_infinity, long order);

}  // namespace eisgen
