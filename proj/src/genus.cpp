#include "eisgen/genus.hpp"

namespace eisgen::genus {

RepData RepData::trivial(const curve::CurveData& C) {
  if (!C.traces_complete)
    throw UnpairedData("curve numerator does not split into dual trace pairs");
  RepData r;
  r.h0 = {0};
  r.h2 = {1};
  r.h1 = C.traces;
  return r;
}

RepData RepData::concat(const RepData& other) const {
  RepData r = *this;
  r.h0.insert(r.h0.end(), other.h0.begin(), other.h0.end());
  r.h2.insert(r.h2.end(), other.h2.begin(), other.h2.end());
  r.h1.insert(r.h1.end(), other.h1.begin(), other.h1.end());
  return r;
}

// (a^{1/2} b^{1/2} - a^{-1/2} b^{-1/2}) assembled in dual pairs so only
// integer powers of a survive; see the pair expansions in lhat below
static RatFun pair_factor_02(long b0, long b2) {
  RatFun a = RatFun::variable("a");
  ScalarQ plus = ScalarQ::q_half_pow(b0 + b2);
  ScalarQ minus = ScalarQ::q_half_pow(b0 - b2) + ScalarQ::q_half_pow(b2 - b0);
  return a * RatFun::constant("a", plus) + a.pow(-1) * RatFun::constant("a", ScalarQ(1L) / plus) -
         RatFun::constant("a", minus);
}

static RatFun pair_factor_1(const Int& s) {
  RatFun a = RatFun::variable("a");
  return a * RatFun::constant("a", ScalarQ::q_half_pow(1)) +
         a.pow(-1) * RatFun::constant("a", ScalarQ::q_half_pow(-1)) -
         RatFun::constant("a", ScalarQ(Rat(s)) * ScalarQ::q_half_pow(-1));
}

RatFun lhat(const RepData& rep) {
  if (rep.h0.size() != rep.h2.size())
    throw UnpairedData("degree 0 and degree 2 eigenvalue lists must pair up");
  RatFun num = RatFun::constant("a", ScalarQ(1L));
  for (auto& s : rep.h1) num = num * pair_factor_1(s);
  RatFun den = RatFun::constant("a", ScalarQ(1L));
  for (size_t i = 0; i < rep.h0.size(); ++i)
    den = den * pair_factor_02(rep.h0[i], rep.h2[i]);
  return num / den;
}

RatFun xi_pair_weight(const curve::CurveData& C) {
  RatFun t = RatFun::variable("t");
  RatFun one = RatFun::constant("t", ScalarQ(1L));
  RatFun w = curve::xi(C) * (one - t.pow(-1)) *
             (one - RatFun::constant("t", ScalarQ::q()) * t);
  // Laurent polynomial: denominator must be a monomial in t
  if (w.den.val() != w.den.deg())
    throw std::logic_error("xi pair weight failed to cancel its denominator");
  return w;
}

// substitute t -> a^2 by stretching exponents
static SPoly stretch(const SPoly& p) {
  SPoly r;
  for (size_t i = 0; i < p.c.size(); ++i)
    if (!p.c[i].is_zero()) r = r + SPoly::monomial(p.c[i], 2 * i);
  return r;
}

RatFun scattering(const curve::CurveData& C) {
  RatFun x = curve::xi(C);
  RatFun sq("a", stretch(x.num), stretch(x.den));  // xi(a^2)
  return sq.subst_inv() / sq;
}

// contour strictly outside every pole of f/a
static ScalarQ outer_integral(const RatFun& f) {
  long top = 0;
  for (auto& p : pole_census(f)) {
    // ceil(e) + 1 as a safe radius exponent
    long c = (p.e.num >= 0 ? (p.e.num + p.e.den - 1) / p.e.den : p.e.num / p.e.den) + 1;
    top = std::max(top, c);
  }
  return circle_integral(f, Frac{top, 1});
}

ScalarQ integrate_flag(const BoxClass& box) {
  RatFun a = RatFun::variable("a");
  RatFun one = RatFun::constant("a", ScalarQ(1L));
  RatFun wt = one / (one - a.pow(-2));
  RatFun sym = box.w2 * wt + box.w2.subst_inv() * wt.subst_inv();
  return circle_integral(box.w1 * sym, Frac{0, 1});
}

ScalarQ integrate_cotangent(const BoxClass& box) {
  RatFun a = RatFun::variable("a");
  RatFun one = RatFun::constant("a", ScalarQ(1L));
  RatFun wt = one / ((one - a.pow(-2)) * (one - RatFun::constant("a", ScalarQ::q()) * a * a));
  return outer_integral(box.w1 * box.w2 * wt);
}

ScalarQ integrate_T(const BoxClass& box, const curve::CurveData& C) {
  RatFun L = scattering(C);
  RatFun f = box.w1 * box.w2 + L * box.w1 * box.w2.subst_inv();
  return (ScalarQ(1L) - ScalarQ::q()) * outer_integral(f);
}

}  // namespace eisgen::genus
