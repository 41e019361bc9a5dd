// Completed L-genus factory and the three equivariant integrals over the
// flag variety, its cotangent space, and the general-curve T-locus.
#pragma once

#include <stdexcept>
#include <vector>

#include "eisgen/contour.hpp"
#include "eisgen/curve.hpp"
#include "eisgen/ratfun.hpp"

namespace eisgen::genus {

struct UnpairedData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Frobenius data of a representation: cohomology in degrees 0 and 2 comes in
// dual pairs of q-power eigenvalues (exponents listed), degree 1 in dual
// pairs (beta, q/beta) recorded by the integer trace beta + q/beta.
struct RepData {
  std::vector<long> h0;  // exponents b with eigenvalue q^b
  std::vector<long> h2;  // dual exponents, same length as h0
  std::vector<Int> h1;   // one trace per dual pair

  static RepData trivial(const curve::CurveData& C);

  RepData concat(const RepData& other) const;
};

// completed L-genus as a rational function of a (integer powers only):
// degree-1 factors over the degree-(0,2) factors
RatFun lhat(const RepData& rep);

// W(t) = xi_C(t) * (1 - 1/t)(1 - qt); always a Laurent polynomial,
// symmetric under t -> 1/(qt)
RatFun xi_pair_weight(const curve::CurveData& C);

// L(a) = xi_C(a^{-2}) / xi_C(a^2); for the projective line (qa^2-1)/(a^2-q)
RatFun scattering(const curve::CurveData& C);

struct BoxClass {
  RatFun w1, w2;  // an element w1 (x) w2 of the two-sided character ring
};

// invariant part of w1 * (Weyl-symmetrized w2/(1-a^{-2})), contour |a| = 1
ScalarQ integrate_flag(const BoxClass& box);

// contour |a| >> 1 against the weight 1/((1-a^{-2})(1-q a^2))
ScalarQ integrate_cotangent(const BoxClass& box);

// (1-q) * contour_{|a|>>1} [w1(a)w2(a) + L(a) w1(a) w2(1/a)] da/(2 pi i a)
ScalarQ integrate_T(const BoxClass& box, const curve::CurveData& C);

}  // namespace eisgen::genus
