// Eisenstein series on Bun_{PGL(2)}(P^1), constant term, the Sigma
// projector, pseudo-Eisenstein series, the L^2 pairing and its
// continuous/discrete spectral split.
#pragma once

#include <stdexcept>

#include "eisgen/bun.hpp"
#include "eisgen/curve.hpp"
#include "eisgen/genus.hpp"

namespace eisgen::spectral {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// the projective line over F_q (q enters the formulas symbolically)
curve::CurveData p1_curve();

// Eis(k, a) = (q^{1/2} a)^k + L(a) (q^{1/2}/a)^k with L = (qa^2-1)/(a^2-q)
RatFun eis(long k);

// CT(Eis(a))(O(k)) = (1/q) [ (a/q^{1/2})^k + L(a) (1/(q^{1/2}a))^k ]
RatFun constant_term(long k);

// functions on Bun_M are indexed by deg M = m >= -1; O(m) + O has bundle
// class kappa(m) = m for m >= 0 and kappa(-1) = 1
using MFun = std::map<long, RatFun>;

long kappa(long m);

// CT(phi)(O(m)) = phi(kappa(m)) / q^{m+1}; DomainError below m = -1
RatFun ct_of_function(const bun::BunFun& phi, long m);

// transpose of CT under the Bun_G inner product (1/|Aut|) and the Bun_M
// pairing (1/(q-1)) sum
bun::BunFun ct_transpose(const MFun& phi);
RatFun m_inner(const MFun& f, const MFun& g);

// Sigma w (a) = w(a) + L(a) w(1/a)
RatFun sigma(const RatFun& w, const curve::CurveData& C);

// Eis_w(k) = contour integral of Eis(k,a) w(a) da/(2 pi i a) at |a| >> 1;
// finitely supported
bun::BunFun pseudo_eis(const RatFun& w);

// (1/(q(q-1))) contour_{|a|>>1} w1(a) [w2(1/a) + L(a) w2(a)] da/(2 pi i a);
// equals the L^2 inner product of the pseudo-Eisenstein series
ScalarQ pairing_norm(const RatFun& w1, const RatFun& w2, const curve::CurveData& C);

struct SpectralSplit {
  ScalarQ continuous;  // unit-circle part
  ScalarQ disc_plus;   // residue at a = +q^{1/2}
  ScalarQ disc_minus;  // residue at a = -q^{1/2}
  ScalarQ r_plus, r_minus;  // the residue weights themselves
};

// split pairing_norm(w, w) into its continuous and two discrete pieces
SpectralSplit spectral_split(const RatFun& w);

struct SpectrumDesc {
  ScalarQ cont_lo, cont_hi;       // endpoints -2 q^{1/2}, +2 q^{1/2}
  ScalarQ disc_pos, disc_neg;     // +-(q+1)
  std::string dual;               // dual-group description
};

SpectrumDesc spectrum();

// true when s = n(q)/d(q) with all coefficients of n(1+u), d(1+u)
// nonnegative and the value nonzero: a certificate of positivity on q > 1
bool positive_for_q_gt_1(const ScalarQ& s);

}  // namespace eisgen::spectral
