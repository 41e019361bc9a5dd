// Toy equivariant character calculus on C^n with scaling action: affine
// characters, projective Euler characteristics, the scissor relation between
// the two contour expansions, and the q-Gamma series.
#pragma once

#include <vector>

#include "eisgen/contour.hpp"
#include "eisgen/ratfun.hpp"

namespace eisgen::kchar {

// character of functions on C^n, the rational function (1 - 1/z)^{-n};
// expand with laurent_at_infinity (|z| > 1) or laurent_at_zero (the
// Thom-space side, |z| < 1)
RatFun char_affine(long n);

// chi(P^{n-1}, O(m)) by the signed-binomial oracle prod_{i=1}^{n-1} (m+i)/i
long chi_projective(long n, long m);

struct ScissorCheck {
  ScalarQ outer;   // contour just outside |z| = 1
  ScalarQ middle;  // chi(P^{n-1}, O(m))
  ScalarQ inner;   // contour just inside |z| = 1
  bool ok = false; // outer == middle + inner
};

ScissorCheck scissor_check(long n, long m);

// Gamma_q(z) truncated at z^N: coefficients c_0..c_{N-1} over Q(q),
// c_d = 1 / prod_{i=1..d} (1 - q^i)
std::vector<QRat> q_gamma(long N);

}  // namespace eisgen::kchar
