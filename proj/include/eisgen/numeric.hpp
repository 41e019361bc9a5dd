// Double-precision helpers: advisory oracles only, never feeding exact
// results (Weil-bound checks, randomized contour cross-checks in tests).
#pragma once

#include "eisgen/ratfun.hpp"

#include <complex>

namespace eisgen {

using Cplx = std::complex<double>;

// all complex roots of a double-coefficient polynomial (Durand-Kerner)
std::vector<Cplx> poly_roots(const std::vector<double>& coeffs);

Cplx eval_spoly(const SPoly& p, double q, Cplx x);
Cplx eval_ratfun(const RatFun& f, double q, Cplx x);

// (1/2 pi i) * contour integral of f dx/x over |x| = radius, by trapezoid
// rule with n sample points
Cplx numeric_circle_integral(const RatFun& f, double q, double radius, int n = 4096);

}  // namespace eisgen
