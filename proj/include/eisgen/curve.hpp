// Weil data of a smooth projective curve over F_q: zeta/xi numerator from
// point counts, functional equation, and trace extraction for the pairing
// factors used downstream.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "eisgen/gf.hpp"
#include "eisgen/qfield.hpp"
#include "eisgen/ratfun.hpp"

namespace eisgen::curve {

struct Inconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WeilViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CurveData {
  long q = 2;
  long g = 0;
  std::vector<Int> P;          // numerator coefficients, P[0] = 1, degree 2g
  std::vector<Int> counts;     // N_1..N_g when supplied
  std::vector<Int> traces;     // s_i with 1 - s_i t + q t^2 dividing P
  bool traces_complete = true; // false when P has a non-quadratic leftover
  bool weil_ok = true;         // advisory: numeric root moduli ~ q^{-1/2}

  // N_n recomputed from P via the alpha power sums
  Int point_count(long n) const;
};

CurveData zeta_from_counts(long q, long g, const std::vector<Int>& counts);

CurveData curve_from_plane_model(const gf::Trivariate& F, long q, long g);

// zeta_C(t) = P(t) / ((1-t)(1-qt))
RatFun zeta(const CurveData& C);

// xi_C(t) = (q^{1/2} t)^{1-g} zeta_C(t); symmetric under t -> 1/(qt)
RatFun xi(const CurveData& C);

RatFun projective_line_xi(long q);

}  // namespace eisgen::curve
