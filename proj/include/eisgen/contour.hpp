// Residues at algebraic places and contour integrals classified by
// q-magnitude.  Under the standing assumption q real > 1, every pole in
// scope has |location| = q^e for a rational exponent e; the census reads e
// off Newton-polygon slopes in the q-degree valuation, so the criterion is
// exact and decidable (no analytic neighborhoods).
#pragma once

#include "eisgen/ratfun.hpp"

namespace eisgen {

struct Place {
  SPoly minpoly;        // monic in the active variable; x itself for the origin
  int mult = 1;
  Frac e;               // |location| = q^e (ignored for the origin)
  bool origin = false;
  // exact location for degree-1 places (minpoly = x - loc)
  bool is_linear() const { return minpoly.deg() == 1; }
  ScalarQ location() const;
  std::string str() const;
};

struct PoleOnContour : std::runtime_error {
  explicit PoleOnContour(const std::string& place)
      : std::runtime_error("pole on contour: " + place) {}
};
struct NotAPole : std::runtime_error {
  NotAPole() : std::runtime_error("requested place is not a pole") {}
};
struct MixedSlopeFactor : std::runtime_error {
  explicit MixedSlopeFactor(const std::string& f)
      : std::runtime_error("denominator factor with mixed q-magnitudes: " + f) {}
};

// all poles of f, with multiplicities and magnitude exponents
std::vector<Place> pole_census(const RatFun& f);

// sum of residues of f(x) dx over the Galois orbit of the place,
// computed by arithmetic modulo the minimal polynomial (never root-finding)
ScalarQ residue(const RatFun& f, const Place& p);

// residue at a single explicit location
ScalarQ residue_at_point(const RatFun& f, const ScalarQ& loc);

// (1/2 pi i) * integral of f(x) dx/x over |x| = q^c: the sum of residues of
// f/x over all places with magnitude exponent < c, including the origin
ScalarQ circle_integral(const RatFun& f, const Frac& c);

// extended gcd over K[x]: returns g (monic) with u*a + v*b = g
SPoly ext_gcd(const SPoly& a, const SPoly& b, SPoly& u, SPoly& v);

}  // namespace eisgen
