// The (q+1)-valent tree of rank-2 lattices over F_q[[t]], with Birkhoff
// factorization of Laurent matrices and the induced bundle-type labelling.
//
// Vertex <-> matrix convention: a vertex is the homothety class of the
// lattice spanned by the columns of [[t^alpha, u], [0, t^beta]] (u a
// polynomial reduced mod t^alpha, exponents shifted so the minimal
// valuation is 0).  That matrix is also used as the transition function of
// the associated rank-2 bundle, glued over the formal disc at the chosen
// point; the bundle type is read off its Birkhoff factorization.
#pragma once

#include "eisgen/gf.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace eisgen::tree {

struct PrecisionExceeded : std::runtime_error {
  explicit PrecisionExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Laurent polynomial over F_q: c[i] is the coefficient of t^(lo+i)
struct LPoly {
  long lo = 0;
  std::vector<uint32_t> c;

  bool is_zero() const { return c.empty(); }
  long val() const { return lo; }                      // requires trimmed nonzero
  long hi() const { return lo + long(c.size()) - 1; }  // top exponent
  uint32_t at(long e) const {
    return (e >= lo && e <= hi()) ? c[size_t(e - lo)] : 0u;
  }
  void trim();
  std::string str() const;

  static LPoly monomial(long e, uint32_t coef = 1);
  static LPoly one() { return monomial(0); }
};

LPoly lp_add(const gf::Field& F, const LPoly& a, const LPoly& b);
LPoly lp_sub(const gf::Field& F, const LPoly& a, const LPoly& b);
LPoly lp_mul(const gf::Field& F, const LPoly& a, const LPoly& b);
LPoly lp_scale(const gf::Field& F, uint32_t s, const LPoly& a);
LPoly lp_shift(const LPoly& a, long m);  // multiply by t^m
LPoly lp_trunc_above(const LPoly& a, long hi_exp);
bool lp_eq(const LPoly& a, const LPoly& b);

// truncated series division a / b up to and including exponent hi_exp
// (b != 0; the quotient is exact when b is a monomial dividing a)
LPoly lp_div_trunc(const gf::Field& F, const LPoly& a, const LPoly& b, long hi_exp);

struct LaurentMatrix {
  std::array<std::array<LPoly, 2>, 2> m;

  static LaurentMatrix identity();
  static LaurentMatrix diag(const LPoly& a, const LPoly& d);
  LPoly det(const gf::Field& F) const;
  std::string str() const;
};

LaurentMatrix mat_mul(const gf::Field& F, const LaurentMatrix& A, const LaurentMatrix& B);
bool mat_eq_trunc(const LaurentMatrix& A, const LaurentMatrix& B, long hi_exp);

// homothety class of the lattice [[t^alpha, u], [0, t^beta]]; canonical form
// has u reduced mod t^alpha with nonnegative exponents, min(alpha, beta,
// val u) = 0, and u stored low-first with trailing zeros trimmed
struct TreeVertex {
  long alpha = 0, beta = 0;
  std::vector<uint32_t> u;

  friend bool operator==(const TreeVertex& a, const TreeVertex& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.u == b.u;
  }
  friend bool operator<(const TreeVertex& a, const TreeVertex& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    if (a.beta != b.beta) return a.beta < b.beta;
    return a.u < b.u;
  }
  LaurentMatrix matrix() const;
  std::string str() const;
};

TreeVertex root_vertex();

// column reduction of an arbitrary basis matrix to the canonical vertex;
// throws std::invalid_argument on singular input, PrecisionExceeded if the
// bottom-row elimination fails to terminate within the iteration budget
TreeVertex canonical_lattice(const gf::Field& F, const LaurentMatrix& basis);

// the q+1 index-q sublattices between L and tL, in canonical form
std::vector<TreeVertex> neighbors(const gf::Field& F, const TreeVertex& v);

struct BirkhoffFactors {
  LaurentMatrix minus;  // entries polynomial in 1/t, invertible at infinity
  long k1 = 0, k2 = 0;  // diagonal exponents, k1 >= k2
  LaurentMatrix plus;   // power series entries, truncated at the precision
};

// g = minus * diag(t^k1, t^k2) * plus, exact up to t^prec
BirkhoffFactors birkhoff_split(const gf::Field& F, const LaurentMatrix& g, long prec);

// k1 - k2 of the vertex's transition matrix (nonnegative: the PGL(2) type)
long vertex_bundle_type(const gf::Field& F, const TreeVertex& v, long prec);

// types of the q+1 neighbors, sorted descending
std::vector<long> neighbor_profile(const gf::Field& F, const TreeVertex& v, long prec);

struct ExploreResult {
  std::vector<TreeVertex> verts;          // BFS order, root first
  std::vector<long> depth;                // distance from the root
  std::vector<std::vector<size_t>> adj;   // indices of the q+1 neighbors
  std::vector<size_t> sphere_sizes;       // one entry per BFS layer
};

// all vertices within the given distance of the root (precision = depth + 2)
ExploreResult explore(uint32_t q, long depth);

}  // namespace eisgen::tree
