// Arithmetic in F_q = F_{p^k} for p^k <= 2^16, polynomial/binary-form
// enumeration, and exhaustive projective point counting.
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eisgen::gf {

struct NotPrime : std::invalid_argument {
  explicit NotPrime(long p) : std::invalid_argument(std::to_string(p) + " is not prime") {}
};
struct TooLarge : std::invalid_argument {
  TooLarge() : std::invalid_argument("field size exceeds 2^16") {}
};

// Elements are indices 0..q-1 encoding coefficient vectors over F_p in base p
// (so 0 and 1 are the additive/multiplicative identities for every field).
class Field {
 public:
  uint32_t p = 2, k = 1, q = 2;
  std::vector<uint32_t> modulus;  // monic irreducible, low-first, size k+1

  static Field make(uint32_t p, uint32_t k);

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, uint64_t e) const;

  std::string str() const { return "F_" + std::to_string(q); }

 private:
  std::vector<uint32_t> unpack(uint32_t a) const;
  uint32_t pack(const std::vector<uint32_t>& v) const;
};

// dense univariate polynomial over a Field, low degree first
using FPoly = std::vector<uint32_t>;

long fpoly_deg(const FPoly& f);
FPoly fpoly_mul(const Field& F, const FPoly& a, const FPoly& b);
FPoly fpoly_rem(const Field& F, FPoly a, const FPoly& b);
FPoly fpoly_gcd(const Field& F, FPoly a, FPoly b);
bool fpoly_irreducible(const Field& F, const FPoly& f);

// trivariate homogeneous polynomial as monomial list; coefficients are
// integers reduced mod p on use, so plane models can be written over Z
struct Trivariate {
  struct Mono { unsigned i, j, k; long c; };
  std::vector<Mono> monos;
  unsigned degree() const;
  bool is_zero_poly() const { return monos.empty(); }
};

// number of points of {F = 0} in P^2(F_{q^n}) by exhaustive enumeration of
// projective representatives (q given by `field`, extension degree n)
long count_projective_zeros(const Trivariate& F, const Field& field, unsigned n);

// Binary forms of declared degree d = coefficient vectors of length d+1
// (any nonzero vector is homogeneous of degree d).  Two forms are coprime
// when their dehomogenizations at y=1 are coprime and they do not share the
// root at infinity (i.e. not both divisible by y).
bool forms_coprime(const Field& F, const FPoly& a, long degA, const FPoly& b, long degB);

// pairs (F, G) of binary forms of degrees (degF, degG), G != 0, gcd(F,G)
// a unit, counted up to a common scalar; the visitor (if any) sees one
// representative of each scalar orbit (the one with G normalized monic-like)
long enumerate_coprime_form_pairs(const Field& F, long degF, long degG,
                                  const std::function<void(const FPoly&, const FPoly&)>& visit = nullptr);

// all pairs with G != 0 up to common scalar (no coprimality): the
// quasisection count (q^{2d+k+2} - q^{d+k+1})/(q-1) with degF = k+d, degG = d
long enumerate_form_pairs(const Field& F, long degF, long degG);

}  // namespace eisgen::gf
