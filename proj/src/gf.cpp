#include "eisgen/gf.hpp"

#include <algorithm>
#include <cassert>

namespace eisgen::gf {

static bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<uint32_t> Field::unpack(uint32_t a) const {
  std::vector<uint32_t> v(k);
  for (uint32_t i = 0; i < k; ++i) { v[i] = a % p; a /= p; }
  return v;
}

uint32_t Field::pack(const std::vector<uint32_t>& v) const {
  uint32_t a = 0;
  for (size_t i = v.size(); i-- > 0;) a = a * p + v[i] % p;
  return a;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
  if (k == 1) return (a + b) % p;
  auto va = unpack(a), vb = unpack(b);
  for (uint32_t i = 0; i < k; ++i) va[i] = (va[i] + vb[i]) % p;
  return pack(va);
}

uint32_t Field::neg(uint32_t a) const {
  if (k == 1) return a ? p - a : 0;
  auto v = unpack(a);
  for (auto& c : v) c = c ? p - c : 0;
  return pack(v);
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
  if (k == 1) return uint32_t(uint64_t(a) * b % p);
  auto va = unpack(a), vb = unpack(b);
  std::vector<uint32_t> prod(2 * k - 1, 0);
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = 0; j < k; ++j)
      prod[i + j] = uint32_t((prod[i + j] + uint64_t(va[i]) * vb[j]) % p);
  // reduce by the monic modulus
  for (size_t d = prod.size(); d-- > k;) {
    uint32_t c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (uint32_t i = 0; i < k; ++i)
      prod[d - k + i] = uint32_t((prod[d - k + i] + uint64_t(c) * (p - modulus[i] % p)) % p);
  }
  prod.resize(k);
  return pack(prod);
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("division by zero in " + str());
  return pow(a, uint64_t(q) - 2);
}

long fpoly_deg(const FPoly& f) {
  for (size_t i = f.size(); i-- > 0;)
    if (f[i]) return long(i);
  return -1;
}

FPoly fpoly_mul(const Field& F, const FPoly& a, const FPoly& b) {
  if (a.empty() || b.empty()) return {};
  FPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  return r;
}

FPoly fpoly_rem(const Field& F, FPoly a, const FPoly& b) {
  long db = fpoly_deg(b);
  assert(db >= 0);
  uint32_t lead_inv = F.inv(b[db]);
  for (long da = fpoly_deg(a); da >= db; da = fpoly_deg(a)) {
    uint32_t c = F.mul(a[da], lead_inv);
    for (long i = 0; i <= db; ++i)
      a[da - db + i] = F.sub(a[da - db + i], F.mul(c, b[i]));
  }
  a.resize(size_t(std::max(db, 0L)));
  return a;
}

FPoly fpoly_gcd(const Field& F, FPoly a, FPoly b) {
  while (fpoly_deg(b) >= 0) {
    FPoly r = fpoly_rem(F, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  long d = fpoly_deg(a);
  if (d >= 0) {  // monic normalization
    uint32_t li = F.inv(a[d]);
    for (auto& c : a) c = F.mul(c, li);
  }
  return a;
}

bool fpoly_irreducible(const Field& F, const FPoly& f) {
  long d = fpoly_deg(f);
  if (d < 1) return false;
  // no roots / no factor of degree <= d/2: gcd with x^{q^i} - x
  FPoly x = {0, 1};
  FPoly xq = x;
  for (long i = 1; 2 * i <= d; ++i) {
    // xq <- xq^q mod f
    FPoly t = {1};
    FPoly base = xq;
    uint64_t e = F.q;
    while (e) {
      if (e & 1) t = fpoly_rem(F, fpoly_mul(F, t, base), f);
      base = fpoly_rem(F, fpoly_mul(F, base, base), f);
      e >>= 1;
    }
    xq = t;
    FPoly diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = F.sub(diff[1], 1);
    if (fpoly_deg(fpoly_gcd(F, f, diff)) != 0) return false;
  }
  return true;
}

Field Field::make(uint32_t p, uint32_t k) {
  if (!is_prime(p)) throw NotPrime(long(p));
  if (k < 1) throw std::invalid_argument("extension degree must be positive");
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > 65536) throw TooLarge();
  }
  Field F;
  F.p = p;
  F.k = k;
  F.q = uint32_t(q);
  if (k == 1) {
    F.modulus = {0, 1};  // x - 0 placeholder; unused for prime fields
    return F;
  }
  // lexicographically least monic irreducible of degree k over F_p,
  // low coefficients most significant in the lex order (smallest packed value)
  Field prime;
  prime.p = p; prime.k = 1; prime.q = p; prime.modulus = {0, 1};
  uint64_t count = 1;
  for (uint32_t i = 0; i < k; ++i) count *= p;
  for (uint64_t low = 0; low < count; ++low) {
    FPoly f(k + 1, 0);
    uint64_t t = low;
    for (uint32_t i = 0; i < k; ++i) { f[i] = uint32_t(t % p); t /= p; }
    f[k] = 1;
    if (fpoly_irreducible(prime, f)) {
      F.modulus.assign(f.begin(), f.end());
      return F;
    }
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

unsigned Trivariate::degree() const {
  unsigned d = 0;
  for (auto& m : monos) d = std::max(d, m.i + m.j + m.k);
  return d;
}

long count_projective_zeros(const Trivariate& F, const Field& field, unsigned n) {
  Field E = Field::make(field.p, field.k * n);
  auto coeff = [&](long c) -> uint32_t {
    long r = c % long(E.p);
    if (r < 0) r += E.p;
    return uint32_t(r);
  };
  auto eval = [&](uint32_t x, uint32_t y, uint32_t z) -> uint32_t {
    uint32_t s = 0;
    for (auto& m : F.monos) {
      uint32_t t = coeff(m.c);
      t = E.mul(t, E.pow(x, m.i));
      t = E.mul(t, E.pow(y, m.j));
      t = E.mul(t, E.pow(z, m.k));
      s = E.add(s, t);
    }
    return s;
  };
  long count = 0;
  // representatives (1:y:z), (0:1:z), (0:0:1)
  for (uint32_t y = 0; y < E.q; ++y)
    for (uint32_t z = 0; z < E.q; ++z)
      if (eval(1, y, z) == 0) ++count;
  for (uint32_t z = 0; z < E.q; ++z)
    if (eval(0, 1, z) == 0) ++count;
  if (eval(0, 0, 1) == 0) ++count;
  return count;
}

// coprimality of binary forms (F of declared degree dF, G of declared degree dG):
// dehomogenizations at y=1 coprime AND not both divisible by y
static bool coprime_forms(const Field& F, const FPoly& a, long dA, const FPoly& b, long dB) {
  long da = fpoly_deg(a), db = fpoly_deg(b);
  if (db < 0) return false;            // G must be nonzero
  bool both_div_y = (da < dA) && (db < dB);
  if (both_div_y && da >= 0) return false;
  if (da < 0) {
    // F = 0: gcd(0, G) = G, unit only if G is a nonzero constant form,
    // i.e. dehomogenization constant and G not divisible by y
    return db == 0 && db == dB;
  }
  return fpoly_deg(fpoly_gcd(F, a, b)) == 0;
}

bool forms_coprime(const Field& F, const FPoly& a, long degA, const FPoly& b, long degB) {
  return coprime_forms(F, a, degA, b, degB);
}

long enumerate_coprime_form_pairs(const Field& F, long degF, long degG,
                                  const std::function<void(const FPoly&, const FPoly&)>& visit) {
  uint64_t nF = 1, nG = 1;
  for (long i = 0; i <= degF; ++i) nF *= F.q;
  for (long i = 0; i <= degG; ++i) nG *= F.q;
  long raw = 0;
  FPoly a(size_t(degF + 1)), b(size_t(degG + 1));
  for (uint64_t ia = 0; ia < nF; ++ia) {
    uint64_t t = ia;
    for (long i = 0; i <= degF; ++i) { a[size_t(i)] = uint32_t(t % F.q); t /= F.q; }
    for (uint64_t ib = 1; ib < nG; ++ib) {
      t = ib;
      for (long i = 0; i <= degG; ++i) { b[size_t(i)] = uint32_t(t % F.q); t /= F.q; }
      if (!coprime_forms(F, a, degF, b, degG)) continue;
      ++raw;
      if (visit) {
        // one representative per scalar orbit: top nonzero coeff of G equal 1
        long db = fpoly_deg(b);
        if (b[size_t(db)] == 1) visit(a, b);
      }
    }
  }
  return raw / long(F.q - 1);
}

long enumerate_form_pairs(const Field& F, long degF, long degG) {
  uint64_t nF = 1, nG = 1;
  for (long i = 0; i <= degF; ++i) nF *= F.q;
  for (long i = 0; i <= degG; ++i) nG *= F.q;
  return long(nF * (nG - 1) / (F.q - 1));
}

}  // namespace eisgen::gf
