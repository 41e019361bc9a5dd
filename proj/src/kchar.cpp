#include "eisgen/kchar.hpp"

namespace eisgen::kchar {

RatFun char_affine(long n) {
  RatFun z = RatFun::variable("z");
  RatFun one = RatFun::constant("z", ScalarQ(1L));
  return (one - z.pow(-1)).pow(-n);
}

long chi_projective(long n, long m) {
  Rat r(1);
  for (long i = 1; i <= n - 1; ++i) r *= Rat(m + i, i);
  return long(boost::multiprecision::numerator(r));
}

ScissorCheck scissor_check(long n, long m) {
  RatFun f = RatFun::variable("z").pow(m) * char_affine(n);
  ScissorCheck r;
  r.outer = circle_integral(f, Frac{1, 4});
  r.inner = circle_integral(f, Frac{-1, 4});
  r.middle = ScalarQ(chi_projective(n, m));
  r.ok = (r.outer == r.middle + r.inner);
  return r;
}

std::vector<QRat> q_gamma(long N) {
  std::vector<QRat> c;
  c.reserve(size_t(N));
  c.push_back(QRat(1L));
  for (long d = 1; d < N; ++d)
    c.push_back(c.back() / (QRat(1L) - QRat::q_pow(d)));
  return c;
}

}  // namespace eisgen::kchar
