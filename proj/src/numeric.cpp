#include "eisgen/numeric.hpp"

namespace eisgen {

std::vector<Cplx> poly_roots(const std::vector<double>& coeffs) {
  size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == 0.0) --n;
  if (n <= 1) return {};
  std::vector<Cplx> cs(coeffs.begin(), coeffs.begin() + long(n));
  for (auto& c : cs) c /= coeffs[n - 1];
  size_t deg = n - 1;
  std::vector<Cplx> z(deg);
  for (size_t i = 0; i < deg; ++i) z[i] = std::pow(Cplx(0.4, 0.9), double(i + 1));
  for (int iter = 0; iter < 1000; ++iter) {
    double moved = 0;
    for (size_t i = 0; i < deg; ++i) {
      Cplx p = 0;
      for (size_t k = n; k-- > 0;) p = p * z[i] + cs[k];
      Cplx d = 1;
      for (size_t j = 0; j < deg; ++j)
        if (j != i) d *= (z[i] - z[j]);
      if (std::abs(d) < 1e-300) continue;
      Cplx step = p / d;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) break;
  }
  return z;
}

static double eval_scalar(const ScalarQ& s, double q) { return s.eval(q); }

Cplx eval_spoly(const SPoly& p, double q, Cplx x) {
  Cplx v = 0;
  for (size_t i = p.c.size(); i-- > 0;) v = v * x + eval_scalar(p.c[i], q);
  return v;
}

Cplx eval_ratfun(const RatFun& f, double q, Cplx x) {
  return eval_spoly(f.num, q, x) / eval_spoly(f.den, q, x);
}

Cplx numeric_circle_integral(const RatFun& f, double q, double radius, int n) {
  Cplx sum = 0;
  for (int k = 0; k < n; ++k) {
    double th = 2.0 * M_PI * double(k) / double(n);
    Cplx x = radius * Cplx(std::cos(th), std::sin(th));
    sum += eval_ratfun(f, q, x);
  }
  return sum / double(n);
}

}  // namespace eisgen
