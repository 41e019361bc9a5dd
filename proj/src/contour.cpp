#include "eisgen/contour.hpp"

#include <algorithm>
#include <complex>

namespace eisgen {

ScalarQ Place::location() const {
  if (!is_linear()) throw std::domain_error("Place: not a linear place");
  return -(minpoly.c[0] / minpoly.c[1]);
}

std::string Place::str() const {
  if (origin) return "origin";
  std::string s = "{";
  for (size_t i = 0; i < minpoly.c.size(); ++i) {
    if (i) s += ", ";
    s += minpoly.c[i].str();
  }
  return s + "} |.| = q^" + e.str() + " mult " + std::to_string(mult);
}

SPoly ext_gcd(const SPoly& a, const SPoly& b, SPoly& u, SPoly& v) {
  SPoly r0 = a, r1 = b;
  SPoly u0(ScalarQ(1L)), u1, v0, v1(ScalarQ(1L));
  while (!r1.is_zero()) {
    SPoly q, r;
    SPoly::divrem(r0, r1, q, r);
    SPoly u2 = u0 - q * u1, v2 = v0 - q * v1;
    r0 = std::move(r1); r1 = std::move(r);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (r0.is_zero()) throw std::domain_error("ext_gcd of zero polynomials");
  ScalarQ inv = ScalarQ(1L) / r0.lead();
  u = inv * u0;
  v = inv * v0;
  return inv * r0;
}

namespace {

// inverse of a modulo f (both in K[x], gcd(a,f) = 1)
SPoly inv_mod(const SPoly& a, const SPoly& f) {
  SPoly u, v;
  SPoly g = ext_gcd(a, f, u, v);
  if (g.deg() != 0) throw std::domain_error("inv_mod: arguments not coprime");
  SPoly q, r;
  SPoly::divrem(u, f, q, r);
  return r;
}

SPoly mod(const SPoly& a, const SPoly& f) {
  SPoly q, r;
  SPoly::divrem(a, f, q, r);
  return r;
}

// square-free decomposition: returns (factor, multiplicity) pairs, factors
// monic, pairwise coprime, product^mult = p up to a scalar
std::vector<std::pair<SPoly, int>> squarefree(SPoly p) {
  std::vector<std::pair<SPoly, int>> out;
  p = p.monic();
  if (p.deg() <= 0) return out;
  SPoly g = SPoly::gcd(p, p.derivative());
  SPoly w = p / g;
  int i = 1;
  while (w.deg() > 0) {
    SPoly y = SPoly::gcd(w, g);
    SPoly z = w / y;
    if (z.deg() > 0) out.emplace_back(z.monic(), i);
    ++i;
    g = g / y;
    w = std::move(y);
  }
  return out;
}

// Newton polygon of p in the q-degree valuation: segments of the upper
// convex hull of (i, qdeg2(c_i)/2); each returns (root exponent, width).
std::vector<std::pair<Frac, int>> newton_slopes(const SPoly& p) {
  std::vector<std::pair<long, long>> pts;  // (i, 2*qdeg)
  for (size_t i = 0; i < p.c.size(); ++i)
    if (!p.c[i].is_zero()) pts.emplace_back(long(i), p.c[i].qdeg2());
  std::vector<std::pair<long, long>> hull;  // upper hull, left to right
  for (auto& pt : pts) {
    while (hull.size() >= 2) {
      auto& a = hull[hull.size() - 2];
      auto& b = hull[hull.size() - 1];
      // keep hull concave: slope(a,b) > slope(b,pt) required
      if ((b.second - a.second) * (pt.first - b.first) <= (pt.second - b.second) * (b.first - a.first))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  std::vector<std::pair<Frac, int>> out;
  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    long di = hull[k + 1].first - hull[k].first;
    long dv = hull[k].second - hull[k + 1].second;  // fall of 2*qdeg
    out.emplace_back(Frac(dv, 2 * di), int(di));    // e = -slope, in q units
  }
  return out;
}

// numeric roots by Durand-Kerner, used only to propose rational candidates
// that are then verified exactly
std::vector<std::complex<double>> dk_roots(const std::vector<double>& coeffs) {
  using C = std::complex<double>;
  size_t n = coeffs.size() - 1;
  std::vector<C> z(n), cs(coeffs.begin(), coeffs.end());
  for (auto& c : cs) c /= coeffs.back();
  for (size_t i = 0; i < n; ++i) z[i] = std::pow(C(0.4, 0.9), double(i + 1));
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0;
    for (size_t i = 0; i < n; ++i) {
      C p = 0;
      for (size_t k = n + 1; k-- > 0;) p = p * z[i] + cs[k];
      C d = 1;
      for (size_t j = 0; j < n; ++j)
        if (j != i) d *= (z[i] - z[j]);
      if (std::abs(d) < 1e-300) continue;
      C step = p / d;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) break;
  }
  return z;
}

// best rational approximation with bounded denominator (continued fractions)
bool round_to_rational(double x, long max_den, Rat& out) {
  if (!std::isfinite(x) || std::abs(x) > 1e12) return false;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    if (fl > 1e15 || fl < -1e15) break;
    long a = long(fl);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double frac = v - fl;
    if (frac < 1e-12) break;
    v = 1.0 / frac;
  }
  if (q1 == 0) return false;
  if (std::abs(x - double(p1) / double(q1)) > 1e-6) return false;
  out = Rat(p1, q1);
  return true;
}

// divide out (x - c), assuming c is a root
SPoly deflate(const SPoly& p, const ScalarQ& c) {
  SPoly lin;
  lin.c = {-c, ScalarQ(1L)};
  return p / lin;
}

// extract all roots of the form r*q^e (r rational, e with denominator <= 2)
// from a square-free polynomial; returns the leftover factor
SPoly extract_monomial_roots(SPoly w, std::vector<ScalarQ>& roots) {
  const Rat spec_root(10);  // specialize q -> 100 so sqrt(q) is rational
  bool progress = true;
  while (progress && w.deg() > 0) {
    progress = false;
    for (auto& [e, width] : newton_slopes(w)) {
      if (e.den > 2) continue;  // q^(1/4)-magnitude roots are never monomial
      ScalarQ qe = ScalarQ::q_half_pow(2 * e.num / e.den);
      SPoly wt = w.scale(qe);  // roots of magnitude q^e now have |.| = 1
      // propose rational candidates numerically, then verify exactly
      std::vector<Rat> cands = {Rat(1), Rat(-1)};
      std::vector<double> dc;
      for (auto& s : wt.c) dc.push_back(double(s.eval_at_square(spec_root)));
      if (dc.size() >= 2 && std::abs(dc.back()) > 1e-300) {
        for (auto& z : dk_roots(dc)) {
          if (std::abs(z.imag()) > 1e-7 * (1 + std::abs(z.real()))) continue;
          Rat r;
          if (round_to_rational(z.real(), 1000000, r) && r != 0) cands.push_back(r);
        }
      }
      for (auto& r : cands) {
        ScalarQ c = ScalarQ(r) * qe;
        if (w.eval(c).is_zero()) {
          roots.push_back(c);
          w = deflate(w, c);
          progress = true;
        }
      }
      if (progress) break;  // slopes changed; recompute
    }
  }
  return w;
}

// Newton power sums p_0..p_count of the roots of monic F
std::vector<ScalarQ> power_sums(const SPoly& F, size_t count) {
  long n = F.deg();
  std::vector<ScalarQ> p(count + 1);
  p[0] = ScalarQ(Rat(n));
  for (size_t k = 1; k <= count; ++k) {
    // p_k + a_{n-1} p_{k-1} + ... + a_{n-k+1} p_1 + k a_{n-k} = 0   (k <= n)
    // p_k + a_{n-1} p_{k-1} + ... + a_0 p_{k-n} = 0                 (k >  n)
    ScalarQ s;
    for (size_t i = 1; i < k; ++i) {
      long idx = n - long(i);
      if (idx < 0) break;
      s = s + F.at(size_t(idx)) * p[k - i];
    }
    if (long(k) <= n) s = s + ScalarQ(Rat(long(k))) * F.at(size_t(n - long(k)));
    p[k] = -s;
  }
  return p;
}

// sum of R over the roots of monic F (deg R < deg F)
ScalarQ trace_mod(const SPoly& R, const SPoly& F) {
  auto p = power_sums(F, size_t(std::max<long>(R.deg(), 0)));
  ScalarQ s;
  for (size_t j = 0; j < R.c.size(); ++j) s = s + R.c[j] * p[j];
  return s;
}

// sum of residues of num/den at the roots of F^m, where den = F^m * cofactor
ScalarQ residue_block(const SPoly& num, const SPoly& den, const SPoly& F, int m) {
  SPoly Fm = F.pow(unsigned(m));
  SPoly cof = den / Fm;
  // partial-fraction isolation: u*cof + v*F^m = 1  =>  num/den ~ (num*u)/F^m
  SPoly N;
  if (cof.deg() == 0) {
    N = mod((ScalarQ(1L) / cof.c[0]) * num, Fm);
  } else {
    SPoly u, v;
    ext_gcd(cof, Fm, u, v);
    N = mod(num * u, Fm);
  }
  SPoly Fp = F.derivative();
  SPoly invFp = inv_mod(mod(Fp, F), F);
  while (m > 1) {
    // Hermite reduction: N = B*F' + D*F; residues of (B/F^{m-1})' vanish
    SPoly B = mod(mod(N, F) * invFp, F);
    SPoly D = (N - B * Fp) / F;
    ScalarQ inv = ScalarQ(1L) / ScalarQ(Rat(long(m - 1)));
    N = inv * B.derivative() + D;
    --m;
    N = mod(N, F.pow(unsigned(m)));
  }
  SPoly R = mod(mod(N, F) * invFp, F);
  return trace_mod(R, F);
}

Frac magnitude_exponent(const ScalarQ& c) { return Frac(c.qdeg2(), 2); }

}  // namespace

std::vector<Place> pole_census(const RatFun& f) {
  std::vector<Place> out;
  const SPoly& den = f.den;
  long v = den.val();
  if (v > 0) {
    Place p;
    p.minpoly = SPoly::var();
    p.mult = int(v);
    p.origin = true;
    out.push_back(p);
  }
  SPoly rest = den;
  if (v > 0) rest.c.erase(rest.c.begin(), rest.c.begin() + v);
  for (auto& [w, m] : squarefree(rest)) {
    std::vector<ScalarQ> roots;
    SPoly left = extract_monomial_roots(w, roots);
    for (auto& c : roots) {
      Place p;
      p.minpoly.c = {-c, ScalarQ(1L)};
      p.mult = m;
      p.e = magnitude_exponent(c);
      out.push_back(p);
    }
    if (left.deg() > 0) {
      auto slopes = newton_slopes(left);
      if (slopes.size() != 1) throw MixedSlopeFactor(RatFun(f.var, left, SPoly(ScalarQ(1L))).str());
      Place p;
      p.minpoly = left.monic();
      p.mult = m;
      p.e = slopes[0].first;
      out.push_back(p);
    }
  }
  return out;
}

ScalarQ residue(const RatFun& f, const Place& p) {
  if (p.origin) {
    long v = f.den.val();
    if (v <= 0) return ScalarQ();  // regular: residue 0
    return f.laurent_at_zero(v + 2).coeff(-1);
  }
  SPoly q, r;
  SPoly::divrem(f.den, p.minpoly.pow(unsigned(p.mult)), q, r);
  if (!r.is_zero()) throw NotAPole();
  return residue_block(f.num, f.den, p.minpoly, p.mult);
}

ScalarQ residue_at_point(const RatFun& f, const ScalarQ& loc) {
  for (auto& p : pole_census(f)) {
    if (p.origin) {
      if (loc.is_zero()) return residue(f, p);
      continue;
    }
    if (p.is_linear() && p.location() == loc) return residue(f, p);
  }
  if (loc.is_zero()) return ScalarQ();
  // not among the linear places: maybe a root of a block factor; that sum
  // is only available through the full Galois orbit
  throw NotAPole();
}

ScalarQ circle_integral(const RatFun& f, const Frac& c) {
  RatFun h = f / RatFun::variable(f.var);
  ScalarQ total;
  for (auto& p : pole_census(h)) {
    if (p.origin) {
      total = total + h.laurent_at_zero(h.den.val() + 2).coeff(-1);
      continue;
    }
    if (p.e == c) throw PoleOnContour(p.str());
    if (p.e < c) total = total + residue_block(h.num, h.den, p.minpoly, p.mult);
  }
  return total;
}

}  // namespace eisgen
