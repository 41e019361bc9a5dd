#include "eisgen/curve.hpp"

#include <cmath>

#include "eisgen/numeric.hpp"

namespace eisgen::curve {

// power sums A_n of the numerator's inverse roots, from Newton's identities:
// with P(t) = sum c_j t^j = prod (1 - alpha_i t), e_j = (-1)^j c_j and
// A_n = e_1 A_{n-1} - e_2 A_{n-2} + ... + (-1)^{n-1} n e_n  (e_j = 0, j > 2g)
static std::vector<Rat> power_sums_from_numerator(const std::vector<Int>& P, long upto) {
  long deg = long(P.size()) - 1;
  std::vector<Rat> A(size_t(upto) + 1, Rat(0));
  for (long n = 1; n <= upto; ++n) {
    Rat s(0);
    for (long j = 1; j <= std::min(n - 1, deg); ++j) {
      Rat ej = Rat(P[size_t(j)]) * (j % 2 ? -1 : 1);
      s += ej * A[size_t(n - j)] * (j % 2 ? 1 : -1);
    }
    if (n <= deg) {
      Rat en = Rat(P[size_t(n)]) * (n % 2 ? -1 : 1);
      s += Rat(n) * en * (n % 2 ? 1 : -1);
    }
    A[size_t(n)] = s;
  }
  return A;
}

Int CurveData::point_count(long n) const {
  auto A = power_sums_from_numerator(P, n);
  Rat qn(1);
  for (long i = 0; i < n; ++i) qn *= q;
  Rat N = qn + 1 - A[size_t(n)];
  if (boost::multiprecision::denominator(N) != 1)
    throw Inconsistent("non-integer point count");
  return boost::multiprecision::numerator(N);
}

static bool weil_bound_ok(const CurveData& C) {
  if (C.g == 0) return true;
  std::vector<double> cf;
  for (auto& c : C.P) cf.push_back(double(c));
  double target = 1.0 / std::sqrt(double(C.q));  // roots of P are 1/alpha_i
  for (auto& r : poly_roots(cf))
    if (std::abs(std::abs(r) - target) > 1e-6) return false;
  return true;
}

// pull out every factor 1 - s t + q t^2 with integer s (|s| <= 2 sqrt q)
static void extract_traces(CurveData& C) {
  std::vector<Int> rem = C.P;
  long bound = long(std::floor(2.0 * std::sqrt(double(C.q))));
  bool again = true;
  while (long(rem.size()) - 1 >= 2 && again) {
    again = false;
    for (long s = -bound; s <= bound && !again; ++s) {
      // divide rem by (1 - s t + q t^2) if exact
      std::vector<Int> quo(rem.size() - 2, Int(0));
      std::vector<Int> r = rem;
      bool exact = true;
      for (size_t i = 0; i < quo.size(); ++i) {
        quo[i] = r[i];  // divisor has constant term 1, work from the bottom
        r[i] -= quo[i];
        r[i + 1] += quo[i] * s;
        r[i + 2] -= quo[i] * C.q;
      }
      for (auto& c : r)
        if (c != 0) { exact = false; break; }
      if (exact) {
        C.traces.push_back(Int(s));
        rem = std::move(quo);
        again = true;
      }
    }
  }
  C.traces_complete = (long(rem.size()) - 1 <= 0);
}

CurveData zeta_from_counts(long q, long g, const std::vector<Int>& counts) {
  if (long(counts.size()) != g) throw Inconsistent("need exactly g point counts");
  CurveData C;
  C.q = q;
  C.g = g;
  C.counts = counts;
  // A_n = q^n + 1 - N_n for n <= g; Newton's identities give e_1..e_g,
  // then c_j = (-1)^j e_j and the functional equation fills the top half
  std::vector<Rat> A(size_t(g) + 1, Rat(0));
  for (long n = 1; n <= g; ++n) {
    Rat qn(1);
    for (long i = 0; i < n; ++i) qn *= q;
    A[size_t(n)] = qn + 1 - Rat(counts[size_t(n - 1)]);
  }
  std::vector<Rat> e(size_t(g) + 1, Rat(0));
  e[0] = 1;
  for (long n = 1; n <= g; ++n) {
    Rat s(0);  // n e_n = sum_{i=1}^{n} (-1)^{i-1} e_{n-i} A_i
    for (long i = 1; i <= n; ++i) s += e[size_t(n - i)] * A[size_t(i)] * (i % 2 ? 1 : -1);
    e[size_t(n)] = s / n;
  }
  C.P.assign(size_t(2 * g) + 1, Int(0));
  for (long j = 0; j <= g; ++j) {
    Rat cj = e[size_t(j)] * (j % 2 ? -1 : 1);
    if (boost::multiprecision::denominator(cj) != 1)
      throw Inconsistent("counts admit no integer numerator");
    C.P[size_t(j)] = boost::multiprecision::numerator(cj);
  }
  Int qpow(1);
  for (long j = g - 1; j >= 0; --j) {
    qpow *= q;
    C.P[size_t(2 * g - j)] = qpow * C.P[size_t(j)];
  }
  for (long n = 1; n <= g; ++n)
    if (C.point_count(n) != counts[size_t(n - 1)])
      throw Inconsistent("numerator fails to reproduce the input counts");
  C.weil_ok = weil_bound_ok(C);
  extract_traces(C);
  return C;
}

CurveData curve_from_plane_model(const gf::Trivariate& F, long q, long g) {
  // q must be realized as an actual field here
  uint32_t p = 2, k = 1;
  {
    long n = q;
    for (p = 2;; ++p) if (n % p == 0) break;
    k = 0;
    while (n > 1) { n /= p; ++k; }
    long chk = 1;
    for (uint32_t i = 0; i < k; ++i) chk *= p;
    if (chk != q) throw Inconsistent("q is not a prime power");
  }
  auto field = gf::Field::make(p, k);
  std::vector<Int> counts;
  for (long n = 1; n <= g; ++n)
    counts.push_back(Int(gf::count_projective_zeros(F, field, unsigned(n))));
  CurveData C = zeta_from_counts(q, g, counts);
  // the numerator must keep predicting counts beyond the input range
  for (long n = g + 1; n <= 2 * g; ++n)
    if (C.point_count(n) != Int(gf::count_projective_zeros(F, field, unsigned(n))))
      throw Inconsistent("plane-model counts do not extend the degree-2g numerator");
  if (!C.weil_ok) throw WeilViolation("numerator roots violate the expected absolute values");
  return C;
}

// symbolic numerator: integer coefficients for t^j, j <= g, and the mirror
// rule coefficient q^{g-j} c_j at t^{2g-j}, so the t -> 1/(qt) symmetry is an
// identity in the q-symbolic algebra
static SPoly symbolic_numerator(const CurveData& C) {
  SPoly P(ScalarQ(1L));
  for (long j = 1; j <= C.g; ++j) {
    Rat cj(C.P[size_t(j)]);
    P = P + SPoly::monomial(ScalarQ(QRat(QPoly(cj))), size_t(j));
  }
  for (long j = 0; j < C.g; ++j) {
    Rat cj(C.P[size_t(j)]);
    P = P + SPoly::monomial(ScalarQ(QRat(QPoly(cj))) * ScalarQ(QRat::q_pow(C.g - j)), size_t(2 * C.g - j));
  }
  return P;
}

RatFun zeta(const CurveData& C) {
  SPoly num = symbolic_numerator(C);
  SPoly t = SPoly::var();
  SPoly den = (SPoly(ScalarQ(1L)) - t) * (SPoly(ScalarQ(1L)) - SPoly::monomial(ScalarQ::q(), 1));
  return RatFun("t", num, den);
}

RatFun xi(const CurveData& C) {
  RatFun pre = RatFun::constant("t", ScalarQ::q_half_pow(1 - C.g));
  return pre * RatFun::variable("t").pow(1 - C.g) * zeta(C);
}

RatFun projective_line_xi(long q) {
  CurveData C;
  C.q = q;
  C.g = 0;
  C.P = {Int(1)};
  return xi(C);
}

}  // namespace eisgen::curve
