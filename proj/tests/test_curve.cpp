#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "eisgen/contour.hpp"
#include "eisgen/curve.hpp"
#include "eisgen/parser.hpp"

using namespace eisgen;
using namespace eisgen::curve;

TEST_CASE("genus zero") {
  auto C = zeta_from_counts(2, 0, {});
  CHECK(C.P == std::vector<Int>{1});
  CHECK(zeta(C) == parse_expr("1/((1-t)*(1-q*t))", "t"));
  CHECK(xi(C) == parse_expr("t/((1-t)*(1-q*t))", "t") * RatFun::constant("t", ScalarQ::sqrt_q()));
  CHECK(C.point_count(1) == 3);
  CHECK(C.point_count(3) == 9);
}

TEST_CASE("genus one from a single count") {
  auto C = zeta_from_counts(2, 1, {Int(3)});
  CHECK(C.P == std::vector<Int>{1, 0, 2});
  CHECK(C.traces == std::vector<Int>{0});
  CHECK(C.point_count(2) == 9);
  CHECK(C.weil_ok);

  auto D = zeta_from_counts(2, 1, {Int(4)});
  CHECK(D.P == std::vector<Int>{1, 1, 2});
  CHECK(D.traces == std::vector<Int>{-1});
  CHECK(D.point_count(2) == 8);
  CHECK(D.weil_ok);

  // prefactor exponent 1-g = 0 here
  CHECK(xi(C) == parse_expr("(1+q*t^2)/((1-t)*(1-q*t))", "t"));
}

TEST_CASE("inconsistent and non-Weil inputs") {
  CHECK_THROWS_AS(zeta_from_counts(2, 2, {Int(3), Int(4)}), Inconsistent);
  CHECK_THROWS_AS(zeta_from_counts(2, 2, {Int(3)}), Inconsistent);

  // N_1 = 0 over F_2 forces trace 3 > 2*sqrt(2): advisory flag, no rejection
  auto C = zeta_from_counts(2, 1, {Int(0)});
  CHECK(C.P == std::vector<Int>{1, -3, 2});
  CHECK_FALSE(C.weil_ok);
}

TEST_CASE("plane models") {
  gf::Trivariate line{{{1, 0, 0, 1}}};
  auto P1 = curve_from_plane_model(line, 2, 0);
  CHECK(P1.g == 0);
  CHECK(P1.P == std::vector<Int>{1});

  // y^2 z + y z^2 = x^3, smooth over F_2
  gf::Trivariate ell{{{0, 2, 1, 1}, {0, 1, 2, 1}, {3, 0, 0, -1}}};
  auto E = curve_from_plane_model(ell, 2, 1);
  CHECK(E.counts == std::vector<Int>{3});
  CHECK(E.P == std::vector<Int>{1, 0, 2});
  CHECK(E.weil_ok);

  // nodal cubic passed off as genus 1: the degree-2 numerator cannot
  // reproduce the F_4 count
  gf::Trivariate nodal{{{0, 2, 1, 1}, {3, 0, 0, -1}, {2, 0, 1, -1}}};
  CHECK_THROWS_AS(curve_from_plane_model(nodal, 2, 1), Inconsistent);
}

TEST_CASE("functional equation and pole locations") {
  auto check_fe = [](const CurveData& C) {
    RatFun x = xi(C);
    CHECK(x.subst_inv().subst_scale(ScalarQ::q()) == x);
  };
  check_fe(zeta_from_counts(2, 0, {}));
  check_fe(zeta_from_counts(2, 1, {Int(3)}));
  check_fe(zeta_from_counts(2, 1, {Int(4)}));
  check_fe(zeta_from_counts(3, 1, {Int(7)}));

  auto places = pole_census(zeta(zeta_from_counts(2, 1, {Int(3)})));
  // exactly t = 1 (|t| = q^0) and t = 1/q (|t| = q^{-1})
  int at0 = 0, atm1 = 0;
  for (auto& p : places) {
    CHECK(p.is_linear());
    if (p.e == Frac{0, 1}) ++at0;
    if (p.e == Frac{-1, 1}) ++atm1;
  }
  CHECK(places.size() == 2);
  CHECK(at0 == 1);
  CHECK(atm1 == 1);
}

TEST_CASE("random Weil curves round-trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    long q = (trial % 2) ? 3 : 2;
    long g = 1 + trial % 3;
    long bound = long(2.0 * std::sqrt(double(q)));
    std::vector<Int> traces;
    std::vector<Int> P = {Int(1)};
    for (long i = 0; i < g; ++i) {
      long s = long(rng() % (2 * bound + 1)) - bound;
      traces.push_back(Int(s));
      // multiply P by 1 - s t + q t^2
      std::vector<Int> R(P.size() + 2, Int(0));
      for (size_t j = 0; j < P.size(); ++j) {
        R[j] += P[j];
        R[j + 1] -= P[j] * s;
        R[j + 2] += P[j] * q;
      }
      P = std::move(R);
    }
    CurveData ref;
    ref.q = q;
    ref.g = g;
    ref.P = P;
    std::vector<Int> counts;
    for (long n = 1; n <= g; ++n) counts.push_back(ref.point_count(n));
    auto C = zeta_from_counts(q, g, counts);
    CHECK(C.P == P);
    CHECK(C.weil_ok);
    CHECK(C.traces_complete);
    auto got = C.traces, want = traces;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    RatFun x = xi(C);
    CHECK(x.subst_inv().subst_scale(ScalarQ::q()) == x);
  }
}
