#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eisgen/bun.hpp"
#include "eisgen/parser.hpp"

using namespace eisgen;
using namespace eisgen::bun;

TEST_CASE("automorphism orders") {
  CHECK(aut_order(0, 2) == 6);
  CHECK(aut_order(1, 2) == 4);
  CHECK(aut_order(2, 3) == 54);
  CHECK(aut_order(0, 3) == 24);
  CHECK(aut_order(3, 2) == 16);
}

TEST_CASE("section counts") {
  for (long k = 1; k <= 3; ++k) CHECK(count_sections(2, k, -k) == 1);
  CHECK(count_sections(2, 0, 2) == 6);
  CHECK(count_sections(2, 1, 1) == 4);
  CHECK(count_sections(2, 1, 0) == 0);   // wrong parity
  CHECK(count_sections(2, 2, 0) == 0);   // between -k and k
  CHECK(count_sections(2, 1, -3) == 0);  // below the minimal degree

  // degree k + 2d' sections at d' = 0 are (F, const) pairs: q^{k+1}
  for (long k = 1; k <= 3; ++k) CHECK(count_sections(2, k, k) == (Int(2) << k));
  CHECK(count_sections(3, 2, 2) == 27);
  // k = 0, n = 0: the infinity section joins the q constant ones
  CHECK(count_sections(2, 0, 0) == 3);
  CHECK(count_sections(3, 0, 0) == 4);

  CHECK_THROWS_AS(count_sections(2, 0, 100, 1000), BudgetExceeded);
}

TEST_CASE("quasisection counts") {
  auto a = count_quasisections(2, 0, 0);
  CHECK(a.quasisections == 2);
  CHECK(a.common_factors == 1);

  auto b = count_quasisections(2, 1, 1);
  CHECK(b.quasisections == 24);

  auto c = count_quasisections(3, 0, 1);
  CHECK(c.common_factors == 4);

  // sieve cross-check runs inside count_quasisections; exercise a grid
  for (long q : {2L, 3L})
    for (long k = 0; k <= 2; ++k)
      for (long d = 0; d <= 2; ++d) CHECK_NOTHROW(count_quasisections(q, k, d));

  CHECK_THROWS_AS(count_quasisections(2, 0, 40, 1000), BudgetExceeded);
}

TEST_CASE("Hecke operator") {
  auto cst = [](long n) { return RatFun::constant("a", ScalarQ(n)); };
  BunFun d0 = {{0, cst(1)}};
  auto e = hecke_delta(d0);
  // the wall reflection kills the k = 0 term and sends delta_0 to q delta_1
  CHECK(e.size() == 1);
  CHECK(e.at(1) == parse_expr("q", "a"));

  BunFun d1 = {{1, cst(1)}};
  auto f = hecke_delta(d1);
  CHECK(f.at(0) == parse_expr("q+1", "a"));  // reflection doubles the wall edge
  CHECK(f.at(2) == parse_expr("q", "a"));

  // constants are (q+1)-eigenfunctions away from the cutoff
  BunFun one;
  for (long k = 0; k <= 10; ++k) one[k] = cst(1);
  auto g = hecke_delta(one);
  for (long k = 0; k <= 9; ++k) CHECK(g.at(k) == parse_expr("q+1", "a"));
  CHECK(g.at(10) == parse_expr("q", "a"));  // cutoff edge
}

TEST_CASE("inner product and self-adjointness") {
  auto cst = [](long n) { return RatFun::constant("a", ScalarQ(n)); };
  BunFun d0 = {{0, cst(1)}}, d1 = {{1, cst(1)}};
  // 1/|Aut|: evaluates to 1/6 and 1/4 at q = 2
  CHECK(inner_product(d0, d0) == parse_expr("1/(q^3-q)", "a"));
  CHECK(inner_product(d0, d1).is_zero());
  CHECK(inner_product(d1, d1) == parse_expr("1/(q^3-q^2)", "a"));
  CHECK(aut_order_sym(0).eval(2.0) == doctest::Approx(6.0));
  CHECK(aut_order_sym(1).eval(2.0) == doctest::Approx(4.0));

  // <Delta f, g> = <f, Delta g> on the delta basis through k = 12
  for (long i = 0; i <= 12; ++i)
    for (long j = 0; j <= 12; ++j) {
      BunFun fi = {{i, cst(1)}}, fj = {{j, cst(1)}};
      CHECK(inner_product(hecke_delta(fi), fj) == inner_product(fi, hecke_delta(fj)));
    }
}

TEST_CASE("Hecke eigenvalues") {
  CHECK(hecke_eigenvalue(1, ScalarQ(1L)) ==
        RatFun::constant("a", ScalarQ::sqrt_q()) * parse_expr("a + a^-1", "a"));
  // degree 2: q (a^2 chi0^{-1} + a^{-2} chi0)
  ScalarQ chi0 = ScalarQ(-1L);
  RatFun a = RatFun::variable("a");
  CHECK(hecke_eigenvalue(2, chi0) ==
        RatFun::constant("a", ScalarQ::q()) * (a.pow(2) * RatFun::constant("a", ScalarQ(-1L)) +
                                               a.pow(-2) * RatFun::constant("a", ScalarQ(-1L))));
  // self-dual torsion part: fixed by a -> 1/a
  for (long deg : {1L, 2L})
    for (auto s : {ScalarQ(1L), ScalarQ(-1L)}) {
      RatFun lam = hecke_eigenvalue(deg, s);
      CHECK(lam.subst_inv() == lam);
    }
}
