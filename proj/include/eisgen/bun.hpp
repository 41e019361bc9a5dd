// The discrete side: bundle classes P_k = P(O(k) + O) on the projective
// line, automorphism counts, brute-force section/quasisection counting, the
// Hecke operator Delta and its inner-product space.
#pragma once

#include <map>
#include <stdexcept>

#include "eisgen/gf.hpp"
#include "eisgen/qfield.hpp"
#include "eisgen/ratfun.hpp"

namespace eisgen::bun {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// default candidate-pair budget; override per call or via EISGEN_BUDGET
inline constexpr long long kDefaultBudget = 100'000'000;

long long budget_from_env();  // EISGEN_BUDGET when set, else the default

Int aut_order(long k, long q);

// sections of P_k over P^1(F_q) of degree n: 1 at n = -k, coprime-pair count
// at n = k + 2d' (d' >= 0), otherwise 0
Int count_sections(long q, long k, long n, long long budget = 0);

struct QuasisectionCount {
  Int quasisections;    // (q^{2d+k+2} - q^{d+k+1})/(q-1), enumeration-checked
  Int common_factors;   // (q^{d+1} - 1)/(q-1)
};
QuasisectionCount count_quasisections(long q, long k, long d, long long budget = 0);

// finitely supported function on bundle classes k >= 0, valued in rational
// functions of a (constants embed)
using BunFun = std::map<long, RatFun>;

// (Delta f)(k) = q f(k-1) + f(k+1), with the reflection f(-1) := f(1)
BunFun hecke_delta(const BunFun& f);

// |Aut(P_k)| kept symbolic in q so the inner product stays exact
ScalarQ aut_order_sym(long k);

// sum_k f(k) conj(g(k)) / |Aut(P_k)|, conjugation acting by a -> 1/a
RatFun inner_product(const BunFun& f, const BunFun& g);

// lambda(chi, x) for a point x of degree 1 or 2 and torsion part chi0:
// q^{deg/2} (a^{deg} chi0^{-1} + a^{-deg} chi0)
RatFun hecke_eigenvalue(long deg, const ScalarQ& chi0);

}  // namespace eisgen::bun
