#include "eisgen/bun.hpp"

#include <cstdlib>

namespace eisgen::bun {

long long budget_from_env() {
  if (const char* s = std::getenv("EISGEN_BUDGET")) {
    long long v = std::atoll(s);
    if (v > 0) return v;
  }
  return kDefaultBudget;
}

static gf::Field field_for(long q) {
  uint32_t p = 2;
  long n = q;
  for (p = 2;; ++p)
    if (n % p == 0) break;
  uint32_t k = 0;
  while (n > 1 && n % p == 0) { n /= p; ++k; }
  if (n != 1) throw std::invalid_argument("q must be a prime power");
  return gf::Field::make(p, k);
}

Int aut_order(long k, long q) {
  Int Q(q);
  if (k == 0) return Q * (Q * Q - 1);
  Int r(q - 1);
  for (long i = 0; i <= k; ++i) r *= Q;
  return r;
}

static void check_budget(long q, long exponent, long long budget) {
  if (budget <= 0) budget = budget_from_env();
  Int candidates(1);
  for (long i = 0; i < exponent; ++i) candidates *= q;
  if (candidates > budget)
    throw BudgetExceeded("enumeration would visit q^" + std::to_string(exponent) +
                         " candidates; raise EISGEN_BUDGET to allow it");
}

Int count_sections(long q, long k, long n, long long budget) {
  Int total(0);
  if (n == -k) total += 1;  // the section at infinity (G identically 0)
  if (n >= k && (n - k) % 2 == 0) {
    long d = (n - k) / 2;
    check_budget(q, n + k + 2, budget);
    auto F = field_for(q);
    total += Int(gf::enumerate_coprime_form_pairs(F, k + d, d));
  }
  return total;
}

QuasisectionCount count_quasisections(long q, long k, long d, long long budget) {
  check_budget(q, 2 * d + k + 2, budget);
  auto F = field_for(q);
  Int Q(q);
  auto qpow = [&](long e) { Int r(1); for (long i = 0; i < e; ++i) r *= Q; return r; };
  QuasisectionCount out;
  out.quasisections = (qpow(2 * d + k + 2) - qpow(d + k + 1)) / (q - 1);
  out.common_factors = (qpow(d + 1) - 1) / (q - 1);
  // enumeration check: stratify by the degree of the common factor
  Int sieved(0);
  for (long e = 0; e <= d; ++e)
    sieved += Int(gf::enumerate_coprime_form_pairs(F, k + d - e, d - e)) *
              ((qpow(e + 1) - 1) / (q - 1));
  if (sieved != out.quasisections)
    throw std::logic_error("quasisection enumeration disagrees with the closed form");
  return out;
}

BunFun hecke_delta(const BunFun& f) {
  auto get = [&](long k) -> RatFun {
    if (k == -1) k = 1;  // reflection at the wall
    auto it = f.find(k);
    return it == f.end() ? RatFun::constant("a", ScalarQ(0L)) : it->second;
  };
  BunFun g;
  long hi = f.empty() ? 0 : f.rbegin()->first;
  for (long k = 0; k <= hi + 1; ++k) {
    RatFun v = RatFun::constant("a", ScalarQ::q()) * get(k - 1) + get(k + 1);
    if (!v.is_zero()) g[k] = v;
  }
  return g;
}

ScalarQ aut_order_sym(long k) {
  ScalarQ Q = ScalarQ::q();
  if (k == 0) return Q * (Q * Q - ScalarQ(1L));
  ScalarQ r = Q - ScalarQ(1L);
  for (long i = 0; i <= k; ++i) r = r * Q;
  return r;
}

RatFun inner_product(const BunFun& f, const BunFun& g) {
  RatFun s = RatFun::constant("a", ScalarQ(0L));
  for (auto& [k, v] : f) {
    auto it = g.find(k);
    if (it == g.end()) continue;
    s = s + v * it->second.subst_inv() * RatFun::constant("a", ScalarQ(1L) / aut_order_sym(k));
  }
  return s;
}

RatFun hecke_eigenvalue(long deg, const ScalarQ& chi0) {
  RatFun a = RatFun::variable("a");
  ScalarQ half = ScalarQ::q_half_pow(deg);
  return RatFun::constant("a", half) *
         (a.pow(deg) * RatFun::constant("a", ScalarQ(1L) / chi0) +
          a.pow(-deg) * RatFun::constant("a", chi0));
}

}  // namespace eisgen::bun
