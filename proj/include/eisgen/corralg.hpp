// Exterior-algebra models for the sl2 action on quasisection cohomology in
// the stable range, Heisenberg-Clifford operators on symmetric-product
// cohomology, local-cohomology characters on the resolved quadric cone
// (= T*P^1), and the weight ledger comparing the two sides of the main
// module isomorphism, including the genus-0 character equality and the
// scan for the single exceptional (genus, twist-degree) collision.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "eisgen/qfield.hpp"

namespace eisgen::corralg {

struct OutOfStableRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RelationViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LedgerMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CharacterMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// elements of  Lambda(alpha_1 .. alpha_{2g}) [eta]
//
// A term is (mask, k) -> coefficient, where bit j of mask means the odd
// generator alpha_{j+1} is present (written in increasing index order) and k
// is the eta exponent.  Odd generators pair up as alpha_{2i-1} = gamma_i,
// alpha_{2i} = gamma_i^dual with gamma_i . gamma_i^dual = p (the point
// class); the dual map sends gamma_i -> gamma_i^dual -> -gamma_i.

struct AlgElem {
  int twog = 0;  // number of odd generators
  std::map<std::pair<uint32_t, int>, Rat> c;

  bool is_zero() const { return c.empty(); }
  void add_term(uint32_t mask, int k, const Rat& coef);
  std::string str() const;

  bool operator==(const AlgElem& o) const { return twog == o.twog && c == o.c; }
};

AlgElem alg_zero(int twog);
AlgElem alg_one(int twog);
AlgElem alg_gen(int twog, int j);         // alpha_{j+1}
AlgElem alg_eta(int twog, int k = 1);     // eta^k
AlgElem alg_add(const AlgElem& a, const AlgElem& b);
AlgElem alg_sub(const AlgElem& a, const AlgElem& b);
AlgElem alg_scale(const AlgElem& a, const Rat& s);
AlgElem alg_mul(const AlgElem& a, const AlgElem& b);  // Koszul signs
AlgElem alg_derive(const AlgElem& a, int j);          // odd derivation d/d alpha_{j+1}
int dual_gen(int j, int& sign);  // index of alpha_{j+1}^dual, sign of the dual map

// ---------------------------------------------------------------------------
// stable-range module: one component per twisting degree d, each
// Lambda[eta] / (C_d) with C_d = eta^{D-g} prod_i (eta - 2 gamma_i gamma_i^dual),
// D = m - 2d + 2 - 2g.  Requires D >= 1 (and D >= g so the product fits)
// on the whole window.

struct StableModule {
  int g = 0, m = 0;
  int d_min = 0, d_max = 0;

  int eta_dim(int d) const { return m - 2 * d + 2 - 2 * g; }
  long component_dim(int d) const { return (1L << (2 * g)) * eta_dim(d); }
  bool in_window(int d) const { return d >= d_min && d <= d_max; }

  AlgElem chern_rel(int d) const;            // C_d (memoized)
  AlgElem reduce(AlgElem v, int d) const;    // normal form mod C_d

 private:
  mutable std::map<int, AlgElem> rel_cache;
};

// how an operator moves (d, cohomological degree, doubled Tate weight);
// degrees are the centered ones (component d recentered by its virtual
// dimension), under which every table entry is pure: coh == tate2.
struct OpShift {
  int dd, coh, tate2;
};

struct OperatorTable {
  StableModule mod;

  // raising/lowering/diagonal at the point class
  AlgElem e_p(const AlgElem& v, int d, int* d_out) const;
  AlgElem f_p(const AlgElem& v, int d, int* d_out) const;
  AlgElem h_p(const AlgElem& v, int d, int* d_out) const;
  // ... and at the odd generator alpha_{j+1}
  AlgElem e_a(int j, const AlgElem& v, int d, int* d_out) const;
  AlgElem f_a(int j, const AlgElem& v, int d, int* d_out) const;
  AlgElem h_a(int j, const AlgElem& v, int d, int* d_out) const;

  static OpShift shift_e_p() { return {-1, +2, +2}; }
  static OpShift shift_f_p() { return {+1, +2, +2}; }
  static OpShift shift_h_p() { return {0, +2, +2}; }
  static OpShift shift_e_a() { return {-1, +1, +1}; }
  static OpShift shift_f_a() { return {+1, +1, +1}; }
  static OpShift shift_h_a() { return {0, +1, +1}; }

  // deliberately wrong sign on e<alpha>; used as a negative control
  bool flip_e_a_sign = false;
};

std::pair<StableModule, OperatorTable> build_stable_module(int g, int m,
                                                           int d_min, int d_max);

struct RelationReport {
  bool ok = true;
  long checks = 0;
  std::string witness;  // first violated relation, with the offending element
};

// verifies, on every basis element of every component with both neighbours
// in the window:  4 e<p> f<p> + h<p>^2 = 0,
//                 2 e<p> f<a> + 2 f<p> e<a> + h<p> h<a> = 0,
//                 {e<a>, f<b>} = h<a.b>,  {h<a>, e<b>} = 2 e<a.b>,
//                 {h<a>, f<b>} = -2 f<a.b>,  {e<a>, e<b>} = {f<a>, f<b>} = 0,
// and h<p> central.  Throws RelationViolation unless report_only.
RelationReport check_relations(const OperatorTable& ops, bool report_only = false);

// with eta formally inverted the module is freely cogenerated: the product
// of all 2g odd raising operators applied to the top class of a component
// reproduces the defining relation C(eta) up to a power of eta and a sign.
// Returns that witness product (computed without reduction).
AlgElem regenerate_relation(const OperatorTable& ops, int d, int* d_out,
                            Rat* unit_out, int* eta_shift_out);

// fixed-locus (symmetric product) model on the free algebra Lambda[eta]:
//   e0<p> = -eta,  f0<p> = -1,  e0<a> = eta d/da^dual - a,  f0<a> = -d/da^dual
// so that e0<p> f0<p> = eta and e0<p> f0<a> + e0<a> f0<p> = a exactly, and
// every supercommutator [e0<->, f0<->] is a central scalar.
struct HeisenbergModel {
  int g = 0;
  AlgElem e0_p(const AlgElem& v) const;
  AlgElem f0_p(const AlgElem& v) const;
  AlgElem e0_a(int j, const AlgElem& v) const;
  AlgElem f0_a(int j, const AlgElem& v) const;
};

// ---------------------------------------------------------------------------
// characters

// (a-degree, cohomological degree, doubled Tate weight, torsion symbol)
using CharKey = std::tuple<int, int, int, int>;

struct GradedChar {
  std::map<CharKey, long long> mult;

  void add(int a, int coh, int tate2, int tor, long long n = 1);
  bool operator==(const GradedChar& o) const { return mult == o.mult; }
  long long total() const;
  GradedChar shifted(int da, int dcoh, int dtate2) const;
  std::string str() const;
};

enum class ChiClass { trivial, two_torsion_nontrivial, generic };

// multiplicative weight symbol a^a q^{tate2/2} [coh] * formal torsion part;
// torsion exponents are tracked per named character symbol and reduced
// mod 2 for the two-torsion class.
struct Weight {
  int a = 0, coh = 0, tate2 = 0;
  std::map<std::string, int> tor;

  Weight operator*(const Weight& o) const;
  Weight inverse() const;
  Weight pow(int n) const;
  void reduce(ChiClass chi);
  bool operator==(const Weight& o) const;
  std::string str() const;
};

Weight tate_shift(int n);                       // [n](n/2)
Weight chi_of_divisor(int deg, const std::string& sym, int exp = 1);
Weight lambda_top_curve(int g, const std::string& sym);  // chi(K_C)[2-2g](1-g)

// cohomology of the symmetric products of a genus-g curve, graded by the
// symmetric degree d (stored in the a-slot), cohomological degree and Tate
// weight.  Trivial coefficients: generating series (1+xt)^{2g}/((1-x)(1-xt^2));
// generic coefficients: (1+xt)^{2g-2}, supported in d <= 2g-2.
GradedChar symmetric_product_character(int g, int d_max, ChiClass chi);

// H^i with support in the union of the two attracting sets, of O(m) on the
// resolved cone, with the linearization putting weight a^{m} over 0 and
// a^{-m} over infinity.  Zero unless i == 1; the i == 1 answer splits as
// (submodule from the fiber over infinity) and (quotient from the zero
// section).  Entries are restricted to a-degree >= a_min; raw (untwisted)
// normalization with coh == tate2 on every entry.
struct LocalCohChar {
  GradedChar sub, quot;
  GradedChar whole() const;
};
LocalCohChar local_cohomology_character(int m, int i, int a_min);

// ---------------------------------------------------------------------------
// weight ledger for the generators of the submodule / quotient in the
// two-step filtration, computed once from the moduli normalization and once
// from the spinor-bundle side, and checked against
//   sub:  chi(M (x) K^{-1}) [g-1](...)      quot:  chi(M^{-1} (x) K^{-1}) [1-g](...)
struct LedgerRow {
  std::string name;
  Weight w;
};
struct Ledger {
  std::vector<LedgerRow> moduli_sub, moduli_quot, spinor_sub, spinor_quot;
  Weight sub_expected, quot_expected;
  Weight product(const std::vector<LedgerRow>& rows, ChiClass chi) const;
  bool ok = true;
};

// throws LedgerMismatch naming the offending column when a product
// disagrees; perturb_row (if nonempty) adds a unit Tate shift to the named
// spinor-side row, as a negative control.
Ledger thm2_weight_ledger(int g, int deg_M, ChiClass chi,
                          const std::string& perturb_row = "");

// genus-0 character equality: the centered quasisection cohomology built
// from the stable module, component by component, equals the local
// cohomology of O(m) twisted by [-1](-1/2) and the determinant line
// a^{-2} q^{-1}.  Components d run from min(1, m+1) down, depth many.
// centering_perturb shifts the left-hand centering (negative control).
struct CharacterCheck {
  GradedChar lhs, rhs;
  bool ok = true;
};
CharacterCheck thm2_character_check_g0(int m, int depth,
                                       int centering_perturb = 0);

// collision scan for the diagonal operator h<p> connecting the quotient's
// generator to the submodule's cogenerator (both sitting over the canonical
// linear system in symmetric degree 2g-2): needs the two classes over the
// same component of the Picard fibration (deg M = 0) and the cohomological
// gap to equal the degree of h<p> (deg M + g = 2).
std::vector<std::pair<int, int>> exception_scan(int g_max);

}  // namespace eisgen::corralg
