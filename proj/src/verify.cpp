#include "eisgen/verify.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include "eisgen/bun.hpp"
#include "eisgen/contour.hpp"
#include "eisgen/corralg.hpp"
#include "eisgen/curve.hpp"
#include "eisgen/genus.hpp"
#include "eisgen/kchar.hpp"
#include "eisgen/parser.hpp"
#include "eisgen/serialize.hpp"
#include "eisgen/spectral.hpp"
#include "eisgen/tree.hpp"

namespace eisgen::verify {

namespace {

RatFun cst(ScalarQ s) { return RatFun::constant("a", std::move(s)); }
RatFun A() { return RatFun::variable("a"); }

// run fn(i) for i < n across `jobs` threads; each index writes only its own
// slot, so assembly order (and therefore output) is fixed
void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (size_t i = size_t(t); i < n; i += size_t(jobs)) fn(i);
    });
  for (auto& th : pool) th.join();
}

std::string fail(SuiteResult& r, const std::string& what) {
  r.ok = false;
  r.detail = what;
  return what;
}

// synthetic curve from Frobenius traces s_i (|s_i| <= 2 sqrt(q) for a
// Weil-consistent numerator): point counts via the quadratic power sums
curve::CurveData curve_from_traces(long q, const std::vector<long>& s) {
  long g = long(s.size());
  std::vector<Int> counts;
  std::vector<Int> p_prev(s.size()), p_cur(s.begin(), s.end());  // p_0 = 2
  for (auto& x : p_prev) x = 2;
  for (long n = 1; n <= g; ++n) {
    Int sum = 0;
    for (size_t i = 0; i < s.size(); ++i) sum += p_cur[i];
    Int qn = 1;
    for (long t = 0; t < n; ++t) qn *= q;
    counts.push_back(qn + 1 - sum);
    // p_{n+1} = s p_n - q p_{n-1}
    for (size_t i = 0; i < s.size(); ++i) {
      Int next = Int(s[i]) * p_cur[i] - Int(q) * p_prev[i];
      p_prev[i] = p_cur[i];
      p_cur[i] = next;
    }
  }
  return curve::zeta_from_counts(q, g, counts);
}

}  // namespace

SuiteResult suite_section_counts(long long budget, int jobs) {
  SuiteResult r{"section-counts", true, ""};
  struct Job {
    long q, k;
  };
  std::vector<Job> grid;
  for (long q : {2L, 3L})
    for (long k = 0; k <= 2; ++k) grid.push_back({q, k});
  std::vector<std::string> errors(grid.size());
  long checked = 0;
  parallel_for(grid.size(), jobs, [&](size_t idx) {
    auto [q, k] = grid[idx];
    RatFun E = spectral::eis(k);
    long n_max = k + 6;
    auto tail = E.laurent_at_infinity(k + n_max + 2);
    for (long n = -k; n <= n_max; ++n) {
      Int count = bun::count_sections(q, k, n, budget);
      // Eis = sum_n count(n) (q^{1/2} a)^{-n}: the a^{-n} coefficient times
      // q^{n/2} must be the count, a plain rational in q
      ScalarQ val = tail.coeff(-n) * ScalarQ::q_half_pow(n);
      if (!val.is_rational_in_q() || val.a.eval(Rat(q)) != Rat(count)) {
        errors[idx] = "q=" + std::to_string(q) + " k=" + std::to_string(k) +
                      " n=" + std::to_string(n) + ": enumeration " + count.str() +
                      " vs series coefficient";
        return;
      }
    }
  });
  for (const auto& e : errors)
    if (!e.empty()) {
      fail(r, e);
      return r;
    }
  for (auto [q, k] : grid) checked += k + 6 + k + 1;
  r.detail = std::to_string(checked) + " degrees against Laurent coefficients";
  return r;
}

SuiteResult suite_quasisections(long long budget, int jobs) {
  SuiteResult r{"quasisections", true, ""};
  struct Job {
    long q, k, d;
  };
  std::vector<Job> grid;
  for (long q : {2L, 3L})
    for (long k = 0; k <= 3; ++k)
      for (long d = 0; d <= 3; ++d) grid.push_back({q, k, d});
  std::vector<std::string> errors(grid.size());
  parallel_for(grid.size(), jobs, [&](size_t idx) {
    auto [q, k, d] = grid[idx];
    auto got = bun::count_quasisections(q, k, d, budget);
    auto qpow = [&](long e) {
      Int v = 1;
      for (long t = 0; t < e; ++t) v *= q;
      return v;
    };
    Int want_quasi = (qpow(2 * d + k + 2) - qpow(d + k + 1)) / (q - 1);
    Int want_common = (qpow(d + 1) - 1) / (q - 1);
    if (got.quasisections != want_quasi || got.common_factors != want_common)
      errors[idx] = "q=" + std::to_string(q) + " k=" + std::to_string(k) +
                    " d=" + std::to_string(d) + ": count off";
  });
  for (const auto& e : errors)
    if (!e.empty()) {
      fail(r, e);
      return r;
    }
  r.detail = std::to_string(grid.size()) + " closed forms against enumeration";
  return r;
}

SuiteResult suite_hecke() {
  SuiteResult r{"hecke-eigenrelation", true, ""};
  RatFun lam = cst(ScalarQ::sqrt_q()) * (A() + A().pow(-1));
  for (long k = 1; k <= 20; ++k)
    if (cst(ScalarQ::q()) * spectral::eis(k - 1) + spectral::eis(k + 1) !=
        lam * spectral::eis(k)) {
      fail(r, "interior relation fails at k=" + std::to_string(k));
      return r;
    }
  if ((cst(ScalarQ::q()) + cst(ScalarQ(1L))) * spectral::eis(1) !=
      lam * spectral::eis(0)) {
    fail(r, "reflecting boundary relation fails");
    return r;
  }
  r.detail = "k <= 20 interior plus the reflecting wall, exact";
  return r;
}

SuiteResult suite_functional_equations() {
  SuiteResult r{"functional-equations", true, ""};
  RatFun L = genus::scattering(spectral::p1_curve());
  for (long k = 0; k <= 6; ++k)
    if (spectral::eis(k).subst_inv() * L != spectral::eis(k)) {
      fail(r, "Eisenstein functional equation fails at k=" + std::to_string(k));
      return r;
    }
  std::vector<curve::CurveData> curves = {
      spectral::p1_curve(),
      curve_from_traces(2, {0}),        // g=1
      curve_from_traces(2, {-2}),       // g=1, supersingular-type trace
      curve_from_traces(3, {2}),        // g=1 over F_3
      curve_from_traces(2, {0, 1}),     // g=2
      curve_from_traces(2, {0, 1, -1})  // g=3
  };
  for (const auto& C : curves) {
    RatFun x = curve::xi(C);
    if (x.subst_inv().subst_scale(ScalarQ::q()) != x) {
      fail(r, "xi functional equation fails at g=" + std::to_string(C.g));
      return r;
    }
  }
  r.detail = "Eisenstein k <= 6 and completed zeta on " +
             std::to_string(curves.size()) + " curves";
  return r;
}

SuiteResult suite_sigma_projector() {
  SuiteResult r{"sigma-projector", true, ""};
  std::vector<curve::CurveData> curves = {spectral::p1_curve(),
                                          curve_from_traces(2, {0})};
  for (const auto& C : curves)
    for (long n = -8; n <= 8; ++n) {
      RatFun w = A().pow(n);
      RatFun s = spectral::sigma(w, C);
      if (spectral::sigma(s, C) != cst(ScalarQ(2L)) * s) {
        fail(r, "projector identity fails at n=" + std::to_string(n) +
                    ", g=" + std::to_string(C.g));
        return r;
      }
    }
  r.detail = "idempotence (up to the factor 2) on |n| <= 8, two curves";
  return r;
}

SuiteResult suite_pairing() {
  SuiteResult r{"pairing-three-way", true, ""};
  auto C = spectral::p1_curve();
  ScalarQ tfac = ScalarQ(0L) - ScalarQ(1L) / (ScalarQ::q() * (ScalarQ::q() - ScalarQ(1L)) *
                                              (ScalarQ::q() - ScalarQ(1L)));
  long checked = 0;
  std::map<long, bun::BunFun> pe;
  for (long i = -5; i <= 5; ++i) pe[i] = spectral::pseudo_eis(A().pow(i));
  for (long i = -5; i <= 5; ++i)
    for (long j = -5; j <= 5; ++j) {
      RatFun w1 = A().pow(i), w2 = A().pow(j);
      ScalarQ p = spectral::pairing_norm(w1, w2, C);
      if (cst(p) != bun::inner_product(pe[i], pe[j])) {
        fail(r, "brute L^2 form disagrees at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
        return r;
      }
      if (p != tfac * genus::integrate_T(genus::BoxClass{w1, w2.subst_inv()}, C)) {
        fail(r, "torus integral disagrees at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
        return r;
      }
      ++checked;
    }
  // the identities are symbolic in q, so they cover q = 2, 3, 4 exactly
  r.detail = std::to_string(checked) + " monomial pairs, symbolic in q";
  return r;
}

SuiteResult suite_spectral() {
  SuiteResult r{"spectral-decomposition", true, ""};
  auto C = spectral::p1_curve();
  for (long n = -4; n <= 4; ++n) {
    RatFun w = A().pow(n) + cst(ScalarQ(2L)) * A().pow(-1);
    auto s = spectral::spectral_split(w);
    if (s.continuous + s.disc_plus + s.disc_minus !=
        spectral::pairing_norm(w, w, C)) {
      fail(r, "split does not sum to the norm at n=" + std::to_string(n));
      return r;
    }
  }
  auto s0 = spectral::spectral_split(cst(ScalarQ(1L)));
  if (!spectral::positive_for_q_gt_1(s0.r_plus) ||
      !spectral::positive_for_q_gt_1(s0.r_minus)) {
    fail(r, "residue weights are not certified positive");
    return r;
  }

  // kernel residue at a = q^{1/2}: (q - 1/q)/2, twice over (both points)
  ScalarQ half = ScalarQ(Rat(1, 2)) * (ScalarQ::q() - ScalarQ(1L) / ScalarQ::q());
  RatFun f = spectral::eis(0) * A().pow(-1);
  ScalarQ direct = f.num.eval(ScalarQ::sqrt_q()) /
                   f.den.derivative().eval(ScalarQ::sqrt_q());
  ScalarQ via_place = residue_at_point(f, ScalarQ::sqrt_q());
  if (direct != half || via_place != half) {
    fail(r, "kernel residue at a = q^{1/2} is not (q - 1/q)/2");
    return r;
  }
  if (half.eval(2.0) != 0.75) {
    fail(r, "residue value at q=2 is not 3/4");
    return r;
  }

  // Gram matrix on a^{-4..4}: positive semidefinite within 1e-9 at q = 2, 3
  std::vector<std::vector<ScalarQ>> G;
  for (long i = -4; i <= 4; ++i) {
    G.emplace_back();
    for (long j = -4; j <= 4; ++j)
      G.back().push_back(spectral::pairing_norm(A().pow(i), A().pow(j), C));
  }
  for (double q : {2.0, 3.0}) {
    size_t n = G.size();
    std::vector<std::vector<double>> M(n, std::vector<double>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) M[i][j] = G[i][j].eval(q);
    // Cholesky of M + 1e-9 I certifies eigenvalues >= -1e-9
    for (size_t i = 0; i < n; ++i) M[i][i] += 1e-9;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j <= i; ++j) {
        double s = M[i][j];
        for (size_t k = 0; k < j; ++k) s -= M[i][k] * M[j][k];
        if (i == j) {
          if (s < 0) {
            fail(r, "Gram matrix has an eigenvalue below -1e-9 at q=" +
                        std::to_string(long(q)));
            return r;
          }
          M[i][i] = std::sqrt(s);
        } else {
          M[i][j] = M[j][j] > 0 ? s / M[j][j] : 0.0;
        }
      }
    }
  }
  r.detail = "split totals, residue 3/4 at q=2, Gram PSD at q=2,3";
  return r;
}

SuiteResult suite_scissor() {
  SuiteResult r{"scissor-relation", true, ""};
  long checked = 0;
  for (long n = 1; n <= 4; ++n)
    for (long m = -6; m <= 6; ++m) {
      auto c = kchar::scissor_check(n, m);
      if (!c.ok || c.outer != c.middle + c.inner) {
        fail(r, "three-term identity fails at n=" + std::to_string(n) +
                    " m=" + std::to_string(m));
        return r;
      }
      ++checked;
    }
  r.detail = std::to_string(checked) + " (n, m) pairs with the binomial oracle";
  return r;
}

SuiteResult suite_q_gamma() {
  SuiteResult r{"q-gamma", true, ""};
  auto c = kchar::q_gamma(13);
  if (c.size() != 13 || c[0] != QRat(1L)) {
    fail(r, "series does not start at 1");
    return r;
  }
  for (size_t d = 1; d < c.size(); ++d) {
    QRat factor = QRat(1L) - QRat::q_pow(long(d));
    if (c[d] * factor != c[d - 1]) {
      fail(r, "functional equation residual nonzero at order " + std::to_string(d));
      return r;
    }
  }
  r.detail = "functional equation exact through order 12";
  return r;
}

SuiteResult suite_tree() {
  SuiteResult r{"tree-suite", true, ""};
  for (uint32_t q : {2u, 3u}) {
    auto F = gf::Field::make(q, 1);
    long depth = q == 2 ? 5 : 4;
    long prec = depth + 2;
    auto res = tree::explore(q, depth);

    // sphere sizes (q+1) q^{n-1}
    size_t expect = 1;
    for (long n = 0; n <= depth; ++n) {
      if (res.sphere_sizes[size_t(n)] != expect) {
        fail(r, "sphere size off at q=" + std::to_string(q) +
                    " depth " + std::to_string(n));
        return r;
      }
      expect = n == 0 ? q + 1 : expect * q;
    }

    std::vector<long> type(res.verts.size());
    for (size_t i = 0; i < res.verts.size(); ++i)
      type[i] = tree::vertex_bundle_type(F, res.verts[i], prec);

    for (size_t i = 0; i < res.verts.size(); ++i) {
      // Birkhoff recomposition, exact within the truncation window
      auto M = res.verts[i].matrix();
      auto f = tree::birkhoff_split(F, M, prec);
      long minus_lo = 0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          if (!f.minus.m[a][b].is_zero())
            minus_lo = std::min(minus_lo, f.minus.m[a][b].val());
      auto D = tree::LaurentMatrix::diag(tree::LPoly::monomial(f.k1),
                                         tree::LPoly::monomial(f.k2));
      auto back = tree::mat_mul(F, f.minus, tree::mat_mul(F, D, f.plus));
      if (!tree::mat_eq_trunc(back, M, prec + std::min(f.k2, 0L) + minus_lo)) {
        fail(r, "Birkhoff recomposition fails on an explored vertex");
        return r;
      }

      if (res.depth[i] >= depth) continue;  // need all q+1 neighbors typed
      // neighbor profile law: k>0 has {1 x (k+1), q x (k-1)}; k=0 all 1
      std::vector<long> prof;
      for (size_t w : res.adj[i]) prof.push_back(type[w]);
      std::sort(prof.rbegin(), prof.rend());
      std::vector<long> want;
      if (type[i] == 0) {
        want.assign(q + 1, 1);
      } else {
        want.push_back(type[i] + 1);
        want.insert(want.end(), q, type[i] - 1);
      }
      if (prof != want) {
        fail(r, "neighbor profile law fails at type " + std::to_string(type[i]));
        return r;
      }
      // tree-realized Hecke operator: neighbor type counts match Delta
      for (long j = 0; j <= depth; ++j) {
        bun::BunFun dj = {{j, cst(ScalarQ(1L))}};
        bun::BunFun img = bun::hecke_delta(dj);
        long count = 0;
        for (size_t w : res.adj[i])
          if (type[w] == j) ++count;
        auto it = img.find(type[i]);
        Rat want_c = it == img.end() ? Rat(0) : it->second.as_scalar().a.eval(Rat(q));
        if (Rat(count) != want_c) {
          fail(r, "tree-realized Hecke operator disagrees with Delta");
          return r;
        }
      }
    }
  }
  r.detail = "spheres, profiles, Birkhoff and Hecke at q=2 depth 5, q=3 depth 4";
  return r;
}

SuiteResult suite_correspondence_algebra() {
  SuiteResult r{"correspondence-algebra", true, ""};
  long total = 0;
  for (int g = 0; g <= 3; ++g)
    for (int m = -2; m <= 4; ++m) {
      int need = std::max(1, g);
      int d_max = (m + 2 - 2 * g - need) / 2;
      while (m - 2 * d_max + 2 - 2 * g < need) --d_max;
      auto [M, ops] = corralg::build_stable_module(g, m, d_max - 5, d_max);
      auto rep = corralg::check_relations(ops, /*report_only=*/true);
      if (!rep.ok) {
        fail(r, "g=" + std::to_string(g) + " m=" + std::to_string(m) + ": " +
                    rep.witness);
        return r;
      }
      total += rep.checks;
    }
  // negative control: the flipped raising sign must be caught
  {
    auto [M, ops] = corralg::build_stable_module(1, 4, -4, 1);
    ops.flip_e_a_sign = true;
    if (corralg::check_relations(ops, /*report_only=*/true).ok) {
      fail(r, "flipped-sign control was not detected");
      return r;
    }
  }
  r.detail = std::to_string(total) + " relation instances, control caught";
  return r;
}

SuiteResult suite_module_isomorphism() {
  SuiteResult r{"module-isomorphism", true, ""};
  using corralg::ChiClass;
  long ledgers = 0;
  for (int g = 0; g <= 3; ++g)
    for (int dm = -2; dm <= 2; ++dm)
      for (ChiClass chi : {ChiClass::trivial, ChiClass::two_torsion_nontrivial,
                           ChiClass::generic}) {
        try {
          corralg::thm2_weight_ledger(g, dm, chi);
        } catch (const corralg::LedgerMismatch& e) {
          fail(r, "ledger g=" + std::to_string(g) + " degM=" + std::to_string(dm) +
                      ": " + e.what());
          return r;
        }
        ++ledgers;
      }
  for (int m = -3; m <= 3; ++m) {
    try {
      corralg::thm2_character_check_g0(m, 5);
    } catch (const corralg::CharacterMismatch& e) {
      fail(r, "genus-0 character equality m=" + std::to_string(m) + ": " + e.what());
      return r;
    }
  }
  auto ex = corralg::exception_scan(4);
  if (ex.size() != 1 || ex[0] != std::make_pair(2, 0)) {
    fail(r, "exception scan did not return exactly {(2, 0)}");
    return r;
  }
  r.detail = std::to_string(ledgers) +
             " ledgers, 7 genus-0 characters, exception scan {(2,0)}";
  return r;
}

SuiteResult suite_roundtrip_determinism(long long budget, int jobs) {
  SuiteResult r{"cli-roundtrip-determinism", true, ""};
  namespace ser = eisgen::serialize;
  using nlohmann::json;

  // 50-expression corpus: grammar strings, Eisenstein data, zeta data
  std::vector<RatFun> corpus;
  for (const char* s :
       {"q", "1/2", "a^2-q", "(q*a^2-1)/(a^2-q)", "1+a+a^2+a^3",
        "q^2*a^-3 + 1/7", "(a-1)*(a+1)/(a^2-q^3)", "-a^5 + q/3",
        "(1-a)/(1-q*a)", "a^-8"})
    corpus.push_back(parse_expr(s, "a"));
  for (long k = 0; k <= 14; ++k) corpus.push_back(spectral::eis(k));
  for (long k = 0; k <= 9; ++k) corpus.push_back(spectral::constant_term(k));
  corpus.push_back(curve::projective_line_xi(2));
  for (long tr = -2; tr <= 2; ++tr)
    corpus.push_back(curve::xi(curve_from_traces(2, {tr})));
  for (long n = -5; n <= 4; ++n)
    corpus.push_back(spectral::sigma(A().pow(n), spectral::p1_curve()));
  if (corpus.size() < 50) {
    fail(r, "corpus shrank below 50 expressions");
    return r;
  }
  for (size_t i = 0; i < corpus.size(); ++i) {
    json j = json::parse(ser::to_json(corpus[i]).dump());
    if (ser::ratfun_from_json(j) != corpus[i]) {
      fail(r, "round trip failed on corpus entry " + std::to_string(i));
      return r;
    }
  }
  // scalar and character payloads round-trip too
  ScalarQ mixed = ScalarQ(1L) + ScalarQ::sqrt_q() * ScalarQ(Rat(3, 7));
  if (ser::scalar_from_json(json::parse(ser::to_json(mixed).dump())) != mixed) {
    fail(r, "mixed scalar round trip failed");
    return r;
  }
  auto gc = corralg::symmetric_product_character(2, 4, corralg::ChiClass::trivial);
  if (!(ser::gradedchar_from_json(json::parse(ser::to_json(gc).dump())) == gc)) {
    fail(r, "graded character round trip failed");
    return r;
  }

  // determinism: the only parallel kernels are the enumeration suites;
  // re-render them across worker counts and compare bytes
  for (auto* suite : {&suite_section_counts, &suite_quasisections}) {
    SuiteResult one = (*suite)(budget, 1);
    SuiteResult many = (*suite)(budget, std::max(4, jobs));
    if (one.name != many.name || one.ok != many.ok || one.detail != many.detail) {
      fail(r, "parallel kernel output depends on the worker count");
      return r;
    }
  }
  r.detail = std::to_string(corpus.size()) +
             "-expression round trip, byte-stable across worker counts";
  return r;
}

std::vector<SuiteResult> run_all(long long budget, int jobs) {
  return {
      suite_section_counts(budget, jobs),
      suite_quasisections(budget, jobs),
      suite_hecke(),
      suite_functional_equations(),
      suite_sigma_projector(),
      suite_pairing(),
      suite_spectral(),
      suite_scissor(),
      suite_q_gamma(),
      suite_tree(),
      suite_correspondence_algebra(),
      suite_module_isomorphism(),
      suite_roundtrip_determinism(budget, jobs),
  };
}

std::string render(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  size_t width = 0;
  for (const auto& s : results) width = std::max(width, s.name.size());
  for (const auto& s : results) {
    os << (s.ok ? "PASS" : "FAIL") << "  " << s.name
       << std::string(width - s.name.size() + 2, ' ') << s.detail << "\n";
  }
  return os.str();
}

}  // namespace eisgen::verify
