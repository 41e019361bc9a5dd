#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "eisgen/bun.hpp"
#include "eisgen/tree.hpp"

using namespace eisgen;
using namespace eisgen::tree;

static LPoly lp(long lo, std::vector<uint32_t> c) {
  LPoly p;
  p.lo = lo;
  p.c = std::move(c);
  p.trim();
  return p;
}

TEST_CASE("Laurent polynomial arithmetic") {
  auto F = gf::Field::make(2, 1);
  LPoly a = lp(-1, {1, 0, 1});  // t^-1 + t
  LPoly b = lp(0, {1, 1});      // 1 + t
  CHECK(lp_eq(lp_add(F, a, b), lp(-1, {1, 1})));  // the t terms cancel
  CHECK(lp_eq(lp_mul(F, a, b), lp(-1, {1, 1, 1, 1})));
  CHECK(lp_eq(lp_mul(F, a, LPoly()), LPoly()));
  // truncated series division: (1) / (1 + t) = 1 + t + t^2 + ... over F_2
  LPoly inv = lp_div_trunc(F, LPoly::one(), b, 4);
  CHECK(lp_eq(inv, lp(0, {1, 1, 1, 1, 1})));
  CHECK(lp_eq(lp_trunc_above(lp_mul(F, inv, b), 4), LPoly::one()));
  // exact monomial division
  CHECK(lp_eq(lp_div_trunc(F, lp(2, {1, 1}), LPoly::monomial(1), 10), lp(1, {1, 1})));
}

TEST_CASE("exploration: sphere sizes and branching") {
  auto r21 = explore(2, 1);
  CHECK(r21.sphere_sizes == std::vector<size_t>{1, 3});
  CHECK(r21.adj[0].size() == 3);

  auto r32 = explore(3, 2);
  CHECK(r32.sphere_sizes == std::vector<size_t>{1, 4, 12});

  auto r24 = explore(2, 4);
  CHECK(r24.sphere_sizes == std::vector<size_t>{1, 3, 6, 12, 24});
  CHECK(r24.verts.size() == 1 + 3 + 6 + 12 + 24);

  // every interior non-root vertex sees one parent and q children
  auto F = gf::Field::make(2, 1);
  for (size_t i = 0; i < r24.verts.size(); ++i) {
    if (r24.depth[i] == 4) continue;
    size_t up = 0, down = 0;
    for (size_t j : r24.adj[i]) {
      if (r24.depth[j] == r24.depth[i] - 1) ++up;
      if (r24.depth[j] == r24.depth[i] + 1) ++down;
    }
    CHECK(up == (i == 0 ? 0 : 1));
    CHECK(down == (i == 0 ? 3 : 2));
  }

  // adjacency is symmetric as a neighbor relation
  for (size_t i = 0; i < r24.verts.size() && i < 10; ++i)
    for (auto& w : neighbors(F, r24.verts[i])) {
      auto back = neighbors(F, w);
      CHECK(std::count(back.begin(), back.end(), r24.verts[i]) == 1);
    }
}

TEST_CASE("canonicalization is idempotent and basis-independent") {
  for (uint32_t q : {2u, 3u}) {
    auto F = gf::Field::make(q, 1);
    std::mt19937 rng(11 + q);
    auto res = explore(q, 3);
    for (auto& v : res.verts) {
      // canonical form of its own matrix is itself
      CHECK(canonical_lattice(F, v.matrix()) == v);
      // random change of O-basis: right multiply by elementary matrices
      // with polynomial entries and unit diagonal scalings
      for (int trial = 0; trial < 10; ++trial) {
        LaurentMatrix B = v.matrix();
        for (int step = 0; step < 4; ++step) {
          LPoly f = lp(long(rng() % 3), {1 + rng() % (q - 1 == 0 ? 1 : q - 1)});
          LaurentMatrix E = LaurentMatrix::identity();
          if (rng() % 2)
            E.m[0][1] = f;
          else
            E.m[1][0] = f;
          if (rng() % 3 == 0) E.m[0][0] = LPoly::monomial(0, 1 + rng() % (q - 1));
          B = mat_mul(F, B, E);
        }
        CHECK(canonical_lattice(F, B) == v);
      }
    }
  }
}

TEST_CASE("Birkhoff factorization: fixed examples") {
  auto F = gf::Field::make(2, 1);
  auto id = birkhoff_split(F, LaurentMatrix::identity(), 6);
  CHECK(id.k1 == 0);
  CHECK(id.k2 == 0);
  CHECK(mat_eq_trunc(id.minus, LaurentMatrix::identity(), 6));
  CHECK(mat_eq_trunc(id.plus, LaurentMatrix::identity(), 6));

  auto d = birkhoff_split(F, LaurentMatrix::diag(LPoly::monomial(1), LPoly::monomial(-1)), 6);
  CHECK(d.k1 == 1);
  CHECK(d.k2 == -1);
  CHECK(d.k1 - d.k2 == 2);
  CHECK(mat_eq_trunc(d.minus, LaurentMatrix::identity(), 6));
  CHECK(mat_eq_trunc(d.plus, LaurentMatrix::identity(), 6));

  CHECK_THROWS_AS(birkhoff_split(F, LaurentMatrix::diag(lp(0, {1, 1}), LPoly::one()), 6),
                  std::invalid_argument);
}

// random invertible Laurent matrix: a product of elementary transvections
// and t-power diagonals, so the determinant is a unit times a t power
static LaurentMatrix random_laurent(const gf::Field& F, std::mt19937& rng, int steps,
                                    long emin, long emax) {
  LaurentMatrix g = LaurentMatrix::identity();
  auto rnd_poly = [&]() {
    LPoly f;
    f.lo = emin + long(rng() % uint32_t(emax - emin + 1));
    for (int i = 0; i < 3; ++i) f.c.push_back(rng() % F.q);
    f.trim();
    return f;
  };
  for (int s = 0; s < steps; ++s) {
    LaurentMatrix E = LaurentMatrix::identity();
    switch (rng() % 3) {
      case 0: E.m[0][1] = rnd_poly(); break;
      case 1: E.m[1][0] = rnd_poly(); break;
      default:
        E.m[0][0] = LPoly::monomial(long(rng() % 3) - 1, 1 + rng() % (F.q - 1));
        E.m[1][1] = LPoly::monomial(long(rng() % 3) - 1, 1 + rng() % (F.q - 1));
    }
    g = mat_mul(F, g, E);
  }
  return g;
}

TEST_CASE("Birkhoff factorization: randomized recomposition") {
  for (uint32_t q : {2u, 3u}) {
    auto F = gf::Field::make(q, 1);
    std::mt19937 rng(97 * q);
    for (int trial = 0; trial < 100; ++trial) {
      LaurentMatrix g = random_laurent(F, rng, 4, -2, 2);
      long prec = 12;
      auto f = birkhoff_split(F, g, prec);
      CHECK(f.k1 >= f.k2);
      CHECK(f.k1 + f.k2 == g.det(F).val());
      // minus is a 1/t-matrix invertible at infinity
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          if (!f.minus.m[i][j].is_zero()) CHECK(f.minus.m[i][j].hi() <= 0);
      uint32_t c00 = f.minus.m[0][0].at(0), c01 = f.minus.m[0][1].at(0);
      uint32_t c10 = f.minus.m[1][0].at(0), c11 = f.minus.m[1][1].at(0);
      CHECK(F.sub(F.mul(c00, c11), F.mul(c01, c10)) != 0);
      // plus is a power-series matrix invertible at zero
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          if (!f.plus.m[i][j].is_zero()) CHECK(f.plus.m[i][j].val() >= 0);
      CHECK(F.sub(F.mul(f.plus.m[0][0].at(0), f.plus.m[1][1].at(0)),
                  F.mul(f.plus.m[0][1].at(0), f.plus.m[1][0].at(0))) != 0);
      // recomposition reproduces g to working precision: plus was truncated
      // at exponent prec, and multiplying by t^k2 and the 1/t-matrix can
      // lower the resulting error terms by |k2| plus the depth of minus
      long minus_lo = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          if (!f.minus.m[i][j].is_zero()) minus_lo = std::min(minus_lo, f.minus.m[i][j].val());
      LaurentMatrix D = LaurentMatrix::diag(LPoly::monomial(f.k1), LPoly::monomial(f.k2));
      LaurentMatrix back = mat_mul(F, f.minus, mat_mul(F, D, f.plus));
      CHECK(mat_eq_trunc(back, g, prec + std::min(f.k2, 0L) + minus_lo));
    }
  }
}

// all nonzero 1/t-polynomials with exponents in [-d, 0]
static std::vector<LPoly> all_neg_polys(const gf::Field& F, long d) {
  std::vector<LPoly> out;
  long n = d + 1;
  long total = 1;
  for (long i = 0; i < n; ++i) total *= F.q;
  for (long code = 0; code < total; ++code) {
    LPoly p;
    p.lo = -d;
    long c = code;
    for (long i = 0; i < n; ++i) {
      p.c.push_back(uint32_t(c % F.q));
      c /= F.q;
    }
    p.trim();
    out.push_back(p);
  }
  return out;
}

TEST_CASE("Birkhoff type agrees with a bounded search over 1/t-matrices") {
  // oracle: the sorted diagonal exponents are the unique (k1, k2) such that
  // some GL2(F_q[1/t]) row transformation puts the matrix in the form
  // diag(t^k1, t^k2) * (power series matrix invertible at 0)
  auto F = gf::Field::make(2, 1);
  std::mt19937 rng(5);
  auto polys = all_neg_polys(F, 1);  // exponents in {-1, 0}
  for (int trial = 0; trial < 6; ++trial) {
    LaurentMatrix g = random_laurent(F, rng, 3, -1, 1);
    auto split = birkhoff_split(F, g, 10);
    std::set<std::pair<long, long>> found;
    for (auto& a : polys)
      for (auto& b : polys)
        for (auto& c : polys)
          for (auto& d : polys) {
            // det must be a nonzero constant for an exact inverse over
            // F_q[1/t]; that suffices for the search to be exhaustive on
            // these inputs because minus can always be normalized that way
            LPoly det = lp_sub(F, lp_mul(F, a, d), lp_mul(F, b, c));
            if (det.is_zero() || det.c.size() != 1 || det.val() != 0) continue;
            // h = minus^{-1} g, exact since det is a unit constant
            uint32_t idet = F.inv(det.c[0]);
            LaurentMatrix inv;
            inv.m[0][0] = lp_scale(F, idet, d);
            inv.m[0][1] = lp_scale(F, F.neg(idet), b);
            inv.m[1][0] = lp_scale(F, F.neg(idet), c);
            inv.m[1][1] = lp_scale(F, idet, a);
            LaurentMatrix h = mat_mul(F, inv, g);
            // valuation-split test: rows scale to a series matrix with
            // independent leading vectors
            if (h.m[0][0].is_zero() && h.m[0][1].is_zero()) continue;
            if (h.m[1][0].is_zero() && h.m[1][1].is_zero()) continue;
            long v0 = LONG_MAX, v1 = LONG_MAX;
            for (int j = 0; j < 2; ++j) {
              if (!h.m[0][j].is_zero()) v0 = std::min(v0, h.m[0][j].val());
              if (!h.m[1][j].is_zero()) v1 = std::min(v1, h.m[1][j].val());
            }
            uint32_t l00 = h.m[0][0].at(v0), l01 = h.m[0][1].at(v0);
            uint32_t l10 = h.m[1][0].at(v1), l11 = h.m[1][1].at(v1);
            if (F.sub(F.mul(l00, l11), F.mul(l01, l10)) == 0) continue;
            found.insert({std::max(v0, v1), std::min(v0, v1)});
          }
    CHECK(found.size() == 1);
    CHECK(*found.begin() == std::make_pair(split.k1, split.k2));
  }
}

TEST_CASE("vertex bundle types") {
  auto F = gf::Field::make(2, 1);
  CHECK(vertex_bundle_type(F, root_vertex(), 6) == 0);
  // distance n along the standard apartment: diag(1, t^n) has type n
  for (long n = 0; n <= 6; ++n) {
    TreeVertex v;
    v.beta = n;
    CHECK(vertex_bundle_type(F, v, n + 2) == n);
  }
  // type is invariant under the 1/t-polynomial group acting on the left
  std::mt19937 rng(23);
  auto res = explore(2, 3);
  auto polys = all_neg_polys(F, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const TreeVertex& v = res.verts[rng() % res.verts.size()];
    long k = vertex_bundle_type(F, v, 8);
    LaurentMatrix h = LaurentMatrix::identity();
    for (int s = 0; s < 3; ++s) {
      LaurentMatrix E = LaurentMatrix::identity();
      if (rng() % 2)
        E.m[0][1] = polys[rng() % polys.size()];
      else
        E.m[1][0] = polys[rng() % polys.size()];
      h = mat_mul(F, h, E);
    }
    auto split = birkhoff_split(F, mat_mul(F, h, v.matrix()), 12);
    CHECK(split.k1 - split.k2 == k);
  }
}

TEST_CASE("neighbor profiles") {
  auto F2 = gf::Field::make(2, 1);
  CHECK(neighbor_profile(F2, root_vertex(), 6) == std::vector<long>{1, 1, 1});
  TreeVertex p3;
  p3.beta = 3;
  CHECK(neighbor_profile(F2, p3, 8) == std::vector<long>{4, 2, 2});

  auto F3 = gf::Field::make(3, 1);
  TreeVertex p1;
  p1.beta = 1;
  CHECK(neighbor_profile(F3, p1, 6) == std::vector<long>{2, 0, 0, 0});

  // general law on explored vertices: type k > 0 has 1 neighbor of type
  // k+1 and q of type k-1; type 0 has q+1 neighbors of type 1
  for (uint32_t q : {2u, 3u}) {
    auto F = gf::Field::make(q, 1);
    auto res = explore(q, 3);
    for (auto& v : res.verts) {
      long k = vertex_bundle_type(F, v, 8);
      auto prof = neighbor_profile(F, v, 8);
      std::vector<long> want;
      if (k == 0) {
        want.assign(q + 1, 1);
      } else {
        want.push_back(k + 1);
        want.insert(want.end(), q, k - 1);
      }
      CHECK(prof == want);
    }
  }
}

TEST_CASE("tree Hecke operator matches the bundle-side Delta") {
  for (uint32_t q : {2u, 3u}) {
    auto F = gf::Field::make(q, 1);
    long depth = q == 2 ? 5 : 4;
    auto res = explore(q, depth);
    long prec = depth + 2;
    std::vector<long> type(res.verts.size());
    for (size_t i = 0; i < res.verts.size(); ++i)
      type[i] = vertex_bundle_type(F, res.verts[i], prec);
    for (long j = 0; j <= depth; ++j) {
      bun::BunFun deltaj = {{j, RatFun::constant("a", ScalarQ(1L))}};
      bun::BunFun img = bun::hecke_delta(deltaj);
      for (size_t i = 0; i < res.verts.size(); ++i) {
        if (res.depth[i] >= depth) continue;  // need all q+1 neighbors typed
        long count = 0;
        for (size_t w : res.adj[i])
          if (type[w] == j) ++count;
        auto it = img.find(type[i]);
        double want = it == img.end() ? 0.0 : it->second.as_scalar().eval(double(q));
        CHECK(double(count) == want);
      }
    }
  }
}

TEST_CASE("type along rays") {
  for (uint32_t q : {2u, 3u}) {
    auto F = gf::Field::make(q, 1);
    std::mt19937 rng(7 * q);
    long depth = 8, prec = depth + 2;
    // the greedy type-increasing ray from any start has type n + const
    for (int trial = 0; trial < 5; ++trial) {
      // random start: wander a few random non-backtracking steps
      TreeVertex prev = root_vertex();
      TreeVertex cur = neighbors(F, prev)[rng() % (q + 1)];
      for (int s = 0; s < 2; ++s) {
        auto nb = neighbors(F, cur);
        nb.erase(std::remove(nb.begin(), nb.end(), prev), nb.end());
        prev = cur;
        cur = nb[rng() % nb.size()];
      }
      long k = vertex_bundle_type(F, cur, prec);
      for (int n = 0; n < 5; ++n) {
        auto nb = neighbors(F, cur);
        TreeVertex next;
        long best = -1;
        for (auto& w : nb) {
          long t = vertex_bundle_type(F, w, prec);
          if (t > best) { best = t; next = w; }
        }
        CHECK(best == k + 1);  // the unique type-raising neighbor
        k = best;
        cur = next;
      }
    }
  }
}
