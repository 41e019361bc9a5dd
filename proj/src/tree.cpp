#include "eisgen/tree.hpp"

#include <algorithm>
#include <map>

namespace eisgen::tree {

void LPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
  size_t lead = 0;
  while (lead < c.size() && c[lead] == 0) ++lead;
  if (lead) {
    c.erase(c.begin(), c.begin() + long(lead));
    lo += long(lead);
  }
  if (c.empty()) lo = 0;
}

std::string LPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (!c[i]) continue;
    if (!s.empty()) s += " + ";
    long e = lo + long(i);
    if (c[i] != 1 || e == 0) s += std::to_string(c[i]);
    if (e != 0) {
      if (c[i] != 1) s += "*";
      s += e == 1 ? "t" : "t^" + std::to_string(e);
    }
  }
  return s;
}

LPoly LPoly::monomial(long e, uint32_t coef) {
  LPoly p;
  if (coef) { p.lo = e; p.c = {coef}; }
  return p;
}

LPoly lp_add(const gf::Field& F, const LPoly& a, const LPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  LPoly r;
  r.lo = std::min(a.lo, b.lo);
  r.c.assign(size_t(std::max(a.hi(), b.hi()) - r.lo + 1), 0u);
  for (size_t i = 0; i < r.c.size(); ++i) {
    long e = r.lo + long(i);
    r.c[i] = F.add(a.at(e), b.at(e));
  }
  r.trim();
  return r;
}

LPoly lp_sub(const gf::Field& F, const LPoly& a, const LPoly& b) {
  return lp_add(F, a, lp_scale(F, F.neg(1), b));
}

LPoly lp_mul(const gf::Field& F, const LPoly& a, const LPoly& b) {
  if (a.is_zero() || b.is_zero()) return LPoly();
  LPoly r;
  r.lo = a.lo + b.lo;
  r.c.assign(a.c.size() + b.c.size() - 1, 0u);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  r.trim();
  return r;
}

LPoly lp_scale(const gf::Field& F, uint32_t s, const LPoly& a) {
  if (!s) return LPoly();
  LPoly r = a;
  for (auto& x : r.c) x = F.mul(s, x);
  r.trim();
  return r;
}

LPoly lp_shift(const LPoly& a, long m) {
  LPoly r = a;
  if (!r.is_zero()) r.lo += m;
  return r;
}

LPoly lp_trunc_above(const LPoly& a, long hi_exp) {
  LPoly r = a;
  while (!r.c.empty() && r.hi() > hi_exp) r.c.pop_back();
  r.trim();
  return r;
}

bool lp_eq(const LPoly& a, const LPoly& b) { return a.lo == b.lo && a.c == b.c; }

LPoly lp_div_trunc(const gf::Field& F, const LPoly& a, const LPoly& b, long hi_exp) {
  if (b.is_zero()) throw std::invalid_argument("LPoly division by zero");
  if (a.is_zero()) return LPoly();
  // a / b = t^(va - vb) * (unit part of a) / (unit part of b)
  long shift = a.val() - b.val();
  size_t n = size_t(std::max<long>(hi_exp - shift + 1, 0));
  if (n == 0) return LPoly();
  std::vector<uint32_t> q(n, 0u);
  uint32_t ib0 = F.inv(b.c[0]);
  for (size_t i = 0; i < n; ++i) {
    uint32_t s = (i < a.c.size()) ? a.c[i] : 0u;
    for (size_t j = 1; j <= i && j < b.c.size(); ++j)
      s = F.sub(s, F.mul(b.c[j], q[i - j]));
    q[i] = F.mul(ib0, s);
  }
  LPoly r;
  r.lo = shift;
  r.c = std::move(q);
  r.trim();
  return r;
}

LaurentMatrix LaurentMatrix::identity() {
  LaurentMatrix I;
  I.m[0][0] = LPoly::one();
  I.m[1][1] = LPoly::one();
  return I;
}

LaurentMatrix LaurentMatrix::diag(const LPoly& a, const LPoly& d) {
  LaurentMatrix D;
  D.m[0][0] = a;
  D.m[1][1] = d;
  return D;
}

LPoly LaurentMatrix::det(const gf::Field& F) const {
  return lp_sub(F, lp_mul(F, m[0][0], m[1][1]), lp_mul(F, m[0][1], m[1][0]));
}

std::string LaurentMatrix::str() const {
  return "[[" + m[0][0].str() + ", " + m[0][1].str() + "], [" + m[1][0].str() +
         ", " + m[1][1].str() + "]]";
}

LaurentMatrix mat_mul(const gf::Field& F, const LaurentMatrix& A, const LaurentMatrix& B) {
  LaurentMatrix R;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      R.m[i][j] = lp_add(F, lp_mul(F, A.m[i][0], B.m[0][j]), lp_mul(F, A.m[i][1], B.m[1][j]));
  return R;
}

bool mat_eq_trunc(const LaurentMatrix& A, const LaurentMatrix& B, long hi_exp) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!lp_eq(lp_trunc_above(A.m[i][j], hi_exp), lp_trunc_above(B.m[i][j], hi_exp)))
        return false;
  return true;
}

LaurentMatrix TreeVertex::matrix() const {
  LaurentMatrix M;
  M.m[0][0] = LPoly::monomial(alpha);
  M.m[1][1] = LPoly::monomial(beta);
  LPoly up;
  up.c = u;
  up.trim();
  M.m[0][1] = up;
  return M;
}

std::string TreeVertex::str() const {
  LPoly up;
  up.c = u;
  up.trim();
  return "[t^" + std::to_string(alpha) + ", " + up.str() + "; 0, t^" +
         std::to_string(beta) + "]";
}

TreeVertex root_vertex() { return TreeVertex{}; }

// pack canonical data: reduce u mod t^alpha, rescale to minimal valuation 0
static TreeVertex pack_vertex(long alpha, long beta, LPoly u) {
  u = lp_trunc_above(u, alpha - 1);
  long m = std::min(alpha, beta);
  if (!u.is_zero()) m = std::min(m, u.val());
  alpha -= m;
  beta -= m;
  u = lp_shift(u, -m);
  TreeVertex v;
  v.alpha = alpha;
  v.beta = beta;
  if (!u.is_zero()) {
    v.u.assign(size_t(u.hi() + 1), 0u);
    for (long e = 0; e <= u.hi(); ++e) v.u[size_t(e)] = u.at(e);
  }
  return v;
}

TreeVertex canonical_lattice(const gf::Field& F, const LaurentMatrix& basis) {
  LPoly x1 = basis.m[0][0], x2 = basis.m[0][1];
  LPoly y1 = basis.m[1][0], y2 = basis.m[1][1];
  // clear the bottom of one column by top-degree Euclid against the other
  // (leading-term reduction keeps the multiplier's exponent nonnegative, so
  // every step is a change of basis over the series ring)
  for (int guard = 0; !y1.is_zero() && !y2.is_zero(); ++guard) {
    if (guard > 10000) throw PrecisionExceeded("column reduction did not terminate");
    if (y1.hi() < y2.hi()) { std::swap(x1, x2); std::swap(y1, y2); }
    LPoly f = LPoly::monomial(y1.hi() - y2.hi(), F.mul(y1.c.back(), F.inv(y2.c.back())));
    x1 = lp_sub(F, x1, lp_mul(F, f, x2));
    y1 = lp_sub(F, y1, lp_mul(F, f, y2));
  }
  if (y2.is_zero()) { std::swap(x1, x2); std::swap(y1, y2); }
  if (x1.is_zero() || y2.is_zero()) throw std::invalid_argument("singular lattice basis");
  long alpha = x1.val(), beta = y2.val();
  // x1, y2 generate the same ideals as t^alpha, t^beta; the off-diagonal
  // entry only matters mod t^alpha, so a truncated unit division suffices
  LPoly u = lp_div_trunc(F, x2, y2, alpha - 1 - beta + y2.val());
  u = lp_shift(u, beta);  // x2 * t^beta / y2, i.e. col2 scaled to (u, t^beta)
  // the scaling above used y2/t^beta as the unit; u must also absorb x1's
  // unit so that col1 is exactly t^alpha: reduction mod t^alpha is unchanged
  // because col1's unit is invertible, multiples of x1 span t^alpha O
  return pack_vertex(alpha, beta, u);
}

std::vector<TreeVertex> neighbors(const gf::Field& F, const TreeVertex& v) {
  std::vector<TreeVertex> out;
  LPoly u;
  u.c = v.u;
  u.trim();
  // line (0:1): basis { t*b1, b2 } -> [[t^(alpha+1), u], [0, t^beta]]
  out.push_back(pack_vertex(v.alpha + 1, v.beta, u));
  // line (1:0): basis { b1, t*b2 } -> [[t^alpha, t*u], [0, t^(beta+1)]]
  out.push_back(pack_vertex(v.alpha, v.beta + 1, lp_shift(u, 1)));
  // lines (1:s), s != 0: basis { t*b1, b1 + s*b2 } ->
  // [[t^(alpha+1), u + s^{-1} t^alpha], [0, t^beta]]
  for (uint32_t s = 1; s < F.q; ++s) {
    LPoly shifted = lp_add(F, u, LPoly::monomial(v.alpha, F.inv(s)));
    out.push_back(pack_vertex(v.alpha + 1, v.beta, shifted));
  }
  return out;
}

namespace {

// working state for the factorization: g = minus * M * plus at all times
struct SplitState {
  const gf::Field& F;
  long prec;
  LaurentMatrix M, minus, plus;

  void swap_cols() {
    std::swap(M.m[0][0], M.m[0][1]);
    std::swap(M.m[1][0], M.m[1][1]);
    std::swap(plus.m[0][0], plus.m[1][0]);
    std::swap(plus.m[0][1], plus.m[1][1]);
  }
  void swap_rows() {
    std::swap(M.m[0][0], M.m[1][0]);
    std::swap(M.m[0][1], M.m[1][1]);
    std::swap(minus.m[0][0], minus.m[0][1]);
    std::swap(minus.m[1][0], minus.m[1][1]);
  }
  // col_i -= f * col_j on M (an O-operation when val f >= 0)
  void col_op(int i, int j, const LPoly& f) {
    for (int r = 0; r < 2; ++r)
      M.m[r][i] = lp_trunc_above(lp_sub(F, M.m[r][i], lp_mul(F, f, M.m[r][j])), prec);
    for (int cc = 0; cc < 2; ++cc)
      plus.m[j][cc] = lp_trunc_above(lp_add(F, plus.m[j][cc], lp_mul(F, f, plus.m[i][cc])), prec);
  }
  // row_i += f * row_j on M (a 1/t-operation when the exponents of f are <= 0)
  void row_op(int i, int j, const LPoly& f) {
    for (int cc = 0; cc < 2; ++cc)
      M.m[i][cc] = lp_add(F, M.m[i][cc], lp_mul(F, f, M.m[j][cc]));
    for (int r = 0; r < 2; ++r)
      minus.m[r][j] = lp_sub(F, minus.m[r][j], lp_mul(F, f, minus.m[r][i]));
  }
  // col_i *= unit^{-1}, where unit = M[r][i] / t^val is a power series unit
  void unit_normalize_col(int i, int r) {
    const LPoly& p = M.m[r][i];
    LPoly unit = lp_shift(p, -p.val());
    LPoly inv = lp_div_trunc(F, LPoly::one(), unit, prec);
    for (int rr = 0; rr < 2; ++rr)
      M.m[rr][i] = lp_trunc_above(lp_mul(F, M.m[rr][i], inv), prec);
    for (int cc = 0; cc < 2; ++cc)
      plus.m[i][cc] = lp_trunc_above(lp_mul(F, unit, plus.m[i][cc]), prec);
  }
};

}  // namespace

BirkhoffFactors birkhoff_split(const gf::Field& F, const LaurentMatrix& g, long prec) {
  LPoly det = g.det(F);
  if (det.is_zero() || det.c.size() != 1)
    throw std::invalid_argument("matrix determinant is not a unit times a power of t");
  SplitState st{F, prec, g, LaurentMatrix::identity(), LaurentMatrix::identity()};
  long span = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!g.m[i][j].is_zero()) span = std::max({span, std::labs(g.m[i][j].val()), std::labs(g.m[i][j].hi())});
  long budget = 4 * (prec + span) + 40;
  for (long iter = 0;; ++iter) {
    if (iter > budget) throw PrecisionExceeded("Birkhoff pivoting exceeded its budget");
    // triangularize: zero out M[0][1] with O-column operations
    if (st.M.m[0][0].is_zero() ||
        (!st.M.m[0][1].is_zero() && st.M.m[0][1].val() < st.M.m[0][0].val()))
      st.swap_cols();
    if (!st.M.m[0][1].is_zero()) {
      LPoly f = lp_div_trunc(F, st.M.m[0][1], st.M.m[0][0], prec);
      st.col_op(1, 0, f);
      st.M.m[0][1] = LPoly();  // the residual lives above the precision
    }
    st.unit_normalize_col(0, 0);
    st.unit_normalize_col(1, 1);
    long a = st.M.m[0][0].val(), b = st.M.m[1][1].val();
    st.M.m[0][0] = LPoly::monomial(a);
    st.M.m[1][1] = LPoly::monomial(b);
    LPoly& w = st.M.m[1][0];
    // kill exponents <= a with 1/t-row operations against row 0
    if (!w.is_zero()) {
      LPoly low = lp_trunc_above(w, a);
      if (!low.is_zero()) st.row_op(1, 0, lp_shift(lp_scale(F, F.neg(1), low), -a));
    }
    // kill exponents >= max(b, a+1) with O-column operations against col 1
    if (!w.is_zero()) {
      long cut = std::max(b, a + 1);
      LPoly high = w;
      while (!high.is_zero() && high.val() < cut) {
        high.c.erase(high.c.begin());
        high.lo += 1;
        high.trim();
      }
      if (!high.is_zero()) st.col_op(0, 1, lp_shift(high, -b));
    }
    if (w.is_zero()) break;
    // pivot on the lowest leftover term: exponent strictly between a and b
    st.swap_rows();  // now [[w, t^b], [t^a, 0]]
    LPoly f = lp_div_trunc(F, st.M.m[0][1], st.M.m[0][0], prec);
    st.col_op(1, 0, f);
    st.M.m[0][1] = LPoly();
  }
  long k1 = st.M.m[0][0].val(), k2 = st.M.m[1][1].val();
  if (k1 < k2) {
    st.swap_rows();
    st.swap_cols();
    std::swap(k1, k2);
  }
  BirkhoffFactors out;
  out.minus = st.minus;
  out.plus = st.plus;
  out.k1 = k1;
  out.k2 = k2;
  return out;
}

long vertex_bundle_type(const gf::Field& F, const TreeVertex& v, long prec) {
  auto f = birkhoff_split(F, v.matrix(), prec);
  return f.k1 - f.k2;
}

std::vector<long> neighbor_profile(const gf::Field& F, const TreeVertex& v, long prec) {
  std::vector<long> out;
  for (auto& w : neighbors(F, v)) out.push_back(vertex_bundle_type(F, w, prec));
  std::sort(out.rbegin(), out.rend());
  return out;
}

ExploreResult explore(uint32_t q, long depth) {
  gf::Field F = gf::Field::make(q, 1);
  if (F.q != q) throw std::invalid_argument("explore: q must be prime");
  ExploreResult res;
  std::map<TreeVertex, size_t> index;
  res.verts.push_back(root_vertex());
  res.depth.push_back(0);
  res.adj.emplace_back();
  index[res.verts[0]] = 0;
  res.sphere_sizes.push_back(1);
  size_t layer_begin = 0, layer_end = 1;
  for (long d = 1; d <= depth; ++d) {
    size_t count = 0;
    for (size_t i = layer_begin; i < layer_end; ++i) {
      for (auto& w : neighbors(F, res.verts[i])) {
        auto it = index.find(w);
        size_t j;
        if (it == index.end()) {
          j = res.verts.size();
          index[w] = j;
          res.verts.push_back(w);
          res.depth.push_back(d);
          res.adj.emplace_back();
          ++count;
          // vertices in the last layer are never expanded themselves, so
          // record their one known (parent) edge here
          if (d == depth) res.adj[j].push_back(i);
        } else {
          j = it->second;
        }
        res.adj[i].push_back(j);
      }
    }
    res.sphere_sizes.push_back(count);
    layer_begin = layer_end;
    layer_end = res.verts.size();
  }
  return res;
}

}  // namespace eisgen::tree
