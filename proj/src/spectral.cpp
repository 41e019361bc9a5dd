#include "eisgen/spectral.hpp"

#include "eisgen/contour.hpp"

namespace eisgen::spectral {

curve::CurveData p1_curve() { return curve::zeta_from_counts(2, 0, {}); }

static RatFun cst(ScalarQ s) { return RatFun::constant("a", std::move(s)); }

RatFun eis(long k) {
  RatFun a = RatFun::variable("a");
  RatFun L = genus::scattering(p1_curve());
  ScalarQ rho = ScalarQ::q_half_pow(k);
  return cst(rho) * a.pow(k) + L * cst(rho) * a.pow(-k);
}

// CT(Eis)(O(k)) = Eis(kappa(k), a) / q^{k+1}; for k >= 0 this equals the
// closed form (1/q)[(a q^{-1/2})^k + L(a)(q^{-1/2}/a)^k], while k = -1
// reuses the class of O(-1) + O
RatFun constant_term(long k) {
  return eis(kappa(k)) * cst(ScalarQ(QRat::q_pow(-(k + 1))));
}

long kappa(long m) {
  if (m < -1) throw DomainError("no constant-term formula below degree -1");
  return m >= 0 ? m : 1;
}

RatFun ct_of_function(const bun::BunFun& phi, long m) {
  long k = kappa(m);
  auto it = phi.find(k);
  RatFun v = it == phi.end() ? cst(ScalarQ(0L)) : it->second;
  return v * cst(ScalarQ(QRat::q_pow(-(m + 1))));
}

bun::BunFun ct_transpose(const MFun& phi) {
  bun::BunFun out;
  ScalarQ unit = ScalarQ(1L) / (ScalarQ::q() - ScalarQ(1L));
  for (auto& [m, v] : phi) {
    long k = kappa(m);
    RatFun term = v * cst(bun::aut_order_sym(k) * unit * ScalarQ(QRat::q_pow(-(m + 1))));
    auto it = out.find(k);
    if (it == out.end())
      out[k] = term;
    else
      it->second = it->second + term;
  }
  return out;
}

RatFun m_inner(const MFun& f, const MFun& g) {
  RatFun s = cst(ScalarQ(0L));
  ScalarQ unit = ScalarQ(1L) / (ScalarQ::q() - ScalarQ(1L));
  for (auto& [m, v] : f) {
    auto it = g.find(m);
    if (it != g.end()) s = s + v * it->second.subst_inv() * cst(unit);
  }
  return s;
}

RatFun sigma(const RatFun& w, const curve::CurveData& C) {
  return w + genus::scattering(C) * w.subst_inv();
}

// contour strictly outside every pole of f/a
static ScalarQ outer_integral(const RatFun& f) {
  long top = 0;
  for (auto& p : pole_census(f)) {
    long c = (p.e.num >= 0 ? (p.e.num + p.e.den - 1) / p.e.den : p.e.num / p.e.den) + 1;
    top = std::max(top, c);
  }
  return circle_integral(f, Frac{top, 1});
}

bun::BunFun pseudo_eis(const RatFun& w) {
  if (w.den.val() != w.den.deg())
    throw DomainError("pseudo-Eisenstein input must be a Laurent polynomial");
  long width = w.num.deg() + w.den.val() + 2;
  bun::BunFun out;
  for (long k = 0; k <= width + 2; ++k) {
    ScalarQ v = outer_integral(eis(k) * w);
    if (!v.is_zero()) {
      if (k > width) throw std::logic_error("pseudo-Eisenstein support exceeded its bound");
      out[k] = cst(v);
    }
  }
  return out;
}

ScalarQ pairing_norm(const RatFun& w1, const RatFun& w2, const curve::CurveData& C) {
  RatFun L = genus::scattering(C);
  RatFun f = w1 * (w2.subst_inv() + L * w2);
  ScalarQ norm = ScalarQ(1L) / (ScalarQ::q() * (ScalarQ::q() - ScalarQ(1L)));
  return norm * outer_integral(f);
}

SpectralSplit spectral_split(const RatFun& w) {
  auto C = p1_curve();
  RatFun L = genus::scattering(C);
  // conjugated projector: w(a) + L(1/a) w(1/a)
  RatFun sbar = w + L.subst_inv() * w.subst_inv();
  ScalarQ two_norm = ScalarQ(1L) / (ScalarQ(2L) * ScalarQ::q() * (ScalarQ::q() - ScalarQ(1L)));
  SpectralSplit out;
  out.continuous = two_norm * circle_integral(sbar * sbar.subst_inv(), Frac{0, 1});

  // the kernel residue at a = +-q^{1/2}: both Galois-conjugate residues of
  // L(a)/a are equal, so each is half the trace over the place a^2 = q
  RatFun L_over_a = L * RatFun::variable("a").pow(-1);
  Place pl;
  pl.minpoly = SPoly::monomial(ScalarQ(1L), 2) - SPoly(ScalarQ::q());
  pl.mult = 1;
  pl.e = Frac{1, 2};
  ScalarQ half_trace = residue(L_over_a, pl) / ScalarQ(2L);
  ScalarQ norm = ScalarQ(1L) / (ScalarQ::q() * (ScalarQ::q() - ScalarQ(1L)));
  out.r_plus = half_trace * norm;
  out.r_minus = half_trace * norm;
  ScalarQ wp = w.eval(ScalarQ::sqrt_q());
  ScalarQ wm = w.eval(-ScalarQ::sqrt_q());
  out.disc_plus = out.r_plus * wp * wp;
  out.disc_minus = out.r_minus * wm * wm;
  return out;
}

SpectrumDesc spectrum() {
  SpectrumDesc d;
  d.cont_hi = ScalarQ(2L) * ScalarQ::sqrt_q();
  d.cont_lo = -d.cont_hi;
  d.disc_pos = ScalarQ::q() + ScalarQ(1L);
  d.disc_neg = -d.disc_pos;
  d.dual =
      "continuous: unitary characters a on |a|=1 up to a -> 1/a, eigenvalue "
      "q^{1/2}(a+1/a); discrete: the constant and sign eigenfunctions at "
      "+-(q+1)";
  return d;
}

// p(1+u) coefficient vector
static QPoly shift_by_one(const QPoly& p) {
  QPoly r;
  // Horner from the top: r(u) = c_n, then r <- r*(1+u) + c_{i}
  QPoly one_plus_u = QPoly(1L) + QPoly::var();
  for (size_t i = p.c.size(); i-- > 0;) r = r * one_plus_u + QPoly(p.c[i]);
  return r;
}

static bool all_nonneg(const QPoly& p) {
  for (auto& c : p.c)
    if (c < 0) return false;
  return true;
}

bool positive_for_q_gt_1(const ScalarQ& s) {
  if (s.is_zero()) return false;
  if (!s.is_pure() || s.half_tag() != 0) return false;  // want a plain Q(q) ratio
  QPoly n = shift_by_one(s.a.num), d = shift_by_one(s.a.den);
  auto ok = [&](QPoly p) {
    if (all_nonneg(p)) return true;
    for (auto& c : p.c) c = -c;
    return all_nonneg(p);
  };
  bool same_sign = (n.c.empty() ? true : (n.lead() > 0) == (d.lead() > 0));
  return ok(n) && ok(d) && same_sign;
}

}  // namespace eisgen::spectral
