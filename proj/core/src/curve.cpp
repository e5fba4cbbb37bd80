#include "cuspidal/curve.hpp"

#include <algorithm>
#include <stdexcept>

#include "cuspidal/bipoly.hpp"
#include "cuspidal/factor.hpp"
#include "cuspidal/linalg.hpp"

namespace cuspidal {

namespace {

// Component as a univariate polynomial in the local parameter at t0:
// f(1, c + eps) at an affine point, f(eps, 1) at (0:1).
UniPoly local_poly(const BinaryForm& f, const P1Point& t0) {
  if (t0.is_infinity()) {
    std::vector<Rational> c(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) c[i] = f.coeff(f.degree() - i);
    return UniPoly(std::move(c));
  }
  return f.dehomogenized().shifted(t0.b);
}

}  // namespace

CurveParameterization::CurveParameterization(BinaryForm x_, BinaryForm y_, BinaryForm z_)
    : degree(x_.degree()), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {
  if (y.degree() != degree || z.degree() != degree)
    throw std::invalid_argument("component degrees differ");
  const BinaryForm* nz[3];
  int n = 0;
  for (const BinaryForm* f : {&x, &y, &z})
    if (!f->is_zero()) nz[n++] = f;
  if (n == 0) throw std::invalid_argument("zero parameterization");
  BinaryForm g = *nz[0];
  for (int i = 1; i < n; ++i) g = form_gcd(g, *nz[i]);
  if (!g.is_constant_form())
    throw std::invalid_argument("components share a common factor");
  QMatrix m;
  for (const BinaryForm* f : {&x, &y, &z}) m.push_back(f->coeffs());
  if (matrix_rank(m) < 2)
    throw std::invalid_argument("image is a point, not a curve");
}

ProjPoint CurveParameterization::image(const P1Point& p) const {
  return {x.eval(p), y.eval(p), z.eval(p)};
}

BranchGerm germ_at(const CurveParameterization& c, const P1Point& t0) {
  UniPoly px = local_poly(c.x, t0), py = local_poly(c.y, t0), pz = local_poly(c.z, t0);
  const UniPoly* comps[3] = {&px, &py, &pz};
  int denom = 0;
  auto ord = [](const UniPoly& p) {
    return p.is_zero() ? (1 << 24) : p.order_at_zero();
  };
  for (int i = 1; i < 3; ++i)
    if (ord(*comps[i]) < ord(*comps[denom])) denom = i;
  std::vector<RationalFunction> coords;
  for (int i = 0; i < 3; ++i) {
    if (i == denom) continue;
    RationalFunction r(*comps[i], *comps[denom]);
    if (!r.is_zero() && r.order() == 0)
      r = r - RationalFunction::constant(r.eval(0));
    coords.push_back(std::move(r));
  }
  return BranchGerm(std::move(coords[0]), std::move(coords[1]));
}

std::vector<std::pair<BinaryForm, int>> line_divisor(const CurveParameterization& c,
                                                     const Line& L) {
  BinaryForm composite = c.x * L.a + c.y * L.b + c.z * L.c;
  if (composite.is_zero()) throw std::runtime_error("line contains curve");
  return factor_form(composite);
}

std::vector<BinaryForm> singular_support(const CurveParameterization& c) {
  BinaryForm xs = c.x.derivative_s(), xt = c.x.derivative_t();
  BinaryForm ys = c.y.derivative_s(), yt = c.y.derivative_t();
  BinaryForm zs = c.z.derivative_s(), zt = c.z.derivative_t();
  BinaryForm m1 = ys * zt - yt * zs;
  BinaryForm m2 = zs * xt - zt * xs;
  BinaryForm m3 = xs * yt - xt * ys;
  const BinaryForm* nz[3];
  int n = 0;
  for (const BinaryForm* f : {&m1, &m2, &m3})
    if (!f->is_zero()) nz[n++] = f;
  if (n == 0) throw std::logic_error("degenerate derivative matrix");
  BinaryForm g = *nz[0];
  for (int i = 1; i < n; ++i) g = form_gcd(g, *nz[i]);
  std::vector<BinaryForm> out;
  if (g.is_constant_form()) return out;
  for (const auto& [f, mult] : factor_form(g)) out.push_back(f);
  return out;
}

namespace {

// ----- injectivity: exact emptiness test for off-diagonal identifications --

// Chord form f(a)g(b) - g(a)f(b) in Q[a][b].
BiPoly chord(const UniPoly& f, const UniPoly& g) {
  std::vector<UniPoly> c(std::max(f.degree(), g.degree()) + 1);
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    c[i] = f * g.coeff(i) - g * f.coeff(i);
  return BiPoly(std::move(c));
}

UniPoly upoly_rem(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  UniPoly::divmod(a, b, q, r);
  return r;
}

// Inverse of a mod the irreducible f, via the extended Euclidean algorithm.
UniPoly inv_mod(const UniPoly& a, const UniPoly& f) {
  UniPoly r0 = f, r1 = upoly_rem(a, f);
  UniPoly s0 = UniPoly::zero(), s1 = UniPoly::one();
  while (!r1.is_zero()) {
    UniPoly q, r2;
    UniPoly::divmod(r0, r1, q, r2);
    UniPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw std::logic_error("modulus not irreducible");
  return upoly_rem(s0 * (1 / r0.coeff(0)), f);
}

// Polynomials in a over the residue field Q[b]/(f): coefficients ascending.
using KPoly = std::vector<UniPoly>;

void ktrim(KPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

KPoly kpoly_of(const BiPoly& q, const UniPoly& f) {
  BiPoly s = q.swapped();  // coefficients of a^i are polynomials in b
  KPoly p(s.coeffs().size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = upoly_rem(s.coeffs()[i], f);
  ktrim(p);
  return p;
}

KPoly kgcd(KPoly a, KPoly b, const UniPoly& f) {
  ktrim(a);
  ktrim(b);
  while (!b.empty()) {
    // a mod b over the field Q[b]/(f)
    UniPoly inv = inv_mod(b.back(), f);
    while (a.size() >= b.size()) {
      UniPoly factor = upoly_rem(a.back() * inv, f);
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[off + i] = upoly_rem(a[off + i] - factor * b[i], f);
      a.pop_back();
      ktrim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// Does {q1, q2, q3} = 0 have a solution with b a root of the irreducible f
// and a != b? Diagonal solutions (a = b) arise at every cusp parameter,
// since the chord quotient restricted to the diagonal is a Wronskian; they
// are not identifications and must be discarded.
bool solvable_mod(const std::vector<const BiPoly*>& qs, const UniPoly& f) {
  KPoly g;
  bool first = true;
  for (const BiPoly* q : qs) {
    KPoly p = kpoly_of(*q, f);
    if (p.empty()) continue;  // vanishes identically over the factor
    if (first) {
      g = std::move(p);
      first = false;
    } else {
      g = kgcd(std::move(g), std::move(p), f);
    }
    if (g.size() == 1) return false;  // unit: no common root of a
  }
  if (first) return true;  // all three vanish over the factor
  // Strip the diagonal roots a = b (the class of b in K = Q[b]/(f)).
  const UniPoly bbar = upoly_rem(UniPoly::variable(), f);
  auto eval_at_bbar = [&](const KPoly& p) {
    UniPoly r;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
      r = upoly_rem(r * bbar + p[i], f);
    return r;
  };
  while (g.size() > 1 && eval_at_bbar(g).is_zero()) {
    // Synthetic division of g by (a - bbar); remainder is zero by the check.
    KPoly q(g.size() - 1);
    UniPoly carry;
    for (int i = static_cast<int>(g.size()) - 1; i >= 1; --i) {
      carry = upoly_rem(g[i] + carry * bbar, f);
      q[i - 1] = carry;
    }
    g = std::move(q);
    ktrim(g);
  }
  // Anything left is a genuine off-diagonal identification.
  return g.size() > 1;
}

// Candidate b-values (as a squarefree polynomial) for common zeros of two
// bivariate polynomials; the unit polynomial means "none".
UniPoly pair_candidates(const BiPoly& p, const BiPoly& q) {
  if (p.is_constant() || q.is_constant()) return UniPoly::one();
  BiPoly ps = p.swapped(), qs = q.swapped();
  if (ps.degree_b() < 1) return ps.coeff(0);  // p depends on b alone
  if (qs.degree_b() < 1) return qs.coeff(0);
  UniPoly r = resultant_b(ps, qs);
  if (r.is_zero())
    // Nontrivial common factor in a over Q(b); handled by the bivariate gcd.
    return UniPoly::zero();
  return r;
}

}  // namespace

bool injectivity_certificate(const CurveParameterization& c) {
  if (c.degree == 1) return true;
  UniPoly xa = c.x.dehomogenized(), ya = c.y.dehomogenized(), za = c.z.dehomogenized();
  BiPoly diag = BiPoly::var_b() - BiPoly::var_a();
  BiPoly q1 = chord(xa, ya), q2 = chord(xa, za), q3 = chord(ya, za);
  std::vector<BiPoly> qs;
  for (BiPoly* q : {&q1, &q2, &q3}) {
    if (q->is_zero()) return false;  // two components proportional: a line
    qs.push_back(q->divided_exact(diag));
  }

  // Work smallest-first: the resultant and gcd costs are dominated by the
  // largest quotient, and every common zero shows up in the pairs that
  // involve the smallest one.
  std::sort(qs.begin(), qs.end(), [](const BiPoly& a, const BiPoly& b) {
    return a.degree_a() + a.degree_b() < b.degree_a() + b.degree_b();
  });

  // A common curve of identifications.
  BiPoly g = BiPoly::gcd(BiPoly::gcd(qs[0], qs[1]), qs[2]);
  if (!g.is_constant()) return false;

  bool any_constant = false;
  for (const BiPoly& q : qs)
    if (q.is_constant() && !q.is_zero()) any_constant = true;

  if (!any_constant) {
    // Isolated identifications: candidate b-values from the two resultants
    // against the smallest quotient, then each irreducible candidate factor
    // verified in its residue field.
    UniPoly cand;
    bool have = false;
    for (int j = 1; j < 3 && !(have && cand.degree() == 0); ++j) {
      UniPoly r = pair_candidates(qs[0], qs[j]);
      if (r.is_zero()) continue;
      cand = have ? UniPoly::gcd(cand, r) : r.monic();
      have = true;
    }
    if (!have) {
      UniPoly r = pair_candidates(qs[1], qs[2]);
      if (r.is_zero()) throw std::logic_error("no usable resultant pair");
      cand = r.monic();
    }
    if (cand.degree() > 0) {
      std::vector<const BiPoly*> ptrs{&qs[0], &qs[1], &qs[2]};
      for (const auto& [f, mult] : factor_unipoly(cand).factors)
        if (solvable_mod(ptrs, f)) return false;
    }
  }

  // The point at infinity must not be identified with any other parameter.
  ProjPoint pinf = c.image(P1Point::infinity());
  BinaryForm f1 = c.y * pinf[2] - c.z * pinf[1];
  BinaryForm f2 = c.z * pinf[0] - c.x * pinf[2];
  BinaryForm f3 = c.x * pinf[1] - c.y * pinf[0];
  const BinaryForm* nz[3];
  int n = 0;
  for (const BinaryForm* f : {&f1, &f2, &f3})
    if (!f->is_zero()) nz[n++] = f;
  if (n == 0) throw std::logic_error("degenerate fiber computation");
  BinaryForm fiber = *nz[0];
  for (int i = 1; i < n; ++i) fiber = form_gcd(fiber, *nz[i]);
  return fiber.dehomogenized().degree() <= 0;
}

CurveReport verify_curve(
    const CurveParameterization& c,
    const std::vector<std::pair<P1Point, MultiplicitySequence>>& expected) {
  for (std::size_t i = 0; i < expected.size(); ++i)
    for (std::size_t j = i + 1; j < expected.size(); ++j)
      if (expected[i].first == expected[j].first)
        throw std::invalid_argument("duplicate expected parameter");

  CurveReport rep;
  rep.degree = c.degree;
  bool cusps_match = true;

  for (const auto& [pt, want] : expected) {
    MultiplicitySequence got = mult_sequence(germ_at(c, pt));
    if (got != want) cusps_match = false;
    rep.cusp_data.emplace_back(pt, std::move(got));
  }

  rep.singular_support = singular_support(c);
  bool support_contained = true;
  for (const BinaryForm& f : rep.singular_support) {
    if (f.degree() != 1) throw std::runtime_error("irrational singular parameter");
    P1Point root = f.root();
    bool listed = false;
    for (const auto& [pt, want] : expected)
      if (pt == root) listed = true;
    if (!listed) {
      // Unexpected rational zero of the support: must be a smooth point.
      MultiplicitySequence got = mult_sequence(germ_at(c, root));
      if (!got.empty()) {
        cusps_match = false;
        rep.cusp_data.emplace_back(root, std::move(got));
      }
      support_contained = false;
    }
  }

  long total = 0;
  for (const auto& [pt, seq] : rep.cusp_data) total += delta_of(seq);
  rep.genus_saturated = total == static_cast<long>(c.degree - 1) * (c.degree - 2) / 2;
  rep.injective = injectivity_certificate(c);
  rep.passes = cusps_match && rep.genus_saturated && rep.injective && support_contained;
  return rep;
}

}  // namespace cuspidal
