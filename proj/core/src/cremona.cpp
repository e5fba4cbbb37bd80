#include "cuspidal/cremona.hpp"

#include <stdexcept>

#include "cuspidal/linalg.hpp"

namespace cuspidal {

namespace {

Rational line_at(const Line& l, const ProjPoint& p) {
  return l.a * p[0] + l.b * p[1] + l.c * p[2];
}

bool is_zero_point(const ProjPoint& p) { return p[0] == 0 && p[1] == 0 && p[2] == 0; }

// A point of the line m independent of B.
ProjPoint second_point_on(const Line& m, const ProjPoint& B) {
  const ProjPoint candidates[3] = {{m.b, -m.a, Rational(0)},
                                   {m.c, Rational(0), -m.a},
                                   {Rational(0), m.c, -m.b}};
  for (const ProjPoint& w : candidates)
    if (!is_zero_point(w) && !proj_equal(w, B)) return w;
  throw std::logic_error("no second point on line");
}

BinaryForm conic_pullback(const std::array<Rational, 6>& c,
                          const CurveParameterization& cp) {
  const BinaryForm &x = cp.x, &y = cp.y, &z = cp.z;
  return x * x * c[0] + y * y * c[1] + z * z * c[2] + x * y * c[3] + x * z * c[4] +
         y * z * c[5];
}

// Multiplicity of the linear factor with the given root in a factored
// divisor; 0 when absent.
int root_multiplicity(const std::vector<std::pair<BinaryForm, int>>& divisor,
                      const P1Point& pt) {
  for (const auto& [f, m] : divisor)
    if (f.degree() == 1 && f.root() == pt) return m;
  return 0;
}

void broke(const std::string& what) {
  throw std::runtime_error("construction broke down: " + what);
}

void validate_marked(const MarkedCurve& mc) {
  const int d = mc.curve.degree;
  if (d != 2 * mc.k + 3) broke("degree is not 2k+3");
  if (mult_sequence(germ_at(mc.curve, mc.r_param)) != MultiplicitySequence{2})
    broke("no ordinary cusp at r");
  if (mc.k >= 1) {
    MultiplicitySequence want_q{2 * mc.k};
    want_q.insert(want_q.end(), mc.k, 2);
    if (mult_sequence(germ_at(mc.curve, mc.q_param)) != want_q) broke("cusp type at q");
    if (mult_sequence(germ_at(mc.curve, mc.p_param)) != MultiplicitySequence(mc.k, 3))
      broke("cusp type at p");
    auto ed = line_divisor(mc.curve, mc.ell);
    if (root_multiplicity(ed, mc.q_param) != d - 3 ||
        root_multiplicity(ed, mc.p_param) != 3)
      broke("secant line divisor");
  } else {
    if (germ_multiplicity(germ_at(mc.curve, mc.q_param)) != 1) broke("q not smooth");
    if (germ_multiplicity(germ_at(mc.curve, mc.p_param)) != 1) broke("p not smooth");
    if (root_multiplicity(line_divisor(mc.curve, mc.ell), mc.p_param) != 3)
      broke("inflectional tangent divisor");
  }
  auto td = line_divisor(mc.curve, mc.tangent);
  if (root_multiplicity(td, mc.q_param) != d - 1 ||
      root_multiplicity(td, mc.s_param) != 1)
    broke("tangent divisor");
  if (mc.s_param == mc.q_param || mc.s_param == mc.p_param || mc.s_param == mc.r_param)
    broke("residual point collides with a mark");
}

// Rebuild the derived marks (tangent, ell, s) at the given level and verify
// every invariant.
MarkedCurve remark(CurveParameterization curve, int k, const P1Point& q,
                   const P1Point& p, const P1Point& r) {
  Line tangent = tangent_line(curve, q);
  Line ell = (k >= 1) ? join(curve.image(p), curve.image(q)) : tangent_line(curve, p);
  auto td = line_divisor(curve, tangent);
  const int d = curve.degree;
  P1Point s = P1Point::infinity();
  bool found = false;
  for (const auto& [f, m] : td) {
    if (f.degree() != 1) broke("tangent residual is not rational");
    P1Point root = f.root();
    if (root == q) {
      if (m != d - 1) broke("tangent contact is not d-1");
      continue;
    }
    if (found || m != 1) broke("tangent residual not unique");
    s = root;
    found = true;
  }
  if (!found) broke("no tangent residual");
  MarkedCurve mc{k, std::move(curve), q, p, r, s, ell, tangent};
  validate_marked(mc);
  return mc;
}

// The inverse transformation at level k >= 1, exposing the map itself.
QuadraticMap inverse_map_of(const MarkedCurve& mc) {
  return quadratic_map(mc.curve.image(mc.p_param), mc.curve.image(mc.q_param),
                       mc.tangent);
}

}  // namespace

MarkedCurve cubic_seed() {
  CurveParameterization cubic(BinaryForm::monomial(3, 0), BinaryForm::monomial(3, 1),
                              BinaryForm::monomial(3, 3));
  MarkedCurve mc{0,
                 std::move(cubic),
                 P1Point::affine(1),      // q
                 P1Point::infinity(),     // p: (1:0) is t=0 in the (s:t) chart
                 P1Point::affine(0),      // r
                 P1Point::affine(0),      // s, fixed below
                 Line(0, 0, 1),           // ell = {z=0}
                 Line(2, -3, 1)};         // tangent at (1:1:1)
  // Marks use the convention (s:t); p = (1:0) means t = 0.
  mc.p_param = P1Point::affine(0);
  mc.r_param = P1Point::infinity();
  mc.s_param = P1Point::affine(-2);
  validate_marked(mc);
  return mc;
}

Line tangent_line(const CurveParameterization& c, const P1Point& t0) {
  // Local expansion of the three components at t0.
  auto local = [&](const BinaryForm& f) {
    if (t0.is_infinity()) {
      std::vector<Rational> cs(f.degree() + 1);
      for (int i = 0; i <= f.degree(); ++i) cs[i] = f.coeff(f.degree() - i);
      return UniPoly(std::move(cs));
    }
    return f.dehomogenized().shifted(t0.b);
  };
  UniPoly px = local(c.x), py = local(c.y), pz = local(c.z);
  ProjPoint a{px.coeff(0), py.coeff(0), pz.coeff(0)};
  for (int j = 1; j <= c.degree; ++j) {
    ProjPoint v{px.coeff(j), py.coeff(j), pz.coeff(j)};
    ProjPoint n = cross(a, v);
    if (is_zero_point(n)) continue;
    Line l(n[0], n[1], n[2]);
    int mult = germ_multiplicity(germ_at(c, t0));
    if (root_multiplicity(line_divisor(c, l), t0) < mult + 1)
      throw std::logic_error("tangent certification failed");
    return l;
  }
  throw std::runtime_error("degenerate point: no tangent direction");
}

QuadraticMap quadratic_map(const ProjPoint& S, const ProjPoint& B, const Line& m) {
  if (line_at(m, B) != 0) throw std::invalid_argument("degenerate base scheme");
  if (proj_equal(S, B) || line_at(m, S) == 0)
    throw std::invalid_argument("degenerate base scheme");
  auto point_row = [](const ProjPoint& p) {
    return QVector{p[0] * p[0], p[1] * p[1], p[2] * p[2],
                   p[0] * p[1], p[0] * p[2], p[1] * p[2]};
  };
  ProjPoint W = second_point_on(m, B);
  // Polar form of B and W: forces the conic's tangent at B to be m.
  QVector polar{2 * B[0] * W[0], 2 * B[1] * W[1], 2 * B[2] * W[2],
                B[0] * W[1] + B[1] * W[0], B[0] * W[2] + B[2] * W[0],
                B[1] * W[2] + B[2] * W[1]};
  QMatrix a{point_row(S), point_row(B), std::move(polar)};
  std::vector<QVector> basis = nullspace(a, 6);
  if (basis.size() != 3) throw std::logic_error("unexpected conic system rank");
  QuadraticMap qm;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) qm.conics[i][j] = basis[i][j];
  return qm;
}

CurveParameterization apply(const QuadraticMap& map, const CurveParameterization& c) {
  BinaryForm f0 = conic_pullback(map.conics[0], c);
  BinaryForm f1 = conic_pullback(map.conics[1], c);
  BinaryForm f2 = conic_pullback(map.conics[2], c);
  const BinaryForm* nz[3];
  int n = 0;
  for (const BinaryForm* f : {&f0, &f1, &f2})
    if (!f->is_zero()) nz[n++] = f;
  if (n < 2) throw std::runtime_error("image degenerates under the map");
  BinaryForm g = *nz[0];
  for (int i = 1; i < n; ++i) g = form_gcd(g, *nz[i]);
  auto reduce = [&](const BinaryForm& f) {
    return f.is_zero() ? BinaryForm::zero(f.degree() - g.degree())
                       : f.divided_exact(g);
  };
  return CurveParameterization(reduce(f0), reduce(f1), reduce(f2));
}

MarkedCurve mark_curve(CurveParameterization curve, int k, const P1Point& q,
                       const P1Point& p, const P1Point& r) {
  return remark(std::move(curve), k, q, p, r);
}

MarkedCurve forward_step(const MarkedCurve& mc) {
  ProjPoint s_point = mc.curve.image(mc.s_param);
  ProjPoint b = meet(mc.tangent, mc.ell);
  QuadraticMap psi = quadratic_map(s_point, b, mc.ell);
  return remark(apply(psi, mc.curve), mc.k + 1, mc.q_param, mc.p_param, mc.r_param);
}

MarkedCurve inverse_step(const MarkedCurve& mc) {
  if (mc.k == 0) throw std::invalid_argument("already cubic");
  QuadraticMap phi = inverse_map_of(mc);
  return remark(apply(phi, mc.curve), mc.k - 1, mc.q_param, mc.p_param, mc.r_param);
}

namespace {

// Mobius matrix sending a -> (0:1), b -> (1:0), c -> (1:1), returned as the
// substitution matrix for reparameterizing binary forms.
std::array<Rational, 4> mobius_substitution(const P1Point& a, const P1Point& b,
                                            const P1Point& c) {
  // Row 1 vanishes at a, row 2 at b; rows scaled to agree at c.
  Rational r1s = a.b, r1t = -a.a;
  Rational r2s = b.b, r2t = -b.a;
  Rational va = r1s * c.a + r1t * c.b;
  Rational vb = r2s * c.a + r2t * c.b;
  if (va == 0 || vb == 0) throw std::invalid_argument("marks not distinct");
  r1s /= va;
  r1t /= va;
  r2s /= vb;
  r2t /= vb;
  // Inverse (up to scale) of [[r1s, r1t], [r2s, r2t]]: forms compose with it.
  return {r2t, -r1t, -r2s, r1s};
}

}  // namespace

CurveParameterization canonical_form(const CurveParameterization& c) {
  // Locate the three cusps.
  std::vector<std::pair<P1Point, MultiplicitySequence>> cusps;
  for (const BinaryForm& f : singular_support(c)) {
    if (f.degree() != 1) throw std::invalid_argument("irrational singular parameter");
    P1Point root = f.root();
    MultiplicitySequence seq = mult_sequence(germ_at(c, root));
    if (!seq.empty()) cusps.emplace_back(root, std::move(seq));
  }
  if (cusps.size() != 3) throw std::invalid_argument("cusp types ambiguous");
  int iq = -1, ip = -1, ir = -1;
  for (int i = 0; i < 3; ++i) {
    const auto& s = cusps[i].second;
    bool all3 = true;
    for (int v : s) all3 = all3 && v == 3;
    if (all3) ip = i;
  }
  if (ip < 0) throw std::invalid_argument("cusp types ambiguous");
  const int k = static_cast<int>(cusps[ip].second.size());
  for (int i = 0; i < 3; ++i) {
    if (i == ip) continue;
    const auto& s = cusps[i].second;
    MultiplicitySequence want_q{2 * k};
    want_q.insert(want_q.end(), k, 2);
    if (s == want_q)
      iq = i;
    else if (s == MultiplicitySequence{2})
      ir = i;
  }
  if (iq < 0 || ir < 0 || iq == ir) throw std::invalid_argument("cusp types ambiguous");

  const P1Point &pq = cusps[iq].first, &pp = cusps[ip].first, &pr = cusps[ir].first;
  ProjPoint Q = c.image(pq), P = c.image(pp), R = c.image(pr);
  ProjPoint r1 = cross(Q, P), r2 = cross(Q, R), r3 = cross(P, R);
  if (r1[0] * R[0] + r1[1] * R[1] + r1[2] * R[2] == 0)
    throw std::invalid_argument("collinear cusps");

  std::array<Rational, 4> sub = mobius_substitution(pq, pp, pr);
  BinaryForm xs = c.x.compose_linear(sub);
  BinaryForm ys = c.y.compose_linear(sub);
  BinaryForm zs = c.z.compose_linear(sub);
  auto comb = [&](const ProjPoint& row) {
    return (xs * row[0] + ys * row[1] + zs * row[2]).normalized();
  };
  return CurveParameterization(comb(r1), comb(r2), comb(r3));
}

CurveParameterization canonical_form(const MarkedCurve& mc) {
  if (mc.k >= 1) return canonical_form(mc.curve);
  // Cubic: reparameterize r, p, q to (0:1), (1:0), (1:1); move the cusp,
  // inflection, marked point and residual point to the seed positions.
  std::array<Rational, 4> sub = mobius_substitution(mc.r_param, mc.p_param, mc.q_param);
  BinaryForm xs = mc.curve.x.compose_linear(sub);
  BinaryForm ys = mc.curve.y.compose_linear(sub);
  BinaryForm zs = mc.curve.z.compose_linear(sub);

  auto four_point = [](const std::array<ProjPoint, 4>& pts) {
    QMatrix m(3, QVector(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = pts[j][i];
    QVector lam = [&] {
      LinearSolveResult sol =
          solve_linear(m, QVector{pts[3][0], pts[3][1], pts[3][2]});
      if (sol.status != SolveStatus::Unique)
        throw std::invalid_argument("degenerate point configuration");
      return sol.solution;
    }();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] *= lam[j];
    return m;  // columns scaled so that the matrix sends e1,e2,e3,(1,1,1)
  };

  std::array<ProjPoint, 4> src{mc.curve.image(mc.r_param), mc.curve.image(mc.p_param),
                               mc.curve.image(mc.q_param), mc.curve.image(mc.s_param)};
  std::array<ProjPoint, 4> dst{ProjPoint{0, 0, 1}, ProjPoint{1, 0, 0},
                               ProjPoint{1, 1, 1}, ProjPoint{1, -2, -8}};
  QMatrix a = four_point(src), b = four_point(dst);
  // T = b * a^{-1}; build via solving a^T rows.
  // Invert a exactly.
  QMatrix inv(3, QVector(3));
  {
    QMatrix aug(3, QVector(6));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) aug[i][j] = a[i][j];
      aug[i][3 + i] = 1;
    }
    // Gauss-Jordan.
    for (int col = 0, row = 0; col < 3; ++col) {
      int p = -1;
      for (int r = row; r < 3; ++r)
        if (aug[r][col] != 0) {
          p = r;
          break;
        }
      if (p < 0) throw std::invalid_argument("degenerate point configuration");
      std::swap(aug[row], aug[p]);
      Rational d = aug[row][col];
      for (auto& v : aug[row]) v /= d;
      for (int r = 0; r < 3; ++r) {
        if (r == row) continue;
        Rational f = aug[r][col];
        if (f == 0) continue;
        for (int j = 0; j < 6; ++j) aug[r][j] -= f * aug[row][j];
      }
      ++row;
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) inv[i][j] = aug[i][3 + j];
  }
  QMatrix t(3, QVector(3, Rational(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) t[i][j] += b[i][l] * inv[l][j];

  BinaryForm xn = xs * t[0][0] + ys * t[0][1] + zs * t[0][2];
  BinaryForm yn = xs * t[1][0] + ys * t[1][1] + zs * t[1][2];
  BinaryForm zn = xs * t[2][0] + ys * t[2][1] + zs * t[2][2];
  // One global scale: leading coefficient of the first component.
  Rational scale = 0;
  for (const BinaryForm* f : {&xn, &yn, &zn}) {
    if (f->is_zero()) continue;
    for (const Rational& co : f->coeffs())
      if (co != 0) {
        scale = co;
        break;
      }
    if (scale != 0) break;
  }
  Rational is = 1 / scale;
  return CurveParameterization(xn * is, yn * is, zn * is);
}

std::vector<QuadraticMap> rectify(const MarkedCurve& mc) {
  std::vector<QuadraticMap> chain;
  MarkedCurve cur = mc;
  while (cur.k > 0) {
    QuadraticMap phi = inverse_map_of(cur);
    cur = remark(apply(phi, cur.curve), cur.k - 1, cur.q_param, cur.p_param,
                 cur.r_param);
    chain.push_back(phi);
  }
  // Cubic to conic: base the map at the ordinary cusp with its cuspidal
  // tangent, plus the marked smooth point.
  Line cusp_tangent = tangent_line(cur.curve, cur.r_param);
  QuadraticMap to_conic = quadratic_map(cur.curve.image(cur.q_param),
                                        cur.curve.image(cur.r_param), cusp_tangent);
  CurveParameterization conic = apply(to_conic, cur.curve);
  chain.push_back(to_conic);
  if (conic.degree != 2) throw std::logic_error("cubic did not map to a conic");
  // Conic to line: tangential base point on the conic plus another point.
  P1Point b_param = P1Point::infinity();
  Line conic_tangent = tangent_line(conic, b_param);
  ProjPoint b_point = conic.image(b_param);
  QuadraticMap to_line = [&] {
    for (int i = 0;; ++i) {
      P1Point cand = P1Point::affine(i);
      ProjPoint s_point = conic.image(cand);
      if (!proj_equal(s_point, b_point) && line_at(conic_tangent, s_point) != 0)
        return quadratic_map(s_point, b_point, conic_tangent);
      if (i > 4) throw std::logic_error("no usable point on conic");
    }
  }();
  CurveParameterization line = apply(to_line, conic);
  chain.push_back(to_line);
  if (line.degree != 1) throw std::logic_error("conic did not map to a line");
  return chain;
}

}  // namespace cuspidal
