#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "cuspidal/constructor.hpp"
#include "cuspidal/curve.hpp"

using namespace cuspidal;

namespace {

BinaryForm bf(int d, std::vector<long> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return BinaryForm(d, std::move(r));
}

CurveParameterization cuspidal_cubic() {
  return CurveParameterization(BinaryForm::monomial(3, 0), BinaryForm::monomial(3, 1),
                               BinaryForm::monomial(3, 3));
}

BranchGerm monomial_germ(int a, int b) {
  return BranchGerm(RationalFunction(UniPoly::monomial(a)),
                    RationalFunction(UniPoly::monomial(b)));
}

/// The germ of a line at its intersection with the curve at parameter t0,
/// written in the same affine chart that germ_at selects there.
BranchGerm line_germ_at(const CurveParameterization& c, const Line& l,
                        const P1Point& t0) {
  int orders[3] = {c.x.order_at(t0), c.y.order_at(t0), c.z.order_at(t0)};
  int chart = 0;
  for (int i = 1; i < 3; ++i)
    if (orders[i] < orders[chart]) chart = i;
  ProjPoint a = c.image(t0);
  const ProjPoint candidates[3] = {{l.b, -l.a, Rational(0)},
                                   {l.c, Rational(0), -l.a},
                                   {Rational(0), l.c, -l.b}};
  ProjPoint dir{0, 0, 0};
  for (const ProjPoint& w : candidates)
    if (!(w[0] == 0 && w[1] == 0 && w[2] == 0) && !proj_equal(w, a)) {
      dir = w;
      break;
    }
  UniPoly u = UniPoly::variable();
  int i1 = chart == 0 ? 1 : 0, i2 = chart == 2 ? 1 : 2;
  // coordinate i: (a_i + u d_i)/(a_chart + u d_chart) - a_i/a_chart
  UniPoly den_poly = UniPoly(a[chart]) + u * dir[chart];
  RationalFunction den(den_poly);
  RationalFunction c1 =
      RationalFunction(UniPoly(a[i1]) + u * dir[i1]) / den -
      RationalFunction::constant(a[i1] / a[chart]);
  RationalFunction c2 =
      RationalFunction(UniPoly(a[i2]) + u * dir[i2]) / den -
      RationalFunction::constant(a[i2] / a[chart]);
  return BranchGerm(c1, c2);
}

int divisor_mult(const std::vector<std::pair<BinaryForm, int>>& div,
                 const P1Point& pt) {
  for (const auto& [f, m] : div)
    if (f.degree() == 1 && f.root() == pt) return m;
  return 0;
}

}  // namespace

TEST_CASE("germ orders at marked points") {
  CurveParameterization cubic = cuspidal_cubic();
  BranchGerm g0 = germ_at(cubic, P1Point::infinity());
  CHECK(g0.u.order() == 3);
  CHECK(g0.v.order() == 2);
  BranchGerm g1 = germ_at(cubic, P1Point::affine(0));
  CHECK(g1.u.order() == 1);
  CHECK(g1.v.order() == 3);
  BranchGerm g2 = germ_at(make_curve(2).parameterization, P1Point::infinity());
  CHECK(g2.u.order() == 4);
  CHECK(g2.v.order() == 4);
}

TEST_CASE("multiplicity sequences of monomial cusps") {
  CHECK(mult_sequence(monomial_germ(2, 3)) == MultiplicitySequence{2});
  CHECK(mult_sequence(monomial_germ(3, 5)) == MultiplicitySequence{3, 2});
  CHECK(mult_sequence(monomial_germ(2, 5)) == MultiplicitySequence{2, 2});
}

TEST_CASE("monomial cusp delta and sequence validity") {
  for (int a = 2; a < 9; ++a)
    for (int b = a + 1; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      MultiplicitySequence seq = mult_sequence(monomial_germ(a, b));
      CHECK(validate(seq));
      CHECK(delta_of(seq) == (a - 1) * (b - 1) / 2);
    }
}

TEST_CASE("smooth-branch intersections follow the prefix-sum law") {
  const std::pair<int, int> dirs[] = {{1, 0}, {0, 1}, {1, 1}, {1, -2}};
  for (int a = 2; a < 9; ++a)
    for (int b = a + 1; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      MultiplicitySequence seq = mult_sequence(monomial_germ(a, b));
      seq.push_back(1);  // the sequence continues with 1s
      for (auto [ds, dt] : dirs) {
        BranchGerm line(RationalFunction(UniPoly::monomial(1, ds)),
                        RationalFunction(UniPoly::monomial(1, dt)));
        long got = germ_intersection(monomial_germ(a, b), line);
        // must equal m0 + ... + ms with m0 = ... = m_{s-1}
        bool legal = false;
        long sum = 0;
        for (std::size_t i = 0; i < seq.size(); ++i) {
          sum += seq[i];
          if (i > 0 && seq[i - 1] != seq[0]) break;
          if (sum == got) legal = true;
        }
        CHECK_MESSAGE(legal, "a=", a, " b=", b, " got ", got);
      }
    }
}

TEST_CASE("documented germ intersections") {
  BranchGerm x_axis(RationalFunction(UniPoly::variable()), RationalFunction());
  BranchGerm y_axis(RationalFunction(), RationalFunction(UniPoly::variable()));
  CHECK(germ_intersection(x_axis, y_axis) == 1);
  UniPoly t = UniPoly::variable();
  BranchGerm up(RationalFunction(t), RationalFunction(t * t));
  BranchGerm down(RationalFunction(t), RationalFunction(-(t * t)));
  CHECK(germ_intersection(up, down) == 2);
  CHECK(germ_intersection(monomial_germ(2, 3), x_axis) == 3);
  CHECK_THROWS_WITH(germ_intersection(x_axis, x_axis),
                    doctest::Contains("infinite intersection"));
}

TEST_CASE("line divisors of the cubic") {
  CurveParameterization cubic = cuspidal_cubic();
  auto ell = line_divisor(cubic, Line(0, 0, 1));
  REQUIRE(ell.size() == 1);
  CHECK(ell[0].first == BinaryForm::monomial(1, 1));
  CHECK(ell[0].second == 3);
  auto tan = line_divisor(cubic, Line(2, -3, 1));
  REQUIRE(tan.size() == 2);
  CHECK(divisor_mult(tan, P1Point::affine(1)) == 2);
  CHECK(divisor_mult(tan, P1Point::affine(-2)) == 1);
}

TEST_CASE("line divisors of the constructed curves and Bezout totals") {
  for (int k = 1; k <= 3; ++k) {
    CurveParameterization c = make_curve(k).parameterization;
    auto div = line_divisor(c, Line(1, 0, 0));
    CHECK(divisor_mult(div, P1Point::infinity()) == 2 * k);
    CHECK(divisor_mult(div, P1Point::affine(0)) == 3);
    int total = 0;
    for (const auto& [f, m] : div) total += f.degree() * m;
    CHECK(total == c.degree);
  }
  CHECK_THROWS_WITH(line_divisor(CurveParameterization(BinaryForm::monomial(1, 0),
                                                       BinaryForm::monomial(1, 1),
                                                       BinaryForm::zero(1)),
                                 Line(0, 0, 1)),
                    doctest::Contains("line contains curve"));
}

TEST_CASE("line divisor multiplicity equals the local intersection number") {
  CurveParameterization cubic = cuspidal_cubic();
  struct Probe {
    Line l;
    P1Point t0;
  };
  const Probe probes[] = {{Line(0, 0, 1), P1Point::affine(0)},
                          {Line(2, -3, 1), P1Point::affine(1)},
                          {Line(2, -3, 1), P1Point::affine(-2)},
                          {Line(1, 0, 0), P1Point::infinity()}};
  for (const Probe& p : probes) {
    long local = germ_intersection(germ_at(cubic, p.t0), line_germ_at(cubic, p.l, p.t0));
    CHECK(local == divisor_mult(line_divisor(cubic, p.l), p.t0));
  }
  CurveParameterization c2 = make_curve(2).parameterization;
  for (const P1Point& t0 : {P1Point::infinity(), P1Point::affine(0)}) {
    long local = germ_intersection(germ_at(c2, t0), line_germ_at(c2, Line(1, 0, 0), t0));
    CHECK(local == divisor_mult(line_divisor(c2, Line(1, 0, 0)), t0));
  }
}

TEST_CASE("singular support") {
  auto cubic_supp = singular_support(cuspidal_cubic());
  REQUIRE(cubic_supp.size() == 1);
  CHECK(cubic_supp[0] == BinaryForm::monomial(1, 0));  // the cusp parameter s = 0

  auto conic_supp = singular_support(CurveParameterization(
      BinaryForm::monomial(2, 0), BinaryForm::monomial(2, 1), BinaryForm::monomial(2, 2)));
  CHECK(conic_supp.empty());

  for (const BinaryForm& f : singular_support(make_curve(2).parameterization)) {
    bool known = f == BinaryForm::monomial(1, 0) || f == BinaryForm::monomial(1, 1) ||
                 f == bf(1, {1, -1});
    CHECK(known);
  }
}

TEST_CASE("injectivity certificates") {
  CHECK(injectivity_certificate(cuspidal_cubic()));
  CHECK(injectivity_certificate(make_curve(2).parameterization));
  CHECK(injectivity_certificate(CurveParameterization(
      BinaryForm::monomial(2, 0), BinaryForm::monomial(2, 1), BinaryForm::monomial(2, 2))));
  // nodal cubic: (s^2 t, s^3 - s t^2, t^3 - s^2 t) identifies t = 1 and t = -1
  CurveParameterization nodal(BinaryForm::monomial(3, 1), bf(3, {1, 0, -1, 0}),
                              bf(3, {0, -1, 0, 1}));
  CHECK_FALSE(injectivity_certificate(nodal));
}

TEST_CASE("full verification of the constructed curves") {
  for (int k = 1; k <= 6; ++k) {
    MultiplicitySequence big{2 * k};
    big.insert(big.end(), k, 2);
    std::vector<std::pair<P1Point, MultiplicitySequence>> expected{
        {P1Point::infinity(), big},
        {P1Point::affine(0), MultiplicitySequence(k, 3)},
        {P1Point::affine(1), {2}}};
    CurveReport r = verify_curve(make_curve(k).parameterization, expected);
    CHECK(r.degree == 2 * k + 3);
    CHECK(r.genus_saturated);
    CHECK(r.injective);
    CHECK(r.passes);
  }
}

TEST_CASE("verification failures are reported") {
  CurveReport ok = verify_curve(cuspidal_cubic(), {{P1Point::infinity(), {2}}});
  CHECK(ok.passes);
  CurveReport bad =
      verify_curve(make_curve(2).parameterization, {{P1Point::infinity(), {4, 2}}});
  CHECK_FALSE(bad.passes);
}
