#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cuspidal/constructor.hpp"

using namespace cuspidal;

namespace {
UniPoly up(std::vector<long> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return UniPoly(std::move(r));
}
UniPoly lambda_poly() { return up({2, -3, 0, 1}); }  // (t-1)^2 (t+2)
}  // namespace

TEST_CASE("hand-checkable solution at k = 2") {
  FGSolution s = solve_fg(2);
  CHECK(s.f.empty());
  CHECK(s.g == up({-4, 3}));
  CHECK(s.h == up({-4, 3}));
  CHECK(s.qhat == up({1, 2, 3}));
  CHECK(s.h.eval(1) == -1);
  CHECK(s.h.derivative().eval(1) == 3);
}

TEST_CASE("defining identity lambda^(k-2) h = f(tau, lambda) + tau^(k-2) g") {
  UniPoly tau = UniPoly::monomial(3), lambda = lambda_poly();
  for (int k = 2; k <= 10; ++k) {
    FGSolution s = solve_fg(k);
    UniPoly lhs = lambda.pow(k - 2) * s.h;
    UniPoly f_eval;
    for (int i = 0; i <= k - 3; ++i)
      f_eval = f_eval + s.f[i] * tau.pow(i) * lambda.pow(k - 3 - i);
    UniPoly rhs = f_eval + tau.pow(k - 2) * s.g;
    CHECK(lhs == rhs);
    CHECK(s.h.eval(1) == -1);
    CHECK(s.h.derivative().eval(1) == 3);
    // tau^(k-2) divides f(tau, lambda) - lambda^(k-2) h (automatically)
    UniPoly diff = f_eval - lambda.pow(k - 2) * s.h;
    if (!diff.is_zero()) CHECK(diff.order_at_zero() >= 3 * (k - 2));
    // qhat recovers h: qhat (t-1)^2 = t^3 h + 1
    CHECK(s.qhat * up({1, -2, 1}) == UniPoly::monomial(3) * s.h + UniPoly::one());
    CHECK(s.qhat.eval(0) == 1);
    CHECK(s.qhat.derivative().eval(0) == 2);
    CHECK(s.qhat.derivative().derivative().eval(0) == 6);
    CHECK(s.qhat.degree() == 2 * k - 2);
  }
}

TEST_CASE("endpoint conditions are equivalent to a divisibility") {
  // qhat(0)=1, qhat'(0)=2, qhat''(0)=6 iff t^3 divides qhat (t-1)^2 - 1
  for (int k = 2; k <= 6; ++k) {
    UniPoly qhat = solve_fg(k).qhat;
    UniPoly rem = qhat * up({1, -2, 1}) - UniPoly::one();
    CHECK(rem.order_at_zero() >= 3);
  }
  UniPoly fake = up({1, 2, 5});  // wrong second derivative
  CHECK((fake * up({1, -2, 1}) - UniPoly::one()).order_at_zero() < 3);
}

TEST_CASE("q polynomial") {
  CHECK(q_polynomial(1) == BinaryForm::constant(1));
  CHECK(q_polynomial(2) ==
        BinaryForm(2, {Rational(1), Rational(2), Rational(3)}));
  BinaryForm q3 = q_polynomial(3);
  CHECK(q3.degree() == 4);
  CHECK(q3.coeff(0) == 1);
  CHECK_THROWS(q_polynomial(0));
}

TEST_CASE("assembled parameterizations") {
  TheoremCurve c1 = make_curve(1);
  CHECK(c1.parameterization.degree == 5);
  BinaryForm smt = BinaryForm(1, {Rational(1), Rational(-1)});
  BinaryForm two_s_plus_t = BinaryForm(1, {Rational(2), Rational(1)});
  CHECK(c1.parameterization.x == BinaryForm::monomial(2, 0) * BinaryForm::monomial(3, 3));
  CHECK(c1.parameterization.y ==
        BinaryForm::monomial(2, 0) * smt * smt * two_s_plus_t);
  CHECK(c1.parameterization.z == BinaryForm::monomial(3, 3) * smt * smt);

  for (int k = 1; k <= 5; ++k) {
    TheoremCurve c = make_curve(k);
    CHECK(c.parameterization.degree == 2 * k + 3);
    CHECK(c.q.coeff(0) == 1);
    // x is the single monomial s^2k t^3
    CHECK(c.parameterization.x == BinaryForm::monomial(2 * k + 3, 3));
  }
}

TEST_CASE("independence of the three polynomial systems") {
  for (int k = 3; k <= 8; ++k) {
    IndependenceResult r = independence_check(k);
    CHECK(r.dimension == 5 * k - 8);
    CHECK(r.ok);
  }
  CHECK_THROWS(independence_check(2));
}
