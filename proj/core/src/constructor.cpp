#include "cuspidal/constructor.hpp"

#include <stdexcept>

#include "cuspidal/linalg.hpp"

namespace cuspidal {

namespace {

UniPoly tau() { return UniPoly::monomial(3); }

UniPoly lambda() {
  return UniPoly(std::vector<Rational>{2, -3, 0, 1});  // (t-1)^2 (t+2)
}

}  // namespace

FGSolution solve_fg(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const UniPoly T = tau(), L = lambda();

  // Basis polynomial multiplied by each unknown: a_i -> tau^i lambda^{k-3-i}
  // (i = 0..k-3), then b_j -> tau^{k-2} t^j (j = 0..2k-3).
  std::vector<UniPoly> basis;
  for (int i = 0; i <= k - 3; ++i) basis.push_back(T.pow(i) * L.pow(k - 3 - i));
  const UniPoly tk2 = T.pow(k - 2);
  for (int j = 0; j <= 2 * k - 3; ++j) basis.push_back(tk2 * UniPoly::monomial(j));
  const int unknowns = static_cast<int>(basis.size());  // 3k-4

  // Conditions on F = sum of unknowns times basis polynomials:
  //   Taylor coefficients at t=1 vanish for orders 0..2k-5,
  //   Taylor coefficients at t=-2 vanish for orders 0..k-3,
  //   coefficient of (t-1)^(2k-4) equals -3^(k-2),
  //   coefficient of (t-1)^(2k-3) equals 3^(k-3) (11-k).
  QMatrix A;
  QVector rhs;
  auto add_condition = [&](const Rational& at, int order, const Rational& value) {
    QVector row(unknowns);
    for (int c = 0; c < unknowns; ++c) row[c] = basis[c].taylor_coeff(at, order);
    A.push_back(std::move(row));
    rhs.push_back(value);
  };
  for (int m = 0; m <= 2 * k - 5; ++m) add_condition(1, m, 0);
  for (int m = 0; m <= k - 3; ++m) add_condition(-2, m, 0);
  add_condition(1, 2 * k - 4, -rat_pow(3, k - 2));
  add_condition(1, 2 * k - 3, rat_pow(3, k - 3) * (11 - k));

  LinearSolveResult sol = solve_linear(A, rhs);
  if (sol.status != SolveStatus::Unique)
    throw std::runtime_error("construction system not uniquely solvable");

  FGSolution out;
  out.k = k;
  UniPoly F;
  for (int c = 0; c < unknowns; ++c) F = F + basis[c] * sol.solution[c];
  for (int i = 0; i <= k - 3; ++i) out.f.push_back(sol.solution[i]);
  {
    std::vector<Rational> gc(sol.solution.begin() + (k - 2), sol.solution.end());
    out.g = UniPoly(std::move(gc));
  }
  out.h = F.divided_exact(L.pow(k - 2));
  if (out.h.eval(1) != -1 || out.h.derivative().eval(1) != 3)
    throw std::logic_error("endpoint conditions violated");
  UniPoly numer = UniPoly::monomial(3) * out.h + UniPoly::one();
  out.qhat = numer.divided_exact(UniPoly(std::vector<Rational>{1, -2, 1}));
  if (out.qhat.coeff(0) != 1 || out.qhat.coeff(1) != 2 || out.qhat.coeff(2) != 3)
    throw std::logic_error("low-order conditions violated");
  if (out.qhat.degree() != 2 * k - 2 || out.qhat.leading_coeff() == 0)
    throw std::logic_error("unexpected qhat degree");
  return out;
}

BinaryForm q_polynomial(int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (k == 1) return BinaryForm::constant(1);
  // q(s,t) = s^(2k-2) qhat(t/s); q(1,0) = qhat's constant term = 1.
  FGSolution sol = solve_fg(k);
  std::vector<Rational> c(2 * k - 1);
  for (int i = 0; i <= sol.qhat.degree(); ++i) c[i] = sol.qhat.coeff(i);
  return BinaryForm(2 * k - 2, std::move(c));
}

TheoremCurve make_curve(int k) {
  BinaryForm q = q_polynomial(k);
  const int d = 2 * k + 3;
  BinaryForm s2k = BinaryForm::monomial(2 * k, 0);
  BinaryForm t3 = BinaryForm::monomial(3, 3);
  BinaryForm smt(1, {1, -1});   // s - t
  BinaryForm lin(1, {2, 1});    // 2s + t
  BinaryForm x = s2k * t3;
  BinaryForm y = s2k * smt.pow(2) * lin;
  BinaryForm z = t3 * smt.pow(2) * q;
  CurveParameterization c(std::move(x), std::move(y), std::move(z));
  if (c.degree != d) throw std::logic_error("degree mismatch in assembly");
  return TheoremCurve{k, std::move(q), std::move(c)};
}

IndependenceResult independence_check(int k) {
  if (k < 3) throw std::invalid_argument("k must be at least 3");
  const UniPoly t1 = UniPoly(std::vector<Rational>{-1, 1});  // t - 1
  const UniPoly t2 = UniPoly(std::vector<Rational>{2, 1});   // t + 2
  std::vector<UniPoly> fam;
  // tau^(k-3-i) lambda^i, the monomials of a degree-(k-3) form in (tau, lambda)
  for (int i = 0; i <= k - 3; ++i)
    fam.push_back(UniPoly::monomial(3 * (k - 3 - i)) * t1.pow(2 * i) * t2.pow(i));
  for (int i = k - 2; i <= 3 * k - 7; ++i)
    fam.push_back(t1.pow(2 * k - 2) * t2.pow(i));
  for (int i = 3 * k - 6; i <= 5 * k - 9; ++i) fam.push_back(UniPoly::monomial(i));

  const int cols = 5 * k - 8;  // max degree + 1 = 5k-9+1
  QMatrix m;
  for (const UniPoly& p : fam) {
    QVector row(cols);
    for (int j = 0; j <= p.degree(); ++j) row[j] = p.coeff(j);
    m.push_back(std::move(row));
  }
  IndependenceResult r;
  r.dimension = matrix_rank(std::move(m));
  r.ok = r.dimension == static_cast<int>(fam.size()) &&
         static_cast<int>(fam.size()) == 5 * k - 8;
  return r;
}

}  // namespace cuspidal
