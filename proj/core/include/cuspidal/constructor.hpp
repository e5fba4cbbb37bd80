#pragma once

#include <vector>

#include "cuspidal/curve.hpp"
#include "cuspidal/unipoly.hpp"

namespace cuspidal {

/// Solution of the linear conditions determining the degree-(2k+3) curve:
/// with tau = t^3 and lambda = t^3 - 3t + 2 = (t-1)^2 (t+2),
/// lambda^(k-2) * h = f(tau, lambda) + tau^(k-2) * g
/// where f is homogeneous of degree k-3 (coefficient list a, empty for k=2)
/// and deg g <= 2k-3; h satisfies h(1) = -1, h'(1) = 3, and
/// qhat = (t^3 h + 1)/(t-1)^2 has qhat(0)=1, qhat'(0)=2, qhat''(0)=6.
struct FGSolution {
  int k = 0;
  std::vector<Rational> f;  // a_0..a_{k-3}, coefficient of tau^i lambda^{k-3-i}
  UniPoly g;
  UniPoly h;
  UniPoly qhat;
};

/// Solves the (3k-4)-unknown linear system; the solution is unique for
/// every k >= 2, and all invariants above are re-verified after solving.
FGSolution solve_fg(int k);

/// The degree-(2k-2) form q with q(1,0) = 1: the homogenization of qhat for
/// k >= 2, the constant 1 for k = 1.
BinaryForm q_polynomial(int k);

struct TheoremCurve {
  int k = 0;
  BinaryForm q;
  CurveParameterization parameterization;
};

/// The curve (s^2k t^3, s^2k (s-t)^2 (2s+t), t^3 (s-t)^2 q) of degree 2k+3.
TheoremCurve make_curve(int k);

struct IndependenceResult {
  int dimension = 0;
  bool ok = false;
};

/// Rank of the combined family
///   { t^(3(k-3-i)) (t-1)^(2i) (t+2)^i : i = 0..k-3 }
///   { (t-1)^(2k-2) (t+2)^i : i = k-2..3k-7 }
///   { t^i : i = 3k-6..5k-9 }
/// which must equal its cardinality 5k-8.
IndependenceResult independence_check(int k);

}  // namespace cuspidal
