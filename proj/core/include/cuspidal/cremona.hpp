#pragma once

#include <array>
#include <vector>

#include "cuspidal/curve.hpp"

namespace cuspidal {

/// A plane quadratic birational map given by three independent conics,
/// coefficients in the monomial order x^2, y^2, z^2, xy, xz, yz.
struct QuadraticMap {
  std::array<std::array<Rational, 6>, 3> conics;
};

/// A curve together with the parameter marks threaded through the
/// transformation steps: q (the big cusp for level k >= 1), p (the (3_k)
/// cusp, or the inflection of the cubic), r (the ordinary cusp), s (the
/// residual intersection of the tangent at q), the line ell through the
/// images of p and q (the inflectional tangent at level 0), and the
/// tangent line at q with contact d-1.
struct MarkedCurve {
  int k = 0;
  CurveParameterization curve;
  P1Point q_param, p_param, r_param, s_param;
  Line ell, tangent;
};

/// The cuspidal cubic (s^3 : s^2 t : t^3) with marks r=(0:1), p=(1:0),
/// q=(1:1), s=(1:-2), ell={z=0}, tangent={2x-3y+z=0}.
MarkedCurve cubic_seed();

/// The limit tangent of the branch at t0 (the cuspidal tangent at a cusp),
/// certified through line_divisor contact >= multiplicity + 1.
Line tangent_line(const CurveParameterization& c, const P1Point& t0);

/// Basis of the net of conics through S and through B with tangent m at B
/// (an infinitely near base point over B along m). Deterministic basis
/// order from the exact nullspace. Throws "degenerate base scheme" when
/// S = B or S lies on m.
QuadraticMap quadratic_map(const ProjPoint& S, const ProjPoint& B, const Line& m);

/// Proper transform: compose the conics with the parameterization and
/// divide out the gcd carrying the base-point contributions.
CurveParameterization apply(const QuadraticMap& map, const CurveParameterization& c);

/// Build a MarkedCurve from a curve whose cusp parameters q, p, r are known:
/// the tangent at q, the line ell and the residual point s are recomputed and
/// every level-k invariant is re-verified.
/// Throws "construction broke down" on any failed invariant.
MarkedCurve mark_curve(CurveParameterization curve, int k, const P1Point& q,
                       const P1Point& p, const P1Point& r);

/// One induction step: the transformation based at the image of s, the
/// point tangent-meet-ell, and ell carries the level-k curve to level k+1;
/// the cusp parameters are unchanged and all marks are recomputed and
/// re-verified. Throws "construction broke down" on any failed invariant.
MarkedCurve forward_step(const MarkedCurve& mc);

/// The inverse transformation, based at the images of p and q with the
/// tangent at q; level k to k-1. Throws "already cubic" at level 0.
MarkedCurve inverse_step(const MarkedCurve& mc);

/// Representative of the projective-equivalence class of a three-cusp curve
/// of degree 2k+3 (k >= 1): cusps reparameterized to (0:1), (1:0), (1:1),
/// moved to (0:0:1), (0:1:0), (1:0:0), components scaled to leading
/// coefficient 1.
CurveParameterization canonical_form(const CurveParameterization& c);

/// Canonical form of a marked cubic: r, p, q to (0:1), (1:0), (1:1); the
/// cusp, inflection, marked point and residual point to (0:0:1), (1:0:0),
/// (1:1:1), (1:-2:-8); one global scale. The result is (s^3, s^2 t, t^3).
CurveParameterization canonical_form(const MarkedCurve& mc);

/// The explicit chain transforming the curve into a line: k inverse steps
/// to the cubic, one map taking the cubic to a conic (based at the cusp
/// with its cuspidal tangent), one taking the conic to a line.
std::vector<QuadraticMap> rectify(const MarkedCurve& mc);

}  // namespace cuspidal
