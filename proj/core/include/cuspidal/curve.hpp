#pragma once

#include <utility>
#include <vector>

#include "cuspidal/binform.hpp"
#include "cuspidal/germ.hpp"
#include "cuspidal/multseq.hpp"

namespace cuspidal {

/// A rational plane curve given by three coprime degree-d binary forms
/// mapping P^1 -> P^2.
struct CurveParameterization {
  int degree = 0;
  BinaryForm x, y, z;

  CurveParameterization(BinaryForm x_, BinaryForm y_, BinaryForm z_);

  ProjPoint image(const P1Point& p) const;
};

/// The local branch at a parameter point, in the affine chart of the
/// component with minimal vanishing order there; the two remaining
/// components (in x, y, z order) give the germ coordinates after
/// recentering at the image point.
BranchGerm germ_at(const CurveParameterization& c, const P1Point& t0);

/// Q-irreducible factors, with multiplicities, of the line's pullback
/// L(x,y,z)(s,t); multiplicities sum to the degree.
/// Throws "line contains curve" when the pullback vanishes identically.
std::vector<std::pair<BinaryForm, int>> line_divisor(const CurveParameterization& c,
                                                     const Line& L);

/// Q-irreducible factors of the gcd of the three 2x2 minors of the
/// derivative matrix [d/ds (x,y,z); d/dt (x,y,z)]. The parameters of all
/// points where the map fails to be an immersion (in particular all cusps)
/// are zeros of every factor returned.
std::vector<BinaryForm> singular_support(const CurveParameterization& c);

/// True iff distinct parameters always map to distinct points. Decided
/// exactly: the three chord forms x(u)y(v)-y(u)x(v) (etc.) are divided by
/// the diagonal; any surviving common zero, including isolated ones found
/// through pairwise resultants and checked in the residue field of each
/// candidate factor, witnesses an identification.
bool injectivity_certificate(const CurveParameterization& c);

struct CurveReport {
  int degree = 0;
  std::vector<std::pair<P1Point, MultiplicitySequence>> cusp_data;
  bool genus_saturated = false;
  std::vector<BinaryForm> singular_support;
  bool injective = false;
  bool passes = false;
};

/// Full verification: blow-up analysis at each expected parameter, smoothness
/// at every other rational zero of the singular support, genus saturation,
/// support containment, injectivity. Throws if the singular support has a
/// nonlinear factor with no matching expectation (irrational parameters).
CurveReport verify_curve(
    const CurveParameterization& c,
    const std::vector<std::pair<P1Point, MultiplicitySequence>>& expected);

}  // namespace cuspidal
