#pragma once

#include "cuspidal/multseq.hpp"
#include "cuspidal/ratfunc.hpp"

namespace cuspidal {

/// A single local branch of a plane curve at the origin of an affine chart:
/// two exact rational functions of the local parameter, both vanishing at 0
/// (one of them may be identically zero for a branch along an axis).
struct BranchGerm {
  RationalFunction u, v;
  BranchGerm(RationalFunction u_, RationalFunction v_);
};

/// Multiplicity of the germ at the origin: min of the two vanishing orders
/// (identically zero coordinates count as infinite).
int germ_multiplicity(const BranchGerm& g);

/// Proper transform of the germ under one blow-up, in the chart of the
/// lower-order coordinate, recentered at the point hit on the exceptional
/// line. On ties, v is divided by u.
BranchGerm blow_up(const BranchGerm& g);

/// Multiplicity sequence of the branch via blow-up recursion: record the
/// multiplicity while it is >= 2, stop on reaching a smooth point.
/// Throws "resolution did not terminate" if the recursion exceeds the
/// delta-derived depth bound (impossible for genuine reduced branches).
MultiplicitySequence mult_sequence(const BranchGerm& g);

/// Local intersection number of two branches at the origin: accumulates the
/// product of multiplicities over the shared infinitely near points.
/// Throws "infinite intersection" when the branches never separate.
long germ_intersection(const BranchGerm& g1, const BranchGerm& g2);

}  // namespace cuspidal
