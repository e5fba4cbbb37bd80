#pragma once

#include <utility>
#include <vector>

#include "cuspidal/binform.hpp"
#include "cuspidal/unipoly.hpp"

namespace cuspidal {

struct UniFactorization {
  /// Leading coefficient of the input; the product of unit and the monic
  /// irreducible factors (with multiplicity) reproduces the input exactly.
  Rational unit;
  std::vector<std::pair<UniPoly, int>> factors;
};

/// Complete factorization into monic Q-irreducible factors.
/// Deterministic: factors sorted by (degree, coefficient list).
UniFactorization factor_unipoly(const UniPoly& f);

/// Q-irreducible factors of a nonzero binary form, each normalized so its
/// first nonzero coefficient (descending s-power) is 1, with multiplicities.
/// The multiplicities weighted by factor degree sum to deg f.
std::vector<std::pair<BinaryForm, int>> factor_form(const BinaryForm& f);

}  // namespace cuspidal
