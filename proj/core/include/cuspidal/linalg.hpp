#pragma once

#include <vector>

#include "cuspidal/rational.hpp"

namespace cuspidal {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct LinearSolveResult {
  SolveStatus status;
  QVector solution;  // populated only for Unique
};

/// Exact Gaussian elimination over Q. A may be rectangular; b.size() must
/// equal the row count.
LinearSolveResult solve_linear(const QMatrix& a, const QVector& b);

int matrix_rank(QMatrix a);

/// Basis of the right nullspace, in the deterministic order produced by
/// reduced row echelon form (one vector per free column, ascending).
std::vector<QVector> nullspace(const QMatrix& a, int cols);

}  // namespace cuspidal
