#include "cuspidal/linalg.hpp"

#include <stdexcept>

namespace cuspidal {

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// pivot row (ascending).
std::vector<int> rref(QMatrix& m, int cols) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
    int p = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r)
      if (m[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[row], m[p]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = col; j < m[r].size(); ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

LinearSolveResult solve_linear(const QMatrix& a, const QVector& b) {
  const int rows = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != rows)
    throw std::invalid_argument("dimension mismatch");
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  QMatrix m(rows);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(a[r].size()) != cols)
      throw std::invalid_argument("ragged matrix");
    m[r] = a[r];
    m[r].push_back(b[r]);
  }
  std::vector<int> pivots = rref(m, cols);
  int rank = static_cast<int>(pivots.size());
  for (int r = rank; r < rows; ++r)
    if (m[r][cols] != 0) return {SolveStatus::Inconsistent, {}};
  if (rank < cols) return {SolveStatus::Underdetermined, {}};
  QVector x(cols);
  for (int r = 0; r < rank; ++r) x[pivots[r]] = m[r][cols];
  return {SolveStatus::Unique, std::move(x)};
}

int matrix_rank(QMatrix a) {
  if (a.empty()) return 0;
  return static_cast<int>(rref(a, static_cast<int>(a[0].size())).size());
}

std::vector<QVector> nullspace(const QMatrix& a, int cols) {
  QMatrix m = a;
  for (auto& r : m)
    if (static_cast<int>(r.size()) != cols)
      throw std::invalid_argument("ragged matrix");
  std::vector<int> pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cuspidal
