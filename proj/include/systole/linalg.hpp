#pragma once

#include <optional>
#include <vector>

#include "systole/intpoly.hpp"

namespace systole {

using QMatrix = std::vector<std::vector<Rational>>;  // row-major
using QVector = std::vector<Rational>;

// Solve A x = b for an A with full column rank; none if inconsistent.
std::optional<QVector> solve_full_column_rank(const QMatrix& A, const QVector& b);
int rank(QMatrix A);
Rational det(QMatrix A);

// Coordinates with respect to a fixed set of independent columns in Q^n.
class ColumnSolver {
 public:
  ColumnSolver() = default;
  explicit ColumnSolver(const QMatrix& columns_as_rows);  // each entry is one column vector
  std::optional<QVector> coords(const QVector& v) const;
  size_t dim() const { return cols_.size(); }

 private:
  std::vector<QVector> cols_;
  std::vector<int> pivot_rows_;
  QMatrix inv_;  // inverse of the pivot-row submatrix
};

}  // namespace systole
