#include "systole/linalg.hpp"

#include <stdexcept>

#include "systole/triple.hpp"

namespace systole {

std::string Triple::str() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

void validate_hyperbolic(const Triple& t) {
  if (t.a < 2 || t.b < t.a || t.c < t.b) throw std::domain_error("triple must satisfy 2 <= a <= b <= c");
  // 1/a + 1/b + 1/c < 1  <=>  bc + ac + ab < abc
  long a = t.a, b = t.b, c = t.c;
  if (b * c + a * c + a * b >= a * b * c) throw std::domain_error("triple " + t.str() + " is not hyperbolic");
}

namespace {

// reduced row echelon in place; returns pivot columns
std::vector<int> rref(QMatrix& m) {
  std::vector<int> piv;
  size_t rows = m.size();
  if (rows == 0) return piv;
  size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t s = r;
    while (s < rows && m[s][c] == 0) ++s;
    if (s == rows) continue;
    std::swap(m[r], m[s]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(static_cast<int>(c));
    ++r;
  }
  return piv;
}

}  // namespace

std::optional<QVector> solve_full_column_rank(const QMatrix& A, const QVector& b) {
  size_t n = A.size(), k = n ? A[0].size() : 0;
  QMatrix m(n, QVector(k + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) m[i][j] = A[i][j];
    m[i][k] = b[i];
  }
  auto piv = rref(m);
  if (piv.size() != k) {
    if (!piv.empty() && piv.back() == static_cast<int>(k)) return std::nullopt;
    throw std::domain_error("solve_full_column_rank: rank deficient");
  }
  for (size_t i = k; i < n; ++i)
    if (m[i][k] != 0) return std::nullopt;
  QVector x(k);
  for (size_t i = 0; i < k; ++i) x[i] = m[i][k];
  return x;
}

int rank(QMatrix A) { return static_cast<int>(rref(A).size()); }

Rational det(QMatrix A) {
  size_t n = A.size();
  Rational d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t s = c;
    while (s < n && A[s][c] == 0) ++s;
    if (s == n) return 0;
    if (s != c) {
      std::swap(A[s], A[c]);
      d = -d;
    }
    d *= A[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (A[i][c] == 0) continue;
      Rational f = A[i][c] / A[c][c];
      for (size_t j = c; j < n; ++j) A[i][j] -= f * A[c][j];
    }
  }
  return d;
}

ColumnSolver::ColumnSolver(const QMatrix& columns) : cols_(columns) {
  size_t k = cols_.size();
  if (k == 0) return;
  size_t n = cols_[0].size();
  // choose k independent rows of the n x k matrix
  QMatrix t(k, QVector(n));
  for (size_t j = 0; j < k; ++j) t[j] = cols_[j];
  auto piv = rref(t);  // pivots of the transpose are independent rows
  if (piv.size() != k) throw std::domain_error("ColumnSolver: columns dependent");
  pivot_rows_ = piv;
  QMatrix sub(k, QVector(2 * k));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) sub[i][j] = cols_[j][pivot_rows_[i]];
    sub[i][k + i] = 1;
  }
  rref(sub);
  inv_.assign(k, QVector(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) inv_[i][j] = sub[i][k + j];
}

std::optional<QVector> ColumnSolver::coords(const QVector& v) const {
  size_t k = cols_.size();
  QVector x(k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (inv_[i][j] != 0) x[i] += inv_[i][j] * v[pivot_rows_[j]];
  // verify on all rows
  for (size_t r = 0; r < v.size(); ++r) {
    Rational s = 0;
    for (size_t j = 0; j < k; ++j)
      if (x[j] != 0) s += x[j] * cols_[j][r];
    if (s != v[r]) return std::nullopt;
  }
  return x;
}

}  // namespace systole
