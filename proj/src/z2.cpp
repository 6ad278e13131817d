#include "pfdimers/z2.hpp"

namespace pfdimers {

int z2_rank(Z2Matrix m) {
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int p = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m(r, c) & 1) {
        p = r;
        break;
      }
    if (p < 0) continue;
    m.row(p).swap(m.row(rank));
    for (int r = 0; r < m.rows(); ++r)
      if (r != rank && (m(r, c) & 1))
        for (int k = 0; k < m.cols(); ++k) m(r, k) ^= m(rank, k);
    ++rank;
  }
  return rank;
}

std::optional<Z2Matrix> z2_inverse(const Z2Matrix& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) return std::nullopt;
  Z2Matrix a(n, 2 * n);
  a.leftCols(n) = m;
  a.rightCols(n).setZero();
  for (int i = 0; i < n; ++i) a(i, n + i) = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (a(r, c) & 1) {
        p = r;
        break;
      }
    if (p < 0) return std::nullopt;
    a.row(p).swap(a.row(c));
    for (int r = 0; r < n; ++r)
      if (r != c && (a(r, c) & 1))
        for (int k = 0; k < 2 * n; ++k) a(r, k) ^= a(c, k);
  }
  return Z2Matrix(a.rightCols(n));
}

std::optional<Bits> z2_solve(const Z2Matrix& m, const Bits& rhs) {
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  Z2Matrix a(rows, cols + 1);
  a.leftCols(cols) = m;
  for (int r = 0; r < rows; ++r) a(r, cols) = rhs[r] & 1;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (a(r, c) & 1) {
        p = r;
        break;
      }
    if (p < 0) continue;
    a.row(p).swap(a.row(rank));
    for (int r = 0; r < rows; ++r)
      if (r != rank && (a(r, c) & 1))
        for (int k = 0; k <= cols; ++k) a(r, k) ^= a(rank, k);
    pivot_col.push_back(c);
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (a(r, cols) & 1) return std::nullopt;
  Bits x(cols, 0);
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = a(r, cols) & 1;
  return x;
}

Bits Z2Eliminator::reduce(Bits v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v[pivots_[i]]) xor_into(v, rows_[i]);
  return v;
}

bool Z2Eliminator::insert(const Bits& v) {
  Bits r = reduce(v);
  int pivot = -1;
  for (int i = 0; i < length_; ++i)
    if (r[i]) {
      pivot = i;
      break;
    }
  if (pivot < 0) return false;
  // Keep the basis fully reduced so reduce() is a single pass.
  for (auto& row : rows_)
    if (row[pivot]) xor_into(row, r);
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace pfdimers
