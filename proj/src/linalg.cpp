#include "symbc/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace symbc {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::adjoint() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c).conj();
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Scalar& y = b.at(k, j);
        if (!y.is_zero()) out.at(i, j) += x * y;
      }
    }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

std::vector<int> Matrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int piv = -1;
    for (int r = row; r < rows_; ++r)
      if (!at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < cols_; ++c) std::swap(at(piv, c), at(row, c));
    Scalar inv = at(row, col).inverse();
    for (int c = col; c < cols_; ++c) at(row, c) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || at(r, col).is_zero()) continue;
      Scalar f = at(r, col);
      for (int c = col; c < cols_; ++c)
        if (!at(row, c).is_zero()) at(r, c) -= f * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Matrix::rank() const {
  Matrix copy = *this;
  return static_cast<int>(copy.rref().size());
}

std::vector<std::vector<Scalar>> Matrix::nullspace() const {
  Matrix copy = *this;
  std::vector<int> pivots = copy.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_);
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -copy.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  int n = rows_;
  if (n == 0) return Matrix(0, 0);
  Matrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, n + r) = Scalar(1);
  }
  std::vector<int> pivots = aug.rref();
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
    throw std::domain_error("singular matrix");
  Matrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r].push_back(at(r, c).to_string());
  return out;
}

}  // namespace symbc
