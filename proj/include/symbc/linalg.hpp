#pragma once

#include <string>
#include <vector>

#include "symbc/scalar.hpp"

namespace symbc {

// Dense exact matrix over the Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  Matrix transpose() const;
  Matrix adjoint() const;  // conjugate transpose
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const;
  int rank() const;
  // Columns spanning the right kernel, in reduced echelon normalization.
  std::vector<std::vector<Scalar>> nullspace() const;
  // Throws std::domain_error when singular.
  Matrix inverse() const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  // Reduced row echelon form in place; returns pivot columns.
  std::vector<int> rref();
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace symbc
