#pragma once

#include <vector>

#include "qch/scalar.hpp"

namespace qch {

// Dense matrix over the exact scalar field. Row-major.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix& operator+=(const Matrix& o);
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const;
  Scalar trace() const;

  // Exact solve of (*this) X = B; fails with Errc::singular if rank-deficient.
  Matrix solve(const Matrix& b) const;
  Matrix inverse() const;

  // Exact rank: denominators cleared row by row, then fraction-free
  // (Bareiss) elimination on the Laurent-polynomial matrix.
  int rank() const;

private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

}  // namespace qch
