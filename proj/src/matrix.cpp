#include "qch/matrix.hpp"

#include "qch/error.hpp"

namespace qch {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1L);
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix m(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix m(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix Matrix::operator*(const Matrix& o) const {
  Matrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (!y.is_zero()) m.at(i, j) += x * y;
      }
    }
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * c;
  return m;
}

bool Matrix::is_zero() const {
  for (auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Scalar Matrix::trace() const {
  Scalar t;
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

Matrix Matrix::solve(const Matrix& b) const {
  if (rows_ != cols_ || b.rows() != rows_) fail(Errc::bad_input, "solve shape mismatch");
  int n = rows_, m = b.cols();
  Matrix a = *this, x = b;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!a.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) fail(Errc::singular, "singular matrix in exact solve");
    if (piv != col)
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
    if (piv != col)
      for (int j = 0; j < m; ++j) std::swap(x.at(piv, j), x.at(col, j));
    Scalar pinv = a.at(col, col).inv();
    for (int j = col; j < n; ++j) a.at(col, j) *= pinv;
    for (int j = 0; j < m; ++j) x.at(col, j) *= pinv;
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      Scalar f = a.at(i, col);
      if (f.is_zero()) continue;
      for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
      for (int j = 0; j < m; ++j) x.at(i, j) -= f * x.at(col, j);
    }
  }
  return x;
}

Matrix Matrix::inverse() const { return solve(identity(rows_)); }

int Matrix::rank() const {
  // Clear denominators per row, then Bareiss on Laurent polynomials.
  std::vector<std::vector<LaurentPoly>> m(rows_, std::vector<LaurentPoly>(cols_));
  for (int i = 0; i < rows_; ++i) {
    LaurentPoly common(1L);
    for (int j = 0; j < cols_; ++j) {
      const LaurentPoly& d = at(i, j).den();
      if (d.is_one()) continue;
      LaurentPoly g = LaurentPoly::gcd(common, d);
      LaurentPoly extra;
      d.try_divide(g, extra);
      common *= extra;
    }
    for (int j = 0; j < cols_; ++j) {
      Scalar v = at(i, j) * Scalar(common);
      if (!v.is_polynomial()) fail(Errc::bad_input, "denominator clearing failed");
      m[i][j] = v.num();
    }
  }
  int rank = 0;
  LaurentPoly prev(1L);
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int piv = -1;
    for (int i = row; i < rows_; ++i)
      if (!m[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    for (int i = row + 1; i < rows_; ++i) {
      for (int j = col + 1; j < cols_; ++j) {
        LaurentPoly t = m[i][j] * m[row][col] - m[i][col] * m[row][j];
        LaurentPoly quot;
        if (!t.try_divide(prev, quot)) fail(Errc::bad_input, "non-exact Bareiss division");
        m[i][j] = quot;
      }
      m[i][col] = LaurentPoly();
    }
    prev = m[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace qch
