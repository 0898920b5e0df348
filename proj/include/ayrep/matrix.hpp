#pragma once

#include <cassert>
#include <cmath>
#include <utility>
#include <vector>

#include "ayrep/rational.hpp"

namespace ayrep {

/// Dense row-major matrix. Column j holds the image of basis vector j.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, T(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  T trace() const {
    T sum(0);
    for (int i = 0; i < rows_ && i < cols_; ++i) sum += (*this)(i, i);
    return sum;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Generator matrices have at most two nonzeros per column, so the right
  // factor is scanned for nonzeros first.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix c(a.rows_, b.cols_);
    std::vector<std::pair<int, const T*>> row_nonzeros;
    for (int k = 0; k < b.rows_; ++k) {
      row_nonzeros.clear();
      for (int j = 0; j < b.cols_; ++j)
        if (!is_zero(b(k, j))) row_nonzeros.emplace_back(j, &b(k, j));
      if (row_nonzeros.empty()) continue;
      for (int i = 0; i < a.rows_; ++i) {
        const T& lhs = a(i, k);
        if (is_zero(lhs)) continue;
        for (const auto& [j, value] : row_nonzeros) c(i, j) += lhs * *value;
      }
    }
    return c;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

inline double max_abs_difference(const Matrix<double>& a, const Matrix<double>& b) {
  double worst = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

inline Matrix<double> to_double(const Matrix<Rational>& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

}  // namespace ayrep
