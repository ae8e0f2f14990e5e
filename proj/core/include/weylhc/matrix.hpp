#pragma once

#include <cstddef>
#include <vector>

#include "weylhc/error.hpp"
#include "weylhc/laurent.hpp"

namespace weylhc {

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t = t + (*this)(i, i);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.data_[i] + b.data_[i];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

// det(x I - A) by Faddeev-LeVerrier; needs division by small integers only.
template <class T>
LaurentPoly<T> characteristic_polynomial(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  std::vector<T> c(n + 1);
  c[n] = T(1);
  Matrix<T> m(n, n);
  const Matrix<T> id = Matrix<T>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<T> scaled = id;
    for (std::size_t i = 0; i < n; ++i) scaled(i, i) = c[n - k + 1];
    m = a * m + scaled;
    const T tr = (a * m).trace();
    c[n - k] = T(0) - tr * T(fraction(1, static_cast<unsigned long>(k)));
  }
  LaurentPoly<T> p;
  for (std::size_t i = 0; i <= n; ++i) p.set(static_cast<int>(i), c[i]);
  return p;
}

}  // namespace weylhc
