#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "galcov/error.hpp"

namespace galcov {

namespace detail {
template <class T> inline void add_mul(T &acc, const T &a, const T &b) {
  if constexpr (requires { acc.add_mul(a, b); })
    acc.add_mul(a, b);
  else
    acc += a * b;
}
} // namespace detail

/// Dense row-major matrix over a commutative ring element type T. The zero
/// element is stored so that fresh matrices can be built without knowing the
/// field: T is Scalar or Poly.
template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T &zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  static Matrix identity(std::size_t n, const T &zero, const T &one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = one;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const T &zero() const noexcept { return zero_; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T> &data() const noexcept { return data_; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      v.push_back((*this)(i, j));
    return v;
  }
  void set_row(std::size_t i, const std::vector<T> &v) {
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(i, j) = v[j];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap(data_[i * cols_ + a], data_[i * cols_ + b]);
  }

  static Matrix from_rows(const std::vector<std::vector<T>> &rows, std::size_t cols, const T &zero) {
    Matrix m(rows.size(), cols, zero);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = rows[i][j];
    return m;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc, zero_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j)
        b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix &b) {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j)
        (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix hstack(const Matrix &o) const {
    require(rows_ == o.rows_, ErrorKind::InvalidArgument, "hstack row mismatch");
    Matrix m(rows_, cols_ + o.cols_, zero_);
    m.set_block(0, 0, *this);
    m.set_block(0, cols_, o);
    return m;
  }
  Matrix vstack(const Matrix &o) const {
    if (rows_ == 0)
      return o;
    if (o.rows_ == 0)
      return *this;
    require(cols_ == o.cols_, ErrorKind::InvalidArgument, "vstack column mismatch");
    Matrix m(rows_ + o.rows_, cols_, zero_);
    m.set_block(0, 0, *this);
    m.set_block(rows_, 0, o);
    return m;
  }

  bool is_zero() const {
    for (const auto &x : data_)
      if (!x.is_zero())
        return false;
    return true;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto &x : m.data_)
      x = -x;
    return m;
  }
  Matrix &operator+=(const Matrix &o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::InvalidArgument, "matrix add shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
      data_[i] += o.data_[i];
    return *this;
  }
  Matrix &operator-=(const Matrix &o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::InvalidArgument, "matrix sub shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
      data_[i] -= o.data_[i];
    return *this;
  }
  template <class S> Matrix &scale(const S &c) {
    for (auto &x : data_)
      x *= c;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    require(a.cols_ == b.rows_, ErrorKind::InvalidArgument,
            "matrix product shape mismatch " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    Matrix c(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T &aik = a(i, k);
        if (aik.is_zero())
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T &bkj = b(k, j);
          if (!bkj.is_zero())
            detail::add_mul(c(i, j), aik, bkj);
        }
      }
    return c;
  }

  std::vector<T> apply(const std::vector<T> &v) const {
    require(v.size() == cols_, ErrorKind::InvalidArgument, "matrix-vector shape mismatch");
    std::vector<T> out(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const T &a = (*this)(i, j);
        if (!a.is_zero() && !v[j].is_zero())
          detail::add_mul(out[i], a, v[j]);
      }
    return out;
  }

  /// Kronecker product, (a ⊗ b)((i,k),(j,l)) = a(i,j) b(k,l), row index i*b.rows + k.
  friend Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix c(a.rows_ * b.rows_, a.cols_ * b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        const T &aij = a(i, j);
        if (aij.is_zero())
          continue;
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l)
            if (!b(k, l).is_zero())
              c(i * b.rows_ + k, j * b.cols_ + l) = aij * b(k, l);
      }
    return c;
  }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (a.data_[i] != b.data_[i])
        return false;
    return true;
  }
  friend bool operator!=(const Matrix &a, const Matrix &b) { return !(a == b); }

private:
  std::size_t rows_ = 0, cols_ = 0;
  T zero_{};
  std::vector<T> data_;
};

} // namespace galcov
